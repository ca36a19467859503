#include "lmm/structuring_function.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "lmm/error.hpp"

namespace lmm {

namespace {

void sort_and_check_distinct(std::vector<StructuringFunction::Entry>& entries) {
  std::ranges::sort(entries, {}, &StructuringFunction::Entry::offset);
  const auto dup = std::ranges::adjacent_find(
      entries, [](const auto& a, const auto& b) { return a.offset == b.offset; });
  if (dup != entries.end()) {
    throw PreconditionError("structuring function offsets must be distinct (duplicate at " +
                            std::to_string(dup->offset.dx) + "," +
                            std::to_string(dup->offset.dy) + ")");
  }
}

std::vector<Offset> disc_offsets(double radius) {
  if (!(radius > 0.0) || !std::isfinite(radius)) {
    throw PreconditionError("structuring function radius must be positive and finite");
  }
  const int r = static_cast<int>(std::floor(radius));
  const double r2 = radius * radius;
  std::vector<Offset> offsets;
  for (int dy = -r; dy <= r; ++dy) {
    for (int dx = -r; dx <= r; ++dx) {
      if (dx * dx + dy * dy <= r2) offsets.push_back({dx, dy});
    }
  }
  return offsets;
}

}  // namespace

StructuringFunction::StructuringFunction(std::vector<Entry> entries, SfKind kind, int)
    : entries_(std::move(entries)), kind_(kind) {
  sort_and_check_distinct(entries_);
}

StructuringFunction::StructuringFunction(std::vector<Entry> entries, SfKind kind,
                                         GreyScale scale)
    : StructuringFunction(std::move(entries), kind, 0) {
  const double M = scale.M();
  for (const Entry& e : entries_) {
    const double v = e.value;
    if (kind == SfKind::additive && !(v >= 0.0 && v <= M)) {
      throw PreconditionError("additive structuring function values must lie in [0, M]");
    }
    if (kind == SfKind::logarithmic && !(v > -kInf && v < M)) {
      throw PreconditionError("logarithmic structuring function values must lie in ]-inf, M[");
    }
  }
}

StructuringFunction StructuringFunction::unchecked(std::vector<Entry> entries, SfKind kind) {
  return StructuringFunction(std::move(entries), kind, 0);
}

bool StructuringFunction::is_flat() const noexcept {
  return std::ranges::all_of(entries_,
                             [&](const Entry& e) { return e.value == entries_.front().value; });
}

bool operator==(const StructuringFunction& a, const StructuringFunction& b) {
  return a.kind_ == b.kind_ && a.entries_ == b.entries_;
}

StructuringFunction hemisphere_sf(double radius, double amplitude, SfKind kind,
                                  GreyScale scale) {
  if (!(amplitude > 0.0) || !std::isfinite(amplitude)) {
    throw PreconditionError("hemisphere amplitude must be positive and finite");
  }
  if (kind == SfKind::logarithmic && !(amplitude < scale.M())) {
    throw PreconditionError("logarithmic hemisphere amplitude must be < M");
  }
  std::vector<StructuringFunction::Entry> entries;
  const double r2 = radius * radius;
  for (Offset h : disc_offsets(radius)) {
    const double d2 = static_cast<double>(h.dx * h.dx + h.dy * h.dy);
    entries.push_back({h, amplitude * std::sqrt(std::max(0.0, 1.0 - d2 / r2))});
  }
  return StructuringFunction(std::move(entries), kind, scale);
}

StructuringFunction flat_sf(double radius, SfKind kind) {
  std::vector<StructuringFunction::Entry> entries;
  for (Offset h : disc_offsets(radius)) entries.push_back({h, 0.0});
  return StructuringFunction::unchecked(std::move(entries), kind);
}

StructuringFunction reflect_sf(const StructuringFunction& sf) {
  std::vector<StructuringFunction::Entry> entries;
  entries.reserve(sf.size());
  for (const auto& e : sf.entries()) entries.push_back({{-e.offset.dx, -e.offset.dy}, e.value});
  return StructuringFunction::unchecked(std::move(entries), sf.kind());
}

}  // namespace lmm
