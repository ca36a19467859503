#pragma once

#include <compare>
#include <vector>

#include "lmm/lip.hpp"

namespace lmm {

struct Offset {
  int dx = 0;
  int dy = 0;
  friend constexpr auto operator<=>(const Offset&, const Offset&) = default;
};

enum class SfKind {
  additive,     ///< classical: values in [0, M]
  logarithmic,  ///< LIP-combined: values in ]-inf, M[
};

/// A non-flat structuring function: distinct offsets h with values b(h).
class StructuringFunction {
 public:
  struct Entry {
    Offset offset;
    double value;
    friend bool operator==(const Entry&, const Entry&) = default;
  };

  /// Validates distinct offsets and the value range of `kind` against
  /// `scale`; throws PreconditionError otherwise. An empty entry list is
  /// allowed here and rejected by the operators.
  StructuringFunction(std::vector<Entry> entries, SfKind kind, GreyScale scale = GreyScale{});

  /// No range validation. Used for structuring functions living in the
  /// acute domain, whose values are arbitrary reals.
  static StructuringFunction unchecked(std::vector<Entry> entries, SfKind kind);

  [[nodiscard]] const std::vector<Entry>& entries() const noexcept { return entries_; }
  [[nodiscard]] SfKind kind() const noexcept { return kind_; }
  [[nodiscard]] bool empty() const noexcept { return entries_.empty(); }
  [[nodiscard]] std::size_t size() const noexcept { return entries_.size(); }

  /// All values equal (the sf is a flat shape lifted by a constant).
  [[nodiscard]] bool is_flat() const noexcept;

  /// Same entries (order-insensitive) and kind.
  friend bool operator==(const StructuringFunction& a, const StructuringFunction& b);

 private:
  StructuringFunction(std::vector<Entry> entries, SfKind kind, int);

  std::vector<Entry> entries_;  // sorted by offset
  SfKind kind_;
};

/// Hemisphere over the integer disc dx^2 + dy^2 <= radius^2:
/// value = amplitude * sqrt(1 - (dx^2 + dy^2) / radius^2).
/// For kind = logarithmic the amplitude must be < M.
[[nodiscard]] StructuringFunction hemisphere_sf(double radius, double amplitude, SfKind kind,
                                                GreyScale scale = GreyScale{});

/// Flat (all-zero) structuring function over the same integer disc.
[[nodiscard]] StructuringFunction flat_sf(double radius, SfKind kind);

/// Point reflection: h -> -h, values preserved.
[[nodiscard]] StructuringFunction reflect_sf(const StructuringFunction& sf);

}  // namespace lmm
