#include "lmm/classical.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "lmm/error.hpp"

namespace lmm::classical {

namespace {

void require_nonempty(const StructuringFunction& b) {
  if (b.empty()) throw PreconditionError("empty structuring function");
}

// Dilation samples f(x - h); erosion samples f(x + h). `sign` selects which.
enum class Pass { dilate, erode };

constexpr int direction(Pass pass) { return pass == Pass::dilate ? -1 : 1; }

// ---------------------------------------------------------------------------
// Flat structuring functions whose rows are contiguous runs ("chords") reduce
// to 1-D running extrema, evaluated with the van Herk / Gil-Werman scheme in
// O(1) comparisons per sample regardless of chord length.

struct Chord {
  int dy;
  int lo;  // dx range [lo, hi]
  int hi;
};

std::optional<std::vector<Chord>> chords_of(const StructuringFunction& b) {
  std::map<int, std::vector<int>> rows;
  for (const auto& e : b.entries()) rows[e.offset.dy].push_back(e.offset.dx);
  std::vector<Chord> chords;
  for (auto& [dy, dxs] : rows) {
    std::ranges::sort(dxs);
    if (dxs.back() - dxs.front() + 1 != static_cast<int>(dxs.size())) return std::nullopt;
    chords.push_back({dy, dxs.front(), dxs.back()});
  }
  return chords;
}

// out[x] = op over row[j] for j in [x + start, x + start + k - 1] clipped to
// the row; `pad` (the neutral element of op) where the window is empty.
template <typename Op>
void running_extremum(std::span<const double> row, int start, int k, double pad, Op op,
                      std::span<double> out, std::vector<double>& prefix,
                      std::vector<double>& suffix) {
  const int n = static_cast<int>(row.size());
  const int len = ((n + k - 1 + k - 1) / k) * k;
  prefix.assign(static_cast<std::size_t>(len), pad);
  suffix.assign(static_cast<std::size_t>(len), pad);
  auto q = [&](int i) {
    const int j = i + start;
    return (j >= 0 && j < n) ? row[static_cast<std::size_t>(j)] : pad;
  };
  for (int block = 0; block < len; block += k) {
    double acc = pad;
    for (int i = block; i < block + k; ++i) prefix[static_cast<std::size_t>(i)] = acc = op(acc, q(i));
    acc = pad;
    for (int i = block + k - 1; i >= block; --i) suffix[static_cast<std::size_t>(i)] = acc = op(acc, q(i));
  }
  for (int x = 0; x < n; ++x) {
    out[static_cast<std::size_t>(x)] =
        op(suffix[static_cast<std::size_t>(x)], prefix[static_cast<std::size_t>(x + k - 1)]);
  }
}

template <typename Op>
Image flat_kernel(const Image& f, const std::vector<Chord>& chords, double value, Pass pass,
                  double pad, Op op) {
  const int w = f.width();
  const int h = f.height();
  const int dir = direction(pass);
  Image out(w, h, f.scale(), pad);

  std::vector<double> prefix, suffix;
  std::vector<double> window(static_cast<std::size_t>(w));
  // Window extrema per distinct dx range, computed lazily per source row.
  std::map<std::pair<int, int>, std::vector<std::optional<std::vector<double>>>> cache;

  for (const Chord& c : chords) {
    // Dilation: x - dx for dx in [lo, hi] -> start = -hi. Erosion: start = lo.
    const int start = pass == Pass::dilate ? -c.hi : c.lo;
    const int k = c.hi - c.lo + 1;
    auto& rows = cache[{c.lo, c.hi}];
    rows.resize(static_cast<std::size_t>(h));
    for (int y = 0; y < h; ++y) {
      const int sy = y + dir * c.dy;
      if (sy < 0 || sy >= h) continue;
      auto& cached = rows[static_cast<std::size_t>(sy)];
      if (!cached) {
        running_extremum(f.pixels().subspan(static_cast<std::size_t>(sy) * w, w), start, k, pad,
                         op, window, prefix, suffix);
        cached = window;
      }
      for (int x = 0; x < w; ++x) out(x, y) = op(out(x, y), (*cached)[static_cast<std::size_t>(x)]);
    }
  }
  // Adding the constant after the extremum is exact: rounding is monotone.
  for (double& v : out.pixels()) v = pass == Pass::dilate ? v + value : v - value;
  return out;
}

// ---------------------------------------------------------------------------
// General non-flat kernel: unchecked linear offsets on the interior, bounds
// checks only on the border band.

template <typename Op>
Image general_kernel(const Image& f, const StructuringFunction& b, Pass pass, double pad, Op op) {
  const int w = f.width();
  const int h = f.height();
  const int dir = direction(pass);
  const auto& entries = b.entries();

  int min_dx = 0, max_dx = 0, min_dy = 0, max_dy = 0;
  for (const auto& e : entries) {
    min_dx = std::min(min_dx, dir * e.offset.dx);
    max_dx = std::max(max_dx, dir * e.offset.dx);
    min_dy = std::min(min_dy, dir * e.offset.dy);
    max_dy = std::max(max_dy, dir * e.offset.dy);
  }

  std::vector<std::ptrdiff_t> shift(entries.size());
  std::vector<double> weight(entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) {
    shift[i] = static_cast<std::ptrdiff_t>(dir) *
               (static_cast<std::ptrdiff_t>(entries[i].offset.dy) * w + entries[i].offset.dx);
    weight[i] = pass == Pass::dilate ? entries[i].value : -entries[i].value;
  }

  Image out(w, h, f.scale(), pad);
  const auto src = f.pixels();
  auto dst = out.pixels();

  const int x0 = -min_dx, x1 = w - max_dx;  // interior columns [x0, x1)
  const int y0 = -min_dy, y1 = h - max_dy;

  auto checked = [&](int x, int y) {
    double acc = pad;
    for (const auto& e : entries) {
      const int sx = x + dir * e.offset.dx;
      const int sy = y + dir * e.offset.dy;
      if (!f.contains(sx, sy)) continue;
      acc = op(acc, pass == Pass::dilate ? f(sx, sy) + e.value : f(sx, sy) - e.value);
    }
    return acc;
  };

  for (int y = 0; y < h; ++y) {
    const bool row_interior = y >= y0 && y < y1;
    for (int x = 0; x < w; ++x) {
      const std::size_t idx = static_cast<std::size_t>(y) * w + x;
      if (!row_interior || x < x0 || x >= x1) {
        dst[idx] = checked(x, y);
        continue;
      }
      double acc = pad;
      const double* base = src.data() + idx;
      for (std::size_t i = 0; i < shift.size(); ++i) acc = op(acc, base[shift[i]] + weight[i]);
      dst[idx] = acc;
    }
  }
  return out;
}

template <typename Op>
Image run(const Image& f, const StructuringFunction& b, Pass pass, double pad, Op op) {
  require_nonempty(b);
  if (b.is_flat()) {
    if (auto chords = chords_of(b)) {
      return flat_kernel(f, *chords, b.entries().front().value, pass, pad, op);
    }
  }
  return general_kernel(f, b, pass, pad, op);
}

constexpr auto max_op = [](double a, double b) { return a < b ? b : a; };
constexpr auto min_op = [](double a, double b) { return b < a ? b : a; };

}  // namespace

Image dilate(const Image& f, const StructuringFunction& b) {
  return run(f, b, Pass::dilate, -kInf, max_op);
}

Image erode(const Image& f, const StructuringFunction& b) {
  return run(f, b, Pass::erode, kInf, min_op);
}

Image open(const Image& f, const StructuringFunction& b) { return dilate(erode(f, b), b); }

Image close(const Image& f, const StructuringFunction& b) { return erode(dilate(f, b), b); }

Image gradient(const Image& f, const StructuringFunction& b) {
  const Image d = dilate(f, b);
  const Image e = erode(f, b);
  Image out = d;
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = d[i] == e[i] ? 0.0 : d[i] - e[i];
  return out;
}

namespace reference {

Image dilate(const Image& f, const StructuringFunction& b) {
  require_nonempty(b);
  Image out(f.width(), f.height(), f.scale(), -kInf);
  for (int y = 0; y < f.height(); ++y) {
    for (int x = 0; x < f.width(); ++x) {
      double best = -kInf;
      for (const auto& e : b.entries()) {
        const int sx = x - e.offset.dx;
        const int sy = y - e.offset.dy;
        if (f.contains(sx, sy)) best = std::max(best, f(sx, sy) + e.value);
      }
      out(x, y) = best;
    }
  }
  return out;
}

Image erode(const Image& f, const StructuringFunction& b) {
  require_nonempty(b);
  Image out(f.width(), f.height(), f.scale(), kInf);
  for (int y = 0; y < f.height(); ++y) {
    for (int x = 0; x < f.width(); ++x) {
      double best = kInf;
      for (const auto& e : b.entries()) {
        const int sx = x + e.offset.dx;
        const int sy = y + e.offset.dy;
        if (f.contains(sx, sy)) best = std::min(best, f(sx, sy) - e.value);
      }
      out(x, y) = best;
    }
  }
  return out;
}

}  // namespace reference

}  // namespace lmm::classical
