#include "lmm/logarithmic.hpp"

#include <cmath>
#include <vector>

#include "lmm/classical.hpp"
#include "lmm/error.hpp"

namespace lmm::logarithmic {

namespace {

void require_operands(const Image& f, const StructuringFunction& b) {
  if (b.empty()) throw PreconditionError("empty structuring function");
  const double M = f.scale().M();
  for (const auto& e : b.entries()) {
    if (!(e.value > -kInf && e.value < M)) {
      throw PreconditionError("logarithmic structuring function values must lie in ]-inf, M[");
    }
  }
  if (!f.within_lattice()) throw PreconditionError("image pixels must lie in [-inf, M]");
}

double acute_unchecked(double v, double M) {
  if (v == M) return kInf;
  if (v == -kInf) return -kInf;
  return -std::log1p(-v / M);
}

double grey_unchecked(double a, double M) {
  if (a == kInf) return M;
  if (a == -kInf) return -kInf;
  return -M * std::expm1(-a);
}

StructuringFunction with_values(const StructuringFunction& b, auto transform) {
  std::vector<StructuringFunction::Entry> entries = b.entries();
  for (auto& e : entries) e.value = transform(e.value);
  return StructuringFunction::unchecked(std::move(entries), b.kind());
}

Image direct_dilate(const Image& f, const StructuringFunction& b) {
  const double M = f.scale().M();
  Image out(f.width(), f.height(), f.scale(), -kInf);
  for (int y = 0; y < f.height(); ++y) {
    for (int x = 0; x < f.width(); ++x) {
      double best = -kInf;
      for (const auto& e : b.entries()) {
        const int sx = x - e.offset.dx;
        const int sy = y - e.offset.dy;
        if (!f.contains(sx, sy)) continue;
        const double v = detail::lip_plus_unchecked(f(sx, sy), e.value, M);
        if (v > best) best = v;
      }
      out(x, y) = best;
    }
  }
  return out;
}

Image direct_erode(const Image& f, const StructuringFunction& b) {
  const double M = f.scale().M();
  Image out(f.width(), f.height(), f.scale(), M);
  for (int y = 0; y < f.height(); ++y) {
    for (int x = 0; x < f.width(); ++x) {
      double best = M;
      for (const auto& e : b.entries()) {
        const int sx = x + e.offset.dx;
        const int sy = y + e.offset.dy;
        if (!f.contains(sx, sy)) continue;
        const double v = detail::lip_minus_unchecked(f(sx, sy), e.value, M);
        if (v < best) best = v;
      }
      out(x, y) = best;
    }
  }
  return out;
}

Image iso_dilate(const Image& f, const StructuringFunction& b) {
  const double M = f.scale().M();
  if (b.is_flat()) {
    const double c = b.entries().front().value;
    Image out = classical::dilate(f, with_values(b, [](double) { return 0.0; }));
    for (double& v : out.pixels()) v = detail::lip_plus_unchecked(v, c, M);
    return out;
  }
  const Image acute = to_acute(f);
  const StructuringFunction acute_b = with_values(b, [M](double v) { return acute_unchecked(v, M); });
  return from_acute(classical::dilate(acute, acute_b), f.scale());
}

Image iso_erode(const Image& f, const StructuringFunction& b) {
  const double M = f.scale().M();
  if (b.is_flat()) {
    const double c = b.entries().front().value;
    Image out = classical::erode(f, with_values(b, [](double) { return 0.0; }));
    for (double& v : out.pixels()) {
      // +inf marks an empty window: the lattice top is M.
      v = v == kInf ? M : detail::lip_minus_unchecked(v, c, M);
    }
    return out;
  }
  const Image acute = to_acute(f);
  const StructuringFunction acute_b = with_values(b, [M](double v) { return acute_unchecked(v, M); });
  return from_acute(classical::erode(acute, acute_b), f.scale());
}

// Negative function extended to the lattice by its limits, M <-> -inf.
// Needed where empty border windows yield the extremes.
Image lattice_negative(const Image& f) {
  const double M = f.scale().M();
  Image out = f;
  for (double& v : out.pixels()) {
    v = v == M ? -kInf : v == -kInf ? M : -v / (1.0 - v / M);
  }
  return out;
}

}  // namespace

Image to_acute(const Image& f) {
  if (!f.within_lattice()) throw PreconditionError("image pixels must lie in [-inf, M]");
  const double M = f.scale().M();
  Image out = f;
  for (double& v : out.pixels()) v = acute_unchecked(v, M);
  return out;
}

Image from_acute(const Image& acute, GreyScale scale) {
  Image out(acute.width(), acute.height(), scale, 0.0);
  const double M = scale.M();
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = grey_unchecked(acute[i], M);
  return out;
}

Image dilate(const Image& f, const StructuringFunction& b, Impl impl) {
  require_operands(f, b);
  return impl == Impl::direct ? direct_dilate(f, b) : iso_dilate(f, b);
}

Image erode(const Image& f, const StructuringFunction& b, Impl impl) {
  require_operands(f, b);
  return impl == Impl::direct ? direct_erode(f, b) : iso_erode(f, b);
}

Image open(const Image& f, const StructuringFunction& b, Impl impl) {
  return dilate(erode(f, b, impl), b, impl);
}

Image close(const Image& f, const StructuringFunction& b, Impl impl) {
  return erode(dilate(f, b, impl), b, impl);
}

Image gradient(const Image& f, const StructuringFunction& b, Impl impl) {
  const Image d = dilate(f, b, impl);
  const Image e = erode(f, b, impl);
  const GreyScale scale = f.scale();
  Image out = d;
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = d[i] == e[i] ? 0.0 : lip_minus(d[i], e[i], scale);
  }
  return out;
}

Image negative_image(const Image& f) {
  const GreyScale scale = f.scale();
  Image out = f;
  for (double& v : out.pixels()) v = lip_negate(v, scale);
  return out;
}

DualityReport check_duality(const Image& f, const StructuringFunction& b, Impl impl) {
  const double M = f.scale().M();
  for (double v : f.pixels()) {
    // f* maps -inf to M, whose opposite is undefined.
    if (!(std::isfinite(v) && v < M)) {
      throw PreconditionError("check_duality requires finite pixels < M");
    }
  }
  const Image f_star = negative_image(f);
  const StructuringFunction b_reflected = reflect_sf(b);
  DualityReport report;
  report.dilation_error =
      max_abs_diff(lattice_negative(dilate(f_star, b, impl)), erode(f, b_reflected, impl));
  report.erosion_error =
      max_abs_diff(lattice_negative(erode(f_star, b, impl)), dilate(f, b_reflected, impl));
  return report;
}

}  // namespace lmm::logarithmic
