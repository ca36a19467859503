#include "lmm/image.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "lmm/error.hpp"

namespace lmm {

namespace {

void require_same_shape(const Image& f, const Image& g, const char* what) {
  if (!f.same_shape(g)) {
    throw PreconditionError(std::string(what) + ": image shapes differ");
  }
}

template <typename Op>
Image combine(const Image& f, const Image& g, Op op) {
  Image out = f;
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = op(f[i], g[i]);
  return out;
}

}  // namespace

Image::Image(int width, int height, GreyScale scale, double fill)
    : Image(width, height,
            std::vector<double>(width > 0 && height > 0
                                    ? static_cast<std::size_t>(width) * static_cast<std::size_t>(height)
                                    : 0,
                                fill),
            scale) {}

Image::Image(int width, int height, std::vector<double> pixels, GreyScale scale)
    : width_(width), height_(height), pixels_(std::move(pixels)), scale_(scale) {
  if (width <= 0 || height <= 0) {
    throw PreconditionError("image dimensions must be positive");
  }
  if (pixels_.size() != static_cast<std::size_t>(width) * static_cast<std::size_t>(height)) {
    throw PreconditionError("pixel count does not match width x height");
  }
  if (std::ranges::any_of(pixels_, [](double v) { return std::isnan(v); })) {
    throw PreconditionError("NaN pixel");
  }
}

Image Image::signal(std::vector<double> samples, GreyScale scale) {
  const int n = static_cast<int>(samples.size());
  return Image(n, 1, std::move(samples), scale);
}

bool Image::within_lattice() const noexcept {
  const double M = scale_.M();
  return std::ranges::all_of(pixels_, [M](double v) { return v <= M; });
}

bool Image::displayable() const noexcept {
  const double M = scale_.M();
  return std::ranges::all_of(pixels_, [M](double v) { return v >= 0.0 && v < M; });
}

double Image::min() const noexcept { return *std::ranges::min_element(pixels_); }
double Image::max() const noexcept { return *std::ranges::max_element(pixels_); }

Image pointwise_sup(const Image& f, const Image& g) {
  require_same_shape(f, g, "pointwise_sup");
  return combine(f, g, [](double a, double b) { return std::max(a, b); });
}

Image pointwise_inf(const Image& f, const Image& g) {
  require_same_shape(f, g, "pointwise_inf");
  return combine(f, g, [](double a, double b) { return std::min(a, b); });
}

bool pointwise_leq(const Image& f, const Image& g) {
  require_same_shape(f, g, "pointwise_leq");
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (!(f[i] <= g[i])) return false;
  }
  return true;
}

double max_abs_diff(const Image& f, const Image& g) {
  require_same_shape(f, g, "max_abs_diff");
  double worst = 0.0;
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (f[i] == g[i]) continue;
    worst = std::max(worst, std::abs(f[i] - g[i]));
  }
  return worst;
}

Image complement(const Image& img) {
  const double top = img.scale().M() - 1.0;
  Image out = img;
  for (double& v : out.pixels()) {
    if (!(v >= 0.0 && v <= top)) {
      throw PreconditionError("complement undefined outside display range [0, M-1]");
    }
    v = top - v;
  }
  return out;
}

Image rescale_for_display(const Image& img) {
  for (double v : img.pixels()) {
    if (std::isinf(v)) throw PreconditionError("cannot rescale unbounded image");
  }
  const double lo = img.min();
  const double hi = img.max();
  Image out(img.width(), img.height(), img.scale(), 0.0);
  if (hi == lo) return out;
  const double span = hi - lo;
  for (std::size_t i = 0; i < img.size(); ++i) {
    out[i] = std::floor(255.0 * (img[i] - lo) / span + 0.5);
  }
  return out;
}

Image exposure_change(const Image& img, double c) {
  const GreyScale scale = img.scale();
  if (!(c < scale.M())) throw PreconditionError("exposure_change requires c < M");
  Image out = img;
  for (double& v : out.pixels()) v = lip_plus(v, c, scale);
  return out;
}

Image synth_two_peaks_signal(int length, const TwoPeaksParams& params, GreyScale scale) {
  if (length < 16) throw PreconditionError("two-peak signal needs length >= 16");
  const double low_centre = length / 4.0;
  const double high_centre = 3.0 * length / 4.0;
  auto bump = [&](double x, double centre) {
    const double d = (x - centre) / params.half_width;
    if (std::abs(d) >= 1.0) return 0.0;
    return 0.5 * (1.0 + std::cos(std::numbers::pi * d));
  };
  std::vector<double> samples(static_cast<std::size_t>(length));
  for (int x = 0; x < length; ++x) {
    samples[static_cast<std::size_t>(x)] =
        params.baseline + (params.low_peak - params.baseline) * bump(x, low_centre) +
        (params.high_peak - params.baseline) * bump(x, high_centre);
  }
  return Image::signal(std::move(samples), scale);
}

double pearson_correlation(const Image& f, const Image& g) {
  require_same_shape(f, g, "pearson_correlation");
  const double n = static_cast<double>(f.size());
  double mf = 0.0, mg = 0.0;
  for (std::size_t i = 0; i < f.size(); ++i) {
    mf += f[i];
    mg += g[i];
  }
  mf /= n;
  mg /= n;
  double sff = 0.0, sgg = 0.0, sfg = 0.0;
  for (std::size_t i = 0; i < f.size(); ++i) {
    const double a = f[i] - mf;
    const double b = g[i] - mg;
    sff += a * a;
    sgg += b * b;
    sfg += a * b;
  }
  if (sff == 0.0 && sgg == 0.0) return f == g ? 1.0 : 0.0;
  if (sff == 0.0 || sgg == 0.0) return 0.0;
  return sfg / std::sqrt(sff * sgg);
}

}  // namespace lmm
