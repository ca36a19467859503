#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "lmm/lip.hpp"

namespace lmm {

/// A width x height grid of extended-real grey values (row-major), tagged
/// with the grey scale it is expressed in. Signals are images of height 1.
///
/// Pixels are stored losslessly as doubles: morphological outputs can leave
/// the displayable range [0, M[ (negative erosions, classical dilations above
/// M, -inf) and must round-trip through pipelines unchanged.
class Image {
 public:
  Image(int width, int height, GreyScale scale = GreyScale{}, double fill = 0.0);
  Image(int width, int height, std::vector<double> pixels, GreyScale scale = GreyScale{});

  static Image signal(std::vector<double> samples, GreyScale scale = GreyScale{});

  [[nodiscard]] int width() const noexcept { return width_; }
  [[nodiscard]] int height() const noexcept { return height_; }
  [[nodiscard]] std::size_t size() const noexcept { return pixels_.size(); }
  [[nodiscard]] GreyScale scale() const noexcept { return scale_; }

  [[nodiscard]] double operator()(int x, int y) const { return pixels_[index(x, y)]; }
  double& operator()(int x, int y) { return pixels_[index(x, y)]; }
  [[nodiscard]] double operator[](std::size_t i) const { return pixels_[i]; }
  double& operator[](std::size_t i) { return pixels_[i]; }

  [[nodiscard]] std::span<const double> pixels() const noexcept { return pixels_; }
  [[nodiscard]] std::span<double> pixels() noexcept { return pixels_; }

  [[nodiscard]] bool contains(int x, int y) const noexcept {
    return x >= 0 && y >= 0 && x < width_ && y < height_;
  }
  [[nodiscard]] bool same_shape(const Image& other) const noexcept {
    return width_ == other.width_ && height_ == other.height_;
  }

  /// Every pixel lies in the logarithmic lattice [-inf, M] (no NaN).
  [[nodiscard]] bool within_lattice() const noexcept;
  /// Every pixel lies in [0, M[.
  [[nodiscard]] bool displayable() const noexcept;

  [[nodiscard]] double min() const noexcept;
  [[nodiscard]] double max() const noexcept;

  /// Same shape, scale and pixel values (IEEE equality, so -0.0 == 0.0).
  friend bool operator==(const Image&, const Image&) = default;

 private:
  [[nodiscard]] std::size_t index(int x, int y) const noexcept {
    return static_cast<std::size_t>(y) * static_cast<std::size_t>(width_) +
           static_cast<std::size_t>(x);
  }

  int width_;
  int height_;
  std::vector<double> pixels_;
  GreyScale scale_;
};

// Pixel-wise lattice operations. Shapes must match (PreconditionError).
[[nodiscard]] Image pointwise_sup(const Image& f, const Image& g);
[[nodiscard]] Image pointwise_inf(const Image& f, const Image& g);
[[nodiscard]] bool pointwise_leq(const Image& f, const Image& g);

/// max |f - g| over pixels; pixels where both values are the same infinity
/// count as 0, a mismatched infinity as +inf.
[[nodiscard]] double max_abs_diff(const Image& f, const Image& g);

/// M - 1 - f. Requires every pixel in [0, M - 1].
[[nodiscard]] Image complement(const Image& img);

/// Affine min-max map onto [0, 255] followed by round-half-up. Constant
/// images map to 0. Throws on infinite pixels.
[[nodiscard]] Image rescale_for_display(const Image& img);

/// Pixel-wise lip_plus(f, c): darkens for c > 0, brightens for c < 0
/// (e.g. c = lip_negate(d)). Requires c < M.
[[nodiscard]] Image exposure_change(const Image& img, double c);

/// Parameters of the synthetic two-bump signal: two raised-cosine bumps
/// over a constant baseline.
struct TwoPeaksParams {
  double baseline = 10.0;
  double low_peak = 120.0;
  double high_peak = 230.0;
  double half_width = 64.0;  ///< samples
};

/// Deterministic 1-D test signal (height 1). The low bump is centred at
/// length/4 and the high one at 3*length/4. Requires length >= 16.
[[nodiscard]] Image synth_two_peaks_signal(int length, const TwoPeaksParams& params = {},
                                           GreyScale scale = GreyScale{});

/// Pearson correlation of the pixel values of two same-shape images.
/// Two constant images correlate to 1 if equal and 0 otherwise; a single
/// constant image against a varying one gives 0.
[[nodiscard]] double pearson_correlation(const Image& f, const Image& g);

}  // namespace lmm
