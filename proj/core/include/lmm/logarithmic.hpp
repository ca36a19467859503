#pragma once

// Logarithmic morphology: erosion and dilation in which the structuring
// function is combined with the image by LIP addition / difference instead
// of ordinary +/-. Operators act on the lattice [-inf, M]^D:
//
//   dilate(f, b)(x) = sup { lip_plus(f(x - h), b(h)) }
//   erode(f, b)(x)  = inf { lip_minus(f(x + h), b(h)) }
//
// (erode, dilate) form an adjunction, so open = dilate . erode and
// close = erode . dilate are an opening and a closing.
//
// Out-of-domain samples are skipped, which equals padding with the lattice
// extremes -inf (dilation) and M (erosion).
//
// Two implementations are provided:
//   direct       evaluates the definitions above sample by sample;
//   isomorphism  maps f and b through to_acute(), runs the classical kernels
//                there (LIP addition becomes +) and maps back. Flat sfs skip
//                the transform entirely: a constant c commutes out of the
//                sup/inf because lip_plus(., c) is increasing.
// Both agree to ~1e-9 grey levels and exactly at -inf and M.
//
// Preconditions (PreconditionError): non-empty sf with every value in
// ]-inf, M[; every pixel of f in [-inf, M].

#include "lmm/image.hpp"
#include "lmm/structuring_function.hpp"

namespace lmm::logarithmic {

enum class Impl { direct, isomorphism };

[[nodiscard]] Image dilate(const Image& f, const StructuringFunction& b,
                           Impl impl = Impl::isomorphism);
[[nodiscard]] Image erode(const Image& f, const StructuringFunction& b,
                          Impl impl = Impl::isomorphism);
[[nodiscard]] Image open(const Image& f, const StructuringFunction& b,
                         Impl impl = Impl::isomorphism);
[[nodiscard]] Image close(const Image& f, const StructuringFunction& b,
                          Impl impl = Impl::isomorphism);

/// lip_minus(dilate(f, b), erode(f, b)) pixel-wise. Where both are equal
/// (in particular both M, or both -inf) the gradient is 0.
[[nodiscard]] Image gradient(const Image& f, const StructuringFunction& b,
                             Impl impl = Impl::isomorphism);

/// Pixel-wise LIP opposite f*(x) = lip_negate(f(x)). Requires f < M.
[[nodiscard]] Image negative_image(const Image& f);

/// Pixel-wise to_acute / from_acute.
[[nodiscard]] Image to_acute(const Image& f);
[[nodiscard]] Image from_acute(const Image& acute, GreyScale scale);

struct DualityReport {
  /// max |(dilate_b(f*))* - erode_reflect(b)(f)|
  double dilation_error = 0.0;
  /// max |(erode_b(f*))* - dilate_reflect(b)(f)|
  double erosion_error = 0.0;

  [[nodiscard]] bool holds(double tolerance = 1e-6) const noexcept {
    return dilation_error <= tolerance && erosion_error <= tolerance;
  }
};

/// Measures how far the pair (erode, dilate) is from being dual under the
/// negative function with reflected sf. Requires finite pixels < M.
[[nodiscard]] DualityReport check_duality(const Image& f, const StructuringFunction& b,
                                          Impl impl = Impl::isomorphism);

}  // namespace lmm::logarithmic
