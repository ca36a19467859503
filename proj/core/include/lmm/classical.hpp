#pragma once

// Grey-level morphology with additive structuring functions on the lattice
// of extended-real functions:
//
//   dilate(f, b)(x) = sup { f(x - h) + b(h) : h in D_b, x - h in D }
//   erode(f, b)(x)  = inf { f(x + h) - b(h) : h in D_b, x + h in D }
//
// Samples falling outside the image are skipped, i.e. padded with -inf for
// dilation and +inf for erosion. A pixel with no in-domain sample therefore
// dilates to -inf and erodes to +inf. Values of b may be any finite reals
// (the logarithmic module runs these kernels on acute-domain images).
//
// Every function throws PreconditionError for an empty structuring function.

#include "lmm/image.hpp"
#include "lmm/structuring_function.hpp"

namespace lmm::classical {

[[nodiscard]] Image dilate(const Image& f, const StructuringFunction& b);
[[nodiscard]] Image erode(const Image& f, const StructuringFunction& b);

/// dilate(erode(f, b), b)
[[nodiscard]] Image open(const Image& f, const StructuringFunction& b);
/// erode(dilate(f, b), b)
[[nodiscard]] Image close(const Image& f, const StructuringFunction& b);

/// dilate(f, b) - erode(f, b). Pixels where both agree (including equal
/// infinities) give 0.
[[nodiscard]] Image gradient(const Image& f, const StructuringFunction& b);

/// Straight double loops over pixels and sf entries. The optimized kernels
/// above must match these bit for bit.
namespace reference {
[[nodiscard]] Image dilate(const Image& f, const StructuringFunction& b);
[[nodiscard]] Image erode(const Image& f, const StructuringFunction& b);
}  // namespace reference

}  // namespace lmm::classical
