#pragma once

// Seeded random generators for property checks. Deterministic for a given
// seed on a given standard library.

#include <cstdint>
#include <functional>
#include <optional>
#include <random>

#include "lmm/image.hpp"
#include "lmm/structuring_function.hpp"

namespace lmm::fuzz {

using Rng = std::mt19937_64;

[[nodiscard]] double uniform(Rng& rng, double lo, double hi);

/// Pixels uniform in [lo, hi].
[[nodiscard]] Image uniform_image(Rng& rng, int width, int height, double lo, double hi,
                                  GreyScale scale = GreyScale{});

/// Integer pixels uniform in {lo..hi}.
[[nodiscard]] Image integer_image(Rng& rng, int width, int height, int lo, int hi,
                                  GreyScale scale = GreyScale{});

/// Pixels uniform in [lo, hi], each replaced with probability p_extreme by
/// -inf or M (equal odds).
[[nodiscard]] Image lattice_image(Rng& rng, int width, int height, double lo, double hi,
                                  double p_extreme, GreyScale scale = GreyScale{});

/// Random sf: 1..max_entries distinct offsets in [-extent, extent]^2 with
/// values uniform in [lo, hi] (rounded to integers if `integer`). The value
/// range is not validated against any kind.
[[nodiscard]] StructuringFunction random_sf(Rng& rng, int extent, int max_entries, double lo,
                                            double hi, SfKind kind, bool integer = false);

/// True if some pixel pair is a near-tie: both values finite and
/// |a - b| <= margin. Pairs that are both equal to an exactly-handled
/// extreme (+-inf, or `top`) are not ties.
[[nodiscard]] bool has_near_tie(const Image& a, const Image& b, double margin,
                                double top = kInf);

/// Builds the "g" operand of an adjunction check from dilated = dilate(f):
/// every pixel is raised by a gap in [gap_lo, gap_hi] (capped at `top`), and
/// with probability p_violate one pixel is lowered below dilated instead,
/// so both outcomes of the biconditional are exercised.
[[nodiscard]] Image adjunction_partner(Rng& rng, const Image& dilated, double top,
                                       double gap_lo, double gap_hi, double p_violate);

}  // namespace lmm::fuzz
