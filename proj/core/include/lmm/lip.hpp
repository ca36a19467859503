#pragma once

// Scalar arithmetic of the Logarithmic Image Processing (LIP) model on the
// extended grey scale [-inf, M].
//
// Grey levels are inverted with respect to the usual display convention:
// 0 is white (no absorbing obstacle) and M is black (opaque). Values below 0
// are light intensifiers. All functions are pure.

#include <limits>

namespace lmm {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

/// The upper bound M of the grey scale. Every LIP operation is parameterised
/// by it; there is no global default beyond the constructor argument.
class GreyScale {
 public:
  /// Throws PreconditionError unless 0 < M < inf.
  explicit GreyScale(double M = 256.0);

  [[nodiscard]] constexpr double M() const noexcept { return m_; }

  friend constexpr bool operator==(GreyScale, GreyScale) = default;

 private:
  double m_;
};

// LIP addition, a + b - ab/M: superposition of two obstacles.
// -inf absorbs any finite operand; M absorbs everything except -inf.
// (-inf, M) in either order throws LipDomainError.
[[nodiscard]] double lip_plus(double a, double b, GreyScale scale);

// LIP opposite, -a / (1 - a/M). lip_negate(-inf) = M. Throws for a = M.
[[nodiscard]] double lip_negate(double a, GreyScale scale);

// LIP difference (a - b) / (1 - b/M), the inverse of lip_plus:
// lip_plus(lip_minus(a, b), b) == a.
//
// The product form (a - b)(1 - b/M) that sometimes appears in print is not
// an inverse of lip_plus and is not used.
//
// Extremes: lip_minus(M, b) = M, lip_minus(-inf, b) = -inf for b < M, and
// lip_minus(a, -inf) = M for a > -inf (limit). Throws for b = M and for
// (-inf, -inf).
[[nodiscard]] double lip_minus(double a, double b, GreyScale scale);

// LIP scalar multiplication M - M(1 - a/M)^lambda.
[[nodiscard]] double lip_times(double lambda, double a, GreyScale scale);

// Transmittance 1 - a/M. +inf for a = -inf.
[[nodiscard]] double transmittance(double a, GreyScale scale);

// Map into the additive ("acute") domain: -ln(1 - a/M).
// Strictly increasing; 0 -> 0, M -> +inf, -inf -> -inf.
// lip_plus becomes ordinary addition there.
[[nodiscard]] double to_acute(double a, GreyScale scale);

// Inverse of to_acute: M(1 - exp(-a)). +inf -> exactly M, -inf -> -inf.
[[nodiscard]] double from_acute(double a, GreyScale scale);

namespace detail {

// Unchecked kernels for inner loops. Callers guarantee operands lie in
// [-inf, M] and avoid the undefined combinations listed above.

inline double lip_plus_unchecked(double a, double b, double M) noexcept {
  if (a == -kInf || b == -kInf) return -kInf;
  if (a == M || b == M) return M;
  return a + b - a * b / M;
}

// Requires b < M.
inline double lip_minus_unchecked(double a, double b, double M) noexcept {
  if (a == M) return M;
  if (a == -kInf) return -kInf;
  if (b == -kInf) return M;
  return (a - b) / (1.0 - b / M);
}

}  // namespace detail

}  // namespace lmm
