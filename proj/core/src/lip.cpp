#include "lmm/lip.hpp"

#include <cmath>
#include <string>

#include "lmm/error.hpp"

namespace lmm {

namespace {

void require_in_scale(double a, double M, const char* what) {
  if (std::isnan(a) || a > M) {
    throw PreconditionError(std::string(what) + ": grey value " +
                            std::to_string(a) + " outside [-inf, M]");
  }
}

}  // namespace

GreyScale::GreyScale(double M) : m_(M) {
  if (!(M > 0.0) || !std::isfinite(M)) {
    throw PreconditionError("grey scale M must be finite and positive");
  }
}

double lip_plus(double a, double b, GreyScale scale) {
  const double M = scale.M();
  require_in_scale(a, M, "lip_plus");
  require_in_scale(b, M, "lip_plus");
  if ((a == -kInf && b == M) || (a == M && b == -kInf)) {
    throw LipDomainError("undefined LIP sum at lattice extremes (-inf with M)");
  }
  return detail::lip_plus_unchecked(a, b, M);
}

double lip_negate(double a, GreyScale scale) {
  const double M = scale.M();
  require_in_scale(a, M, "lip_negate");
  if (a == M) throw LipDomainError("no LIP opposite for black (a = M)");
  if (a == -kInf) return M;
  return -a / (1.0 - a / M);
}

double lip_minus(double a, double b, GreyScale scale) {
  const double M = scale.M();
  require_in_scale(a, M, "lip_minus");
  require_in_scale(b, M, "lip_minus");
  if (b == M) throw LipDomainError("LIP difference undefined for b = M");
  if (a == -kInf && b == -kInf) {
    throw LipDomainError("LIP difference undefined for (-inf, -inf)");
  }
  return detail::lip_minus_unchecked(a, b, M);
}

double lip_times(double lambda, double a, GreyScale scale) {
  const double M = scale.M();
  require_in_scale(a, M, "lip_times");
  if (std::isnan(lambda) || !std::isfinite(lambda)) {
    throw PreconditionError("lip_times: lambda must be finite");
  }
  if (a == -kInf) {
    if (lambda > 0.0) return -kInf;
    throw LipDomainError("lip_times: -inf requires lambda > 0");
  }
  if (lambda == 0.0) return 0.0;
  if (a == M) {
    if (lambda > 0.0) return M;
    throw LipDomainError("lip_times: no LIP opposite for black (a = M)");
  }
  // T^lambda with T = 1 - a/M > 0, computed in log space.
  return -M * std::expm1(lambda * std::log1p(-a / M));
}

double transmittance(double a, GreyScale scale) {
  const double M = scale.M();
  require_in_scale(a, M, "transmittance");
  if (a == -kInf) return kInf;
  return 1.0 - a / M;
}

double to_acute(double a, GreyScale scale) {
  const double M = scale.M();
  require_in_scale(a, M, "to_acute");
  if (a == M) return kInf;
  if (a == -kInf) return -kInf;
  return -std::log1p(-a / M);
}

double from_acute(double a, GreyScale scale) {
  if (std::isnan(a)) throw PreconditionError("from_acute: NaN");
  const double M = scale.M();
  if (a == kInf) return M;
  if (a == -kInf) return -kInf;
  return -M * std::expm1(-a);
}

}  // namespace lmm
