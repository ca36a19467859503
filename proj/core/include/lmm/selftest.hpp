#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace lmm {

struct PropertyResult {
  std::string name;
  bool passed = false;
  /// Largest observed violation (grey levels, or a mismatch count for the
  /// order-theoretic checks).
  double max_error = 0.0;
  int cases = 0;
  std::string detail;
};

struct SelftestOptions {
  std::uint64_t seed = 20190101;
  /// Multiplies the default number of fuzz cases per property.
  double effort = 1.0;
};

/// Runs the invariant suite: LIP group laws and homomorphism, both
/// adjunctions, duality, opening/closing laws, implementation equivalence,
/// range law, degenerate agreement and kernel/reference equivalence.
[[nodiscard]] std::vector<PropertyResult> run_selftest(const SelftestOptions& options = {});

}  // namespace lmm
