#include "lmm/fuzz.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <vector>

namespace lmm::fuzz {

double uniform(Rng& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

Image uniform_image(Rng& rng, int width, int height, double lo, double hi, GreyScale scale) {
  Image img(width, height, scale);
  for (double& v : img.pixels()) v = uniform(rng, lo, hi);
  return img;
}

Image integer_image(Rng& rng, int width, int height, int lo, int hi, GreyScale scale) {
  std::uniform_int_distribution<int> dist(lo, hi);
  Image img(width, height, scale);
  for (double& v : img.pixels()) v = dist(rng);
  return img;
}

Image lattice_image(Rng& rng, int width, int height, double lo, double hi, double p_extreme,
                    GreyScale scale) {
  std::bernoulli_distribution extreme(p_extreme);
  std::bernoulli_distribution coin(0.5);
  Image img(width, height, scale);
  for (double& v : img.pixels()) {
    if (extreme(rng)) {
      v = coin(rng) ? -kInf : scale.M();
    } else {
      v = uniform(rng, lo, hi);
    }
  }
  return img;
}

StructuringFunction random_sf(Rng& rng, int extent, int max_entries, double lo, double hi,
                              SfKind kind, bool integer) {
  std::uniform_int_distribution<int> coord(-extent, extent);
  const int box = (2 * extent + 1) * (2 * extent + 1);
  std::uniform_int_distribution<int> count(1, std::min(max_entries, box));
  const int n = count(rng);
  std::set<Offset> seen;
  std::vector<StructuringFunction::Entry> entries;
  while (static_cast<int>(entries.size()) < n) {
    const Offset h{coord(rng), coord(rng)};
    if (!seen.insert(h).second) continue;
    double v = uniform(rng, lo, hi);
    if (integer) v = std::round(v);
    entries.push_back({h, v});
  }
  return StructuringFunction::unchecked(std::move(entries), kind);
}

bool has_near_tie(const Image& a, const Image& b, double margin, double top) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == top && b[i] == top) continue;
    if (std::isfinite(a[i]) && std::isfinite(b[i]) && std::abs(a[i] - b[i]) <= margin) {
      return true;
    }
  }
  return false;
}

Image adjunction_partner(Rng& rng, const Image& dilated, double top, double gap_lo,
                         double gap_hi, double p_violate) {
  Image g = dilated;
  for (double& v : g.pixels()) {
    if (v == -kInf) {
      // Anything is above -inf; sometimes keep the extreme itself.
      v = std::bernoulli_distribution(0.3)(rng) ? -kInf : uniform(rng, -100.0, std::min(top, 256.0) - 1.0);
    } else if (v < top) {
      v = std::min(top, v + uniform(rng, gap_lo, gap_hi));
    }
  }
  if (std::bernoulli_distribution(p_violate)(rng)) {
    std::vector<std::size_t> candidates;
    for (std::size_t i = 0; i < dilated.size(); ++i) {
      if (dilated[i] > -kInf) candidates.push_back(i);
    }
    if (!candidates.empty()) {
      const std::size_t i = candidates[std::uniform_int_distribution<std::size_t>(
          0, candidates.size() - 1)(rng)];
      g[i] = dilated[i] - uniform(rng, gap_lo, gap_hi);
    }
  }
  return g;
}

}  // namespace lmm::fuzz
