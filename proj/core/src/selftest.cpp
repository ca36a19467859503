#include "lmm/selftest.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>

#include "lmm/classical.hpp"
#include "lmm/fuzz.hpp"
#include "lmm/lip.hpp"
#include "lmm/logarithmic.hpp"

namespace lmm {

namespace {

using fuzz::Rng;
using logarithmic::Impl;

constexpr double kTieMargin = 1e-12;

int scaled(int base, double effort) { return std::max(1, static_cast<int>(base * effort)); }

PropertyResult tolerance_result(std::string name, double worst, double tol, int cases) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "tol=%g", tol);
  return {std::move(name), worst <= tol, worst, cases, buf};
}

PropertyResult lip_group_laws(Rng& rng, int cases) {
  const GreyScale s{256.0};
  double worst = 0.0;
  for (int i = 0; i < cases; ++i) {
    const double a = fuzz::uniform(rng, -1000.0, 255.5);
    const double b = fuzz::uniform(rng, -1000.0, 255.5);
    const double c = fuzz::uniform(rng, -1000.0, 255.5);
    worst = std::max({worst,
                      std::abs(lip_plus(lip_plus(a, b, s), c, s) - lip_plus(a, lip_plus(b, c, s), s)),
                      std::abs(lip_plus(a, b, s) - lip_plus(b, a, s)),
                      std::abs(lip_plus(a, 0.0, s) - a),
                      std::abs(lip_plus(a, lip_negate(a, s), s)),
                      std::abs(lip_plus(lip_minus(a, b, s), b, s) - a)});
  }
  return tolerance_result("lip group laws", worst, 1e-9, cases);
}

PropertyResult lip_homomorphism(Rng& rng, int cases) {
  const GreyScale s{256.0};
  double worst = 0.0;
  for (int i = 0; i < cases; ++i) {
    const double a = fuzz::uniform(rng, -1000.0, 255.5);
    const double b = fuzz::uniform(rng, -1000.0, 255.5);
    worst = std::max({worst, std::abs(to_acute(lip_plus(a, b, s), s) - (to_acute(a, s) + to_acute(b, s))),
                      std::abs(from_acute(to_acute(a, s), s) - a)});
  }
  return tolerance_result("acute isomorphism", worst, 1e-9, cases);
}

PropertyResult lip_transmittance(Rng& rng, int cases) {
  const GreyScale s{256.0};
  double worst = 0.0;
  for (int i = 0; i < cases; ++i) {
    const double a = fuzz::uniform(rng, 0.0, 255.5);
    const double b = fuzz::uniform(rng, 0.0, 255.5);
    worst = std::max(worst, std::abs(transmittance(lip_plus(a, b, s), s) -
                                     transmittance(a, s) * transmittance(b, s)));
  }
  return tolerance_result("transmittance multiplicativity", worst, 1e-12, cases);
}

using Op = std::function<Image(const Image&, const StructuringFunction&)>;

PropertyResult adjunction(Rng& rng, int cases, const std::string& name, const Op& dil,
                          const Op& ero, double top, double sf_lo, double sf_hi) {
  const GreyScale s{256.0};
  int mismatches = 0, holds = 0, done = 0;
  while (done < cases) {
    const Image f = fuzz::lattice_image(rng, 16, 16, -100.0, 255.0, 0.1, s);
    const StructuringFunction b = fuzz::random_sf(rng, 2, 9, sf_lo, sf_hi, SfKind::logarithmic);
    const Image d = dil(f, b);
    const Image g = fuzz::adjunction_partner(rng, d, top, 1e-3, 20.0, 0.5);
    const Image e = ero(g, b);
    if (fuzz::has_near_tie(d, g, kTieMargin, top) || fuzz::has_near_tie(f, e, kTieMargin, top)) {
      continue;
    }
    const bool lhs = pointwise_leq(d, g);
    const bool rhs = pointwise_leq(f, e);
    mismatches += lhs != rhs;
    holds += lhs;
    ++done;
  }
  return {name, mismatches == 0, static_cast<double>(mismatches), cases,
          std::to_string(holds) + " cases with dilate(f) <= g"};
}

PropertyResult duality(Rng& rng, int cases) {
  const GreyScale s{256.0};
  double worst = 0.0;
  for (int i = 0; i < cases; ++i) {
    const Image f = fuzz::uniform_image(rng, 16, 16, -200.0, 255.0, s);
    const StructuringFunction b = fuzz::random_sf(rng, 2, 9, -100.0, 200.0, SfKind::logarithmic);
    const auto report = logarithmic::check_duality(f, b);
    worst = std::max({worst, report.dilation_error, report.erosion_error});
  }
  return tolerance_result("duality under negative function", worst, 1e-6, cases);
}

PropertyResult filter_laws(Rng& rng, int cases, const std::string& name, const Op& opening,
                           const Op& closing, double sf_lo, double sf_hi) {
  const GreyScale s{256.0};
  double worst = 0.0;
  auto excess = [](const Image& lo, const Image& hi) {
    // How far lo exceeds hi anywhere (0 if lo <= hi).
    double e = 0.0;
    for (std::size_t i = 0; i < lo.size(); ++i) {
      if (lo[i] > hi[i]) e = std::max(e, lo[i] - hi[i]);
    }
    return e;
  };
  for (int i = 0; i < cases; ++i) {
    const Image f = fuzz::uniform_image(rng, 16, 16, 0.0, 255.0, s);
    Image g = f;
    for (double& v : g.pixels()) v = std::min(255.5, v + fuzz::uniform(rng, 0.0, 30.0));
    const StructuringFunction b = fuzz::random_sf(rng, 2, 9, sf_lo, sf_hi, SfKind::logarithmic);
    const Image of = opening(f, b), og = opening(g, b);
    const Image cf = closing(f, b), cg = closing(g, b);
    worst = std::max({worst, excess(of, og), excess(cf, cg), excess(of, f), excess(f, cf),
                      max_abs_diff(opening(of, b), of), max_abs_diff(closing(cf, b), cf)});
  }
  return tolerance_result(name, worst, 1e-9, cases);
}

PropertyResult equivalence(Rng& rng, int cases) {
  const GreyScale s{256.0};
  double worst = 0.0;
  int extreme_mismatch = 0;
  for (int i = 0; i < cases; ++i) {
    const Image f = fuzz::lattice_image(rng, 24, 24, 0.0, 255.5, i % 2 == 0 ? 0.0 : 0.05, s);
    const StructuringFunction b = fuzz::random_sf(rng, 3, 15, -100.0, 250.0, SfKind::logarithmic);
    for (const bool dilation : {true, false}) {
      const Image direct = dilation ? logarithmic::dilate(f, b, Impl::direct)
                                    : logarithmic::erode(f, b, Impl::direct);
      const Image iso = dilation ? logarithmic::dilate(f, b, Impl::isomorphism)
                                 : logarithmic::erode(f, b, Impl::isomorphism);
      worst = std::max(worst, max_abs_diff(direct, iso));
      for (std::size_t k = 0; k < direct.size(); ++k) {
        const bool extreme = direct[k] == -kInf || direct[k] == s.M() || iso[k] == -kInf ||
                             iso[k] == s.M();
        if (extreme && direct[k] != iso[k]) ++extreme_mismatch;
      }
    }
  }
  PropertyResult r = tolerance_result("direct vs isomorphism", worst, 1e-6, cases);
  r.passed = r.passed && extreme_mismatch == 0;
  r.detail += ", extreme mismatches=" + std::to_string(extreme_mismatch);
  return r;
}

PropertyResult range_law(Rng& rng, int cases) {
  const GreyScale s{256.0};
  int violations = 0;
  for (int i = 0; i < cases; ++i) {
    const Image f = fuzz::lattice_image(rng, 16, 16, -50.0, 255.5, 0.05, s);
    const StructuringFunction b = fuzz::random_sf(rng, 2, 9, -50.0, 250.0, SfKind::logarithmic);
    const Image d = logarithmic::dilate(f, b);
    for (int y = 0; y < f.height(); ++y) {
      for (int x = 0; x < f.width(); ++x) {
        bool touches_M = false;
        for (const auto& e : b.entries()) {
          const int sx = x - e.offset.dx, sy = y - e.offset.dy;
          if (f.contains(sx, sy) && f(sx, sy) == s.M()) touches_M = true;
        }
        if (d(x, y) > s.M() || (d(x, y) == s.M()) != touches_M) ++violations;
      }
    }
  }
  return {"dilation range law", violations == 0, static_cast<double>(violations), cases, ""};
}

PropertyResult degenerate(Rng& rng, int cases) {
  const GreyScale s{256.0};
  int mismatches = 0;
  for (int i = 0; i < cases; ++i) {
    const Image f = fuzz::integer_image(rng, 20, 20, 0, 255, s);
    const StructuringFunction b = flat_sf(fuzz::uniform(rng, 0.5, 3.0), SfKind::logarithmic);
    for (Impl impl : {Impl::direct, Impl::isomorphism}) {
      mismatches += logarithmic::dilate(f, b, impl) != classical::dilate(f, b);
      mismatches += logarithmic::erode(f, b, impl) != classical::erode(f, b);
      mismatches += logarithmic::open(f, b, impl) != classical::open(f, b);
      mismatches += logarithmic::close(f, b, impl) != classical::close(f, b);
    }
  }
  return {"flat zero sf degenerates to classical", mismatches == 0,
          static_cast<double>(mismatches), cases, ""};
}

PropertyResult kernel_oracle(Rng& rng, int cases) {
  const GreyScale s{256.0};
  int mismatches = 0;
  for (int i = 0; i < cases; ++i) {
    const Image f = fuzz::integer_image(rng, 32, 32, 0, 255, s);
    const StructuringFunction b =
        i % 2 == 0 ? fuzz::random_sf(rng, 3, 20, 0.0, 64.0, SfKind::additive, true)
                   : hemisphere_sf(fuzz::uniform(rng, 0.5, 4.0), std::round(fuzz::uniform(rng, 0.0, 1.0)) + 1.0,
                                   SfKind::additive, s);
    const StructuringFunction flat = flat_sf(fuzz::uniform(rng, 0.5, 4.0), SfKind::additive);
    for (const auto* sf : {&b, &flat}) {
      mismatches += classical::dilate(f, *sf) != classical::reference::dilate(f, *sf);
      mismatches += classical::erode(f, *sf) != classical::reference::erode(f, *sf);
    }
  }
  return {"optimized kernels vs reference", mismatches == 0, static_cast<double>(mismatches),
          cases, ""};
}

}  // namespace

std::vector<PropertyResult> run_selftest(const SelftestOptions& options) {
  Rng rng(options.seed);
  const double k = options.effort;
  const Op cdil = [](const Image& f, const StructuringFunction& b) { return classical::dilate(f, b); };
  const Op cero = [](const Image& f, const StructuringFunction& b) { return classical::erode(f, b); };
  const Op copen = [](const Image& f, const StructuringFunction& b) { return classical::open(f, b); };
  const Op cclose = [](const Image& f, const StructuringFunction& b) { return classical::close(f, b); };
  const Op ldil = [](const Image& f, const StructuringFunction& b) { return logarithmic::dilate(f, b); };
  const Op lero = [](const Image& f, const StructuringFunction& b) { return logarithmic::erode(f, b); };
  const Op lopen = [](const Image& f, const StructuringFunction& b) { return logarithmic::open(f, b); };
  const Op lclose = [](const Image& f, const StructuringFunction& b) { return logarithmic::close(f, b); };

  std::vector<PropertyResult> results;
  results.push_back(lip_group_laws(rng, scaled(10000, k)));
  results.push_back(lip_homomorphism(rng, scaled(10000, k)));
  results.push_back(lip_transmittance(rng, scaled(10000, k)));
  results.push_back(adjunction(rng, scaled(1000, k), "logarithmic adjunction", ldil, lero, 256.0,
                               -100.0, 250.0));
  results.push_back(adjunction(rng, scaled(1000, k), "classical adjunction", cdil, cero, kInf,
                               -50.0, 100.0));
  results.push_back(duality(rng, scaled(200, k)));
  results.push_back(filter_laws(rng, scaled(100, k), "logarithmic opening/closing laws", lopen,
                                lclose, -50.0, 200.0));
  results.push_back(filter_laws(rng, scaled(100, k), "classical opening/closing laws", copen,
                                cclose, 0.0, 64.0));
  results.push_back(equivalence(rng, scaled(200, k)));
  results.push_back(range_law(rng, scaled(100, k)));
  results.push_back(degenerate(rng, scaled(50, k)));
  results.push_back(kernel_oracle(rng, scaled(100, k)));
  return results;
}

}  // namespace lmm
