#include "lmm/classical.hpp"

#include <gtest/gtest.h>

#include "lmm/error.hpp"
#include "lmm/fuzz.hpp"

using namespace lmm;
using E = StructuringFunction::Entry;

namespace {

StructuringFunction point(double value) {
  return StructuringFunction({E{{0, 0}, value}}, SfKind::additive);
}

Image shift(const Image& f, int sx, int sy, double fill) {
  Image out(f.width(), f.height(), f.scale(), fill);
  for (int y = 0; y < f.height(); ++y)
    for (int x = 0; x < f.width(); ++x)
      if (f.contains(x - sx, y - sy)) out(x, y) = f(x - sx, y - sy);
  return out;
}

}  // namespace

TEST(ClassicalDilate, Examples) {
  const Image f = Image::signal({0.0, 10.0, 0.0});
  EXPECT_EQ(classical::dilate(f, point(5.0)), Image::signal({5.0, 15.0, 5.0}));
  EXPECT_EQ(classical::dilate(f, flat_sf(1.0, SfKind::additive)), Image::signal({10.0, 10.0, 10.0}));
}

TEST(ClassicalErode, Examples) {
  const Image f = Image::signal({0.0, 10.0, 0.0});
  EXPECT_EQ(classical::erode(f, point(5.0)), Image::signal({-5.0, 5.0, -5.0}));
  EXPECT_EQ(classical::erode(f, flat_sf(1.0, SfKind::additive)), Image::signal({0.0, 0.0, 0.0}));
}

TEST(Classical, AsymmetricSfDirection) {
  // dilate samples f(x - h), erode samples f(x + h).
  const StructuringFunction right({E{{1, 0}, 0.0}}, SfKind::additive);
  const Image f = Image::signal({1.0, 2.0, 3.0});
  EXPECT_EQ(classical::dilate(f, right), Image::signal({-kInf, 1.0, 2.0}));
  EXPECT_EQ(classical::erode(f, right), Image::signal({2.0, 3.0, kInf}));
}

TEST(Classical, EmptySfRejected) {
  const StructuringFunction empty({}, SfKind::additive);
  const Image f(3, 3);
  EXPECT_THROW((void)classical::dilate(f, empty), PreconditionError);
  EXPECT_THROW((void)classical::erode(f, empty), PreconditionError);
  EXPECT_THROW((void)classical::reference::dilate(f, empty), PreconditionError);
}

TEST(Classical, LatticeExtremes) {
  const auto b = hemisphere_sf(2.0, 30.0, SfKind::additive);
  EXPECT_EQ(classical::dilate(Image(5, 5, GreyScale{}, -kInf), b), Image(5, 5, GreyScale{}, -kInf));
  EXPECT_EQ(classical::erode(Image(5, 5, GreyScale{}, kInf), b), Image(5, 5, GreyScale{}, kInf));
}

TEST(ClassicalOpenClose, ImpulseRemoved) {
  const Image f = Image::signal({0.0, 0.0, 10.0, 0.0, 0.0});
  const Image g = classical::open(f, flat_sf(1.0, SfKind::additive));
  for (double v : g.pixels()) EXPECT_LE(v, 0.0);
}

TEST(ClassicalGradient, Examples) {
  const auto flat = flat_sf(1.0, SfKind::additive);
  EXPECT_EQ(classical::gradient(Image::signal({0.0, 0.0, 10.0, 10.0}), flat),
            Image::signal({0.0, 10.0, 10.0, 0.0}));
  EXPECT_EQ(classical::gradient(Image(6, 6, GreyScale{}, 77.0), flat), Image(6, 6, GreyScale{}, 0.0));
  EXPECT_EQ(classical::gradient(Image(3, 3, GreyScale{}, -kInf), flat), Image(3, 3, GreyScale{}, 0.0));
}

TEST(ClassicalGradient, NonNegative) {
  fuzz::Rng rng(21);
  for (int i = 0; i < 50; ++i) {
    const Image f = fuzz::uniform_image(rng, 12, 12, 0.0, 255.0);
    const auto b = hemisphere_sf(fuzz::uniform(rng, 0.5, 3.0), fuzz::uniform(rng, 1.0, 50.0),
                                 SfKind::additive);
    for (double v : classical::gradient(f, b).pixels()) EXPECT_GE(v, 0.0);
  }
}

TEST(ClassicalDilate, ExceedsMOnTwoPeakSignal) {
  const Image f = synth_two_peaks_signal(512);
  EXPECT_GT(classical::dilate(f, hemisphere_sf(20.0, 64.0, SfKind::additive)).max(), 256.0);
  EXPECT_LT(classical::erode(f, hemisphere_sf(20.0, 64.0, SfKind::additive)).min(), 0.0);
}

// ---------------------------------------------------------------------------
// Lattice properties

class ClassicalPropertyTest : public ::testing::Test {
 protected:
  fuzz::Rng rng{404};
  StructuringFunction random_b() { return fuzz::random_sf(rng, 2, 9, -20.0, 60.0, SfKind::additive); }
};

TEST_F(ClassicalPropertyTest, Adjunction) {
  int done = 0, holds = 0;
  while (done < 300) {
    const Image f = fuzz::lattice_image(rng, 16, 16, -50.0, 255.0, 0.1);
    const auto b = random_b();
    const Image d = classical::dilate(f, b);
    const Image g = fuzz::adjunction_partner(rng, d, kInf, 1e-3, 10.0, 0.5);
    const Image e = classical::erode(g, b);
    if (fuzz::has_near_tie(d, g, 1e-12) || fuzz::has_near_tie(f, e, 1e-12)) continue;
    ASSERT_EQ(pointwise_leq(d, g), pointwise_leq(f, e)) << "case " << done;
    holds += pointwise_leq(d, g);
    ++done;
  }
  EXPECT_GT(holds, 50);
  EXPECT_LT(holds, 250);
}

TEST_F(ClassicalPropertyTest, DistributesOverSupAndInf) {
  for (int i = 0; i < 100; ++i) {
    const Image f = fuzz::uniform_image(rng, 10, 10, 0.0, 255.0);
    const Image g = fuzz::uniform_image(rng, 10, 10, 0.0, 255.0);
    const auto b = random_b();
    EXPECT_EQ(classical::dilate(pointwise_sup(f, g), b),
              pointwise_sup(classical::dilate(f, b), classical::dilate(g, b)));
    EXPECT_EQ(classical::erode(pointwise_inf(f, g), b),
              pointwise_inf(classical::erode(f, b), classical::erode(g, b)));
  }
}

TEST_F(ClassicalPropertyTest, TranslationEquivariantInInterior) {
  for (int i = 0; i < 50; ++i) {
    const Image f = fuzz::integer_image(rng, 20, 20, 0, 255);
    const auto b = random_b();
    const Image lhs = classical::dilate(shift(f, 3, 2, -kInf), b);
    const Image rhs = shift(classical::dilate(f, b), 3, 2, -kInf);
    for (int y = 5; y < 18; ++y)
      for (int x = 6; x < 18; ++x) EXPECT_EQ(lhs(x, y), rhs(x, y));
  }
}

TEST_F(ClassicalPropertyTest, OpeningClosingLaws) {
  for (int i = 0; i < 100; ++i) {
    const Image f = fuzz::integer_image(rng, 14, 14, 0, 255);
    Image g = f;
    for (double& v : g.pixels()) v += std::round(fuzz::uniform(rng, 0.0, 20.0));
    const auto b = fuzz::random_sf(rng, 2, 9, 0.0, 60.0, SfKind::additive, true);
    const Image of = classical::open(f, b), cf = classical::close(f, b);
    EXPECT_TRUE(pointwise_leq(of, f));
    EXPECT_TRUE(pointwise_leq(f, cf));
    EXPECT_TRUE(pointwise_leq(of, classical::open(g, b)));
    EXPECT_TRUE(pointwise_leq(cf, classical::close(g, b)));
    EXPECT_EQ(classical::open(of, b), of);
    EXPECT_EQ(classical::close(cf, b), cf);
  }
}

TEST_F(ClassicalPropertyTest, OptimizedMatchesReferenceExactly) {
  for (int i = 0; i < 100; ++i) {
    const Image f = fuzz::integer_image(rng, 32, 32, 0, 255);
    std::vector<StructuringFunction> sfs = {
        fuzz::random_sf(rng, 4, 25, 0.0, 64.0, SfKind::additive, true),
        hemisphere_sf(fuzz::uniform(rng, 0.5, 6.0), fuzz::uniform(rng, 1.0, 64.0), SfKind::additive),
        flat_sf(fuzz::uniform(rng, 0.5, 6.0), SfKind::additive),
        // flat with a non-zero lift and a hole (non-contiguous rows)
        StructuringFunction({E{{-2, 0}, 7.0}, E{{2, 0}, 7.0}, E{{0, 1}, 7.0}}, SfKind::additive),
        // flat, contiguous, lifted
        StructuringFunction({E{{-1, 0}, 3.0}, E{{0, 0}, 3.0}, E{{1, 0}, 3.0}, E{{5, 4}, 3.0}},
                            SfKind::additive),
        // larger than the image
        fuzz::random_sf(rng, 40, 5, 0.0, 10.0, SfKind::additive),
    };
    for (const auto& b : sfs) {
      ASSERT_EQ(classical::dilate(f, b), classical::reference::dilate(f, b));
      ASSERT_EQ(classical::erode(f, b), classical::reference::erode(f, b));
    }
  }
}

TEST_F(ClassicalPropertyTest, OptimizedMatchesReferenceWithInfinities) {
  for (int i = 0; i < 50; ++i) {
    const Image f = fuzz::lattice_image(rng, 9, 13, -20.0, 255.0, 0.2);
    for (const auto& b : {flat_sf(2.0, SfKind::additive), random_b()}) {
      ASSERT_EQ(classical::dilate(f, b), classical::reference::dilate(f, b));
      ASSERT_EQ(classical::erode(f, b), classical::reference::erode(f, b));
    }
  }
}
