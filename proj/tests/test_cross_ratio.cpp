#include <gtest/gtest.h>

#include <array>

#include "test_support.hpp"

using namespace qhgerm;
namespace fx = qhgerm::fixtures;
using fx::Rng;

namespace {

GaussianRational ratio(long n, long d) { return GaussianRational(make_rational(BigInt(n), BigInt(d))); }

}  // namespace

TEST(CrossRatio, ReferenceExamples) {
  const auto r = cross_ratio_demo({GaussianRational(0), GaussianRational(1), GaussianRational(2), std::nullopt});
  EXPECT_EQ(r.cross_ratio, GaussianRational(2));
  EXPECT_EQ(r.j_invariant, GaussianRational(1728));
  EXPECT_EQ(j_from_cross_ratio(2), GaussianRational(1728));
  const auto back = cross_ratio_demo({std::nullopt, GaussianRational(2), GaussianRational(1), GaussianRational(0)});
  EXPECT_EQ(back.j_invariant, GaussianRational(1728));
}

TEST(CrossRatio, Degenerate) {
  auto code = [](std::array<ProjectivePoint, 4> z) {
    try {
      cross_ratio_demo(z);
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::InternalInconsistency;
  };
  EXPECT_EQ(code({GaussianRational(0), GaussianRational(1), GaussianRational(1), std::nullopt}),
            ErrorCode::DegenerateConfiguration);
  EXPECT_EQ(code({GaussianRational(0), std::nullopt, GaussianRational(1), std::nullopt}),
            ErrorCode::DegenerateConfiguration);
}

TEST(CrossRatio, AllOrderingsGiveSameJProperty) {
  Rng rng(81);
  for (int t = 0; t < 40; ++t) {
    std::array<ProjectivePoint, 4> pts;
    std::vector<GaussianRational> seen;
    for (std::size_t k = 0; k < 4; ++k) {
      if (k == 3 && t % 2 == 0) break;  // leave one point at infinity
      GaussianRational z;
      do z = fx::random_gaussian(rng, 9, 9);
      while (std::find(seen.begin(), seen.end(), z) != seen.end());
      seen.push_back(z);
      pts[k] = z;
    }
    std::array<int, 4> perm{0, 1, 2, 3};
    const GaussianRational j0 = cross_ratio_demo(pts).j_invariant;
    int count = 0;
    do {
      std::array<ProjectivePoint, 4> q;
      for (std::size_t k = 0; k < 4; ++k) q[k] = pts[static_cast<std::size_t>(perm[k])];
      EXPECT_EQ(cross_ratio_demo(q).j_invariant, j0);
      ++count;
    } while (std::next_permutation(perm.begin(), perm.end()));
    EXPECT_EQ(count, 24);
  }
}

TEST(QuarticJ, AgreesWithCrossRatioProperty) {
  Rng rng(82);
  for (int t = 0; t < 60; ++t) {
    const GaussianRational tt = fx::random_gaussian(rng, 9, 9);
    if (tt.is_zero() || tt == GaussianRational(1)) continue;
    const auto j = quartic_j_invariant(whitney_quartic(tt));
    ASSERT_TRUE(j.has_value());
    EXPECT_EQ(*j, cross_ratio_demo({GaussianRational(0), GaussianRational(1), tt, std::nullopt}).j_invariant);
    // invariant under a linear change of coordinates and scaling
    const BivarPoly moved = substitute(whitney_quartic(tt), 3, 2, -1, 1).scale(fx::random_nonzero(rng));
    EXPECT_EQ(quartic_j_invariant(moved), j);
  }
}

TEST(Whitney, DistinctParametersDistinctJ) {
  const auto a = cross_ratio_demo({GaussianRational(0), GaussianRational(1), ratio(3, 10), std::nullopt});
  const auto b = cross_ratio_demo({GaussianRational(0), GaussianRational(1), ratio(2, 5), std::nullopt});
  EXPECT_EQ(a.cross_ratio, ratio(-3, 7));
  EXPECT_EQ(a.j_invariant, ratio(31554496, 11025));
  EXPECT_NE(a.j_invariant, b.j_invariant);
  EXPECT_EQ(quartic_j_invariant(whitney_quartic(ratio(3, 10))), a.j_invariant);
  EXPECT_EQ(quartic_j_invariant(parse_poly("X^3*Y")), std::nullopt);  // repeated line
  EXPECT_EQ(quartic_j_invariant(parse_poly("Y^2 - X^3")), std::nullopt);
}
