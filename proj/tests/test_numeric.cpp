#include <gtest/gtest.h>

#include "test_support.hpp"

using namespace qhgerm;
namespace fx = qhgerm::fixtures;
using fx::Rng;

namespace {

UniPoly desc(std::vector<GaussianRational> c) { return UniPoly::from_descending(std::move(c)); }

Complex cx(double re, double im = 0, Precision prec = 128) { return {Real(re, prec), Real(im, prec)}; }

double dist(const Complex& a, const Complex& b) { return abs(a - b).to_double(); }

std::vector<RootCluster> clusters_of(std::vector<std::pair<double, unsigned>> pts) {
  std::vector<RootCluster> out;
  for (const auto& [x, m] : pts) out.push_back({ComplexApprox(cx(x)), m, Real(0L, 128)});
  return out;
}

/// Sorted real parts of roots, for closed-form comparisons.
std::vector<double> real_parts(const std::vector<ComplexApprox>& roots) {
  std::vector<double> out;
  for (const auto& r : roots) out.push_back(r.value.re.to_double());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST(FindRoots, ReferenceExamples) {
  const auto quad = find_roots(desc({1, -3, 2}), 128);
  ASSERT_EQ(quad.size(), 2u);
  const auto re = real_parts(quad);
  EXPECT_NEAR(re[0], 1.0, 1e-15);
  EXPECT_NEAR(re[1], 2.0, 1e-15);
  for (const auto& r : quad) EXPECT_LT(std::abs(r.value.im.to_double()), 1e-15);

  const auto triple = find_roots(desc({1, -1}).pow(3), 128);
  ASSERT_EQ(triple.size(), 3u);
  for (const auto& r : triple) EXPECT_LT(dist(r.value, cx(1)), 1e-9);

  const auto cubic = find_roots(desc({1, -3, 2, 0}), 128);
  const auto rc = real_parts(cubic);
  ASSERT_EQ(rc.size(), 3u);
  EXPECT_NEAR(rc[0], 0.0, 1e-15);
  EXPECT_NEAR(rc[1], 1.0, 1e-15);
  EXPECT_NEAR(rc[2], 2.0, 1e-15);
}

TEST(FindRoots, RootsWithinErrorBoundProperty) {
  // The true roots are known exactly; each must lie within the reported bound of some approximation.
  Rng rng(41);
  for (int t = 0; t < 40; ++t) {
    fx::RootData d = fx::random_roots(rng, 6, 1);
    const UniPoly P = fx::ladder_of(d);
    const auto roots = find_roots(P, 128);
    ASSERT_EQ(roots.size(), static_cast<std::size_t>(P.degree()));
    for (const auto& truth : d.roots) {
      const Complex z(truth, 128);
      bool covered = false;
      for (const auto& r : roots) covered = covered || abs(r.value - z) <= r.err;
      EXPECT_TRUE(covered) << truth.str();
    }
    // residual property
    const auto coeffs = to_complex_coeffs(P, 128);
    const double lead = abs(coeffs.back()).to_double();
    for (const auto& r : roots) {
      EXPECT_LE(abs(detail::horner(coeffs, r.value)).to_double(),
                r.err.to_double() * (1 + lead * static_cast<double>(P.degree())) * (1 + 1e-12));
    }
  }
}

TEST(FindRoots, IterationCapThrows) {
  RootFinderOptions opts;
  opts.max_iterations = 1;
  try {
    find_roots(desc({1, 0, 0, 0, 0, 0, 0, -7, 3}), 128, opts);
    FAIL() << "expected NonConvergence";
  } catch (const NonConvergenceError& e) {
    EXPECT_EQ(e.code(), ErrorCode::NonConvergence);
    EXPECT_EQ(e.best_iterate().size(), 8u);
  }
}

TEST(FindRoots, RejectsConstant) { EXPECT_THROW(find_roots(desc({5}), 128), Error); }

TEST(ClusterRoots, ReferenceExamples) {
  const std::vector<ComplexApprox> pts{ComplexApprox(cx(1, 1e-12)), ComplexApprox(cx(1, -1e-12)),
                                       ComplexApprox(cx(2))};
  const auto c = cluster_roots(pts, 1e-9);
  ASSERT_EQ(c.size(), 2u);
  unsigned total = 0;
  for (const auto& k : c) {
    total += k.multiplicity;
    if (k.multiplicity == 2) {
      EXPECT_LT(dist(k.center.value, cx(1)), 1e-15);
    } else {
      EXPECT_LT(dist(k.center.value, cx(2)), 1e-15);
    }
  }
  EXPECT_EQ(total, 3u);

  const std::vector<ComplexApprox> three{ComplexApprox(cx(0)), ComplexApprox(cx(1)), ComplexApprox(cx(2))};
  const auto s = cluster_roots(three, 1e-9);
  ASSERT_EQ(s.size(), 3u);
  for (const auto& k : s) EXPECT_EQ(k.multiplicity, 1u);

  const std::vector<ComplexApprox> bad{ComplexApprox(cx(0)), ComplexApprox(cx(1e-10)), ComplexApprox(cx(1.6e-9))};
  try {
    cluster_roots(bad, 1e-9);
    FAIL() << "expected AmbiguousClustering";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::AmbiguousClustering);
  }
}

TEST(ClusterRoots, RejectsNonPositiveTolerance) {
  EXPECT_THROW(cluster_roots({ComplexApprox(cx(1))}, 0.0), Error);
}

TEST(RootMultiset, MultiplicitiesSumToDegreeProperty) {
  Rng rng(42);
  for (int t = 0; t < 30; ++t) {
    const auto d = fx::random_roots(rng, 4, 4);
    const UniPoly P = fx::ladder_of(d);
    const auto c = root_multiset(P, 128, 1e-9);
    unsigned total = 0;
    for (const auto& k : c) total += k.multiplicity;
    EXPECT_EQ(total, static_cast<unsigned>(P.degree()));
    EXPECT_EQ(c.size(), d.roots.size());
    std::vector<unsigned> got, want = d.mult;
    for (const auto& k : c) got.push_back(k.multiplicity);
    std::sort(got.begin(), got.end());
    std::sort(want.begin(), want.end());
    EXPECT_EQ(got, want);
  }
}

TEST(NumericMatch, ReferenceExamples) {
  const auto lin = numeric_match(MatchMode::Linear, clusters_of({{1, 1}, {2, 1}}), clusters_of({{3, 1}, {6, 1}}), 1e-9);
  ASSERT_TRUE(lin.has_value());
  EXPECT_LT(dist(lin->a, cx(3)), 1e-12);
  EXPECT_FALSE(lin->b.has_value());

  const auto aff = numeric_match(MatchMode::Affine, clusters_of({{0, 1}, {1, 1}, {2, 1}}),
                                 clusters_of({{5, 1}, {7, 1}, {9, 1}}), 1e-9);
  ASSERT_TRUE(aff.has_value());
  ASSERT_TRUE(aff->b.has_value());
  const bool first = dist(aff->a, cx(2)) < 1e-12 && dist(*aff->b, cx(5)) < 1e-12;
  const bool second = dist(aff->a, cx(-2)) < 1e-12 && dist(*aff->b, cx(9)) < 1e-12;
  EXPECT_TRUE(first || second);

  EXPECT_FALSE(
      numeric_match(MatchMode::Linear, clusters_of({{1, 1}, {2, 1}}), clusters_of({{3, 1}, {5, 1}}), 1e-9).has_value());
}

TEST(NumericMatch, RespectsMultiplicities) {
  EXPECT_FALSE(
      numeric_match(MatchMode::Linear, clusters_of({{1, 2}, {2, 1}}), clusters_of({{3, 1}, {6, 2}}), 1e-9).has_value());
  EXPECT_TRUE(
      numeric_match(MatchMode::Linear, clusters_of({{1, 2}, {2, 1}}), clusters_of({{3, 2}, {6, 1}}), 1e-9).has_value());
}

TEST(EvalBivar, ReferenceExamples) {
  const BivarPoly cusp = parse_poly("Y^2 - X^3");
  const auto at_one = eval_bivar(cusp, ComplexApprox(cx(1)), ComplexApprox(cx(1)));
  EXPECT_TRUE(at_one.value.is_zero());

  const Complex t = cx(0.7);
  const auto on_curve = eval_bivar(cusp, ComplexApprox(pow(t, 2)), ComplexApprox(pow(t, 3)));
  EXPECT_LE(abs(on_curve.value), on_curve.err);

  const auto five = eval_bivar(parse_poly("5"), ComplexApprox(cx(0.3, 2)), ComplexApprox(cx(-1, 4)));
  EXPECT_EQ(five.value.re.to_double(), 5.0);
  EXPECT_EQ(five.value.im.to_double(), 0.0);
}

TEST(EvalBivar, BoundCoversExactValueProperty) {
  Rng rng(43);
  for (int t = 0; t < 100; ++t) {
    const auto s = fx::random_germ(rng, 5, 3, 2);
    const GaussianRational x = fx::random_gaussian(rng, 3, 4), y = fx::random_gaussian(rng, 3, 4);
    const auto got = eval_bivar(s.F, ComplexApprox(Complex(x, 64)), ComplexApprox(Complex(y, 64)));
    const Complex truth(s.F.eval(x, y), 256);
    EXPECT_LE(abs(got.value.with_prec(256) - truth).to_double(), got.err.to_double() * (1 + 1e-9));
  }
}

TEST(EvalBivar, QuasihomogeneityWithinBoundsProperty) {
  Rng rng(44);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  for (int t = 0; t < 30; ++t) {
    const auto s = fx::random_germ(rng, 5, 3, 2);
    const auto w = infer_weights(s.F);
    for (int k = 0; k < 10; ++k) {
      const Complex T = cx(unit(rng), unit(rng)), x = cx(unit(rng), unit(rng)), y = cx(unit(rng), unit(rng));
      const auto lhs = eval_bivar(s.F, ComplexApprox(pow(T, w.p) * x), ComplexApprox(pow(T, w.q) * y));
      const auto rhs = eval_bivar(s.F, ComplexApprox(x), ComplexApprox(y));
      const Complex tn = pow(T, w.nu);
      const Real bound = lhs.err + abs(tn) * rhs.err;
      // The rounding of the scaled inputs adds a few ulps on top of the propagated bounds.
      EXPECT_LE(abs(lhs.value - tn * rhs.value).to_double(), 2 * bound.to_double() + 1e-30);
    }
  }
}

TEST(RootMultiset, MultipleRootWithNonDyadicCoefficients) {
  // coefficient rounding at 128 bits splits the 4-fold root by ~1e-8; the
  // error bounds must still link the four approximations
  const GaussianRational r(make_rational(9, 1), make_rational(-6, 7));
  const UniPoly P = UniPoly::from_ascending({-r, 1}).pow(4);
  const auto c = root_multiset(P, 128, 1e-9);
  ASSERT_EQ(c.size(), 1u);
  EXPECT_EQ(c[0].multiplicity, 4u);
  EXPECT_LT(abs(c[0].center.value - Complex(r, 128)).to_double(), 1e-9);
}

TEST(RootMultiset, HighMultiplicityProperty) {
  Rng rng(43);
  for (int t = 0; t < 30; ++t) {
    const auto d = fx::random_roots(rng, 3, 5, 20);
    const auto c = root_multiset(fx::ladder_of(d), 128, 1e-9);
    std::vector<unsigned> got, want = d.mult;
    for (const auto& k : c) got.push_back(k.multiplicity);
    std::sort(got.begin(), got.end());
    std::sort(want.begin(), want.end());
    EXPECT_EQ(got, want);
  }
}
