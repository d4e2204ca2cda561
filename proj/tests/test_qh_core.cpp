#include <gtest/gtest.h>

#include "test_support.hpp"

using namespace qhgerm;
namespace fx = qhgerm::fixtures;
using fx::Rng;

namespace {

ErrorCode error_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::InternalInconsistency;
}

UniPoly desc(std::vector<GaussianRational> c) { return UniPoly::from_descending(std::move(c)); }

}  // namespace

TEST(InferWeights, ReferenceExamples) {
  const auto w = infer_weights(parse_poly("Y^2 - X^3"));
  EXPECT_EQ(w, (WeightSignature{2, 3, 6, false}));
  EXPECT_EQ(infer_weights(parse_poly("X*Y*(Y-X)*(Y-2*X)")), (WeightSignature{1, 1, 4, false}));
  EXPECT_EQ(error_of([] { infer_weights(parse_poly("X^2 + Y^3 + X*Y")); }), ErrorCode::NotQuasihomogeneous);
  EXPECT_EQ(error_of([] { infer_weights(BivarPoly()); }), ErrorCode::ZeroPolynomial);
  const auto mono = infer_weights(parse_poly("X^2*Y^3"));
  EXPECT_TRUE(mono.placeholder);
}

TEST(InferWeights, SharedExponentRejected) {
  EXPECT_EQ(error_of([] { infer_weights(parse_poly("X^2*Y + X^2*Y^3")); }), ErrorCode::NotQuasihomogeneous);
  EXPECT_EQ(error_of([] { infer_weights(parse_poly("X*Y + X^3*Y")); }), ErrorCode::NotQuasihomogeneous);
  // p > q needs the variables exchanged
  EXPECT_EQ(error_of([] { infer_weights(parse_poly("Y^3 - X^2")); }), ErrorCode::NotQuasihomogeneous);
}

TEST(InferWeights, AgreesWithExhaustiveSearch) {
  Rng rng(31);
  for (int t = 0; t < 200; ++t) {
    const auto s = fx::random_germ(rng, 12, 3, 2);
    const auto brute = fx::brute_force_weights(s.F);
    ASSERT_EQ(brute.size(), 1u);
    EXPECT_EQ(infer_weights(s.F), brute.front());
  }
}

TEST(ValidateWeights, ReferenceExamples) {
  EXPECT_EQ(validate_weights(parse_poly("Y^2 - X^3"), 2, 3).nu, 6u);
  EXPECT_EQ(error_of([] { validate_weights(parse_poly("Y^2 - X^3"), 1, 1); }), ErrorCode::WeightMismatch);
  EXPECT_EQ(validate_weights(parse_poly("X^5"), 2, 7).nu, 10u);
  EXPECT_EQ(error_of([] { validate_weights(parse_poly("X^5"), 2, 4); }), ErrorCode::InvalidArgument);
  EXPECT_EQ(error_of([] { validate_weights(parse_poly("X^5"), 3, 2); }), ErrorCode::InvalidArgument);
}

TEST(ClassifyGerm, ReferenceExamples) {
  auto tag = [](const std::string& text, std::optional<std::pair<unsigned, unsigned>> w = {}) {
    return analyze_germ(parse_poly(text), w).germ_class.tag;
  };
  EXPECT_EQ(tag("Y^2 - X^3"), GermTag::NonHomogeneousQH);
  EXPECT_EQ(tag("X^2*Y^3", std::pair{2u, 3u}), GermTag::MonomialLike);
  EXPECT_EQ(tag("X^2*Y^3"), GermTag::MonomialLike);
  EXPECT_EQ(tag("X*(Y-X^2)^3"), GermTag::MonomialLike);
  EXPECT_EQ(tag("X*Y*(Y-X)*(Y-2*X)"), GermTag::Homogeneous);
  EXPECT_EQ(tag("(Y-X^2)*(Y-3*X^2)"), GermTag::NonHomogeneousQH);
  EXPECT_EQ(tag("Y*(Y-X^2)"), GermTag::NonHomogeneousQH);
}

TEST(CanonicalDecompose, ReferenceExamples) {
  const auto a = analyze_germ(parse_poly("Y^2 - X^3"));
  EXPECT_EQ(a.form.c0, GaussianRational(1));
  EXPECT_EQ(a.form.m, 0u);
  EXPECT_EQ(a.form.m0, 0u);
  EXPECT_EQ(a.form.ladder, desc({1, -1}));

  const auto b = analyze_germ(parse_poly("(Y^2-X^3)*(Y^2-2*X^3)"));
  EXPECT_EQ(b.form.ladder, desc({1, -3, 2}));

  const auto c = analyze_germ(parse_poly("X*Y*(Y-X^2)*(Y-3*X^2)"));
  EXPECT_EQ(c.weights, (WeightSignature{1, 2, 7, false}));
  EXPECT_EQ(c.form.m, 1u);
  EXPECT_EQ(c.form.ladder, desc({1, -4, 3, 0}));
}

TEST(CanonicalDecompose, RecoversPlantedDataProperty) {
  Rng rng(32);
  for (int t = 0; t < 150; ++t) {
    const auto s = fx::random_germ(rng, 7, 4, 3);
    const auto a = analyze_germ(s.F);
    EXPECT_EQ(a.weights.p, s.p);
    EXPECT_EQ(a.weights.q, s.q);
    EXPECT_EQ(a.form.c0, s.c0);
    EXPECT_EQ(a.form.m, s.m);
    EXPECT_EQ(a.form.m0, s.m0);
    EXPECT_EQ(a.form.ladder, fx::ladder_of(s.roots));
    EXPECT_EQ(reexpand(a.form, a.weights), s.F);
    if (s.p > 1) {
      EXPECT_FALSE(a.form.ladder.coeff(0).is_zero());
    }
  }
}

TEST(CanonicalDecompose, ScalingChangesOnlyC0) {
  Rng rng(33);
  for (int t = 0; t < 50; ++t) {
    const auto s = fx::random_germ(rng, 7, 3, 2);
    const GaussianRational c = fx::random_nonzero(rng);
    const auto a = analyze_germ(s.F), b = analyze_germ(s.F.scale(c));
    EXPECT_EQ(a.weights, b.weights);
    EXPECT_EQ(a.form.m, b.form.m);
    EXPECT_EQ(a.form.m0, b.form.m0);
    EXPECT_EQ(a.form.ladder, b.form.ladder);
    EXPECT_EQ(b.form.c0, a.form.c0 * c);
    EXPECT_EQ(height_function(s.F.scale(c)), height_function(s.F).scale(c));
  }
}

TEST(HeightFunction, ReferenceExamples) {
  EXPECT_EQ(height_function(parse_poly("X*Y*(Y-X)*(Y-2*X)")), desc({1, -3, 2, 0}));
  EXPECT_EQ(height_function(parse_poly("Y^2 - X^3")), desc({1, 0, -1}));
  EXPECT_EQ(height_function(parse_poly("5")), desc({5}));
}

TEST(Ord0, ReferenceExamples) {
  EXPECT_EQ(analyze_germ(parse_poly("Y^2 - X^3")).ord0, 2u);
  EXPECT_EQ(analyze_germ(parse_poly("(Y^2-X^3)*(Y^2-2*X^3)")).ord0, 4u);
  EXPECT_EQ(analyze_germ(parse_poly("X*Y*(Y-X^2)*(Y-3*X^2)")).ord0, 4u);
}

TEST(Ord0, FormulaMismatchDetected) {
  const BivarPoly f = parse_poly("Y^2 - X^3");
  const WeightSignature w = infer_weights(f);
  CanonicalForm bad = canonical_decompose(f, w);
  bad.degD = 3;
  EXPECT_EQ(error_of([&] { ord0(f, bad, w); }), ErrorCode::FormulaMismatch);
}

TEST(Quasihomogeneity, ExactIdentityProperty) {
  Rng rng(34);
  for (int t = 0; t < 30; ++t) {
    const auto s = fx::random_germ(rng, 7, 3, 2);
    const auto w = infer_weights(s.F);
    for (int k = 0; k < 20; ++k) {
      const GaussianRational T = fx::random_nonzero(rng, 5, 5);
      const GaussianRational x = fx::random_gaussian(rng, 5, 5), y = fx::random_gaussian(rng, 5, 5);
      EXPECT_EQ(s.F.eval(T.pow(w.p) * x, T.pow(w.q) * y), T.pow(w.nu) * s.F.eval(x, y));
    }
  }
}
