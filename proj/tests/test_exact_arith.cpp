#include <gtest/gtest.h>

#include "test_support.hpp"

using namespace qhgerm;
namespace fx = qhgerm::fixtures;
using fx::Rng;

namespace {

GaussianRational gq(long re, long im) { return {Rational(re), Rational(im)}; }

UniPoly desc(std::vector<GaussianRational> c) { return UniPoly::from_descending(std::move(c)); }

}  // namespace

TEST(Rational, CanonicalForm) {
  const Rational r = make_rational(BigInt(6), BigInt(-4));
  EXPECT_EQ(r.get_num(), -3);
  EXPECT_EQ(r.get_den(), 2);
  EXPECT_EQ(to_string(Rational(0)), "0");
  EXPECT_THROW(make_rational(BigInt(1), BigInt(0)), Error);
}

TEST(Rational, PowNegative) {
  EXPECT_EQ(pow(make_rational(BigInt(2), BigInt(3)), -2), make_rational(BigInt(9), BigInt(4)));
  EXPECT_THROW(pow(Rational(0), -1), Error);
}

TEST(GaussianRational, ReferenceExamples) {
  EXPECT_EQ(gq(1, 2) + gq(3, -1), gq(4, 1));
  EXPECT_EQ(gq(1, 1) / gq(1, -1), GaussianRational::i());
  const GaussianRational z(make_rational(BigInt(3), BigInt(5)), Rational(-7));
  EXPECT_EQ(z * z.inv(), GaussianRational(1));
}

TEST(GaussianRational, DivisionByZero) {
  EXPECT_THROW(GaussianRational(0).inv(), Error);
  EXPECT_THROW(gq(1, 1) / GaussianRational(0), Error);
  EXPECT_THROW(GaussianRational(0).pow(-1), Error);
}

TEST(GaussianRational, ConjAndNorm) {
  const GaussianRational z = gq(3, -4);
  EXPECT_EQ(z.conj().conj(), z);
  EXPECT_EQ(z.norm(), Rational(25));
  EXPECT_EQ(z * z.conj(), GaussianRational(z.norm()));
}

TEST(GaussianRational, Text) {
  EXPECT_EQ(gq(3, 0).str(), "3");
  EXPECT_EQ(GaussianRational(make_rational(BigInt(-1), BigInt(2))).str(), "-1/2");
  EXPECT_EQ(gq(0, 2).str(), "2i");
  EXPECT_EQ(GaussianRational(make_rational(BigInt(1), BigInt(2)), Rational(-3)).str(), "1/2-3i");
  EXPECT_EQ(gq(1, 1).str(), "1+1i");
}

TEST(GaussianRational, PowMatchesRepeatedProduct) {
  Rng rng(11);
  for (int t = 0; t < 50; ++t) {
    const GaussianRational z = fx::random_nonzero(rng, 9, 9);
    GaussianRational acc = 1;
    for (long e = 0; e <= 7; ++e) {
      EXPECT_EQ(z.pow(e), acc);
      EXPECT_EQ(z.pow(-e), acc.inv());
      acc *= z;
    }
  }
}

TEST(GaussianRational, FieldAxiomsProperty) {
  Rng rng(1);
  for (int t = 0; t < 300; ++t) {
    const auto a = fx::random_gaussian(rng), b = fx::random_gaussian(rng), c = fx::random_gaussian(rng);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a * b, b * a);
    if (!a.is_zero()) {
      EXPECT_EQ(a * a.inv(), GaussianRational(1));
      EXPECT_EQ((b / a) * a, b);
    }
  }
}

TEST(UniPoly, ReferenceExamples) {
  const auto [m, lead] = monic(desc({2, -6, 4}));
  EXPECT_EQ(m, desc({1, -3, 2}));
  EXPECT_EQ(lead, GaussianRational(2));
  EXPECT_TRUE(desc({1, -3, 2}).eval(1).is_zero());
  EXPECT_EQ(desc({1, -1}) * desc({1, -2}), desc({1, -3, 2}));
  EXPECT_THROW(monic(UniPoly()), Error);
}

TEST(UniPoly, DegreeAndAccessors) {
  EXPECT_EQ(UniPoly().degree(), -1);
  const UniPoly p = desc({0, 0, 5, 1});  // leading zeros trimmed
  EXPECT_EQ(p.degree(), 1);
  EXPECT_EQ(p.from_top(0), GaussianRational(5));
  EXPECT_EQ(p.coeff(0), GaussianRational(1));
  EXPECT_EQ(p.descending(), (std::vector<GaussianRational>{5, 1}));
  EXPECT_EQ(desc({1, -3, 2}).str(), "w^2 - 3*w + 2");
}

TEST(UniPoly, MonicProperty) {
  Rng rng(2);
  for (int t = 0; t < 100; ++t) {
    std::vector<GaussianRational> c;
    const long deg = fx::uniform(rng, 0, 8);
    for (long k = 0; k <= deg; ++k) c.push_back(fx::random_gaussian(rng));
    c.back() = fx::random_nonzero(rng);
    const UniPoly P = UniPoly::from_ascending(c);
    const auto [M, lead] = monic(P);
    EXPECT_TRUE(M.leading().is_one());
    EXPECT_EQ(M.scale(lead), P);
  }
}

TEST(TaylorShift, ReferenceExamples) {
  EXPECT_EQ(taylor_shift(desc({1, 0, 0}), 1), desc({1, 2, 1}));
  EXPECT_EQ(taylor_shift(desc({1, -3, 2}), GaussianRational(make_rational(BigInt(3), BigInt(2)))),
            desc({1, 0, GaussianRational(make_rational(BigInt(-1), BigInt(4)))}));
  const UniPoly P = desc({3, gq(1, 1), -7, 2});
  EXPECT_EQ(taylor_shift(P, 0), P);
}

TEST(TaylorShift, MatchesComposition) {
  // Oracle: P(w + c) by Horner composition with the linear polynomial w + c.
  Rng rng(3);
  for (int t = 0; t < 100; ++t) {
    std::vector<GaussianRational> coeffs;
    const long deg = fx::uniform(rng, 0, 9);
    for (long k = 0; k <= deg; ++k) coeffs.push_back(fx::random_gaussian(rng));
    const UniPoly P = UniPoly::from_ascending(coeffs);
    const GaussianRational c = fx::random_gaussian(rng);
    UniPoly composed;
    const UniPoly lin = UniPoly::from_ascending({c, 1});
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) composed = composed * lin + UniPoly::constant(*it);
    EXPECT_EQ(taylor_shift(P, c), composed);
    EXPECT_EQ(taylor_shift(taylor_shift(P, c), -c), P);
  }
}

TEST(UniPoly, DivmodAndGcd) {
  const UniPoly a = desc({1, -3, 2}) * desc({1, 5});
  const auto [q, r] = divmod(a, desc({1, -1}));
  EXPECT_TRUE(r.is_zero());
  EXPECT_EQ(q, desc({1, -2}) * desc({1, 5}));
  EXPECT_EQ(gcd(a, desc({2, -4}) * desc({1, 7})), desc({1, -2}));
  EXPECT_THROW(divmod(a, UniPoly()), Error);
}

TEST(UniPoly, SquarefreeDecomposition) {
  // (w-1)^3 (w-2)^2 (w-3)(w-4)
  const UniPoly P = desc({1, -1}).pow(3) * desc({1, -2}).pow(2) * desc({1, -3}) * desc({1, -4});
  const auto sf = squarefree_decomposition(P.scale(7));
  ASSERT_EQ(sf.size(), 3u);
  EXPECT_EQ(sf[0].multiplicity, 1u);
  EXPECT_EQ(sf[0].factor, desc({1, -3}) * desc({1, -4}));
  EXPECT_EQ(sf[1].multiplicity, 2u);
  EXPECT_EQ(sf[2].multiplicity, 3u);
  EXPECT_EQ(multiplicity_profile(sf), (std::vector<unsigned>{1, 1, 2, 3}));
}

TEST(UniPoly, SquarefreeProperty) {
  Rng rng(4);
  for (int t = 0; t < 60; ++t) {
    const auto d = fx::random_roots(rng, 5, 4);
    const UniPoly P = fx::ladder_of(d);
    const auto sf = squarefree_decomposition(P);
    UniPoly rebuilt = UniPoly::constant(1);
    for (const auto& f : sf) rebuilt = rebuilt * f.factor.pow(f.multiplicity);
    EXPECT_EQ(rebuilt, P);
    std::vector<unsigned> expected = d.mult;
    std::sort(expected.begin(), expected.end());
    EXPECT_EQ(multiplicity_profile(sf), expected);
  }
}

TEST(GcdBezout, ReferenceExamples) {
  const long long a[] = {2, 3};
  const auto r1 = gcd_bezout(a);
  EXPECT_EQ(r1.d, 1);
  EXPECT_EQ(r1.coeffs, (std::vector<long long>{-1, 1}));
  const long long b[] = {4};
  const auto r2 = gcd_bezout(b);
  EXPECT_EQ(r2.d, 4);
  EXPECT_EQ(r2.coeffs, (std::vector<long long>{1}));
  const long long c[] = {6, 10, 15};
  const auto r3 = gcd_bezout(c);
  EXPECT_EQ(r3.d, 1);
  EXPECT_EQ(r3.coeffs[0] * 6 + r3.coeffs[1] * 10 + r3.coeffs[2] * 15, 1);
}

TEST(GcdBezout, Property) {
  Rng rng(5);
  for (int t = 0; t < 500; ++t) {
    std::vector<long long> v(static_cast<std::size_t>(fx::uniform(rng, 1, 6)));
    for (auto& x : v) x = fx::uniform(rng, 1, 200);
    const auto r = gcd_bezout(v);
    long long g = 0, sum = 0;
    for (std::size_t k = 0; k < v.size(); ++k) {
      g = std::gcd(g, v[k]);
      sum += r.coeffs[k] * v[k];
    }
    EXPECT_EQ(r.d, g);
    EXPECT_EQ(sum, g);
  }
  EXPECT_THROW(gcd_bezout(std::vector<long long>{}), Error);
  EXPECT_THROW(gcd_bezout(std::vector<long long>{3, 0}), Error);
}

TEST(Radical, ExactRootsOnlyOnTheirBranches) {
  // 3^120 has the exact 120th roots 3, 3i, -3, -3i on branches 0, 30, 60, 90 only
  const GaussianRational z = GaussianRational(3).pow(120);
  EXPECT_EQ(exact_root_branches(z, 120), (std::vector<unsigned long>{0, 30, 60, 90}));
  EXPECT_EQ(exact_root(z, 120, 30), GaussianRational(0, 3));
  EXPECT_FALSE(exact_root(z, 120, 119).has_value());
  EXPECT_FALSE(exact_root(z, 120, 1).has_value());
  const RadicalScalar r = make_radical(z, 120, 119, 128);
  EXPECT_FALSE(r.is_exact());
  EXPECT_EQ(radical_from_approx(z, 120, r.approx).branch, 119u);
  EXPECT_EQ(exact_root(GaussianRational(-4), 2, 0), GaussianRational(0, 2));
  EXPECT_EQ(exact_root(GaussianRational(-4), 2, 1), GaussianRational(0, -2));
}

TEST(Radical, BranchesOfPerfectPowersProperty) {
  Rng rng(17);
  for (int t = 0; t < 40; ++t) {
    const GaussianRational w = fx::random_nonzero(rng, 6, 6);
    const auto n = static_cast<unsigned long>(fx::uniform(rng, 2, 24));
    const GaussianRational z = w.pow(static_cast<long>(n));
    for (unsigned long k : exact_root_branches(z, n)) {
      const auto r = exact_root(z, n, k);
      ASSERT_TRUE(r.has_value());
      EXPECT_EQ(r->pow(static_cast<long>(n)), z);
      // the exact value agrees with the numeric branch
      EXPECT_LT(abs(Complex(*r, 128) - nth_root(Complex(z, 128), n, k)).to_double(), 1e-30);
    }
    const auto branches = exact_root_branches(z, n);
    EXPECT_FALSE(branches.empty());
    EXPECT_LE(branches.size(), 4u);
  }
}
