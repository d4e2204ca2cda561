#pragma once

// Coefficient-level matching of ladder root multisets under z -> a z and
// z -> a z + b. No roots are extracted: with P(w) = w^K + sum_i f_i w^(K-i),
// the roots scale by a exactly when g_i = a^i f_i for every i.

#include <cstddef>
#include <numeric>
#include <string>
#include <variant>
#include <vector>

#include "qhgerm/gaussian.hpp"
#include "qhgerm/unipoly.hpp"

namespace qhgerm {

/// All a with a^d = base.
struct ScaleClass {
  unsigned d = 1;
  GaussianRational base = 1;

  bool contains(const GaussianRational& a) const { return a.pow(static_cast<long>(d)) == base; }
  friend bool operator==(const ScaleClass&, const ScaleClass&) = default;
};

/// Scale class plus centroids; branch a gives shift b = c_G - a c_F.
struct AffineMatch {
  ScaleClass scale;
  GaussianRational c_F;
  GaussianRational c_G;

  GaussianRational shift_for(const GaussianRational& a) const { return c_G - a * c_F; }
};

struct NoMatch {
  std::string reason;
};

template <class T>
using MatchResult = std::variant<T, NoMatch>;

inline MatchResult<ScaleClass> linear_multiset_match(const UniPoly& Pf, const UniPoly& Pg) {
  if (Pf.degree() != Pg.degree()) return NoMatch{"ladder degree"};
  if (Pf.is_zero() || !Pf.leading().is_one() || !Pg.leading().is_one()) {
    return NoMatch{"ladder polynomials must be monic"};
  }
  const auto K = static_cast<std::size_t>(Pf.degree());
  std::vector<long long> support;
  std::vector<GaussianRational> ratios;
  for (std::size_t i = 1; i <= K; ++i) {
    const GaussianRational f = Pf.from_top(i);
    const GaussianRational g = Pg.from_top(i);
    if (f.is_zero() != g.is_zero()) return NoMatch{"support: coefficient of w^" + std::to_string(K - i) + " vanishes on one side only"};
    if (f.is_zero()) continue;
    support.push_back(static_cast<long long>(i));
    ratios.push_back(g / f);
  }
  if (support.empty()) return ScaleClass{1, 1};

  long long d = 0;
  for (long long i : support) d = std::gcd(d, i);
  std::vector<long long> reduced;
  for (long long i : support) reduced.push_back(i / d);
  const BezoutResult bez = gcd_bezout(reduced);  // bez.d == 1
  GaussianRational base = 1;
  for (std::size_t t = 0; t < support.size(); ++t) base *= ratios[t].pow(static_cast<long>(bez.coeffs[t]));
  for (std::size_t t = 0; t < support.size(); ++t) {
    if (base.pow(static_cast<long>(reduced[t])) != ratios[t]) {
      return NoMatch{"consistency: ratio at index " + std::to_string(support[t]) + " is " + ratios[t].str() +
                     " but the common base predicts " + base.pow(static_cast<long>(reduced[t])).str()};
    }
  }
  return ScaleClass{static_cast<unsigned>(d), base};
}

/// Centroid of the root multiset of a monic polynomial of degree D >= 1.
inline GaussianRational root_centroid(const UniPoly& P) {
  return -P.from_top(1) / GaussianRational(P.degree());
}

inline MatchResult<AffineMatch> affine_multiset_match(const UniPoly& Pf, const UniPoly& Pg) {
  if (Pf.degree() != Pg.degree()) return NoMatch{"ladder degree"};
  if (Pf.degree() < 1) return NoMatch{"affine matching needs degree >= 1"};
  const GaussianRational cF = root_centroid(Pf);
  const GaussianRational cG = root_centroid(Pg);
  auto linear = linear_multiset_match(taylor_shift(Pf, cF), taylor_shift(Pg, cG));
  if (auto* no = std::get_if<NoMatch>(&linear)) return *no;
  return AffineMatch{std::get<ScaleClass>(linear), cF, cG};
}

}  // namespace qhgerm
