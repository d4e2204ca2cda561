#pragma once

// Quasihomogeneous structure of a bivariate polynomial: weights, the
// non-homogeneity classification, the canonical factorization
//
//   F = c0 X^m Y^m0 prod_j (Y^p - lambda_j X^q)^(m_j)
//
// stored through its monic "ladder" polynomial prod_j (w - lambda_j)^(m_j),
// the height function F(1, z), and the order at the origin.

#include <algorithm>
#include <cstddef>
#include <limits>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qhgerm/bivar_poly.hpp"
#include "qhgerm/errors.hpp"
#include "qhgerm/gaussian.hpp"
#include "qhgerm/unipoly.hpp"

namespace qhgerm {

struct WeightSignature {
  unsigned p = 1;
  unsigned q = 1;
  unsigned nu = 0;  // weighted degree
  /// Set for single-monomial input, where the weights are not determined.
  bool placeholder = false;

  bool homogeneous() const { return p == 1 && q == 1; }
  friend bool operator==(const WeightSignature&, const WeightSignature&) = default;
};

enum class GermTag { NonHomogeneousQH, Homogeneous, MonomialLike, NotQuasihomogeneous };

inline const char* to_string(GermTag tag) {
  switch (tag) {
    case GermTag::NonHomogeneousQH: return "NonHomogeneousQH";
    case GermTag::Homogeneous: return "Homogeneous";
    case GermTag::MonomialLike: return "MonomialLike";
    case GermTag::NotQuasihomogeneous: return "NotQuasihomogeneous";
  }
  return "Unknown";
}

struct GermClass {
  GermTag tag = GermTag::NotQuasihomogeneous;
  std::string reason;
};

struct CanonicalForm {
  GaussianRational c0 = 1;
  unsigned m = 0;   // X exponent
  unsigned m0 = 0;  // Y exponent; always 0 when p = 1 (zero roots stay in the ladder)
  UniPoly ladder;   // monic, degree degD
  unsigned degD = 0;
  /// Number of distinct ladder roots.
  std::optional<unsigned> k;
  /// One entry per distinct root, ascending.
  std::vector<unsigned> multiplicities;
  std::vector<SquarefreeFactor> squarefree;
};

namespace detail {

inline std::string point_text(Monomial m) {
  return "(" + std::to_string(m.i) + "," + std::to_string(m.j) + ")";
}

}  // namespace detail

/// Finds the coprime weights (p, q), p <= q, making every support point
/// satisfy p*i + q*j = nu.
inline WeightSignature infer_weights(const BivarPoly& f) {
  if (f.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "zero polynomial has no weights");
  const auto support = f.support();
  if (support.size() == 1) {
    return {1, 1, support[0].total_degree(), true};
  }
  const Monomial a = support[0];
  const Monomial b = support[1];
  // p * (a.i - b.i) = q * (b.j - a.j)
  const long di = static_cast<long>(a.i) - static_cast<long>(b.i);
  const long dj = static_cast<long>(b.j) - static_cast<long>(a.j);
  if (di == 0 || dj == 0 || (di > 0) != (dj > 0)) {
    throw Error(ErrorCode::NotQuasihomogeneous, "support points " + detail::point_text(a) + " and " +
                                                    detail::point_text(b) + " admit no positive weights");
  }
  const long g = std::gcd(di, dj);
  const auto p = static_cast<unsigned>(std::abs(dj / g));
  const auto q = static_cast<unsigned>(std::abs(di / g));
  const unsigned nu = p * a.i + q * a.j;
  for (const Monomial& s : support) {
    if (p * s.i + q * s.j != nu) {
      throw Error(ErrorCode::NotQuasihomogeneous,
                  "support point " + detail::point_text(s) + " is off the line through " + detail::point_text(a) +
                      " and " + detail::point_text(b));
    }
  }
  if (p > q) {
    throw Error(ErrorCode::NotQuasihomogeneous, "support has weights (" + std::to_string(p) + "," +
                                                    std::to_string(q) +
                                                    ") with p > q; exchange X and Y to analyze it");
  }
  return {p, q, nu, false};
}

/// Checks that every support point has the same (p, q)-weighted degree.
inline WeightSignature validate_weights(const BivarPoly& f, unsigned p, unsigned q) {
  if (p < 1 || p > q || std::gcd(p, q) != 1) {
    throw Error(ErrorCode::InvalidArgument, "weights must satisfy gcd(p,q) = 1 and 1 <= p <= q");
  }
  if (f.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "zero polynomial has no weights");
  const auto support = f.support();
  const unsigned nu = p * support[0].i + q * support[0].j;
  const bool consistent =
      std::all_of(support.begin(), support.end(), [&](Monomial s) { return p * s.i + q * s.j == nu; });
  if (!consistent) {
    std::string listing;
    for (const Monomial& s : support) {
      if (!listing.empty()) listing += ", ";
      listing += detail::point_text(s) + "->" + std::to_string(p * s.i + q * s.j);
    }
    throw Error(ErrorCode::WeightMismatch, "weights (" + std::to_string(p) + "," + std::to_string(q) +
                                               ") give several weighted degrees: " + listing);
  }
  return {p, q, nu, false};
}

/// Rebuilds c0 X^m Y^m0 * sum_t b_t X^(q t) Y^(p (K - t)) from a canonical form.
inline BivarPoly reexpand(const CanonicalForm& form, const WeightSignature& w) {
  BivarPoly out;
  const unsigned K = form.degD;
  for (unsigned t = 0; t <= K; ++t) {
    const GaussianRational b = form.ladder.coeff(K - t);
    if (b.is_zero()) continue;
    out.add_term({form.m + w.q * t, form.m0 + w.p * (K - t)}, form.c0 * b);
  }
  return out;
}

inline CanonicalForm canonical_decompose(const BivarPoly& f, const WeightSignature& w) {
  if (f.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "canonical form of the zero polynomial");
  CanonicalForm form;
  unsigned min_i = std::numeric_limits<unsigned>::max();
  unsigned min_j = std::numeric_limits<unsigned>::max();
  for (const auto& [mono, c] : f.terms()) {
    min_i = std::min(min_i, mono.i);
    min_j = std::min(min_j, mono.j);
  }
  form.m = min_i;
  form.m0 = w.p > 1 ? min_j : 0;
  const long reduced = static_cast<long>(w.nu) - static_cast<long>(w.p * form.m) - static_cast<long>(w.q * form.m0);
  const long pq = static_cast<long>(w.p * w.q);
  if (reduced < 0 || reduced % pq != 0) {
    throw Error(ErrorCode::InternalInconsistency, "stripped weighted degree is not a multiple of p*q");
  }
  const auto K = static_cast<unsigned>(reduced / pq);
  std::vector<GaussianRational> ascending(K + 1);
  for (const auto& [mono, c] : f.terms()) {
    const unsigned di = mono.i - form.m;
    const unsigned dj = mono.j - form.m0;
    const unsigned t = di / w.q;
    if (di % w.q != 0 || t > K || dj != w.p * (K - t)) {
      throw Error(ErrorCode::InternalInconsistency,
                  "support point " + detail::point_text(mono) + " does not fit the ladder structure");
    }
    ascending[K - t] = c;
  }
  auto [ladder, lead] = monic(UniPoly::from_ascending(std::move(ascending)));
  form.c0 = lead;
  form.ladder = std::move(ladder);
  form.degD = K;
  form.squarefree = squarefree_decomposition(form.ladder);
  form.multiplicities = multiplicity_profile(form.squarefree);
  form.k = static_cast<unsigned>(form.multiplicities.size());
  if (!(reexpand(form, w) == f)) {
    throw Error(ErrorCode::InternalInconsistency, "canonical form does not re-expand to the input");
  }
  return form;
}

/// True when the monic ladder equals (w - lambda)^D for a single lambda.
inline bool has_single_root(const UniPoly& ladder) {
  const long D = ladder.degree();
  if (D < 1) return false;
  const GaussianRational lambda = -ladder.from_top(1) / GaussianRational(D);
  return taylor_shift(UniPoly::monomial(static_cast<std::size_t>(D)), -lambda) == ladder;
}

inline GermClass classify_germ(const BivarPoly& f, const WeightSignature& w, const CanonicalForm& form) {
  if (f.size() == 1 || w.placeholder) {
    return {GermTag::MonomialLike, "single monomial c X^m Y^n"};
  }
  if (w.homogeneous()) return {GermTag::Homogeneous, "weights (1,1): homogeneous polynomial"};
  if (w.p > 1) {
    if (form.degD == 0) return {GermTag::MonomialLike, "of the form c X^m Y^n"};
    return {GermTag::NonHomogeneousQH, "p > 1 and not a monomial"};
  }
  if (form.degD == 0 || has_single_root(form.ladder)) {
    return {GermTag::MonomialLike,
            "of the form c X^m (Y - lambda X^q)^n, analytically equivalent to a monomial"};
  }
  return {GermTag::NonHomogeneousQH, "p = 1 with at least two distinct ladder roots"};
}

inline GermClass classify_germ(const BivarPoly& f, const WeightSignature& w) {
  return classify_germ(f, w, canonical_decompose(f, w));
}

/// f(z) = F(1, z).
inline UniPoly height_function(const BivarPoly& f) {
  std::vector<GaussianRational> coeffs;
  for (const auto& [mono, c] : f.terms()) {
    if (coeffs.size() <= mono.j) coeffs.resize(mono.j + 1);
    coeffs[mono.j] += c;
  }
  return UniPoly::from_ascending(std::move(coeffs));
}

/// Minimal total degree over the support, cross-checked against the
/// canonical-form formula (m + D for p = 1, m + m0 + p D for p > 1).
inline unsigned ord0(const BivarPoly& f, const CanonicalForm& form, const WeightSignature& w) {
  if (f.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "order of the zero polynomial");
  unsigned brute = std::numeric_limits<unsigned>::max();
  for (const auto& [mono, c] : f.terms()) brute = std::min(brute, mono.total_degree());
  const unsigned formula = w.p == 1 ? form.m + form.degD : form.m + form.m0 + w.p * form.degD;
  if (brute != formula) {
    throw Error(ErrorCode::FormulaMismatch, "ord0 brute force " + std::to_string(brute) +
                                                " differs from canonical-form value " + std::to_string(formula));
  }
  return brute;
}

/// Everything the decider needs to know about one germ.
struct GermAnalysis {
  WeightSignature weights;
  GermClass germ_class;
  CanonicalForm form;
  unsigned ord0 = 0;
};

inline GermAnalysis analyze_germ(const BivarPoly& f, std::optional<std::pair<unsigned, unsigned>> weights = {}) {
  GermAnalysis out;
  out.weights = weights ? validate_weights(f, weights->first, weights->second) : infer_weights(f);
  out.form = canonical_decompose(f, out.weights);
  out.germ_class = classify_germ(f, out.weights, out.form);
  out.ord0 = qhgerm::ord0(f, out.form, out.weights);
  return out;
}

}  // namespace qhgerm
