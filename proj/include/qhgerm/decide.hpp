#pragma once

// The decision procedure: two non-homogeneous quasihomogeneous germs with the
// same weights are right-equivalent iff their ladder root multisets agree up
// to z -> a z + b (p = 1) or z -> a z (p > 1). Invariant gates run first so
// an Inequivalent verdict names the first invariant that differs.

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "qhgerm/bivar_poly.hpp"
#include "qhgerm/cross_ratio.hpp"
#include "qhgerm/errors.hpp"
#include "qhgerm/matching.hpp"
#include "qhgerm/numeric.hpp"
#include "qhgerm/qh_core.hpp"

namespace qhgerm {

enum class VerdictStatus { Equivalent, Inequivalent, NotApplicable, Error };

inline const char* to_string(VerdictStatus s) {
  switch (s) {
    case VerdictStatus::Equivalent: return "Equivalent";
    case VerdictStatus::Inequivalent: return "Inequivalent";
    case VerdictStatus::NotApplicable: return "NotApplicable";
    case VerdictStatus::Error: return "Error";
  }
  return "Unknown";
}

enum class DecideMode { Exact, Numeric, Auto };

inline const char* to_string(DecideMode m) {
  switch (m) {
    case DecideMode::Exact: return "exact";
    case DecideMode::Numeric: return "numeric";
    case DecideMode::Auto: return "auto";
  }
  return "unknown";
}

struct DecideOptions {
  std::optional<std::pair<unsigned, unsigned>> weights;
  DecideMode mode = DecideMode::Auto;
  Precision precision = 128;
  double tol = 1e-9;
};

/// Outcome of the root-clustering matcher; a verdict at tolerance, not a proof.
struct NumericEvidence {
  bool matched = false;
  std::optional<NumericMatch> match;
  Precision precision = 128;
  double tol = 1e-9;
  std::string note;
};

struct Verdict {
  VerdictStatus status = VerdictStatus::Error;
  std::string reason;
  std::optional<GermAnalysis> F;
  std::optional<GermAnalysis> G;
  /// Present iff Equivalent on the exact path. For p > 1 the centroids are 0.
  std::optional<AffineMatch> match;
  bool affine = false;
  /// The verdict came from the numeric matcher only.
  bool at_tolerance = false;
  std::optional<NumericEvidence> numeric;
  /// j-invariants of homogeneous quartic inputs (NotApplicable reports).
  std::optional<GaussianRational> j_F;
  std::optional<GaussianRational> j_G;
  /// Underlying failure when status is Error.
  std::optional<ErrorCode> error;
};

namespace detail {

inline Verdict finish(Verdict v, VerdictStatus s, std::string reason) {
  v.status = s;
  v.reason = std::move(reason);
  return v;
}

inline std::string mismatch(const std::string& name, long a, long b) {
  return name + ": " + std::to_string(a) + " vs " + std::to_string(b);
}

inline NumericEvidence numeric_check(const GermAnalysis& F, const GermAnalysis& G, bool affine,
                                     const DecideOptions& opts) {
  NumericEvidence ev;
  ev.precision = opts.precision;
  ev.tol = opts.tol;
  try {
    const auto A = root_multiset(F.form.ladder, opts.precision, opts.tol);
    const auto B = root_multiset(G.form.ladder, opts.precision, opts.tol);
    ev.match = numeric_match(affine ? MatchMode::Affine : MatchMode::Linear, A, B, opts.tol);
    ev.matched = ev.match.has_value();
    ev.note = ev.matched ? "root multisets match at tolerance" : "no candidate scale matches at tolerance";
  } catch (const Error& e) {
    ev.note = std::string("numeric matcher failed: ") + e.what();
  }
  return ev;
}

}  // namespace detail

inline Verdict decide_equivalence(const BivarPoly& Fp, const BivarPoly& Gp, const DecideOptions& opts = {}) {
  Verdict v;
  if (Fp.is_zero() || Gp.is_zero()) {
    v.error = ErrorCode::ZeroPolynomial;
    return detail::finish(v, VerdictStatus::Error, "zero polynomial");
  }
  try {
    v.F = analyze_germ(Fp, opts.weights);
    v.G = analyze_germ(Gp, opts.weights);
  } catch (const Error& e) {
    v.error = e.code();
    return detail::finish(v, VerdictStatus::Error, std::string("analysis: ") + e.what());
  }
  const GermAnalysis& F = *v.F;
  const GermAnalysis& G = *v.G;

  if (F.germ_class.tag != GermTag::NonHomogeneousQH || G.germ_class.tag != GermTag::NonHomogeneousQH) {
    if (F.germ_class.tag == GermTag::Homogeneous) v.j_F = quartic_j_invariant(Fp);
    if (G.germ_class.tag == GermTag::Homogeneous) v.j_G = quartic_j_invariant(Gp);
    const GermTag bad = F.germ_class.tag != GermTag::NonHomogeneousQH ? F.germ_class.tag : G.germ_class.tag;
    return detail::finish(v, VerdictStatus::NotApplicable, to_string(bad));
  }
  if (F.weights.p != G.weights.p || F.weights.q != G.weights.q) {
    return detail::finish(v, VerdictStatus::NotApplicable,
                          "weights: (" + std::to_string(F.weights.p) + "," + std::to_string(F.weights.q) + ") vs (" +
                              std::to_string(G.weights.p) + "," + std::to_string(G.weights.q) + ")");
  }
  const unsigned p = F.weights.p;
  if (F.weights.nu != G.weights.nu) return detail::finish(v, VerdictStatus::Inequivalent, detail::mismatch("nu", F.weights.nu, G.weights.nu));
  if (F.form.m != G.form.m) return detail::finish(v, VerdictStatus::Inequivalent, detail::mismatch("m", F.form.m, G.form.m));
  if (p > 1 && F.form.m0 != G.form.m0) {
    return detail::finish(v, VerdictStatus::Inequivalent, detail::mismatch("m0", F.form.m0, G.form.m0));
  }
  if (F.form.degD != G.form.degD) {
    return detail::finish(v, VerdictStatus::Inequivalent, detail::mismatch("ladder degree", F.form.degD, G.form.degD));
  }
  v.affine = p == 1;

  if (opts.mode == DecideMode::Numeric) {
    v.numeric = detail::numeric_check(F, G, v.affine, opts);
    v.at_tolerance = true;
    if (v.numeric->matched) return detail::finish(v, VerdictStatus::Equivalent, "root multisets match (at tolerance)");
    return detail::finish(v, VerdictStatus::Inequivalent, "numeric: " + v.numeric->note + " (at tolerance)");
  }

  if (F.form.multiplicities != G.form.multiplicities) {
    return detail::finish(v, VerdictStatus::Inequivalent, "multiplicities: root multiplicity profiles differ");
  }
  std::optional<AffineMatch> match;
  std::string failure;
  if (v.affine) {
    auto r = affine_multiset_match(F.form.ladder, G.form.ladder);
    if (auto* m = std::get_if<AffineMatch>(&r)) match = *m;
    else failure = std::get<NoMatch>(r).reason;
  } else {
    auto r = linear_multiset_match(F.form.ladder, G.form.ladder);
    if (auto* s = std::get_if<ScaleClass>(&r)) match = AffineMatch{*s, 0, 0};
    else failure = std::get<NoMatch>(r).reason;
  }

  const bool numeric_input = Fp.mode() == CoefficientMode::Numeric || Gp.mode() == CoefficientMode::Numeric;
  if (opts.mode == DecideMode::Auto && numeric_input) v.numeric = detail::numeric_check(F, G, v.affine, opts);

  if (!match) return detail::finish(v, VerdictStatus::Inequivalent, failure);
  v.match = match;
  return detail::finish(v, VerdictStatus::Equivalent,
                        v.affine ? "ladder roots related by z -> a z + b" : "ladder roots related by z -> a z");
}

}  // namespace qhgerm
