#pragma once

// Explicit coordinate change for an Equivalent verdict and its verification.
//
// The witness always asserts G(X, Y) = F(alpha X, beta Y - gamma X^q), with
// gamma = 0 when p > 1. Writing F = c0 X^m Y^m0 prod (Y^p - l_j X^q)^(m_j)
// and E = m0 + p D, the substitution sends l_j to (alpha^q / beta^p) l_j + gamma/beta
// and multiplies the leading coefficient by alpha^m beta^E, so we need
//
//   alpha^q = a beta^p,   gamma = b beta,   c0 alpha^m beta^E = d0.
//
// With x p + y q = 1 all solutions are alpha = a^y tau^p, beta = a^(-x) tau^q
// where tau^nu = (d0 / c0) a^(x E - y m).

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "qhgerm/bivar_poly.hpp"
#include "qhgerm/decide.hpp"
#include "qhgerm/errors.hpp"
#include "qhgerm/numeric.hpp"
#include "qhgerm/radical.hpp"
#include "qhgerm/unipoly.hpp"

namespace qhgerm {

/// gamma as a linear form sum coeff_t * radical_t + constant.
struct GammaForm {
  struct Term {
    GaussianRational coeff;
    RadicalScalar radical;
  };
  std::vector<Term> terms;
  GaussianRational constant;

  bool is_exact() const { return terms.empty(); }
  std::optional<GaussianRational> exact() const {
    if (terms.empty()) return constant;
    return std::nullopt;
  }
  /// Single radical form, when gamma is c * r with nothing added.
  std::optional<RadicalScalar> as_radical(Precision prec) const {
    if (terms.empty()) return make_exact(constant, prec);
    if (terms.size() == 1 && constant.is_zero()) return scale_radical(terms[0].coeff, terms[0].radical, prec);
    return std::nullopt;
  }
  Complex approx_at(Precision prec) const {
    Complex out(constant, prec);
    for (const auto& t : terms) out += Complex(t.coeff, prec) * t.radical.approx_at(prec);
    return out;
  }
};

enum class WitnessDirection { GEqualsFOfPsi };

inline const char* to_string(WitnessDirection) { return "G(X,Y) = F(alpha*X, beta*Y - gamma*X^q)"; }

struct Witness {
  unsigned p = 1;
  unsigned q = 1;
  unsigned branch = 0;
  RadicalScalar a;    // scale factor on the ladder roots
  RadicalScalar tau;  // free parameter, tau^nu fixed
  RadicalScalar alpha;
  RadicalScalar beta;
  GammaForm gamma;
  WitnessDirection direction = WitnessDirection::GEqualsFOfPsi;
  Precision precision = 128;

  bool is_exact() const { return alpha.is_exact() && beta.is_exact() && gamma.is_exact(); }
};

namespace detail {

/// Smallest index representation: if base = rho^g for some g | index, use rho^(1/(index/g)).
inline RadicalScalar reduce_radical(const RadicalScalar& r, Precision prec) {
  if (r.index == 1) return r;
  for (unsigned long g = r.index; g >= 2; --g) {
    if (r.index % g != 0) continue;
    for (unsigned long k : exact_root_branches(r.base, g)) {
      const GaussianRational rho = *exact_root(r.base, g, k);
      // value^(index/g) is some g-th root of base; pick the one equal to rho
      const RadicalScalar candidate = radical_from_approx(rho, r.index / g, r.approx_at(prec));
      const Precision check = prec;
      if (abs(candidate.approx_at(check) - r.approx_at(check)) <=
          Real::exp2(-static_cast<long>(check) / 2, check) * max(Real(1L, check), abs(r.approx_at(check)))) {
        return candidate;
      }
    }
  }
  return r;
}

struct ExponentData {
  long x = 1, y = 0;  // x p + y q = 1
  long e = 0;         // exponent of a in tau^nu
  unsigned long nu = 0;
  GaussianRational ratio;  // d0 / c0
};

inline ExponentData exponent_data(const Verdict& v) {
  const GermAnalysis& F = *v.F;
  const GermAnalysis& G = *v.G;
  ExponentData out;
  const unsigned p = F.weights.p, q = F.weights.q;
  if (p > 1) {
    const long long pq[2] = {p, q};
    const BezoutResult b = gcd_bezout(pq);
    out.x = static_cast<long>(b.coeffs[0]);
    out.y = static_cast<long>(b.coeffs[1]);
  }
  const long E = static_cast<long>(F.form.m0) + static_cast<long>(p) * static_cast<long>(F.form.degD);
  out.e = out.x * E - out.y * static_cast<long>(F.form.m);
  out.nu = F.weights.nu;
  out.ratio = G.form.c0 / F.form.c0;
  return out;
}

inline void require_equivalent(const Verdict& v) {
  if (v.status != VerdictStatus::Equivalent || !v.match || !v.F || !v.G) {
    throw Error(ErrorCode::NotEquivalentVerdict, "witness requested for a verdict that is not Equivalent");
  }
}

}  // namespace detail

/// Builds the witness for scale branch `branch` in [0, d). Among the nu
/// admissible tau the first one lying in Q(i) is preferred, else the principal one.
inline Witness build_witness(const Verdict& v, unsigned branch, Precision prec = 128) {
  detail::require_equivalent(v);
  const AffineMatch& match = *v.match;
  if (branch >= match.scale.d) {
    throw Error(ErrorCode::BranchOutOfRange,
                "branch " + std::to_string(branch) + " outside [0," + std::to_string(match.scale.d) + ")");
  }
  const Precision work = prec + 64;
  const detail::ExponentData ex = detail::exponent_data(v);
  Witness w;
  w.p = v.F->weights.p;
  w.q = v.F->weights.q;
  w.branch = branch;
  w.precision = prec;
  w.a = make_radical(match.scale.base, match.scale.d, branch, work);

  if (auto a_exact = w.a.exact()) {
    const GaussianRational R = ex.ratio * a_exact->pow(ex.e);
    const auto exact_branches = exact_root_branches(R, ex.nu);
    w.tau = make_radical(R, ex.nu, exact_branches.empty() ? 0 : exact_branches.front(), work);
  } else {
    // tau^(nu L) = ratio^L base^e with L the index of a.
    const GaussianRational T = ex.ratio.pow(static_cast<long>(w.a.index)) * w.a.base.pow(ex.e);
    const Complex R_approx = Complex(ex.ratio, work) * pow(w.a.approx, ex.e);
    w.tau = radical_from_approx(T, ex.nu * w.a.index, nth_root(R_approx, ex.nu, 0));
  }
  w.tau = detail::reduce_radical(w.tau, work);
  w.alpha = detail::reduce_radical(radical_product({{w.a, ex.y}, {w.tau, static_cast<long>(w.p)}}, work), work);
  w.beta = detail::reduce_radical(radical_product({{w.a, -ex.x}, {w.tau, static_cast<long>(w.q)}}, work), work);

  if (v.affine) {
    // gamma = b beta with b = c_G - a c_F; since alpha^q = a beta this is c_G beta - c_F alpha^q.
    if (auto a_exact = w.a.exact()) {
      const GaussianRational b = match.shift_for(*a_exact);
      if (auto beta_exact = w.beta.exact()) {
        w.gamma.constant = b * *beta_exact;
      } else if (!b.is_zero()) {
        w.gamma.terms.push_back({b, w.beta});
      }
    } else {
      if (!match.c_G.is_zero()) w.gamma.terms.push_back({match.c_G, w.beta});
      if (!match.c_F.is_zero()) {
        const RadicalScalar alpha_q =
            detail::reduce_radical(radical_product({{w.alpha, static_cast<long>(w.q)}}, work), work);
        w.gamma.terms.push_back({-match.c_F, alpha_q});
      }
    }
  }
  for (RadicalScalar* r : {&w.a, &w.tau, &w.alpha, &w.beta}) *r = r->with_prec(prec);
  for (auto& t : w.gamma.terms) t.radical = t.radical.with_prec(prec);
  return w;
}

/// A branch whose witness is entirely in Q(i), if any.
inline std::optional<unsigned> find_exact_branch(const Verdict& v) {
  detail::require_equivalent(v);
  const ScaleClass& s = v.match->scale;
  const detail::ExponentData ex = detail::exponent_data(v);
  for (unsigned long k : exact_root_branches(s.base, s.d)) {
    const GaussianRational a = *exact_root(s.base, s.d, k);
    const GaussianRational R = ex.ratio * a.pow(ex.e);
    if (!exact_root_branches(R, ex.nu).empty()) return static_cast<unsigned>(k);
  }
  return std::nullopt;
}

enum class VerificationMode { Exact, Numeric };

inline const char* to_string(VerificationMode m) { return m == VerificationMode::Exact ? "exact" : "numeric"; }

struct VerificationReport {
  VerificationMode mode = VerificationMode::Exact;
  bool pass = false;
  /// Maximum relative residual (0 for a passing exact check).
  Real residual{Real(53)};
  Precision precision = 128;
  unsigned samples = 0;
  double tol = 0;
};

struct VerifyOptions {
  unsigned samples = 200;
  double tol = 1e-20;
  std::uint64_t seed = 0;
  Precision max_precision = 1024;
  bool force_numeric = false;
};

namespace detail {

/// sum |c| |x|^i |y|^j
inline Real abs_eval(const BivarPoly& P, const Real& ax, const Real& ay) {
  const Precision prec = std::max(ax.prec(), ay.prec());
  Real acc(prec);
  for (const auto& [mono, c] : P.terms()) acc += abs(Complex(c, prec)) * pow(ax, mono.i) * pow(ay, mono.j);
  return acc;
}

inline Real exact_relative_residual(const BivarPoly& lhs, const BivarPoly& rhs) {
  const BivarPoly diff = lhs - rhs;
  Rational num = 0, den = 0;
  for (const auto& [m, c] : diff.terms()) num = std::max(num, c.norm());
  for (const auto& [m, c] : lhs.terms()) den = std::max(den, c.norm());
  for (const auto& [m, c] : rhs.terms()) den = std::max(den, c.norm());
  if (den == 0) return Real(53);
  return sqrt(Real(Rational(num / den), 64));
}

}  // namespace detail

/// Checks G(X, Y) = F(alpha X, beta Y - gamma X^q): exactly when every scalar
/// is in Q(i), otherwise at pseudo-random points |x| = |y| = 1/2 drawn from a
/// seeded generator, raising the precision on failure.
inline VerificationReport verify_witness(const BivarPoly& F, const BivarPoly& G, const Witness& w,
                                         const VerifyOptions& opts = {}) {
  VerificationReport rep;
  rep.tol = opts.tol;
  if (w.is_exact() && !opts.force_numeric) {
    rep.mode = VerificationMode::Exact;
    rep.precision = 0;
    const BivarPoly image = substitute(F, *w.alpha.exact(), *w.beta.exact(), *w.gamma.exact(), w.q);
    rep.pass = image == G;
    rep.residual = rep.pass ? Real(53) : detail::exact_relative_residual(G, image);
    return rep;
  }
  rep.mode = VerificationMode::Numeric;
  rep.samples = opts.samples;
  for (Precision prec = w.precision;; prec *= 2) {
    rep.precision = prec;
    const Complex alpha = w.alpha.approx_at(prec);
    const Complex beta = w.beta.approx_at(prec);
    const Complex gamma = w.gamma.approx_at(prec);
    std::mt19937_64 rng(opts.seed);
    const Real two_pi = Real::pi(prec) * Real(2L, prec);
    const Real half(0.5, prec);
    auto angle = [&] { return two_pi * Real(static_cast<double>(rng() >> 11) * 0x1.0p-53, prec); };
    Real worst(prec);
    for (unsigned s = 0; s < opts.samples; ++s) {
      const Complex x = Complex::polar(half, angle());
      const Complex y = Complex::polar(half, angle());
      const Complex X1 = alpha * x;
      const Complex Y1 = beta * y - gamma * pow(x, static_cast<long>(w.q));
      const ComplexApprox lhs = eval_bivar(G, ComplexApprox(x), ComplexApprox(y));
      const ComplexApprox rhs = eval_bivar(F, ComplexApprox(X1), ComplexApprox(Y1));
      Real scale = max(detail::abs_eval(G, abs(x), abs(y)), detail::abs_eval(F, abs(X1), abs(Y1)));
      if (scale.is_zero()) scale = Real(1L, prec);
      worst = max(worst, abs(lhs.value - rhs.value) / scale);
    }
    rep.residual = worst;
    rep.pass = worst <= Real(opts.tol, prec);
    if (rep.pass || prec * 2 > opts.max_precision) return rep;
  }
}

}  // namespace qhgerm
