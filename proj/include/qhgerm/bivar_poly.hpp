#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "qhgerm/errors.hpp"
#include "qhgerm/gaussian.hpp"
#include "qhgerm/unipoly.hpp"

namespace qhgerm {

/// Exponent pair of X^i Y^j.
struct Monomial {
  unsigned i = 0;
  unsigned j = 0;

  unsigned total_degree() const { return i + j; }
  friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

/// exact: every literal was an integer or fraction; numeric: a decimal literal appeared.
enum class CoefficientMode { Exact, Numeric };

inline const char* to_string(CoefficientMode m) { return m == CoefficientMode::Exact ? "exact" : "numeric"; }

/// Sparse polynomial in X, Y over Q(i). No zero coefficient is ever stored.
class BivarPoly {
 public:
  using TermMap = std::map<Monomial, GaussianRational>;

  BivarPoly() = default;

  static BivarPoly constant(const GaussianRational& c) { return term(0, 0, c); }
  static BivarPoly x() { return term(1, 0, 1); }
  static BivarPoly y() { return term(0, 1, 1); }
  static BivarPoly term(unsigned i, unsigned j, const GaussianRational& c) {
    BivarPoly p;
    p.add_term({i, j}, c);
    return p;
  }

  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  CoefficientMode mode() const { return mode_; }
  void set_mode(CoefficientMode m) { mode_ = m; }

  GaussianRational coefficient(unsigned i, unsigned j) const {
    auto it = terms_.find({i, j});
    return it == terms_.end() ? GaussianRational() : it->second;
  }

  std::vector<Monomial> support() const {
    std::vector<Monomial> out;
    out.reserve(terms_.size());
    for (const auto& [mono, c] : terms_) out.push_back(mono);
    return out;
  }

  void add_term(Monomial mono, const GaussianRational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(mono, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  BivarPoly operator-() const {
    BivarPoly out = *this;
    for (auto& [mono, c] : out.terms_) c = -c;
    return out;
  }

  BivarPoly& operator+=(const BivarPoly& o) {
    for (const auto& [mono, c] : o.terms_) add_term(mono, c);
    mode_ = merge(mode_, o.mode_);
    return *this;
  }
  BivarPoly& operator-=(const BivarPoly& o) {
    for (const auto& [mono, c] : o.terms_) add_term(mono, -c);
    mode_ = merge(mode_, o.mode_);
    return *this;
  }

  friend BivarPoly operator+(BivarPoly a, const BivarPoly& b) { return a += b; }
  friend BivarPoly operator-(BivarPoly a, const BivarPoly& b) { return a -= b; }

  friend BivarPoly operator*(const BivarPoly& a, const BivarPoly& b) {
    BivarPoly out;
    for (const auto& [ma, ca] : a.terms_) {
      for (const auto& [mb, cb] : b.terms_) out.add_term({ma.i + mb.i, ma.j + mb.j}, ca * cb);
    }
    out.mode_ = merge(a.mode_, b.mode_);
    return out;
  }

  BivarPoly scale(const GaussianRational& c) const {
    BivarPoly out;
    out.mode_ = mode_;
    if (c.is_zero()) return out;
    for (const auto& [mono, coeff] : terms_) out.terms_.emplace(mono, coeff * c);
    return out;
  }

  BivarPoly pow(unsigned e) const {
    BivarPoly result = constant(1);
    result.mode_ = mode_;
    BivarPoly base = *this;
    while (e != 0) {
      if (e & 1U) result = result * base;
      e >>= 1U;
      if (e != 0) base = base * base;
    }
    return result;
  }

  /// Multiplies by X^di Y^dj.
  BivarPoly shift(unsigned di, unsigned dj) const {
    BivarPoly out;
    out.mode_ = mode_;
    for (const auto& [mono, c] : terms_) out.terms_.emplace(Monomial{mono.i + di, mono.j + dj}, c);
    return out;
  }

  GaussianRational eval(const GaussianRational& x, const GaussianRational& y) const {
    GaussianRational acc;
    for (const auto& [mono, c] : terms_) acc += c * x.pow(mono.i) * y.pow(mono.j);
    return acc;
  }

  /// Term-map equality; the coefficient mode is metadata and does not participate.
  friend bool operator==(const BivarPoly& a, const BivarPoly& b) { return a.terms_ == b.terms_; }

 private:
  static CoefficientMode merge(CoefficientMode a, CoefficientMode b) {
    return (a == CoefficientMode::Numeric || b == CoefficientMode::Numeric) ? CoefficientMode::Numeric
                                                                            : CoefficientMode::Exact;
  }

  TermMap terms_;
  CoefficientMode mode_ = CoefficientMode::Exact;
};

/// Binomial expansion of (beta*Y - gamma*X^q)^n as a bivariate polynomial.
inline BivarPoly binomial_power(const GaussianRational& beta, const GaussianRational& gamma, unsigned q, unsigned n) {
  BivarPoly out;
  BigInt binom = 1;
  for (unsigned k = 0; k <= n; ++k) {
    // term C(n,k) (beta Y)^(n-k) (-gamma X^q)^k
    GaussianRational c = beta.pow(n - k) * (-gamma).pow(k) * GaussianRational(Rational(binom));
    out.add_term({q * k, n - k}, c);
    binom = binom * (n - k) / (k + 1);
  }
  return out;
}

/// F(alpha X, beta Y - gamma X^q), computed exactly.
inline BivarPoly substitute(const BivarPoly& f, const GaussianRational& alpha, const GaussianRational& beta,
                            const GaussianRational& gamma, unsigned q) {
  BivarPoly out;
  out.set_mode(f.mode());
  std::map<unsigned, BivarPoly> y_powers;
  for (const auto& [mono, c] : f.terms()) {
    auto it = y_powers.find(mono.j);
    if (it == y_powers.end()) it = y_powers.emplace(mono.j, binomial_power(beta, gamma, q, mono.j)).first;
    out += it->second.shift(mono.i, 0).scale(c * alpha.pow(mono.i));
  }
  return out;
}

}  // namespace qhgerm
