#pragma once

// Dense univariate polynomials over Q(i) and the integer helpers the
// matchers need.

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "qhgerm/errors.hpp"
#include "qhgerm/gaussian.hpp"

namespace qhgerm {

class UniPoly {
 public:
  UniPoly() = default;

  /// Coefficients given leading term first, e.g. {1, -3, 2} is w^2 - 3w + 2.
  static UniPoly from_descending(std::vector<GaussianRational> coeffs) {
    std::vector<GaussianRational> asc(coeffs.rbegin(), coeffs.rend());
    return from_ascending(std::move(asc));
  }

  /// Coefficients given constant term first.
  static UniPoly from_ascending(std::vector<GaussianRational> coeffs) {
    UniPoly p;
    p.coeffs_ = std::move(coeffs);
    p.trim();
    return p;
  }

  static UniPoly constant(GaussianRational c) { return from_ascending({std::move(c)}); }

  /// w^k
  static UniPoly monomial(std::size_t k, GaussianRational c = 1) {
    std::vector<GaussianRational> coeffs(k + 1);
    coeffs[k] = std::move(c);
    return from_ascending(std::move(coeffs));
  }

  /// Monic polynomial with the given roots (repeated entries give multiplicity).
  static UniPoly from_roots(std::span<const GaussianRational> roots) {
    UniPoly out = constant(1);
    for (const auto& r : roots) out = out * from_ascending({-r, 1});
    return out;
  }

  bool is_zero() const { return coeffs_.empty(); }
  /// Degree; the zero polynomial reports -1.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }

  const GaussianRational& leading() const {
    if (is_zero()) throw Error(ErrorCode::ZeroPolynomial, "leading coefficient of zero polynomial");
    return coeffs_.back();
  }

  /// Coefficient of w^k (zero beyond the degree).
  GaussianRational coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : GaussianRational(); }

  /// Coefficient of w^(deg - i): the i-th coefficient counted from the top.
  GaussianRational from_top(std::size_t i) const {
    const long k = degree() - static_cast<long>(i);
    return k < 0 ? GaussianRational() : coeffs_[static_cast<std::size_t>(k)];
  }

  const std::vector<GaussianRational>& ascending() const { return coeffs_; }
  std::vector<GaussianRational> descending() const { return {coeffs_.rbegin(), coeffs_.rend()}; }

  UniPoly operator-() const {
    UniPoly out = *this;
    for (auto& c : out.coeffs_) c = -c;
    return out;
  }

  friend UniPoly operator+(const UniPoly& a, const UniPoly& b) {
    std::vector<GaussianRational> out(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t k = 0; k < out.size(); ++k) out[k] = a.coeff(k) + b.coeff(k);
    return from_ascending(std::move(out));
  }
  friend UniPoly operator-(const UniPoly& a, const UniPoly& b) { return a + (-b); }

  friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<GaussianRational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i].is_zero()) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return from_ascending(std::move(out));
  }

  UniPoly scale(const GaussianRational& c) const {
    std::vector<GaussianRational> out = coeffs_;
    for (auto& x : out) x *= c;
    return from_ascending(std::move(out));
  }

  UniPoly pow(unsigned e) const {
    UniPoly result = constant(1);
    UniPoly base = *this;
    while (e != 0) {
      if (e & 1U) result = result * base;
      e >>= 1U;
      if (e != 0) base = base * base;
    }
    return result;
  }

  GaussianRational eval(const GaussianRational& w) const {
    GaussianRational acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
      acc *= w;
      acc += *it;
    }
    return acc;
  }

  UniPoly derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<GaussianRational> out(coeffs_.size() - 1);
    for (std::size_t k = 1; k < coeffs_.size(); ++k) out[k - 1] = coeffs_[k] * GaussianRational(static_cast<long>(k));
    return from_ascending(std::move(out));
  }

  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.coeffs_ == b.coeffs_; }

  /// Human-readable form in the variable `var`, highest power first.
  std::string str(const std::string& var = "w") const {
    if (is_zero()) return "0";
    std::string out;
    for (long k = degree(); k >= 0; --k) {
      const auto& c = coeffs_[static_cast<std::size_t>(k)];
      if (c.is_zero()) continue;
      std::string mono = k == 0 ? "" : (k == 1 ? var : var + "^" + std::to_string(k));
      std::string coeff = c.str();
      bool negative = c.is_real() && c.re() < 0;
      if (negative) coeff = (-c).str();
      if (!c.is_real()) coeff = "(" + c.str() + ")";
      std::string body;
      if (mono.empty()) {
        body = coeff;
      } else if (coeff == "1") {
        body = mono;
      } else {
        body = coeff + "*" + mono;
      }
      if (out.empty()) {
        out = negative ? "-" + body : body;
      } else {
        out += negative ? " - " : " + ";
        out += body;
      }
    }
    return out;
  }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
  }

  std::vector<GaussianRational> coeffs_;  // ascending powers
};

struct MonicResult {
  UniPoly poly;
  GaussianRational leading;
};

/// Divides by the leading coefficient; `leading * poly` reproduces the input.
inline MonicResult monic(const UniPoly& p) {
  if (p.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "monic of the zero polynomial");
  GaussianRational lead = p.leading();
  return {p.scale(lead.inv()), lead};
}

/// Q(w) = P(w + c), by repeated synthetic division.
inline UniPoly taylor_shift(const UniPoly& p, const GaussianRational& c) {
  if (c.is_zero() || p.degree() < 1) return p;
  std::vector<GaussianRational> a = p.ascending();
  const std::size_t n = a.size() - 1;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = n - 1;; --j) {
      a[j] += c * a[j + 1];
      if (j == i) break;
    }
  }
  return UniPoly::from_ascending(std::move(a));
}

struct DivModResult {
  UniPoly quotient;
  UniPoly remainder;
};

inline DivModResult divmod(const UniPoly& a, const UniPoly& b) {
  if (b.is_zero()) throw Error(ErrorCode::DivisionByZero, "polynomial division by zero");
  std::vector<GaussianRational> rem = a.ascending();
  const long db = b.degree();
  if (a.degree() < db) return {UniPoly(), a};
  std::vector<GaussianRational> quot(static_cast<std::size_t>(a.degree() - db + 1));
  const GaussianRational inv_lead = b.leading().inv();
  for (long k = a.degree(); k >= db; --k) {
    const auto& top = rem[static_cast<std::size_t>(k)];
    if (top.is_zero()) continue;
    GaussianRational factor = top * inv_lead;
    for (long j = 0; j <= db; ++j) {
      rem[static_cast<std::size_t>(k - db + j)] -= factor * b.coeff(static_cast<std::size_t>(j));
    }
    quot[static_cast<std::size_t>(k - db)] = std::move(factor);
  }
  return {UniPoly::from_ascending(std::move(quot)), UniPoly::from_ascending(std::move(rem))};
}

/// Monic gcd; gcd(0, 0) is the zero polynomial.
inline UniPoly gcd(UniPoly a, UniPoly b) {
  while (!b.is_zero()) {
    UniPoly r = divmod(a, b).remainder;
    a = std::move(b);
    b = r.is_zero() ? std::move(r) : monic(r).poly;
  }
  return a.is_zero() ? a : monic(a).poly;
}

/// One squarefree factor together with the multiplicity of its roots.
struct SquarefreeFactor {
  UniPoly factor;  // monic, squarefree, degree >= 1
  unsigned multiplicity = 0;
};

/// Yun's algorithm: p = lead * prod factor_k^k. Only nonconstant factors are returned.
inline std::vector<SquarefreeFactor> squarefree_decomposition(const UniPoly& p) {
  if (p.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "squarefree decomposition of zero");
  std::vector<SquarefreeFactor> out;
  if (p.degree() < 1) return out;
  UniPoly f = monic(p).poly;
  UniPoly df = f.derivative();
  UniPoly a = gcd(f, df);
  UniPoly b = divmod(f, a).quotient;
  UniPoly c = divmod(df, a).quotient;
  UniPoly d = c - b.derivative();
  unsigned k = 1;
  while (b.degree() >= 1) {
    UniPoly g = gcd(b, d);
    if (g.degree() >= 1) out.push_back({g, k});
    b = divmod(b, g).quotient;
    c = divmod(d, g).quotient;
    d = c - b.derivative();
    ++k;
  }
  return out;
}

/// Root multiplicities with repetition (sorted ascending): one entry per distinct root.
inline std::vector<unsigned> multiplicity_profile(const std::vector<SquarefreeFactor>& factors) {
  std::vector<unsigned> out;
  for (const auto& f : factors) out.insert(out.end(), static_cast<std::size_t>(f.factor.degree()), f.multiplicity);
  std::sort(out.begin(), out.end());
  return out;
}

struct BezoutResult {
  long long d = 0;
  std::vector<long long> coeffs;
};

/// gcd of a nonempty list of positive integers with coefficients x
/// such that sum x[t] * indices[t] = d.
inline BezoutResult gcd_bezout(std::span<const long long> indices) {
  if (indices.empty()) throw Error(ErrorCode::InvalidArgument, "gcd_bezout of an empty list");
  for (long long v : indices) {
    if (v < 1) throw Error(ErrorCode::InvalidArgument, "gcd_bezout expects positive integers");
  }
  BezoutResult out{indices[0], {1}};
  for (std::size_t t = 1; t < indices.size(); ++t) {
    // extended Euclid on (out.d, indices[t])
    long long old_r = out.d, r = indices[t];
    long long old_s = 1, s = 0;
    long long old_u = 0, u = 1;
    while (r != 0) {
      const long long quo = old_r / r;
      old_r = std::exchange(r, old_r - quo * r);
      old_s = std::exchange(s, old_s - quo * s);
      old_u = std::exchange(u, old_u - quo * u);
    }
    for (auto& x : out.coeffs) x *= old_s;
    out.coeffs.push_back(old_u);
    out.d = old_r;
  }
  return out;
}

}  // namespace qhgerm
