#pragma once

// Exact rationals (GMP-backed) and the Gaussian rationals Q(i).

#include <gmpxx.h>

#include <ostream>
#include <string>
#include <utility>

#include "qhgerm/errors.hpp"

namespace qhgerm {

using BigInt = mpz_class;
/// Always canonical: reduced, positive denominator, zero stored as 0/1.
using Rational = mpq_class;

inline Rational make_rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw Error(ErrorCode::DivisionByZero, "rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline Rational make_rational(long num, long den = 1) {
  return make_rational(BigInt(num), BigInt(den));
}

/// "p/q" or "p" when the denominator is one.
inline std::string to_string(const Rational& r) { return r.get_str(); }

inline Rational pow(const Rational& base, long exponent) {
  if (exponent < 0) {
    if (base == 0) throw Error(ErrorCode::DivisionByZero, "zero to a negative power");
    Rational inv(base.get_den(), base.get_num());
    inv.canonicalize();
    return pow(inv, -exponent);
  }
  Rational out;
  mpz_pow_ui(out.get_num_mpz_t(), base.get_num_mpz_t(), static_cast<unsigned long>(exponent));
  mpz_pow_ui(out.get_den_mpz_t(), base.get_den_mpz_t(), static_cast<unsigned long>(exponent));
  return out;
}

class GaussianRational {
 public:
  GaussianRational() = default;
  GaussianRational(long re) : re_(re) {}  // NOLINT(google-explicit-constructor)
  GaussianRational(Rational re) : re_(std::move(re)) {}  // NOLINT(google-explicit-constructor)
  GaussianRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

  static GaussianRational i() { return {Rational(0), Rational(1)}; }

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }

  bool is_zero() const { return re_ == 0 && im_ == 0; }
  bool is_real() const { return im_ == 0; }
  bool is_one() const { return re_ == 1 && im_ == 0; }

  GaussianRational conj() const { return {re_, -im_}; }
  /// |z|^2
  Rational norm() const { return re_ * re_ + im_ * im_; }

  GaussianRational inv() const {
    if (is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of zero");
    Rational n = norm();
    return {re_ / n, -im_ / n};
  }

  GaussianRational operator-() const { return {-re_, -im_}; }

  GaussianRational& operator+=(const GaussianRational& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
  }
  GaussianRational& operator-=(const GaussianRational& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
  }
  GaussianRational& operator*=(const GaussianRational& o) {
    if (o.im_ == 0) {
      re_ *= o.re_;
      im_ *= o.re_;
      return *this;
    }
    Rational re = re_ * o.re_ - im_ * o.im_;
    Rational im = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
  }
  GaussianRational& operator/=(const GaussianRational& o) {
    if (o.is_zero()) throw Error(ErrorCode::DivisionByZero, "division by zero");
    if (o.im_ == 0) {
      re_ /= o.re_;
      im_ /= o.re_;
      return *this;
    }
    return *this *= o.inv();
  }

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }

  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }

  /// Integer power; negative exponents require a nonzero base.
  GaussianRational pow(long exponent) const {
    if (exponent < 0) return inv().pow(-exponent);
    if (im_ == 0) return {qhgerm::pow(re_, exponent), Rational(0)};
    GaussianRational result(1);
    GaussianRational base = *this;
    auto e = static_cast<unsigned long>(exponent);
    while (e != 0) {
      if (e & 1U) result *= base;
      e >>= 1U;
      if (e != 0) base *= base;
    }
    return result;
  }

  /// Canonical text: "3", "-1/2", "2i", "1/2-3i".
  std::string str() const {
    if (im_ == 0) return re_.get_str();
    std::string imag = im_.get_str() + "i";
    if (re_ == 0) return imag;
    if (im_ > 0) return re_.get_str() + "+" + imag;
    return re_.get_str() + imag;
  }

  friend std::ostream& operator<<(std::ostream& os, const GaussianRational& z) { return os << z.str(); }

 private:
  Rational re_;
  Rational im_;
};

inline GaussianRational pow(const GaussianRational& z, long exponent) { return z.pow(exponent); }

}  // namespace qhgerm
