#pragma once

// Minimal value-semantic wrapper over mpfr_t with per-value precision, and a
// complex type on top of it. Binary operations round to the larger operand
// precision.

#include <gmpxx.h>
#include <mpfr.h>

#include <algorithm>
#include <cstddef>
#include <string>
#include <utility>

#include "qhgerm/gaussian.hpp"

namespace qhgerm {

using Precision = mpfr_prec_t;

class Real {
 public:
  explicit Real(Precision prec = 128) {
    mpfr_init2(v_, prec);
    mpfr_set_zero(v_, 1);
  }
  Real(double d, Precision prec) {
    mpfr_init2(v_, prec);
    mpfr_set_d(v_, d, MPFR_RNDN);
  }
  Real(long n, Precision prec) {
    mpfr_init2(v_, prec);
    mpfr_set_si(v_, n, MPFR_RNDN);
  }
  Real(int n, Precision prec) : Real(static_cast<long>(n), prec) {}
  Real(const Rational& q, Precision prec) {
    mpfr_init2(v_, prec);
    mpfr_set_q(v_, q.get_mpq_t(), MPFR_RNDN);
  }
  Real(const Real& o) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  Real(Real&& o) noexcept {
    mpfr_init2(v_, MPFR_PREC_MIN);
    mpfr_swap(v_, o.v_);
  }
  Real& operator=(const Real& o) {
    if (this != &o) {
      mpfr_set_prec(v_, mpfr_get_prec(o.v_));
      mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
  }
  Real& operator=(Real&& o) noexcept {
    mpfr_swap(v_, o.v_);
    return *this;
  }
  ~Real() { mpfr_clear(v_); }

  Precision prec() const { return mpfr_get_prec(v_); }
  mpfr_srcptr get() const { return v_; }
  mpfr_ptr get() { return v_; }

  /// Same value at a different precision.
  Real with_prec(Precision prec) const {
    Real out(prec);
    mpfr_set(out.v_, v_, MPFR_RNDN);
    return out;
  }

  static Real pi(Precision prec) {
    Real out(prec);
    mpfr_const_pi(out.v_, MPFR_RNDN);
    return out;
  }
  static Real infinity(Precision prec) {
    Real out(prec);
    mpfr_set_inf(out.v_, 1);
    return out;
  }
  /// 2^e
  static Real exp2(long e, Precision prec) {
    Real out(prec);
    mpfr_set_ui_2exp(out.v_, 1, e, MPFR_RNDN);
    return out;
  }

  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  bool is_finite() const { return mpfr_number_p(v_) != 0; }
  int sign() const { return mpfr_sgn(v_); }
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  long exponent() const { return is_zero() ? 0 : mpfr_get_exp(v_); }

  /// Exact rational value of the stored binary float.
  Rational to_rational() const {
    Rational out;
    mpfr_get_q(out.get_mpq_t(), v_);
    return out;
  }

  /// Scientific notation with `digits` significant decimal digits.
  std::string str(std::size_t digits) const {
    if (is_zero()) return "0";
    if (!is_finite()) return mpfr_nan_p(v_) ? "nan" : (sign() > 0 ? "inf" : "-inf");
    mpfr_exp_t exp10 = 0;
    char* raw = mpfr_get_str(nullptr, &exp10, 10, digits, v_, MPFR_RNDN);
    std::string mant(raw);
    mpfr_free_str(raw);
    std::string sign;
    if (mant.front() == '-') {
      sign = "-";
      mant.erase(0, 1);
    }
    std::string out = sign + mant.substr(0, 1);
    if (mant.size() > 1) out += "." + mant.substr(1);
    const long e = static_cast<long>(exp10) - 1;
    if (e != 0) out += "e" + std::to_string(e);
    return out;
  }

  Real operator-() const {
    Real out(prec());
    mpfr_neg(out.v_, v_, MPFR_RNDN);
    return out;
  }

  friend Real operator+(const Real& a, const Real& b) { return binary(a, b, mpfr_add); }
  friend Real operator-(const Real& a, const Real& b) { return binary(a, b, mpfr_sub); }
  friend Real operator*(const Real& a, const Real& b) { return binary(a, b, mpfr_mul); }
  friend Real operator/(const Real& a, const Real& b) { return binary(a, b, mpfr_div); }
  Real& operator+=(const Real& o) { return *this = *this + o; }
  Real& operator-=(const Real& o) { return *this = *this - o; }
  Real& operator*=(const Real& o) { return *this = *this * o; }
  Real& operator/=(const Real& o) { return *this = *this / o; }

  friend bool operator<(const Real& a, const Real& b) { return mpfr_less_p(a.v_, b.v_) != 0; }
  friend bool operator>(const Real& a, const Real& b) { return mpfr_greater_p(a.v_, b.v_) != 0; }
  friend bool operator<=(const Real& a, const Real& b) { return mpfr_lessequal_p(a.v_, b.v_) != 0; }
  friend bool operator>=(const Real& a, const Real& b) { return mpfr_greaterequal_p(a.v_, b.v_) != 0; }
  friend bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }

  friend Real abs(const Real& a) { return unary(a, mpfr_abs); }
  friend Real sqrt(const Real& a) { return unary(a, mpfr_sqrt); }
  friend Real exp(const Real& a) { return unary(a, mpfr_exp); }
  friend Real log(const Real& a) { return unary(a, mpfr_log); }
  friend Real sin(const Real& a) { return unary(a, mpfr_sin); }
  friend Real cos(const Real& a) { return unary(a, mpfr_cos); }
  friend Real round(const Real& a) {
    Real out(a.prec());
    mpfr_round(out.v_, a.v_);
    return out;
  }
  friend Real atan2(const Real& y, const Real& x) { return binary(y, x, mpfr_atan2); }
  friend Real hypot(const Real& a, const Real& b) { return binary(a, b, mpfr_hypot); }
  friend Real pow(const Real& a, long e) {
    Real out(a.prec());
    mpfr_pow_si(out.v_, a.v_, e, MPFR_RNDN);
    return out;
  }
  friend Real max(const Real& a, const Real& b) { return a < b ? b : a; }
  friend Real min(const Real& a, const Real& b) { return b < a ? b : a; }

 private:
  using BinaryOp = int (*)(mpfr_ptr, mpfr_srcptr, mpfr_srcptr, mpfr_rnd_t);
  using UnaryOp = int (*)(mpfr_ptr, mpfr_srcptr, mpfr_rnd_t);

  static Real binary(const Real& a, const Real& b, BinaryOp op) {
    Real out(std::max(a.prec(), b.prec()));
    op(out.v_, a.v_, b.v_, MPFR_RNDN);
    return out;
  }
  static Real unary(const Real& a, UnaryOp op) {
    Real out(a.prec());
    op(out.v_, a.v_, MPFR_RNDN);
    return out;
  }

  mpfr_t v_;
};

struct Complex {
  Real re;
  Real im;

  explicit Complex(Precision prec = 128) : re(prec), im(prec) {}
  Complex(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}
  Complex(const GaussianRational& z, Precision prec) : re(z.re(), prec), im(z.im(), prec) {}

  static Complex polar(const Real& r, const Real& theta) { return {r * cos(theta), r * sin(theta)}; }

  Precision prec() const { return std::max(re.prec(), im.prec()); }
  Complex with_prec(Precision p) const { return {re.with_prec(p), im.with_prec(p)}; }
  bool is_zero() const { return re.is_zero() && im.is_zero(); }

  Complex conj() const { return {re, -im}; }
  Complex operator-() const { return {-re, -im}; }

  friend Complex operator+(const Complex& a, const Complex& b) { return {a.re + b.re, a.im + b.im}; }
  friend Complex operator-(const Complex& a, const Complex& b) { return {a.re - b.re, a.im - b.im}; }
  friend Complex operator*(const Complex& a, const Complex& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend Complex operator*(const Complex& a, const Real& s) { return {a.re * s, a.im * s}; }
  friend Complex operator/(const Complex& a, const Complex& b) {
    // Smith's algorithm keeps the intermediate quotients bounded.
    if (abs(b.re) >= abs(b.im)) {
      Real r = b.im / b.re;
      Real den = b.re + b.im * r;
      return {(a.re + a.im * r) / den, (a.im - a.re * r) / den};
    }
    Real r = b.re / b.im;
    Real den = b.re * r + b.im;
    return {(a.re * r + a.im) / den, (a.im * r - a.re) / den};
  }
  friend Complex operator/(const Complex& a, const Real& s) { return {a.re / s, a.im / s}; }
  Complex& operator+=(const Complex& o) { return *this = *this + o; }
  Complex& operator-=(const Complex& o) { return *this = *this - o; }
  Complex& operator*=(const Complex& o) { return *this = *this * o; }
  Complex& operator/=(const Complex& o) { return *this = *this / o; }

  friend Real abs(const Complex& z) { return hypot(z.re, z.im); }
  /// Principal argument in (-pi, pi].
  friend Real arg(const Complex& z) { return atan2(z.im, z.re); }

  friend Complex pow(const Complex& z, long e) {
    if (e < 0) {
      Complex one(Real(1L, z.prec()), Real(z.prec()));
      return one / pow(z, -e);
    }
    Complex result(Real(1L, z.prec()), Real(z.prec()));
    Complex base = z;
    auto n = static_cast<unsigned long>(e);
    while (n != 0) {
      if (n & 1U) result = result * base;
      n >>= 1U;
      if (n != 0) base = base * base;
    }
    return result;
  }
};

/// Root of index `n` of z with argument (Arg z + 2 pi k) / n.
inline Complex nth_root(const Complex& z, unsigned long n, unsigned long k) {
  const Precision prec = z.prec();
  if (z.is_zero()) return Complex(prec);
  const Real modulus = exp(log(abs(z)) / Real(static_cast<long>(n), prec));
  const Real theta = (arg(z) + Real::pi(prec) * Real(2L * static_cast<long>(k), prec)) /
                     Real(static_cast<long>(n), prec);
  return Complex::polar(modulus, theta);
}

}  // namespace qhgerm
