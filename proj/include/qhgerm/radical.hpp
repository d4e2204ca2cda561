#pragma once

// Roots of Gaussian rationals: exact extraction when the root lies in Q(i),
// and the RadicalScalar representation base^(1/index) on a named branch.

#include <gmpxx.h>

#include <bit>
#include <cstddef>
#include <numeric>
#include <optional>
#include <utility>
#include <vector>

#include "qhgerm/errors.hpp"
#include "qhgerm/gaussian.hpp"
#include "qhgerm/real.hpp"

namespace qhgerm {

namespace detail {

inline bool exact_integer_root(const BigInt& v, unsigned long n, BigInt& out) {
  if (v < 0) return false;
  return mpz_root(out.get_mpz_t(), v.get_mpz_t(), n) != 0;
}

inline BigInt round_to_integer(const Real& x) {
  const Rational r = round(x).to_rational();
  return r.get_num();
}

/// Number of bits needed to hold |value| with some slack.
inline Precision bits_for(const Rational& magnitude_bound) {
  const Rational abs_bound = magnitude_bound < 0 ? Rational(-magnitude_bound) : magnitude_bound;
  const std::size_t bits = mpz_sizeinbase(abs_bound.get_num().get_mpz_t(), 2);
  return static_cast<Precision>(std::max<std::size_t>(bits + 64, 96));
}

}  // namespace detail

namespace detail {

/// Data shared by the per-branch exact root tests of z^(1/n).
struct RootSetup {
  BigInt e;                          // common denominator of z
  GaussianRational scaled_target;    // e^n z, in Z[i]
  Rational modulus_sq;               // |e root|^2
  Precision prec = 96;
};

inline std::optional<RootSetup> root_setup(const GaussianRational& z, unsigned long n, unsigned long extra_bits) {
  // The norm of the root is the n-th root of the norm of z.
  const Rational norm = z.norm();
  BigInt num_root, den_root;
  if (!exact_integer_root(norm.get_num(), n, num_root) || !exact_integer_root(norm.get_den(), n, den_root)) {
    return std::nullopt;
  }
  // With e the common denominator, e^n z lies in Z[i], so e * root is a
  // Gaussian integer (Z[i] is integrally closed).
  RootSetup out;
  mpz_lcm(out.e.get_mpz_t(), z.re().get_den_mpz_t(), z.im().get_den_mpz_t());
  out.scaled_target = z * GaussianRational(Rational(out.e)).pow(static_cast<long>(n));
  out.modulus_sq = Rational(out.e * out.e) * Rational(num_root) / Rational(den_root);
  out.prec = bits_for(out.modulus_sq) + static_cast<Precision>(extra_bits);
  return out;
}

/// Rounds e * approx to a Gaussian integer and accepts it when it is an exact
/// root. The approximation must sit on that integer (it carries about 64
/// fractional bits): a neighbouring branch of a perfect power can round to
/// the same integer without being equal to it.
inline std::optional<GaussianRational> accept_root(const RootSetup& s, unsigned long n, const Complex& scaled_approx) {
  const GaussianRational candidate(Rational(round_to_integer(scaled_approx.re)),
                                   Rational(round_to_integer(scaled_approx.im)));
  const Precision prec = scaled_approx.prec();
  if (abs(scaled_approx - Complex(candidate, prec)) > Real::exp2(-32, prec)) return std::nullopt;
  if (candidate.norm() != s.modulus_sq) return std::nullopt;  // cheap filter before the power
  if (candidate.pow(static_cast<long>(n)) != s.scaled_target) return std::nullopt;
  return candidate / GaussianRational(Rational(s.e));
}

}  // namespace detail

/// The root of index n on branch k, when it lies in Q(i). Branch k means
/// argument (Arg z + 2 pi k) / n with the principal argument in (-pi, pi].
inline std::optional<GaussianRational> exact_root(const GaussianRational& z, unsigned long n, unsigned long k) {
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "root index must be positive");
  if (k >= n) throw Error(ErrorCode::BranchOutOfRange, "branch index out of range");
  if (n == 1 || z.is_zero()) return z;
  const auto setup = detail::root_setup(z, n, 0);
  if (!setup) return std::nullopt;
  const Complex approx = nth_root(Complex(z, setup->prec), n, k) * Real(Rational(setup->e), setup->prec);
  return detail::accept_root(*setup, n, approx);
}

/// Branch indices of z^(1/n) whose value lies in Q(i), in ascending order.
inline std::vector<unsigned long> exact_root_branches(const GaussianRational& z, unsigned long n) {
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "root index must be positive");
  if (n == 1 || z.is_zero()) return {0};
  std::vector<unsigned long> out;
  // Walk the branches by repeated multiplication with exp(2 pi i / n); the
  // extra bits absorb the accumulated rounding.
  const auto setup = detail::root_setup(z, n, std::bit_width(n) + 16);
  if (!setup) return out;
  const Precision prec = setup->prec;
  const Complex step = Complex::polar(Real(1L, prec), Real::pi(prec) * Real(2L, prec) / Real(static_cast<long>(n), prec));
  Complex current = nth_root(Complex(z, prec), n, 0) * Real(Rational(setup->e), prec);
  // Exact roots differ by powers of i, so at most four branches qualify.
  for (unsigned long k = 0; k < n && out.size() < 4; ++k) {
    if (detail::accept_root(*setup, n, current)) out.push_back(k);
    current = current * step;
  }
  return out;
}

/// base^(1/index) on a fixed branch, with an approximation at `prec` bits.
struct RadicalScalar {
  GaussianRational base = 1;
  unsigned long index = 1;
  unsigned long branch = 0;
  Complex approx{Real(1L, 128), Real(128)};

  Precision prec() const { return approx.prec(); }
  bool is_exact() const { return index == 1; }
  std::optional<GaussianRational> exact() const {
    if (index == 1) return base;
    return std::nullopt;
  }
  /// Fresh approximation from the exact data.
  Complex approx_at(Precision p) const {
    if (index == 1) return Complex(base, p);
    return nth_root(Complex(base, p), index, branch);
  }
  RadicalScalar with_prec(Precision p) const {
    RadicalScalar out = *this;
    out.approx = approx_at(p);
    return out;
  }
};

/// Exact scalar as a radical of index 1.
inline RadicalScalar make_exact(const GaussianRational& value, Precision prec) {
  return {value, 1, 0, Complex(value, prec)};
}

/// base^(1/index) on `branch`, collapsed to index 1 when that root is in Q(i).
inline RadicalScalar make_radical(const GaussianRational& base, unsigned long index, unsigned long branch,
                                  Precision prec) {
  if (index == 0) throw Error(ErrorCode::InvalidArgument, "root index must be positive");
  if (branch >= index) throw Error(ErrorCode::BranchOutOfRange, "branch index out of range");
  if (base.is_zero()) return make_exact(base, prec);
  if (auto root = exact_root(base, index, branch)) return make_exact(*root, prec);
  return {base, index, branch, nth_root(Complex(base, prec), index, branch)};
}

/// Identifies which branch of base^(1/index) the approximation `value` is.
inline unsigned long branch_of(const GaussianRational& base, unsigned long index, const Complex& value) {
  if (index == 1) return 0;
  const Precision prec = value.prec();
  const Real two_pi = Real::pi(prec) * Real(2L, prec);
  const Real arg_base = arg(Complex(base, prec));
  // index * arg(value) = Arg(base) + 2 pi k  (mod 2 pi index)
  const Real k_real = (Real(static_cast<long>(index), prec) * arg(value) - arg_base) / two_pi;
  const BigInt k = detail::round_to_integer(k_real);
  BigInt r;
  mpz_fdiv_r_ui(r.get_mpz_t(), k.get_mpz_t(), index);
  return r.get_ui();
}

/// Radical with known exact power base (value^index == base) whose branch is
/// read off the approximation.
inline RadicalScalar radical_from_approx(const GaussianRational& base, unsigned long index, const Complex& value) {
  const unsigned long k = branch_of(base, index, value);
  return make_radical(base, index, k, value.prec());
}

/// prod_t r_t^(e_t) as a single radical over the lcm of the indices.
inline RadicalScalar radical_product(const std::vector<std::pair<RadicalScalar, long>>& factors, Precision prec) {
  unsigned long L = 1;
  for (const auto& [r, e] : factors) L = std::lcm(L, r.index);
  GaussianRational base = 1;
  Complex value(Real(1L, prec), Real(prec));
  for (const auto& [r, e] : factors) {
    base *= r.base.pow(e * static_cast<long>(L / r.index));
    value = value * pow(r.approx_at(prec), e);
  }
  return radical_from_approx(base, L, value);
}

/// c * r for an exact c.
inline RadicalScalar scale_radical(const GaussianRational& c, const RadicalScalar& r, Precision prec) {
  if (c.is_zero()) return make_exact(0, prec);
  const GaussianRational base = c.pow(static_cast<long>(r.index)) * r.base;
  return radical_from_approx(base, r.index, Complex(c, prec) * r.approx_at(prec));
}

}  // namespace qhgerm
