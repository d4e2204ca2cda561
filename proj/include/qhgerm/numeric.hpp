#pragma once

// Floating-point companion to the exact engine: Aberth-Ehrlich root finding
// at arbitrary precision, clustering of approximate roots into multisets,
// brute-force root matchers (the independent oracle), and bivariate
// evaluation with a propagated error bound.

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qhgerm/bivar_poly.hpp"
#include "qhgerm/errors.hpp"
#include "qhgerm/gaussian.hpp"
#include "qhgerm/real.hpp"
#include "qhgerm/unipoly.hpp"

namespace qhgerm {

/// A complex value with a conservative absolute error bound.
struct ComplexApprox {
  Complex value;
  Real err;

  ComplexApprox() : value(128), err(128) {}
  ComplexApprox(Complex v, Real e) : value(std::move(v)), err(std::move(e)) {}
  /// Exact point (zero error).
  explicit ComplexApprox(Complex v) : value(std::move(v)), err(value.prec()) {}

  Precision prec() const { return value.prec(); }
};

struct RootCluster {
  ComplexApprox center;
  unsigned multiplicity = 0;
  Real radius;
};

/// Thrown when Aberth iteration hits its cap; carries the best iterate.
class NonConvergenceError : public Error {
 public:
  NonConvergenceError(std::vector<ComplexApprox> best, const std::string& msg)
      : Error(ErrorCode::NonConvergence, msg), best_(std::move(best)) {}
  const std::vector<ComplexApprox>& best_iterate() const { return best_; }

 private:
  std::vector<ComplexApprox> best_;
};

namespace detail {

struct PolyEval {
  Complex value;
  Complex derivative;
};

/// Horner for P and P' together; coefficients ascending.
inline PolyEval horner2(const std::vector<Complex>& a, const Complex& z) {
  const Precision prec = z.prec();
  Complex p = a.back();
  Complex dp(prec);
  for (std::size_t k = a.size() - 1; k-- > 0;) {
    dp = dp * z + p;
    p = p * z + a[k];
  }
  return {std::move(p), std::move(dp)};
}

inline Complex horner(const std::vector<Complex>& a, const Complex& z) {
  Complex p = a.back();
  for (std::size_t k = a.size() - 1; k-- > 0;) p = p * z + a[k];
  return p;
}

}  // namespace detail

struct RootFinderOptions {
  unsigned max_iterations = 2000;
  /// Stop once the largest correction has not shrunk by 10% for this many rounds.
  unsigned stall_window = 30;
};

/// Simultaneous Aberth-Ehrlich iteration on ascending coefficients. Zero
/// roots are split off exactly first. Every returned root carries an
/// inclusion-style error bound.
inline std::vector<ComplexApprox> find_roots(std::vector<Complex> coeffs, Precision prec,
                                             const RootFinderOptions& opts = {}) {
  while (!coeffs.empty() && coeffs.back().is_zero()) coeffs.pop_back();
  if (coeffs.size() < 2) throw Error(ErrorCode::InvalidArgument, "root finding needs degree >= 1");
  for (auto& c : coeffs) c = c.with_prec(prec);

  std::vector<ComplexApprox> out;
  std::size_t zeros = 0;
  while (coeffs[zeros].is_zero()) ++zeros;
  for (std::size_t t = 0; t < zeros; ++t) out.emplace_back(Complex(prec));
  coeffs.erase(coeffs.begin(), coeffs.begin() + static_cast<std::ptrdiff_t>(zeros));
  const std::size_t n = coeffs.size() - 1;
  if (n == 0) return out;

  const Real lead_abs = abs(coeffs.back());
  if (n == 1) {
    out.emplace_back(-coeffs[0] / coeffs[1], Real::exp2(-static_cast<long>(prec) + 2, prec) * abs(coeffs[0] / coeffs[1]));
    return out;
  }

  // Cauchy bound 1 + max |a_k / a_n| for the initial circle.
  Real radius(1L, prec);
  for (std::size_t k = 0; k < n; ++k) radius = max(radius, Real(1L, prec) + abs(coeffs[k]) / lead_abs);
  std::vector<Complex> z;
  z.reserve(n);
  const Real two_pi = Real::pi(prec) * Real(2L, prec);
  for (std::size_t k = 0; k < n; ++k) {
    const Real theta = two_pi * Real(static_cast<long>(k), prec) / Real(static_cast<long>(n), prec) + Real(0.4, prec);
    z.push_back(Complex::polar(radius, theta));
  }

  const Real eps = Real::exp2(-static_cast<long>(prec) + 4, prec);
  // Stagnation only counts once the iterates are already close; far from the
  // roots the steps stay of constant relative size for a while.
  const Real stall_floor = Real::exp2(-16, prec);
  Real best_step = Real::infinity(prec);
  unsigned since_improvement = 0;
  bool done = false;
  unsigned iter = 0;
  for (; iter < opts.max_iterations && !done; ++iter) {
    Real max_rel_step(prec);
    for (std::size_t k = 0; k < n; ++k) {
      auto [p, dp] = detail::horner2(coeffs, z[k]);
      if (p.is_zero()) continue;
      const Complex ratio = p / dp;
      Complex sum(prec);
      for (std::size_t j = 0; j < n; ++j) {
        if (j != k) sum += Complex(Real(1L, prec), Real(prec)) / (z[k] - z[j]);
      }
      const Complex w = ratio / (Complex(Real(1L, prec), Real(prec)) - ratio * sum);
      if (!w.re.is_finite() || !w.im.is_finite()) continue;
      z[k] -= w;
      max_rel_step = max(max_rel_step, abs(w) / max(Real(1L, prec), abs(z[k])));
    }
    if (max_rel_step <= eps) {
      done = true;
    } else if (max_rel_step < best_step * Real(0.9, prec)) {
      best_step = max_rel_step;
      since_improvement = 0;
    } else if (++since_improvement >= opts.stall_window && max_rel_step < stall_floor) {
      done = true;  // stagnated at the noise floor (typical near multiple roots)
    }
  }

  // Weierstrass-type inclusion radius n |P(z_k)| / (|a_n| prod |z_k - z_j|),
  // kept no smaller than the residual itself and the rounding floor. |P(z_k)|
  // is bounded for the unrounded polynomial: coefficient conversion and Horner
  // rounding add at most (2n + 2) u sum |a_j| |z_k|^j, with u the unit roundoff.
  // Overlapping disks then form components holding as many true roots as disks.
  std::vector<Complex> abs_coeffs;
  for (const auto& c : coeffs) abs_coeffs.emplace_back(abs(c), Real(prec));
  const Real rounding = Real::exp2(-static_cast<long>(prec) + 1, prec) * Real(static_cast<long>(2 * n + 2), prec);
  std::vector<ComplexApprox> roots;
  for (std::size_t k = 0; k < n; ++k) {
    const Real magnitude = detail::horner(abs_coeffs, Complex(abs(z[k]), Real(prec))).re;
    const Real residual = abs(detail::horner(coeffs, z[k])) + rounding * magnitude;
    Real prod = lead_abs;
    for (std::size_t j = 0; j < n; ++j) {
      if (j != k) prod *= abs(z[k] - z[j]);
    }
    Real bound = prod.is_zero() ? Real::infinity(prec) : Real(static_cast<long>(n), prec) * residual / prod;
    bound = max(bound, residual);
    bound = max(bound, eps * max(Real(1L, prec), abs(z[k])));
    roots.emplace_back(z[k], bound);
  }
  if (!done) throw NonConvergenceError(std::move(roots), "Aberth iteration did not converge");
  out.insert(out.end(), std::make_move_iterator(roots.begin()), std::make_move_iterator(roots.end()));
  return out;
}

inline std::vector<Complex> to_complex_coeffs(const UniPoly& p, Precision prec) {
  std::vector<Complex> out;
  out.reserve(p.ascending().size());
  for (const auto& c : p.ascending()) out.emplace_back(c, prec);
  return out;
}

inline std::vector<ComplexApprox> find_roots(const UniPoly& p, Precision prec, const RootFinderOptions& opts = {}) {
  if (p.degree() < 1) throw Error(ErrorCode::InvalidArgument, "root finding needs degree >= 1");
  return find_roots(to_complex_coeffs(p, prec), prec, opts);
}

/// Single-linkage clustering at distance tol; approximations whose error
/// disks overlap are linked too, so a multiple root resolved too coarsely
/// shows up as one wide cluster. The regime is rejected as ambiguous when
/// some cluster is wider than tol/2 or two clusters come closer than 2 tol.
inline std::vector<RootCluster> cluster_roots(const std::vector<ComplexApprox>& roots, double tol) {
  if (!(tol > 0)) throw Error(ErrorCode::InvalidArgument, "clustering tolerance must be positive");
  const std::size_t n = roots.size();
  if (n == 0) return {};
  Precision prec = 53;
  for (const auto& r : roots) prec = std::max(prec, r.prec());
  const Real tol_r(tol, prec);

  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::vector<std::vector<Real>> dist(n, std::vector<Real>(n, Real(prec)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      dist[i][j] = dist[j][i] = abs(roots[i].value - roots[j].value);
      if (dist[i][j] <= tol_r || dist[i][j] <= roots[i].err + roots[j].err) parent[find(i)] = find(j);
    }
  }

  std::vector<std::size_t> label(n);
  std::vector<std::size_t> reps;
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t r = find(i);
    auto it = std::find(reps.begin(), reps.end(), r);
    label[i] = static_cast<std::size_t>(it - reps.begin());
    if (it == reps.end()) reps.push_back(r);
  }

  const Real half_tol = tol_r / Real(2L, prec);
  const Real two_tol = tol_r * Real(2L, prec);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const bool same = label[i] == label[j];
      if ((same && dist[i][j] > half_tol) || (!same && dist[i][j] < two_tol)) {
        throw Error(ErrorCode::AmbiguousClustering,
                    same ? "cluster diameter exceeds tol/2" : "cluster gap below 2*tol");
      }
    }
  }

  std::vector<RootCluster> out(reps.size());
  std::vector<Complex> sums(reps.size(), Complex(prec));
  std::vector<Real> errs(reps.size(), Real(prec));
  for (std::size_t i = 0; i < n; ++i) {
    sums[label[i]] += roots[i].value;
    errs[label[i]] = max(errs[label[i]], roots[i].err);
    ++out[label[i]].multiplicity;
  }
  for (std::size_t c = 0; c < out.size(); ++c) {
    const Real count(static_cast<long>(out[c].multiplicity), prec);
    out[c].center = ComplexApprox(sums[c] / count, Real(prec));
    out[c].radius = Real(prec);
    for (std::size_t i = 0; i < n; ++i) {
      if (label[i] == c) out[c].radius = max(out[c].radius, abs(roots[i].value - out[c].center.value));
    }
    out[c].center.err = out[c].radius + errs[c];
  }
  return out;
}

/// Roots of p grouped into clusters, doubling the precision (up to
/// max_prec) while the clustering is ambiguous or the iteration stalls.
inline std::vector<RootCluster> root_multiset(const UniPoly& p, Precision prec, double tol, Precision max_prec = 1024) {
  for (Precision bits = prec;; bits *= 2) {
    try {
      return cluster_roots(find_roots(p, bits), tol);
    } catch (const Error& e) {
      const bool retry = e.code() == ErrorCode::AmbiguousClustering || e.code() == ErrorCode::NonConvergence;
      if (!retry || bits * 2 > max_prec) throw;
    }
  }
}

enum class MatchMode { Linear, Affine };

/// Numeric match certificate: z -> a z (+ b) carries A onto B, with
/// pairs[t] = (index in A, index in B).
struct NumericMatch {
  Complex a;
  std::optional<Complex> b;
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
};

namespace detail {

inline bool near(const Complex& u, const Complex& v, double tol) {
  const Precision prec = std::max(u.prec(), v.prec());
  return abs(u - v) <= Real(tol, prec) * max(Real(1L, prec), abs(v));
}

/// Greedy multiset matching of a*A onto B (clusters are well separated, so
/// greedy choice is safe).
inline std::optional<std::vector<std::pair<std::size_t, std::size_t>>> match_scaled(
    const std::vector<Complex>& A, const std::vector<unsigned>& mA, const std::vector<Complex>& B,
    const std::vector<unsigned>& mB, const Complex& a, double tol) {
  std::vector<bool> used(B.size(), false);
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < A.size(); ++i) {
    const Complex image = a * A[i];
    bool found = false;
    for (std::size_t j = 0; j < B.size() && !found; ++j) {
      if (used[j] || mA[i] != mB[j] || !near(image, B[j], tol)) continue;
      used[j] = true;
      pairs.emplace_back(i, j);
      found = true;
    }
    if (!found) return std::nullopt;
  }
  return pairs;
}

inline Complex weighted_centroid(const std::vector<RootCluster>& clusters, Precision prec) {
  Complex sum(prec);
  long total = 0;
  for (const auto& c : clusters) {
    sum += c.center.value * Real(static_cast<long>(c.multiplicity), prec);
    total += c.multiplicity;
  }
  return sum / Real(total, prec);
}

inline Precision cluster_prec(const std::vector<RootCluster>& clusters) {
  Precision prec = 53;
  for (const auto& c : clusters) prec = std::max(prec, c.center.prec());
  return prec;
}

}  // namespace detail

/// Brute-force search for a (and b in affine mode) with a*A + b = B as
/// multisets. Candidates come from pairing one fixed nonzero cluster of A
/// with every nonzero cluster of B of equal multiplicity.
inline std::optional<NumericMatch> numeric_match(MatchMode mode, const std::vector<RootCluster>& A,
                                                 const std::vector<RootCluster>& B, double tol) {
  auto total = [](const std::vector<RootCluster>& v) {
    unsigned s = 0;
    for (const auto& c : v) s += c.multiplicity;
    return s;
  };
  if (total(A) != total(B)) return std::nullopt;
  const Precision prec = std::max(detail::cluster_prec(A), detail::cluster_prec(B));

  std::vector<Complex> ca, cb;
  std::vector<unsigned> ma, mb;
  for (const auto& c : A) {
    ca.push_back(c.center.value.with_prec(prec));
    ma.push_back(c.multiplicity);
  }
  for (const auto& c : B) {
    cb.push_back(c.center.value.with_prec(prec));
    mb.push_back(c.multiplicity);
  }
  Complex cA(prec), cB(prec);
  if (mode == MatchMode::Affine) {
    cA = detail::weighted_centroid(A, prec);
    cB = detail::weighted_centroid(B, prec);
    for (auto& z : ca) z -= cA;
    for (auto& z : cb) z -= cB;
  }

  const Real tol_r(tol, prec);
  auto is_zero = [&](const Complex& z) { return abs(z) <= tol_r; };
  auto finish = [&](const Complex& a, std::vector<std::pair<std::size_t, std::size_t>> pairs) {
    NumericMatch m{a, std::nullopt, std::move(pairs)};
    if (mode == MatchMode::Affine) m.b = cB - a * cA;
    return m;
  };

  std::optional<std::size_t> pivot;
  for (std::size_t i = 0; i < ca.size(); ++i) {
    if (!is_zero(ca[i])) {
      pivot = i;
      break;
    }
  }
  const Complex one(Real(1L, prec), Real(prec));
  if (!pivot) {
    // Every root of A sits at the origin: any a works if B agrees.
    if (auto pairs = detail::match_scaled(ca, ma, cb, mb, one, tol)) return finish(one, std::move(*pairs));
    return std::nullopt;
  }
  for (std::size_t j = 0; j < cb.size(); ++j) {
    if (mb[j] != ma[*pivot] || is_zero(cb[j])) continue;
    const Complex a = cb[j] / ca[*pivot];
    if (auto pairs = detail::match_scaled(ca, ma, cb, mb, a, tol)) return finish(a, std::move(*pairs));
  }
  return std::nullopt;
}

/// P(x, y) with error bound: rounding (u * ops * sum |terms|) plus the
/// majorant perturbation from the input errors.
inline ComplexApprox eval_bivar(const BivarPoly& P, const ComplexApprox& x, const ComplexApprox& y) {
  const Precision prec = std::max(x.prec(), y.prec());
  unsigned max_i = 0, max_j = 0;
  for (const auto& [mono, c] : P.terms()) {
    max_i = std::max(max_i, mono.i);
    max_j = std::max(max_j, mono.j);
  }
  auto powers = [prec](const Complex& z, unsigned n) {
    std::vector<Complex> out{Complex(Real(1L, prec), Real(prec))};
    for (unsigned k = 1; k <= n; ++k) out.push_back(out.back() * z);
    return out;
  };
  auto real_powers = [prec](const Real& r, unsigned n) {
    std::vector<Real> out{Real(1L, prec)};
    for (unsigned k = 1; k <= n; ++k) out.push_back(out.back() * r);
    return out;
  };
  const auto xp = powers(x.value.with_prec(prec), max_i);
  const auto yp = powers(y.value.with_prec(prec), max_j);
  const Real ax = abs(x.value), ay = abs(y.value);
  const auto axp = real_powers(ax, max_i);
  const auto ayp = real_powers(ay, max_j);
  const auto bxp = real_powers(ax + x.err, max_i);
  const auto byp = real_powers(ay + y.err, max_j);

  Complex acc(prec);
  Real abs_sum(prec);
  Real perturb(prec);
  for (const auto& [mono, c] : P.terms()) {
    const Complex coeff(c, prec);
    const Complex term = coeff * xp[mono.i] * yp[mono.j];
    acc += term;
    const Real ac = abs(coeff);
    abs_sum += ac * axp[mono.i] * ayp[mono.j];
    perturb += ac * (bxp[mono.i] * byp[mono.j] - axp[mono.i] * ayp[mono.j]);
  }
  const long ops = 4L * (static_cast<long>(max_i + max_j) + 4) + static_cast<long>(P.size());
  const Real u = Real::exp2(1 - static_cast<long>(prec), prec);
  Real err = u * Real(ops, prec) * abs_sum + abs(perturb);
  return {std::move(acc), std::move(err)};
}

}  // namespace qhgerm
