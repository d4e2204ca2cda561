#pragma once

// Cross-ratio and j-invariant of four points on the projective line, and the
// j-invariant of a binary quartic read directly off its coefficients.
// Illustrates the continuous analytic modulus of homogeneous quartics.

#include <array>
#include <cstddef>
#include <optional>

#include "qhgerm/bivar_poly.hpp"
#include "qhgerm/errors.hpp"
#include "qhgerm/gaussian.hpp"

namespace qhgerm {

/// A point of C u {infinity}; nullopt is infinity.
using ProjectivePoint = std::optional<GaussianRational>;

struct CrossRatioResult {
  GaussianRational cross_ratio;
  GaussianRational j_invariant;
};

/// 256 (l^2 - l + 1)^3 / (l^2 (l - 1)^2).
inline GaussianRational j_from_cross_ratio(const GaussianRational& l) {
  if (l.is_zero() || l == GaussianRational(1)) {
    throw Error(ErrorCode::DegenerateConfiguration, "cross-ratio 0 or 1 comes from repeated points");
  }
  const GaussianRational num = GaussianRational(256) * (l * l - l + GaussianRational(1)).pow(3);
  const GaussianRational den = l * l * (l - GaussianRational(1)).pow(2);
  return num / den;
}

/// ((z1 - z3)(z2 - z4)) / ((z2 - z3)(z1 - z4)); factors involving the point
/// at infinity cancel in pairs and are dropped.
inline CrossRatioResult cross_ratio_demo(const std::array<ProjectivePoint, 4>& z) {
  std::size_t infinities = 0;
  for (const auto& p : z) infinities += p ? 0 : 1;
  if (infinities > 1) throw Error(ErrorCode::DegenerateConfiguration, "more than one point at infinity");
  for (std::size_t a = 0; a < 4; ++a) {
    for (std::size_t b = a + 1; b < 4; ++b) {
      if (z[a] && z[b] && *z[a] == *z[b]) throw Error(ErrorCode::DegenerateConfiguration, "repeated point");
    }
  }
  auto diff = [&](std::size_t a, std::size_t b) -> std::optional<GaussianRational> {
    if (!z[a] || !z[b]) return std::nullopt;
    return *z[a] - *z[b];
  };
  GaussianRational num = 1, den = 1;
  for (const auto& f : {diff(0, 2), diff(1, 3)}) {
    if (f) num *= *f;
  }
  for (const auto& f : {diff(1, 2), diff(0, 3)}) {
    if (f) den *= *f;
  }
  const GaussianRational l = num / den;
  return {l, j_from_cross_ratio(l)};
}

/// Binary quartic a X^4 + b X^3 Y + c X^2 Y^2 + d X Y^3 + e Y^4 with
/// invariants I, J; j = 6912 I^3 / (4 I^3 - J^2). Returns nullopt when the
/// input is not a quartic form or has a repeated root (4 I^3 = J^2).
inline std::optional<GaussianRational> quartic_j_invariant(const BivarPoly& F) {
  for (const auto& [mono, c] : F.terms()) {
    if (mono.total_degree() != 4) return std::nullopt;
  }
  if (F.is_zero()) return std::nullopt;
  const GaussianRational a = F.coefficient(4, 0), b = F.coefficient(3, 1), c = F.coefficient(2, 2),
                         d = F.coefficient(1, 3), e = F.coefficient(0, 4);
  const GaussianRational I = GaussianRational(12) * a * e - GaussianRational(3) * b * d + c * c;
  const GaussianRational J = GaussianRational(72) * a * c * e + GaussianRational(9) * b * c * d -
                             GaussianRational(27) * a * d * d - GaussianRational(27) * e * b * b -
                             GaussianRational(2) * c * c * c;
  const GaussianRational disc = GaussianRational(4) * I.pow(3) - J * J;
  if (disc.is_zero()) return std::nullopt;
  return GaussianRational(6912) * I.pow(3) / disc;
}

/// Whitney's quartic X Y (Y - X)(Y - t X); its lines Y/X sit at 0, 1, t, infinity.
inline BivarPoly whitney_quartic(const GaussianRational& t) {
  const BivarPoly X = BivarPoly::x(), Y = BivarPoly::y();
  return X * Y * (Y - X) * (Y - X.scale(t));
}

}  // namespace qhgerm
