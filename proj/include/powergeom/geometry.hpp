#pragma once

// Hessian ("fluctuation") geometry of a two-parameter scalar field: metric
// g_ij = S_ij, its determinant, and the scalar curvature. Everything is read
// off a single third-order jet of S.

#include <algorithm>
#include <array>
#include <cmath>
#include <concepts>
#include <string>

#include "powergeom/error.hpp"
#include "powergeom/jet.hpp"

namespace powergeom {

/// Anything that maps (a1, a2) in radians to a jet of the field.
template <class F>
concept jet_field = requires(const F& f, double a1, double a2) {
  { f(a1, a2) } -> std::convertible_to<jet3>;
};

struct point2 {
  double a1 = 0.0;
  double a2 = 0.0;

  friend bool operator==(const point2&, const point2&) = default;
};

struct metric2 {
  double g11 = 0.0;
  double g12 = 0.0;
  double g22 = 0.0;
  point2 at;

  friend bool operator==(const metric2&, const metric2&) = default;
};

inline metric2 metric_from_jet(const jet3& s, point2 at = {}) { return {s.f11, s.f12, s.f22, at}; }

template <jet_field F>
metric2 hessian_metric(const F& field, point2 at) {
  return metric_from_jet(field(at.a1, at.a2), at);
}

inline double metric_determinant(const metric2& m) { return m.g11 * m.g22 - m.g12 * m.g12; }

inline constexpr double default_degeneracy_rel = 1e-10;

/// |det| at or below this counts as degenerate. Relative to the squared
/// largest metric entry, since det is quadratic in the field scale.
inline double degeneracy_tolerance(const metric2& m, double rel = default_degeneracy_rel) {
  const double norm = std::max({std::abs(m.g11), std::abs(m.g12), std::abs(m.g22)});
  return rel * std::max(1.0, norm * norm);
}

inline bool is_degenerate(const metric2& m, double rel = default_degeneracy_rel) {
  return !(std::abs(metric_determinant(m)) > degeneracy_tolerance(m, rel));
}

namespace detail {

inline double checked_det(const jet3& s, double rel) {
  const metric2 m = metric_from_jet(s);
  const double det = metric_determinant(m);
  if (!(std::abs(det) > degeneracy_tolerance(m, rel))) {
    throw error(errc::degenerate_metric,
                "metric determinant " + std::to_string(det) + " is degenerate; curvature undefined");
  }
  return det;
}

}  // namespace detail

/// Closed-form scalar curvature of a Hessian metric:
///   R = -1/2 det^-2 (S22 S111 S122 + S12 S112 S122 + S11 S112 S222
///                    - S12 S111 S222 - S11 S122^2 - S22 S112^2)
/// i.e. -det[[S11,S12,S22],[S111,S112,S122],[S112,S122,S222]] / (2 det^2).
inline double scalar_curvature_closed(const jet3& s, double rel = default_degeneracy_rel) {
  const double det = detail::checked_det(s, rel);
  const double bracket = s.f22 * s.f111 * s.f122 + s.f12 * s.f112 * s.f122 +
                         s.f11 * s.f112 * s.f222 - s.f12 * s.f111 * s.f222 -
                         s.f11 * s.f122 * s.f122 - s.f22 * s.f112 * s.f112;
  return -0.5 * bracket / (det * det);
}

/// The same bracket with +S12 S111 S222, as it appears in the published
/// closed form. Kept for the verification report only; it does not agree
/// with the Christoffel route or with the published curvature tables.
inline double scalar_curvature_as_printed(const jet3& s, double rel = default_degeneracy_rel) {
  const double det = detail::checked_det(s, rel);
  const double bracket = s.f22 * s.f111 * s.f122 + s.f12 * s.f112 * s.f122 +
                         s.f11 * s.f112 * s.f222 + s.f12 * s.f111 * s.f222 -
                         s.f11 * s.f122 * s.f122 - s.f22 * s.f112 * s.f112;
  return -0.5 * bracket / (det * det);
}

/// Independent route: Christoffel symbols of the first kind
/// Gamma_{k,ij} = S_ijk / 2, then R_1212, then R = 2 R_1212 / det.
/// The second-derivative part of R_1212 is a combination of fourth
/// derivatives of S that cancels identically for a Hessian metric.
inline double scalar_curvature_oracle(const jet3& s, double rel = default_degeneracy_rel) {
  const double det = detail::checked_det(s, rel);

  // third[i][j][k] = S_{ijk}, indices 0/1 for a1/a2
  double third[2][2][2];
  third[0][0][0] = s.f111;
  third[0][0][1] = third[0][1][0] = third[1][0][0] = s.f112;
  third[0][1][1] = third[1][0][1] = third[1][1][0] = s.f122;
  third[1][1][1] = s.f222;

  double first_kind[2][2][2];  // [k][i][j]
  for (int k = 0; k < 2; ++k)
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) first_kind[k][i][j] = 0.5 * third[i][j][k];

  const double inv[2][2] = {{s.f22 / det, -s.f12 / det}, {-s.f12 / det, s.f11 / det}};
  double second_kind[2][2][2];  // [m][i][j] = g^{mk} Gamma_{k,ij}
  for (int m = 0; m < 2; ++m)
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        second_kind[m][i][j] = inv[m][0] * first_kind[0][i][j] + inv[m][1] * first_kind[1][i][j];

  // R_{ijkl} = Gamma_{n,jk} Gamma^n_{il} - Gamma_{n,jl} Gamma^n_{ik} at (i,j,k,l) = (1,2,1,2)
  constexpr int i = 0, j = 1, k = 0, l = 1;
  double r1212 = 0.0;
  for (int n = 0; n < 2; ++n) {
    r1212 += first_kind[n][j][k] * second_kind[n][i][l] - first_kind[n][j][l] * second_kind[n][i][k];
  }
  return 2.0 * r1212 / det;
}

template <jet_field F>
double scalar_curvature_closed(const F& field, point2 at, double rel = default_degeneracy_rel) {
  return scalar_curvature_closed(field(at.a1, at.a2), rel);
}

template <jet_field F>
double scalar_curvature_oracle(const F& field, point2 at, double rel = default_degeneracy_rel) {
  return scalar_curvature_oracle(field(at.a1, at.a2), rel);
}

}  // namespace powergeom
