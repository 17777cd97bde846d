#pragma once

// Forward-mode jets for scalar fields of two variables, truncated at third
// order. Slots hold raw partial derivatives (no Taylor factorials), so a
// Hessian or a third derivative can be read straight out of a jet.

#include <cmath>
#include <string>

#include "powergeom/error.hpp"

namespace powergeom {

template <class T>
struct basic_jet3 {
  T f{};
  T f1{}, f2{};
  T f11{}, f12{}, f22{};
  T f111{}, f112{}, f122{}, f222{};

  friend bool operator==(const basic_jet3&, const basic_jet3&) = default;
};

using jet3 = basic_jet3<double>;

/// Outer derivatives g, g', g'', g''' of a univariate function at the inner value.
template <class T>
struct univariate_derivs {
  T g0, g1, g2, g3;
};

namespace detail {

template <class T>
void require_finite(T v, const char* what) {
  if (!std::isfinite(v)) {
    throw error(errc::non_finite, std::string(what) + " is not finite");
  }
}

}  // namespace detail

template <class T = double>
basic_jet3<T> jet_constant(T value) {
  detail::require_finite(value, "jet constant");
  basic_jet3<T> j;
  j.f = value;
  return j;
}

/// Independent variable a1 (var_index 1) or a2 (var_index 2) at `value`.
template <class T = double>
basic_jet3<T> jet_seed(int var_index, T value) {
  if (var_index != 1 && var_index != 2) {
    throw error(errc::index_out_of_range,
                "jet variable index must be 1 or 2, got " + std::to_string(var_index));
  }
  detail::require_finite(value, "jet seed value");
  basic_jet3<T> j;
  j.f = value;
  (var_index == 1 ? j.f1 : j.f2) = T(1);
  return j;
}

/// alpha * a + beta * b, slot by slot.
template <class T>
basic_jet3<T> jet_linear(const basic_jet3<T>& a, const basic_jet3<T>& b, T alpha, T beta) {
  detail::require_finite(alpha, "linear coefficient alpha");
  detail::require_finite(beta, "linear coefficient beta");
  basic_jet3<T> r;
  r.f = alpha * a.f + beta * b.f;
  r.f1 = alpha * a.f1 + beta * b.f1;
  r.f2 = alpha * a.f2 + beta * b.f2;
  r.f11 = alpha * a.f11 + beta * b.f11;
  r.f12 = alpha * a.f12 + beta * b.f12;
  r.f22 = alpha * a.f22 + beta * b.f22;
  r.f111 = alpha * a.f111 + beta * b.f111;
  r.f112 = alpha * a.f112 + beta * b.f112;
  r.f122 = alpha * a.f122 + beta * b.f122;
  r.f222 = alpha * a.f222 + beta * b.f222;
  return r;
}

/// Leibniz rule through third order.
template <class T>
basic_jet3<T> jet_mul(const basic_jet3<T>& a, const basic_jet3<T>& b) {
  basic_jet3<T> r;
  r.f = a.f * b.f;
  r.f1 = a.f1 * b.f + a.f * b.f1;
  r.f2 = a.f2 * b.f + a.f * b.f2;
  r.f11 = a.f11 * b.f + T(2) * a.f1 * b.f1 + a.f * b.f11;
  r.f12 = a.f12 * b.f + a.f1 * b.f2 + a.f2 * b.f1 + a.f * b.f12;
  r.f22 = a.f22 * b.f + T(2) * a.f2 * b.f2 + a.f * b.f22;
  r.f111 = a.f111 * b.f + T(3) * (a.f11 * b.f1 + a.f1 * b.f11) + a.f * b.f111;
  r.f112 = a.f112 * b.f + a.f11 * b.f2 + T(2) * (a.f12 * b.f1 + a.f1 * b.f12) + a.f2 * b.f11 +
           a.f * b.f112;
  r.f122 = a.f122 * b.f + a.f22 * b.f1 + T(2) * (a.f12 * b.f2 + a.f2 * b.f12) + a.f1 * b.f22 +
           a.f * b.f122;
  r.f222 = a.f222 * b.f + T(3) * (a.f22 * b.f2 + a.f2 * b.f22) + a.f * b.f222;
  return r;
}

/// Chain rule (Faa di Bruno) for g(u) through third order.
template <class T>
basic_jet3<T> jet_apply_univariate(const univariate_derivs<T>& g, const basic_jet3<T>& u) {
  detail::require_finite(g.g0, "outer derivative g0");
  detail::require_finite(g.g1, "outer derivative g1");
  detail::require_finite(g.g2, "outer derivative g2");
  detail::require_finite(g.g3, "outer derivative g3");
  basic_jet3<T> r;
  r.f = g.g0;
  r.f1 = g.g1 * u.f1;
  r.f2 = g.g1 * u.f2;
  r.f11 = g.g2 * u.f1 * u.f1 + g.g1 * u.f11;
  r.f12 = g.g2 * u.f1 * u.f2 + g.g1 * u.f12;
  r.f22 = g.g2 * u.f2 * u.f2 + g.g1 * u.f22;
  r.f111 = g.g3 * u.f1 * u.f1 * u.f1 + T(3) * g.g2 * u.f1 * u.f11 + g.g1 * u.f111;
  r.f112 = g.g3 * u.f1 * u.f1 * u.f2 + g.g2 * (u.f11 * u.f2 + T(2) * u.f1 * u.f12) + g.g1 * u.f112;
  r.f122 = g.g3 * u.f1 * u.f2 * u.f2 + g.g2 * (u.f22 * u.f1 + T(2) * u.f2 * u.f12) + g.g1 * u.f122;
  r.f222 = g.g3 * u.f2 * u.f2 * u.f2 + T(3) * g.g2 * u.f2 * u.f22 + g.g1 * u.f222;
  return r;
}

inline constexpr double default_division_guard = 1e-14;

template <class T>
basic_jet3<T> jet_reciprocal(const basic_jet3<T>& b, T guard = T(default_division_guard)) {
  using std::abs;
  if (!(abs(b.f) > guard)) {
    throw error(errc::division_by_near_zero,
                "denominator value " + std::to_string(static_cast<double>(b.f)) +
                    " is within the division guard");
  }
  const T inv = T(1) / b.f;
  const T inv2 = inv * inv;
  return jet_apply_univariate<T>({inv, -inv2, T(2) * inv2 * inv, T(-6) * inv2 * inv2}, b);
}

template <class T>
basic_jet3<T> jet_div(const basic_jet3<T>& a, const basic_jet3<T>& b,
                      T guard = T(default_division_guard)) {
  return jet_mul(a, jet_reciprocal(b, guard));
}

template <class T>
basic_jet3<T> jet_sin(const basic_jet3<T>& u) {
  using std::cos;
  using std::sin;
  const T s = sin(u.f), c = cos(u.f);
  return jet_apply_univariate<T>({s, c, -s, -c}, u);
}

template <class T>
basic_jet3<T> jet_cos(const basic_jet3<T>& u) {
  using std::cos;
  using std::sin;
  const T s = sin(u.f), c = cos(u.f);
  return jet_apply_univariate<T>({c, -s, -c, s}, u);
}

/// tan' = 1 + t^2, tan'' = 2t(1 + t^2), tan''' = 2(1 + t^2)(1 + 3t^2).
template <class T>
basic_jet3<T> jet_tan(const basic_jet3<T>& u) {
  using std::tan;
  const T t = tan(u.f);
  const T sec2 = T(1) + t * t;
  return jet_apply_univariate<T>({t, sec2, T(2) * t * sec2, T(2) * sec2 * (T(1) + T(3) * t * t)},
                                 u);
}

template <class T>
basic_jet3<T> operator+(const basic_jet3<T>& a, const basic_jet3<T>& b) {
  return jet_linear(a, b, T(1), T(1));
}

template <class T>
basic_jet3<T> operator-(const basic_jet3<T>& a, const basic_jet3<T>& b) {
  return jet_linear(a, b, T(1), T(-1));
}

template <class T>
basic_jet3<T> operator*(const basic_jet3<T>& a, const basic_jet3<T>& b) {
  return jet_mul(a, b);
}

template <class T>
basic_jet3<T> operator*(T c, const basic_jet3<T>& a) {
  return jet_linear(a, a, c, T(0));
}

template <class T>
basic_jet3<T> operator/(const basic_jet3<T>& a, const basic_jet3<T>& b) {
  return jet_div(a, b);
}

}  // namespace powergeom
