#pragma once

// Published closed forms of the metric components, determinant and scalar
// curvature of each flow surface, written as
//   prefactor * (sum of numerator tables) / (sum of denominator tables).

#include <cmath>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "powergeom/error.hpp"
#include "powergeom/power_models.hpp"
#include "powergeom/published_tables.hpp"
#include "powergeom/trig_polynomial.hpp"

namespace powergeom::published {

enum class quantity_kind { metric11, metric12, metric22, determinant, curvature };

/// sign * (num/den) * c1^p1 * c2^p2 * V^pv * R0^pr, exactly as displayed.
struct prefactor {
  int sign = 1;
  int num = 1;
  int den = 1;
  int pow_c1 = 0;
  int pow_c2 = 0;
  int pow_v = 0;
  int pow_r0 = 0;
};

struct quantity {
  std::string_view id;
  flow_kind flow;
  quantity_kind what;
  prefactor pre;
  std::vector<std::string_view> numerators;
  std::vector<std::string_view> denominators;
};

inline const std::vector<quantity>& quantities() {
  using fk = flow_kind;
  using qk = quantity_kind;
  static const std::vector<quantity> all{
      // real flow
      {"METRIC_R_11", fk::real, qk::metric11, {1, 2, 1, 0, 3, 2, -1}, {"n^R_{11}"}, {"r^R_{11}"}},
      {"METRIC_R_12", fk::real, qk::metric12, {-1, 2, 1, 2, 2, 2, -1}, {"n^R_{12}"}, {"r^R_{12}"}},
      {"METRIC_R_22", fk::real, qk::metric22, {1, 2, 1, 3, 0, 2, -1}, {"n^R_{22}"}, {"r^R_{22}"}},
      {"DET_R", fk::real, qk::determinant, {1, 8, 1, 3, 3, 4, -2}, {"n^R_g"}, {"r^R_g"}},
      {"CURV_R", fk::real, qk::curvature, {1, 1, 4, -2, -2, -2, -1}, {"n^R_R"}, {"r^R_R"}},
      // imaginary flow
      {"METRIC_I_11", fk::imaginary, qk::metric11, {-1, 2, 1, 0, 2, 2, -1}, {"n^I_{11}"}, {"r^I_{11}"}},
      {"METRIC_I_12", fk::imaginary, qk::metric12, {1, 2, 1, 2, 2, 2, -1}, {"n^I_{12}"}, {"r^I_{12}"}},
      {"METRIC_I_22", fk::imaginary, qk::metric22, {-1, 2, 1, 2, 0, 2, -1}, {"n^I_{22}"}, {"r^I_{22}"}},
      {"DET_I", fk::imaginary, qk::determinant, {-1, 1, 1, 3, 3, 4, -2}, {"n^I_g"}, {"r^I_g"}},
      {"CURV_I", fk::imaginary, qk::curvature, {-1, 1, 2, -2, -2, -2, 1},
       {"n^{(1)I}_R", "n^{(2)I}_R"}, {"r^I_R"}},
      // complex flow
      {"METRIC_C_11", fk::complex, qk::metric11, {1, 2, 1, 0, 2, 2, -1}, {"n^C_{11}"}, {"r^C_{11}"}},
      {"METRIC_C_12", fk::complex, qk::metric12, {-1, 2, 1, 1, 1, 2, -1}, {"n^C_{12}"}, {"r^C_{12}"}},
      {"METRIC_C_22", fk::complex, qk::metric22, {1, 2, 1, 2, 0, 2, -1}, {"n^C_{22}"}, {"r^C_{22}"}},
      {"DET_C", fk::complex, qk::determinant, {-1, 4, 1, 2, 2, 4, -2}, {"n^C_g"}, {"r^C_g"}},
      {"CURV_C", fk::complex, qk::curvature, {1, 1, 4, -2, -2, -2, 1},
       {"n^{(1)C}_R", "n^{(2)C}_R", "n^{(3)C}_R", "n^{(4)C}_R"},
       {"r^{(1)C}_R", "r^{(2)C}_R", "r^{(3)C}_R"}},
  };
  return all;
}

inline const quantity& find_quantity(std::string_view id) {
  for (const auto& q : quantities()) {
    if (q.id == id) return q;
  }
  throw error(errc::parse_error, "unknown quantity id " + std::string(id));
}

inline std::string_view table_latex(std::string_view name) {
  for (const auto& t : tables) {
    if (t.name == name) return t.latex;
  }
  throw error(errc::parse_error, "unknown table " + std::string(name));
}

/// Parsed table under a given exponent reading. Parsed on every call; cache
/// the result via `compiled_quantity` for repeated evaluation.
inline trig_polynomial table(std::string_view name,
                             exponent_reading reading = exponent_reading::multi_digit) {
  return parse_trig_polynomial(table_latex(name), reading);
}

struct compiled_quantity {
  const quantity* source = nullptr;
  exponent_reading reading = exponent_reading::multi_digit;
  std::vector<trig_polynomial> numerators;
  std::vector<trig_polynomial> denominators;
  double denominator_mass = 0.0;

  /// Unbraced exponents met in any of the tables, tagged by table name.
  std::vector<std::pair<std::string_view, exponent_repair>> repairs() const {
    std::vector<std::pair<std::string_view, exponent_repair>> out;
    auto collect = [&](std::span<const std::string_view> names,
                       const std::vector<trig_polynomial>& polys) {
      for (std::size_t i = 0; i < names.size(); ++i)
        for (const auto& r : polys[i].repairs) out.emplace_back(names[i], r);
    };
    collect(source->numerators, numerators);
    collect(source->denominators, denominators);
    return out;
  }
};

inline compiled_quantity compile(const quantity& q,
                                 exponent_reading reading = exponent_reading::multi_digit) {
  compiled_quantity c;
  c.source = &q;
  c.reading = reading;
  for (auto name : q.numerators) c.numerators.push_back(table(name, reading));
  for (auto name : q.denominators) {
    c.denominators.push_back(table(name, reading));
    c.denominator_mass += coefficient_mass(c.denominators.back());
  }
  return c;
}

inline constexpr double default_denominator_rel = 1e-12;

inline double prefactor_value(const prefactor& p, const trig_values& t, double v, double r0) {
  return p.sign * (static_cast<double>(p.num) / p.den) * std::pow(t.c1, p.pow_c1) *
         std::pow(t.c2, p.pow_c2) * std::pow(v, p.pow_v) * std::pow(r0, p.pow_r0);
}

/// prefactor * sum(numerators) / sum(denominators) at (a1, a2).
inline double reconstruct(const compiled_quantity& c, double a1, double a2, double v = 1.0,
                          double r0 = 1.0, double den_rel = default_denominator_rel) {
  const trig_values t = trig_values_at(a1, a2);
  double num = 0.0, den = 0.0;
  for (const auto& p : c.numerators) num += trig_poly_eval(p, t);
  for (const auto& p : c.denominators) den += trig_poly_eval(p, t);
  if (!(std::abs(den) > den_rel * c.denominator_mass)) {
    throw error(errc::denominator_zero, std::string(c.source->id) + " denominator vanishes at (" +
                                            std::to_string(a1) + ", " + std::to_string(a2) + ")");
  }
  const double pre = prefactor_value(c.source->pre, t, v, r0);
  if (!std::isfinite(pre)) {
    throw error(errc::denominator_zero, std::string(c.source->id) + " prefactor is singular at (" +
                                            std::to_string(a1) + ", " + std::to_string(a2) + ")");
  }
  return pre * num / den;
}

inline double reconstruct_quantity(const quantity& q, double a1, double a2, double v = 1.0,
                                   double r0 = 1.0) {
  return reconstruct(compile(q), a1, a2, v, r0);
}

}  // namespace powergeom::published
