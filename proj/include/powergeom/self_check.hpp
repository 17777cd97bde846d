#pragma once

// Invariant suite behind `powergeom verify-self`.

#include <cmath>
#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

#include "powergeom/geometry.hpp"
#include "powergeom/io.hpp"
#include "powergeom/power_models.hpp"
#include "powergeom/published_expressions.hpp"
#include "powergeom/stability.hpp"
#include "powergeom/verification.hpp"

namespace powergeom {

struct check_result {
  std::string name;
  bool passed = false;
  std::string detail;
};

namespace detail {

inline std::string fmt(const char* f, double a, double b = 0.0) {
  char buf[160];
  std::snprintf(buf, sizeof buf, f, a, b);
  return buf;
}

inline std::vector<double> diagonal_samples() {
  std::vector<double> out;
  for (int i = 0; i <= 100; ++i) {
    const double a = -1.4 + 2.8 * i / 100.0;
    if (std::abs(a) >= 0.05) out.push_back(a);
  }
  return out;
}

}  // namespace detail

inline check_result check_origin_anchors() {
  const jet3 r = eval_power_jet(power_model{flow_kind::real}, 0.0, 0.0);
  const jet3 im = eval_power_jet(power_model{flow_kind::imaginary}, 0.0, 0.0);
  const double err = std::max({std::abs(r.f11 + 2), std::abs(r.f12 - 2), std::abs(r.f22 + 2),
                               std::abs(metric_determinant(metric_from_jet(r))), std::abs(im.f11),
                               std::abs(im.f12), std::abs(im.f22)});
  return {"origin metric anchors", err <= 1e-9, detail::fmt("max abs error %.3e", err)};
}

inline check_result check_curvature_identity(std::size_t samples = 100, std::uint64_t seed = 7) {
  double worst = 0.0;
  for (auto kind : {flow_kind::real, flow_kind::imaginary, flow_kind::complex}) {
    const power_model m{kind};
    const double k = m.scale();
    point_sampler sampler(seed, {-1.4, 1.4});
    for (std::size_t n = 0; n < samples;) {
      const point2 p = sampler.next();
      const jet3 j = eval_power_jet(m, p.a1, p.a2);
      if (std::abs(metric_determinant(metric_from_jet(j))) <= 0.1 * k * k) continue;
      const double a = scalar_curvature_closed(j), b = scalar_curvature_oracle(j);
      worst = std::max(worst, std::abs(a - b) / std::max(1.0, std::abs(b)));
      ++n;
    }
  }
  return {"closed-form curvature equals Christoffel curvature", worst <= 1e-6,
          detail::fmt("max rel deviation %.3e", worst)};
}

inline check_result check_imaginary_diagonal_flat() {
  const power_model m{flow_kind::imaginary};
  double worst = 0.0;
  for (double a : detail::diagonal_samples()) {
    worst = std::max(worst, std::abs(scalar_curvature_closed(eval_power_jet(m, a, a))));
  }
  return {"imaginary flow is flat on the diagonal", worst <= 1e-6, detail::fmt("max |R| %.3e", worst)};
}

inline check_result check_diagonal_determinants() {
  const power_model real{flow_kind::real}, cplx{flow_kind::complex};
  double worst_real = 0.0, worst_cplx = 0.0;
  for (double a : detail::diagonal_samples()) {
    const double sec = 1.0 / std::cos(a), t = std::tan(a);
    const double k = real.scale();
    const double dr = metric_determinant(metric_from_jet(eval_power_jet(real, a, a)));
    worst_real = std::max(worst_real, std::abs(dr) / (k * k * std::pow(sec, 8)));
    const double expected = -4.0 * k * k * std::pow(sec, 4) * t * t;
    const double dc = metric_determinant(metric_from_jet(eval_power_jet(cplx, a, a)));
    worst_cplx = std::max(worst_cplx, std::abs(dc - expected) / std::abs(expected));
  }
  return {"diagonal determinant identities", worst_real <= 1e-9 && worst_cplx <= 1e-9,
          detail::fmt("real |det|/(k^2 sec^8) %.3e, complex rel error %.3e", worst_real, worst_cplx)};
}

inline check_result check_table_anchors() {
  namespace pub = published;
  std::ostringstream bad;
  auto expect = [&](const char* name, double want) {
    const double got = trig_poly_eval(pub::table(name), 0.0, 0.0);
    if (got != want) bad << ' ' << name << '=' << got;
  };
  for (auto n : {"n^R_{11}", "n^R_{12}", "n^R_{22}"}) expect(n, 1.0);
  for (auto n : {"r^R_{11}", "r^R_{12}", "r^R_{22}", "r^I_{11}"}) expect(n, -1.0);
  for (auto n : {"n^I_{11}", "n^I_{12}", "n^I_{22}"}) expect(n, 0.0);
  const jet3 j = eval_power_jet(power_model{flow_kind::real}, 0.0, 0.0);
  const double slots[] = {j.f11, j.f12, j.f22};
  const char* ids[] = {"METRIC_R_11", "METRIC_R_12", "METRIC_R_22"};
  for (int i = 0; i < 3; ++i) {
    const double rec = pub::reconstruct_quantity(pub::find_quantity(ids[i]), 0.0, 0.0);
    if (std::abs(rec - slots[i]) > 1e-12) bad << ' ' << ids[i] << '=' << rec;
  }
  const std::string s = bad.str();
  return {"published table anchors at the origin", s.empty(), s.empty() ? "all match" : "mismatch:" + s};
}

inline check_result check_shared_denominators() {
  std::string bad;
  for (const char* f : {"R", "I", "C"}) {
    const std::string base = std::string("r^") + f + "_{";
    const auto p11 = published::table(base + "11}");
    if (!(published::table(base + "12}") == p11) || !(published::table(base + "22}") == p11)) {
      bad += std::string(" ") + f;
    }
  }
  return {"metric denominators identical within each flow", bad.empty(),
          bad.empty() ? "R, I, C" : "differ for" + bad};
}

inline check_result check_coefficient_mass_bound(std::size_t samples = 200, std::uint64_t seed = 7) {
  point_sampler sampler(seed, {-3.2, 3.2});
  std::size_t violations = 0;
  for (std::size_t i = 0; i < samples; ++i) {
    const point2 p = sampler.next();
    const trig_values t = trig_values_at(p.a1, p.a2);
    for (const auto& src : published::tables) {
      const auto poly = parse_trig_polynomial(src.latex);
      if (std::abs(trig_poly_eval(poly, t)) > coefficient_mass(poly) * (1 + 1e-12)) ++violations;
    }
  }
  return {"table values bounded by coefficient mass", violations == 0,
          std::to_string(violations) + " violations"};
}

inline check_result check_csv_round_trip() {
  scan_options opt;
  opt.n = 9;
  const auto scan = scan_grid(power_model{flow_kind::complex}, opt);
  std::stringstream ss;
  write_scan_csv(ss, {{"kind", "grid"}}, scan.records);
  const std::string first = ss.str();
  const scan_table back = read_scan_csv(ss);
  std::stringstream again;
  write_scan_csv(again, back.meta, back.records);
  const bool ok = again.str() == first && back.records.size() == scan.records.size();
  return {"CSV write/read round trip", ok, std::to_string(back.records.size()) + " records"};
}

inline check_result check_thread_independence() {
  scan_options one, many;
  one.n = many.n = 33;
  many.threads = 4;
  const power_model m{flow_kind::real};
  std::stringstream a, b;
  write_scan_csv(a, {}, scan_grid(m, one).records);
  write_scan_csv(b, {}, scan_grid(m, many).records);
  return {"scan output independent of thread count", a.str() == b.str(), "1 vs 4 threads"};
}

inline std::vector<check_result> run_self_checks() {
  return {check_origin_anchors(),         check_curvature_identity(),
          check_imaginary_diagonal_flat(), check_diagonal_determinants(),
          check_table_anchors(),           check_shared_denominators(),
          check_coefficient_mass_bound(),  check_csv_round_trip(),
          check_thread_independence()};
}

}  // namespace powergeom
