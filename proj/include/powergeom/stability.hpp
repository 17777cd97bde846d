#pragma once

// Point classification, grid and diagonal scans, and transition location
// (determinant zeros and curvature spikes).

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdio>
#include <functional>
#include <limits>
#include <numbers>
#include <optional>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "powergeom/error.hpp"
#include "powergeom/geometry.hpp"
#include "powergeom/power_models.hpp"

namespace powergeom {

enum class stability_class { stable, negative_definite, indefinite, degenerate };

/// Short labels used in CSV/JSON output.
constexpr std::string_view to_string(stability_class c) {
  switch (c) {
    case stability_class::stable: return "STABLE";
    case stability_class::negative_definite: return "NEGDEF";
    case stability_class::indefinite: return "INDEF";
    case stability_class::degenerate: return "DEGEN";
  }
  return "?";
}

inline std::optional<stability_class> parse_stability_class(std::string_view s) {
  if (s == "STABLE") return stability_class::stable;
  if (s == "NEGDEF") return stability_class::negative_definite;
  if (s == "INDEF") return stability_class::indefinite;
  if (s == "DEGEN") return stability_class::degenerate;
  return std::nullopt;
}

/// Degenerate wins over the sign classes.
inline stability_class classify_metric(const metric2& m, double rel = default_degeneracy_rel) {
  if (is_degenerate(m, rel)) return stability_class::degenerate;
  const double det = metric_determinant(m);
  if (det < 0.0) return stability_class::indefinite;
  // det > 0 forces g11 and g22 to share a nonzero sign
  return m.g11 > 0.0 ? stability_class::stable : stability_class::negative_definite;
}

template <jet_field F>
stability_class classify_point(const F& field, point2 at, double rel = default_degeneracy_rel) {
  return classify_metric(hessian_metric(field, at), rel);
}

struct geometry_report {
  point2 at;
  double value = 0.0;
  metric2 metric;
  double det = 0.0;
  std::optional<double> curvature;  // empty where the metric is degenerate
  stability_class cls = stability_class::degenerate;

  friend bool operator==(const geometry_report&, const geometry_report&) = default;
};

inline geometry_report report_from_jet(const jet3& s, point2 at,
                                       double rel = default_degeneracy_rel) {
  geometry_report r;
  r.at = at;
  r.value = s.f;
  r.metric = metric_from_jet(s, at);
  r.det = metric_determinant(r.metric);
  r.cls = classify_metric(r.metric, rel);
  if (r.cls != stability_class::degenerate) r.curvature = scalar_curvature_closed(s, rel);
  return r;
}

template <jet_field F>
geometry_report analyze_point(const F& field, point2 at, double rel = default_degeneracy_rel) {
  return report_from_jet(field(at.a1, at.a2), at, rel);
}

struct axis_range {
  double min = -1.55;
  double max = 1.55;

  friend bool operator==(const axis_range&, const axis_range&) = default;
};

inline constexpr double default_scan_guard = 0.02;

struct scan_options {
  axis_range axis1;
  axis_range axis2;
  std::size_t n = 64;
  double guard = default_scan_guard;
  double degeneracy_rel = default_degeneracy_rel;
  unsigned threads = 1;
};

/// Row-major n x n sample, a1 fastest: records[j * n + i] sits at (x_i, y_j).
struct grid_scan {
  axis_range axis1;
  axis_range axis2;
  std::size_t n = 0;
  double guard = default_scan_guard;
  std::string model;
  std::vector<geometry_report> records;

  const geometry_report& at(std::size_t i, std::size_t j) const { return records[j * n + i]; }
};

inline double sample_coordinate(const axis_range& r, std::size_t i, std::size_t n) {
  return r.min + static_cast<double>(i) * ((r.max - r.min) / static_cast<double>(n - 1));
}

namespace detail {

inline void check_axis(const axis_range& r, double guard, const char* name) {
  const double limit = std::numbers::pi / 2 - guard;
  if (!std::isfinite(r.min) || !std::isfinite(r.max) || !(r.min < r.max)) {
    throw error(errc::bad_domain, std::string(name) + " range must satisfy min < max");
  }
  if (!(std::abs(r.min) < limit) || !(std::abs(r.max) < limit)) {
    throw error(errc::bad_domain, std::string(name) + " range [" + std::to_string(r.min) + ", " +
                                      std::to_string(r.max) + "] reaches the +-pi/2 guard band");
  }
}

/// Runs body(row) for every row; rows are independent and written by index.
inline void for_each_row(std::size_t rows, unsigned threads, const std::function<void(std::size_t)>& body) {
  const unsigned workers = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(rows)));
  if (workers == 1) {
    for (std::size_t r = 0; r < rows; ++r) body(r);
    return;
  }
  std::vector<std::jthread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (std::size_t r = w; r < rows; r += workers) body(r);
    });
  }
}

}  // namespace detail

template <jet_field F>
grid_scan scan_grid(const F& field, const scan_options& opt, std::string model_label = "custom") {
  if (opt.n < 2) throw error(errc::bad_domain, "scan needs at least 2 samples per axis");
  detail::check_axis(opt.axis1, opt.guard, "a1");
  detail::check_axis(opt.axis2, opt.guard, "a2");

  grid_scan scan;
  scan.axis1 = opt.axis1;
  scan.axis2 = opt.axis2;
  scan.n = opt.n;
  scan.guard = opt.guard;
  scan.model = std::move(model_label);
  scan.records.resize(opt.n * opt.n);

  detail::for_each_row(opt.n, opt.threads, [&](std::size_t j) {
    const double a2 = sample_coordinate(opt.axis2, j, opt.n);
    for (std::size_t i = 0; i < opt.n; ++i) {
      const point2 at{sample_coordinate(opt.axis1, i, opt.n), a2};
      scan.records[j * opt.n + i] = analyze_point(field, at, opt.degeneracy_rel);
    }
  });
  return scan;
}

inline std::string describe(const power_model& m) {
  char buf[128];
  std::snprintf(buf, sizeof buf, "%s V=%.17g R0=%.17g", std::string(to_string(m.kind)).c_str(),
                m.v, m.r0);
  return buf;
}

inline grid_scan scan_grid(const power_model& model, const scan_options& opt) {
  return scan_grid(surface(model), opt, describe(model));
}

/// Samples along a1 = a2 = a.
template <jet_field F>
std::vector<geometry_report> scan_diagonal(const F& field, axis_range range, std::size_t n,
                                           double guard = default_scan_guard,
                                           double rel = default_degeneracy_rel,
                                           unsigned threads = 1) {
  if (n < 2) throw error(errc::bad_domain, "diagonal scan needs at least 2 samples");
  detail::check_axis(range, guard, "a");
  std::vector<geometry_report> out(n);
  detail::for_each_row(n, threads, [&](std::size_t i) {
    const double a = sample_coordinate(range, i, n);
    out[i] = analyze_point(field, {a, a}, rel);
  });
  return out;
}

inline std::vector<geometry_report> scan_diagonal(const power_model& model, axis_range range,
                                                  std::size_t n, double guard = default_scan_guard,
                                                  unsigned threads = 1) {
  return scan_diagonal(surface(model), range, n, guard, default_degeneracy_rel, threads);
}

// ---------------------------------------------------------------------------
// Transitions

enum class line_kind {
  vary_a1,   // a2 held at `fixed`
  vary_a2,   // a1 held at `fixed`
  diagonal,  // a1 = a2
};

constexpr std::string_view to_string(line_kind k) {
  switch (k) {
    case line_kind::vary_a1: return "a1";
    case line_kind::vary_a2: return "a2";
    case line_kind::diagonal: return "diagonal";
  }
  return "?";
}

struct determinant_zero {
  line_kind line = line_kind::vary_a1;
  double fixed = 0.0;     // the held coordinate; unused on the diagonal
  double location = 0.0;  // the varying coordinate at the root
  double bracket = 0.0;   // final bracket width
  point2 at;
  double det_at_root = 0.0;
};

struct curvature_spike {
  point2 at;
  double magnitude = 0.0;
};

struct transition_set {
  std::vector<determinant_zero> det_zeros;
  std::vector<curvature_spike> curvature_spikes;
  std::size_t degenerate_samples = 0;
  double spike_threshold = 0.0;
  double bisection_tolerance = 0.0;
};

struct transition_options {
  std::optional<double> spike_threshold;  // default 1e6 / k
  double bisection_tolerance = 1e-10;
  double degeneracy_rel = default_degeneracy_rel;
};

namespace detail {

inline int det_sign(const geometry_report& r, double rel) {
  if (is_degenerate(r.metric, rel)) return 0;
  return r.det > 0.0 ? 1 : -1;
}

/// Bisects det along a line between t_lo and t_hi, which bracket a sign change.
template <jet_field F>
determinant_zero bisect_line(const F& field, line_kind kind, double fixed, double t_lo, double t_hi,
                             int sign_lo, double tol) {
  auto point_at = [&](double t) -> point2 {
    switch (kind) {
      case line_kind::vary_a1: return {t, fixed};
      case line_kind::vary_a2: return {fixed, t};
      case line_kind::diagonal: return {t, t};
    }
    return {};
  };
  auto det_at = [&](double t) { return metric_determinant(hessian_metric(field, point_at(t))); };

  // runs to adjacent doubles
  double lo = t_lo, hi = t_hi;
  double det_lo = NAN, det_hi = NAN;
  for (;;) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const double d = det_at(mid);
    if (d == 0.0) {
      lo = hi = mid;
      det_lo = det_hi = 0.0;
      break;
    }
    if ((d > 0.0) == (sign_lo > 0)) {
      lo = mid;
      det_lo = d;
    } else {
      hi = mid;
      det_hi = d;
    }
  }
  if (!(hi - lo <= tol)) throw error(errc::non_finite, "bisection bracket wider than tolerance");
  if (std::isnan(det_lo)) det_lo = det_at(lo);
  if (std::isnan(det_hi)) det_hi = det_at(hi);
  determinant_zero z;
  z.line = kind;
  z.fixed = kind == line_kind::diagonal ? 0.0 : fixed;
  z.location = std::abs(det_lo) <= std::abs(det_hi) ? lo : hi;
  z.bracket = hi - lo;
  z.at = point_at(z.location);
  z.det_at_root = det_at(z.location);
  return z;
}

/// Walks one sampled line; degenerate samples carry no sign and are skipped
/// when pairing neighbours.
template <jet_field F>
void scan_line_for_roots(const F& field, line_kind kind, double fixed,
                         const std::vector<std::pair<double, const geometry_report*>>& samples,
                         const transition_options& opt, transition_set& out) {
  int last_sign = 0;
  double last_t = 0.0;
  for (const auto& [t, rec] : samples) {
    const int s = det_sign(*rec, opt.degeneracy_rel);
    if (s == 0) continue;
    if (last_sign != 0 && s != last_sign) {
      out.det_zeros.push_back(
          bisect_line(field, kind, fixed, last_t, t, last_sign, opt.bisection_tolerance));
    }
    last_sign = s;
    last_t = t;
  }
}

inline void collect_spikes(const std::vector<geometry_report>& recs, double threshold,
                           double rel, transition_set& out) {
  for (const auto& r : recs) {
    if (is_degenerate(r.metric, rel)) ++out.degenerate_samples;
    if (r.curvature && std::abs(*r.curvature) > threshold) {
      out.curvature_spikes.push_back({r.at, std::abs(*r.curvature)});
    }
  }
}

}  // namespace detail

/// Det sign changes along every grid row and column, refined by bisection on
/// the continuous determinant, plus samples whose |R| exceeds the threshold.
template <jet_field F>
transition_set locate_transitions(const F& field, const grid_scan& scan, double scale,
                                  const transition_options& opt = {}) {
  transition_set out;
  out.spike_threshold = opt.spike_threshold.value_or(1e6 / scale);
  out.bisection_tolerance = opt.bisection_tolerance;
  const std::size_t n = scan.n;
  std::vector<std::pair<double, const geometry_report*>> line(n);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < n; ++i) line[i] = {scan.at(i, j).at.a1, &scan.at(i, j)};
    detail::scan_line_for_roots(field, line_kind::vary_a1, scan.at(0, j).at.a2, line, opt, out);
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) line[j] = {scan.at(i, j).at.a2, &scan.at(i, j)};
    detail::scan_line_for_roots(field, line_kind::vary_a2, scan.at(i, 0).at.a1, line, opt, out);
  }
  detail::collect_spikes(scan.records, out.spike_threshold, opt.degeneracy_rel, out);
  return out;
}

template <jet_field F>
transition_set locate_transitions(const F& field, const std::vector<geometry_report>& diagonal,
                                  double scale, const transition_options& opt = {}) {
  transition_set out;
  out.spike_threshold = opt.spike_threshold.value_or(1e6 / scale);
  out.bisection_tolerance = opt.bisection_tolerance;
  std::vector<std::pair<double, const geometry_report*>> line;
  line.reserve(diagonal.size());
  for (const auto& r : diagonal) line.emplace_back(r.at.a1, &r);
  detail::scan_line_for_roots(field, line_kind::diagonal, 0.0, line, opt, out);
  detail::collect_spikes(diagonal, out.spike_threshold, opt.degeneracy_rel, out);
  return out;
}

inline transition_set locate_transitions(const power_model& model, const grid_scan& scan,
                                         const transition_options& opt = {}) {
  return locate_transitions(surface(model), scan, model.scale(), opt);
}

inline transition_set locate_transitions(const power_model& model,
                                         const std::vector<geometry_report>& diagonal,
                                         const transition_options& opt = {}) {
  return locate_transitions(surface(model), diagonal, model.scale(), opt);
}

}  // namespace powergeom
