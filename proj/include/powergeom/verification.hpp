#pragma once

// Cross-checks every published closed form against the jet-based geometry at
// seeded pseudo-random points and reports, per quantity, whether it matches.
// Mismatches are reported, never corrected.

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <limits>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "json.hpp"
#include "powergeom/geometry.hpp"
#include "powergeom/power_models.hpp"
#include "powergeom/published_expressions.hpp"
#include "powergeom/stability.hpp"

namespace powergeom {

enum class verification_status { verified, discrepant };

constexpr std::string_view to_string(verification_status s) {
  return s == verification_status::verified ? "VERIFIED" : "DISCREPANT";
}

constexpr std::string_view to_string(exponent_reading r) {
  return r == exponent_reading::multi_digit ? "multi_digit" : "tex_literal";
}

inline constexpr double default_verification_tolerance = 1e-6;

struct worst_sample {
  point2 at;
  double reconstructed = 0.0;
  double autodiff = 0.0;
};

/// Max of |x - ref| / max(1, |ref|) over the accepted samples.
struct deviation_summary {
  verification_status status = verification_status::verified;
  double max_rel_deviation = 0.0;
  std::size_t samples = 0;
  std::optional<worst_sample> worst;

  void add(point2 at, double value, double reference) {
    double dev = std::abs(value - reference) / std::max(1.0, std::abs(reference));
    if (std::isnan(dev)) dev = std::numeric_limits<double>::infinity();
    ++samples;
    if (!worst || dev > max_rel_deviation) {
      max_rel_deviation = dev;
      worst = worst_sample{at, value, reference};
    }
  }

  void finish(double tolerance) {
    status = samples > 0 && max_rel_deviation <= tolerance ? verification_status::verified
                                                           : verification_status::discrepant;
  }
};

struct reading_result {
  exponent_reading reading = exponent_reading::multi_digit;
  deviation_summary summary;
};

struct repair_note {
  std::string table;
  std::string original;
  unsigned exponent_read = 0;  // under the multi-digit reading
};

struct quantity_result {
  std::string id;
  flow_kind flow = flow_kind::real;
  deviation_summary summary;  // multi-digit exponent reading
  std::size_t resampled = 0;
  std::vector<repair_note> repairs;
  std::vector<reading_result> readings;  // both readings, only when repairs exist
};

/// Agreement of a closed-form curvature formula with the Christoffel route.
struct formula_check {
  std::string id;
  deviation_summary summary;
};

struct model_verification {
  power_model model;
  std::vector<quantity_result> quantities;
  std::vector<formula_check> formulas;
};

struct verification_options {
  std::size_t samples = 100;
  std::uint64_t seed = 7;
  axis_range domain{-1.4, 1.4};
  double tolerance = default_verification_tolerance;
  std::size_t max_attempts_per_sample = 1000;
};

struct verification_report {
  verification_options options;
  std::vector<model_verification> models;
};

/// Deterministic uniform points; avoids std distributions, whose output is
/// implementation-defined.
class point_sampler {
 public:
  point_sampler(std::uint64_t seed, axis_range domain) : rng_(seed), domain_(domain) {}

  point2 next() {
    const double a1 = coordinate();
    const double a2 = coordinate();
    return {a1, a2};
  }

 private:
  double coordinate() {
    const double unit = static_cast<double>(rng_() >> 11) * 0x1p-53;
    return domain_.min + (domain_.max - domain_.min) * unit;
  }

  std::mt19937_64 rng_;
  axis_range domain_;
};

inline double autodiff_quantity(published::quantity_kind what, const jet3& s) {
  using qk = published::quantity_kind;
  switch (what) {
    case qk::metric11: return s.f11;
    case qk::metric12: return s.f12;
    case qk::metric22: return s.f22;
    case qk::determinant: return metric_determinant(metric_from_jet(s));
    case qk::curvature: return scalar_curvature_closed(s);
  }
  return 0.0;
}

inline quantity_result verify_quantity(const published::quantity& q, const power_model& model,
                                       const verification_options& opt = {}) {
  quantity_result out;
  out.id = std::string(q.id);
  out.flow = q.flow;

  const auto primary = published::compile(q, exponent_reading::multi_digit);
  std::optional<published::compiled_quantity> literal;
  for (const auto& [table, rep] : primary.repairs()) {
    const auto caret = rep.original.find('^');
    out.repairs.push_back({std::string(table), rep.original,
                           static_cast<unsigned>(std::stoul(rep.original.substr(caret + 1)))});
  }
  if (!out.repairs.empty()) literal = published::compile(q, exponent_reading::tex_literal);
  deviation_summary literal_summary;

  point_sampler sampler(opt.seed, opt.domain);
  for (std::size_t s = 0; s < opt.samples; ++s) {
    for (std::size_t attempt = 0; attempt < opt.max_attempts_per_sample; ++attempt) {
      const point2 at = sampler.next();
      double reference = 0.0, value = 0.0;
      try {
        reference = autodiff_quantity(q.what, eval_power_jet(model, at.a1, at.a2));
        value = published::reconstruct(primary, at.a1, at.a2, model.v, model.r0);
      } catch (const error& e) {
        if (e.code() != errc::degenerate_metric && e.code() != errc::denominator_zero) throw;
        ++out.resampled;
        continue;
      }
      out.summary.add(at, value, reference);
      if (literal) {
        try {
          literal_summary.add(at, published::reconstruct(*literal, at.a1, at.a2, model.v, model.r0),
                              reference);
        } catch (const error& e) {
          if (e.code() != errc::denominator_zero) throw;
        }
      }
      break;
    }
  }
  out.summary.finish(opt.tolerance);
  if (literal) {
    literal_summary.finish(opt.tolerance);
    out.readings.push_back({exponent_reading::multi_digit, out.summary});
    out.readings.push_back({exponent_reading::tex_literal, literal_summary});
  }
  return out;
}

inline std::vector<formula_check> verify_curvature_formulas(const power_model& model,
                                                            const verification_options& opt = {}) {
  formula_check closed{"CURVATURE_CLOSED_FORM", {}};
  formula_check printed{"CURVATURE_CLOSED_FORM_AS_PRINTED", {}};
  point_sampler sampler(opt.seed, opt.domain);
  for (std::size_t s = 0; s < opt.samples; ++s) {
    for (std::size_t attempt = 0; attempt < opt.max_attempts_per_sample; ++attempt) {
      const point2 at = sampler.next();
      const jet3 j = eval_power_jet(model, at.a1, at.a2);
      if (is_degenerate(metric_from_jet(j))) continue;
      const double reference = scalar_curvature_oracle(j);
      closed.summary.add(at, scalar_curvature_closed(j), reference);
      printed.summary.add(at, scalar_curvature_as_printed(j), reference);
      break;
    }
  }
  closed.summary.finish(opt.tolerance);
  printed.summary.finish(opt.tolerance);
  return {closed, printed};
}

inline model_verification verify_against_autodiff(const power_model& model,
                                                  const verification_options& opt = {}) {
  model_verification out;
  out.model = model;
  for (const auto& q : published::quantities()) {
    if (q.flow == model.kind) out.quantities.push_back(verify_quantity(q, model, opt));
  }
  out.formulas = verify_curvature_formulas(model, opt);
  return out;
}

// ---------------------------------------------------------------------------
// Output

namespace detail {

inline nlohmann::ordered_json summary_json(const deviation_summary& s) {
  nlohmann::ordered_json j;
  j["status"] = std::string(to_string(s.status));
  j["max_rel_deviation"] = s.max_rel_deviation;
  j["samples"] = s.samples;
  if (s.worst) {
    j["worst_point"] = {{"a1", s.worst->at.a1},
                        {"a2", s.worst->at.a2},
                        {"reconstructed", s.worst->reconstructed},
                        {"autodiff", s.worst->autodiff}};
  } else {
    j["worst_point"] = nullptr;
  }
  return j;
}

inline std::string format_g(double v, const char* fmt = "%.3e") {
  char buf[64];
  std::snprintf(buf, sizeof buf, fmt, v);
  return buf;
}

}  // namespace detail

inline nlohmann::ordered_json to_json(const verification_report& r) {
  nlohmann::ordered_json j;
  j["samples"] = r.options.samples;
  j["seed"] = r.options.seed;
  j["domain"] = {r.options.domain.min, r.options.domain.max};
  j["tolerance"] = r.options.tolerance;
  j["models"] = nlohmann::ordered_json::array();
  for (const auto& m : r.models) {
    nlohmann::ordered_json mj;
    mj["model"] = std::string(to_string(m.model.kind));
    mj["v"] = m.model.v;
    mj["r0"] = m.model.r0;
    mj["quantities"] = nlohmann::ordered_json::array();
    for (const auto& q : m.quantities) {
      nlohmann::ordered_json qj;
      qj["id"] = q.id;
      auto s = detail::summary_json(q.summary);
      for (auto it = s.begin(); it != s.end(); ++it) qj[it.key()] = it.value();
      qj["resampled"] = q.resampled;
      qj["repaired_exponents"] = nlohmann::ordered_json::array();
      for (const auto& rep : q.repairs) {
        qj["repaired_exponents"].push_back(
            {{"table", rep.table}, {"original", rep.original}, {"read_as", rep.exponent_read}});
      }
      if (!q.readings.empty()) {
        qj["readings"] = nlohmann::ordered_json::array();
        for (const auto& rd : q.readings) {
          auto rj = detail::summary_json(rd.summary);
          nlohmann::ordered_json entry{{"reading", std::string(to_string(rd.reading))}};
          for (auto it = rj.begin(); it != rj.end(); ++it) entry[it.key()] = it.value();
          qj["readings"].push_back(entry);
        }
      }
      mj["quantities"].push_back(qj);
    }
    mj["curvature_formulas"] = nlohmann::ordered_json::array();
    for (const auto& f : m.formulas) {
      nlohmann::ordered_json fj{{"id", f.id}};
      auto s = detail::summary_json(f.summary);
      for (auto it = s.begin(); it != s.end(); ++it) fj[it.key()] = it.value();
      mj["curvature_formulas"].push_back(fj);
    }
    j["models"].push_back(mj);
  }
  return j;
}

inline std::string to_table(const verification_report& r) {
  std::string out;
  auto line = [&](const std::string& s) { out += s + '\n'; };
  line("samples=" + std::to_string(r.options.samples) + " seed=" + std::to_string(r.options.seed) +
       " tolerance=" + detail::format_g(r.options.tolerance, "%g"));
  char buf[256];
  for (const auto& m : r.models) {
    line("");
    line("model " + describe(m.model));
    std::snprintf(buf, sizeof buf, "  %-34s %-11s %-12s %s", "quantity", "status", "max_rel_dev",
                  "worst point (a1, a2): reconstructed vs autodiff");
    line(buf);
    auto row = [&](const std::string& id, const deviation_summary& s, const std::string& extra) {
      std::string worst = "-";
      if (s.worst) {
        worst = "(" + detail::format_g(s.worst->at.a1, "%.6f") + ", " +
                detail::format_g(s.worst->at.a2, "%.6f") + "): " +
                detail::format_g(s.worst->reconstructed, "%.9g") + " vs " +
                detail::format_g(s.worst->autodiff, "%.9g");
      }
      std::snprintf(buf, sizeof buf, "  %-34s %-11s %-12s %s%s", id.c_str(),
                    std::string(to_string(s.status)).c_str(),
                    detail::format_g(s.max_rel_deviation).c_str(), worst.c_str(), extra.c_str());
      line(buf);
    };
    for (const auto& q : m.quantities) {
      row(q.id, q.summary, "");
      for (const auto& rep : q.repairs) {
        line("      exponent " + rep.original + " in " + rep.table + " read as ^{" +
             std::to_string(rep.exponent_read) + "}");
      }
      for (const auto& rd : q.readings) {
        row("      reading " + std::string(to_string(rd.reading)), rd.summary, "");
      }
    }
    for (const auto& f : m.formulas) row(f.id, f.summary, "");
  }
  return out;
}

}  // namespace powergeom
