#pragma once

// Command-line front end. run_command takes argv without the program name.

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <ostream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "powergeom/error.hpp"
#include "powergeom/io.hpp"
#include "powergeom/power_models.hpp"
#include "powergeom/self_check.hpp"
#include "powergeom/stability.hpp"
#include "powergeom/verification.hpp"

namespace powergeom {

namespace cli_detail {

struct model_flags {
  std::string model = "real";
  double v = 1.0;
  double r0 = 1.0;

  void attach(CLI::App& app, bool model_optional = false) {
    auto* m = app.add_option("--model", model, "real | imaginary | complex")
                  ->check(CLI::IsMember({"real", "imaginary", "complex"}));
    if (!model_optional) m->capture_default_str();
    app.add_option("--v", v, "bus voltage magnitude")->capture_default_str();
    app.add_option("--r0", r0, "base resistance")->capture_default_str();
  }

  power_model resolve() const { return power_model{*parse_flow_kind(model), v, r0}; }
};

struct range_flags {
  double min = -1.55, max = 1.55;
  std::optional<double> min2, max2;

  void attach(CLI::App& app, bool second_axis) {
    app.add_option("--min", min, "lower bound")->capture_default_str();
    app.add_option("--max", max, "upper bound")->capture_default_str();
    if (second_axis) {
      app.add_option("--min2", min2, "lower bound of a2 (defaults to --min)");
      app.add_option("--max2", max2, "upper bound of a2 (defaults to --max)");
    }
  }
};

struct output_flags {
  std::string out;
  std::string format = "csv";

  void attach(CLI::App& app) {
    app.add_option("--out", out, "output path (stdout when omitted)");
    app.add_option("--format", format, "csv | json")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
  }
};

inline double to_radians(double x, const std::string& unit) {
  return unit == "deg" ? x * std::numbers::pi / 180.0 : x;
}

inline unsigned thread_cap() {
  unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  const char* env = std::getenv("POWERGEOM_THREADS");
  if (!env || !*env) return hw;
  char* end = nullptr;
  const long v = std::strtol(env, &end, 10);
  if (*end != '\0' || v < 1) {
    throw CLI::ValidationError("POWERGEOM_THREADS", "must be a positive integer, got '" +
                                                        std::string(env) + "'");
  }
  return std::min<unsigned>(hw, static_cast<unsigned>(v));
}

/// Writes `body` to `path`, or to `fallback` when path is empty.
template <class Writer>
void emit(const std::string& path, std::ostream& fallback, Writer&& body) {
  if (path.empty()) {
    body(fallback);
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw error(errc::io_error, "cannot write " + path);
  body(f);
  if (!f) throw error(errc::io_error, "failed writing " + path);
}

inline void add_transition_meta(metadata& meta, const transition_set& t) {
  meta.emplace_back("det_zero_count", std::to_string(t.det_zeros.size()));
  meta.emplace_back("curvature_spike_count", std::to_string(t.curvature_spikes.size()));
  meta.emplace_back("degenerate_samples", std::to_string(t.degenerate_samples));
}

inline metadata base_meta(const char* kind, const power_model& m, const std::string& unit) {
  return {{"kind", kind},
          {"model", std::string(to_string(m.kind))},
          {"v", format_double(m.v)},
          {"r0", format_double(m.r0)},
          {"k", format_double(m.scale())},
          {"input_unit", unit},
          {"stored_unit", "rad"}};
}

}  // namespace cli_detail

inline int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  using namespace cli_detail;

  CLI::App app{"Intrinsic geometry of power-flow surfaces", "powergeom"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  std::string unit = "rad";
  double guard = default_scan_guard;
  std::optional<double> spike_threshold;
  auto common = [&](CLI::App& sub) {
    sub.add_option("--unit", unit, "angle unit of inputs: rad | deg")
        ->check(CLI::IsMember({"rad", "deg"}))
        ->capture_default_str();
  };
  auto scan_common = [&](CLI::App& sub) {
    common(sub);
    sub.add_option("--guard", guard, "distance kept from +-pi/2 (rad)")->capture_default_str();
    sub.add_option("--spike-threshold", spike_threshold, "|R| spike threshold (default 1e6/k)");
  };

  // scan
  auto* scan = app.add_subcommand("scan", "grid scan of the metric, determinant and curvature");
  model_flags scan_model;
  range_flags scan_range;
  output_flags scan_out;
  std::size_t scan_n = 64;
  scan_model.attach(*scan);
  scan_range.attach(*scan, true);
  scan->add_option("--n", scan_n, "samples per axis")->capture_default_str();
  scan_out.attach(*scan);
  scan_common(*scan);

  // diagonal
  auto* diag = app.add_subcommand("diagonal", "scan along a1 = a2");
  model_flags diag_model;
  range_flags diag_range;
  output_flags diag_out;
  std::size_t diag_n = 256;
  diag_model.attach(*diag);
  diag_range.attach(*diag, false);
  diag->add_option("--n", diag_n, "samples")->capture_default_str();
  diag_out.attach(*diag);
  scan_common(*diag);

  // classify
  auto* classify = app.add_subcommand("classify", "stability class at one point");
  model_flags cls_model;
  double cls_a1 = 0.0, cls_a2 = 0.0;
  cls_model.attach(*classify);
  classify->add_option("--a1", cls_a1, "first angle")->required();
  classify->add_option("--a2", cls_a2, "second angle")->required();
  common(*classify);

  // verify-paper
  auto* vpaper = app.add_subcommand("verify-paper", "check published closed forms against autodiff");
  model_flags vp_model;
  vp_model.model.clear();
  std::size_t vp_samples = 100;
  std::uint64_t vp_seed = 7;
  std::string vp_out, vp_format = "table";
  vp_model.attach(*vpaper, true);
  vpaper->add_option("--samples", vp_samples, "samples per quantity")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  vpaper->add_option("--seed", vp_seed, "sampler seed")->capture_default_str();
  vpaper->add_option("--out", vp_out, "JSON report path");
  vpaper->add_option("--format", vp_format, "stdout format: table | json")
      ->check(CLI::IsMember({"table", "json"}))
      ->capture_default_str();

  // verify-self
  auto* vself = app.add_subcommand("verify-self", "run the invariant suite");

  // bus-power
  auto* buspow = app.add_subcommand("bus-power", "bus injections of a network file");
  std::string bus_in;
  output_flags bus_out;
  buspow->add_option("--in", bus_in, "network JSON")->required();
  bus_out.format = "json";
  bus_out.attach(*buspow);

  // plot-script
  auto* plot = app.add_subcommand("plot-script", "write a matplotlib script for a scan CSV");
  std::string plot_in, plot_field_name = "det", plot_out;
  plot->add_option("--in", plot_in, "scan CSV")->required();
  plot->add_option("--field", plot_field_name, "det | curvature | value")
      ->check(CLI::IsMember({"det", "curvature", "value"}))
      ->capture_default_str();
  plot->add_option("--out", plot_out, "script path (default: next to the CSV)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  }

  try {
    if (scan->parsed()) {
      const power_model m = scan_model.resolve();
      scan_options opt;
      opt.axis1 = {to_radians(scan_range.min, unit), to_radians(scan_range.max, unit)};
      opt.axis2 = {to_radians(scan_range.min2.value_or(scan_range.min), unit),
                   to_radians(scan_range.max2.value_or(scan_range.max), unit)};
      opt.n = scan_n;
      opt.guard = guard;
      opt.threads = thread_cap();
      const grid_scan g = scan_grid(m, opt);
      transition_options topt;
      topt.spike_threshold = spike_threshold;
      const transition_set t = locate_transitions(m, g, topt);

      metadata meta = base_meta("grid", m, unit);
      meta.emplace_back("a1_min", format_double(opt.axis1.min));
      meta.emplace_back("a1_max", format_double(opt.axis1.max));
      meta.emplace_back("a2_min", format_double(opt.axis2.min));
      meta.emplace_back("a2_max", format_double(opt.axis2.max));
      meta.emplace_back("n", std::to_string(opt.n));
      meta.emplace_back("guard", format_double(opt.guard));
      meta.emplace_back("degeneracy_rel", format_double(opt.degeneracy_rel));
      meta.emplace_back("spike_threshold", format_double(t.spike_threshold));
      meta.emplace_back("bisection_tolerance", format_double(t.bisection_tolerance));
      add_transition_meta(meta, t);
      emit(scan_out.out, out, [&](std::ostream& os) {
        if (scan_out.format == "json") write_scan_json(os, meta, g.records, &t);
        else write_scan_csv(os, meta, g.records);
      });
      return 0;
    }

    if (diag->parsed()) {
      const power_model m = diag_model.resolve();
      const axis_range range{to_radians(diag_range.min, unit), to_radians(diag_range.max, unit)};
      const auto recs = scan_diagonal(m, range, diag_n, guard, thread_cap());
      transition_options topt;
      topt.spike_threshold = spike_threshold;
      const transition_set t = locate_transitions(m, recs, topt);

      metadata meta = base_meta("diagonal", m, unit);
      meta.emplace_back("a_min", format_double(range.min));
      meta.emplace_back("a_max", format_double(range.max));
      meta.emplace_back("n", std::to_string(diag_n));
      meta.emplace_back("guard", format_double(guard));
      meta.emplace_back("degeneracy_rel", format_double(default_degeneracy_rel));
      meta.emplace_back("spike_threshold", format_double(t.spike_threshold));
      meta.emplace_back("bisection_tolerance", format_double(t.bisection_tolerance));
      add_transition_meta(meta, t);
      emit(diag_out.out, out, [&](std::ostream& os) {
        if (diag_out.format == "json") write_scan_json(os, meta, recs, &t);
        else write_scan_csv(os, meta, recs);
      });
      return 0;
    }

    if (classify->parsed()) {
      const power_model m = cls_model.resolve();
      const double a1 = to_radians(cls_a1, unit), a2 = to_radians(cls_a2, unit);
      const geometry_report r = analyze_point(surface(m), {a1, a2});
      nlohmann::ordered_json j;
      j["model"] = std::string(to_string(m.kind));
      j["v"] = m.v;
      j["r0"] = m.r0;
      const auto fields = report_json(r);
      for (auto it = fields.begin(); it != fields.end(); ++it) j[it.key()] = it.value();
      out << j.dump() << '\n';
      return 0;
    }

    if (vpaper->parsed()) {
      verification_report report;
      report.options.samples = vp_samples;
      report.options.seed = vp_seed;
      std::vector<flow_kind> kinds{flow_kind::real, flow_kind::imaginary, flow_kind::complex};
      if (!vp_model.model.empty()) kinds = {*parse_flow_kind(vp_model.model)};
      for (auto k : kinds) {
        report.models.push_back(verify_against_autodiff(power_model{k, vp_model.v, vp_model.r0},
                                                        report.options));
      }
      const std::string json = to_json(report).dump(2) + "\n";
      if (!vp_out.empty()) emit(vp_out, out, [&](std::ostream& os) { os << json; });
      if (vp_format == "json") out << json;
      else out << to_table(report);
      return 0;
    }

    if (vself->parsed()) {
      bool all = true;
      for (const auto& c : run_self_checks()) {
        out << (c.passed ? "[PASS] " : "[FAIL] ") << c.name << " (" << c.detail << ")\n";
        all = all && c.passed;
      }
      return all ? 0 : 1;
    }

    if (buspow->parsed()) {
      const auto inj = bus_injections(read_bus_network_file(bus_in));
      emit(bus_out.out, out, [&](std::ostream& os) {
        if (bus_out.format == "csv") {
          os << "id,p,q\n";
          for (const auto& b : inj) os << b.id << ',' << format_double(b.p) << ',' << format_double(b.q) << '\n';
        } else {
          nlohmann::ordered_json j;
          j["buses"] = nlohmann::ordered_json::array();
          for (const auto& b : inj) j["buses"].push_back({{"id", b.id}, {"p", b.p}, {"q", b.q}});
          os << j.dump(2) << '\n';
        }
      });
      return 0;
    }

    if (plot->parsed()) {
      const auto field = *parse_plot_field(plot_field_name);
      std::filesystem::path script = plot_out;
      if (script.empty()) {
        const std::filesystem::path csv(plot_in);
        script = csv.parent_path() / (csv.stem().string() + "_" + plot_field_name + ".py");
      }
      emit_plot_script(plot_in, field, script);
      out << script.string() << '\n';
      return 0;
    }
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const error& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}

}  // namespace powergeom
