#pragma once

// Scan files (CSV and JSON), bus-network JSON, and plotting-script emission.
//
// CSV layout: '#'-prefixed "key=value" metadata lines, then the header
//   a1,a2,value,g11,g12,g22,det,curvature,class
// and one row per sample. Numbers carry 17 significant digits; an undefined
// curvature is written as "nan".

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "json.hpp"
#include "powergeom/error.hpp"
#include "powergeom/power_models.hpp"
#include "powergeom/stability.hpp"

namespace powergeom {

inline constexpr std::string_view scan_csv_header = "a1,a2,value,g11,g12,g22,det,curvature,class";

using metadata = std::vector<std::pair<std::string, std::string>>;

inline std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

inline void write_scan_csv(std::ostream& os, const metadata& meta,
                           const std::vector<geometry_report>& records) {
  for (const auto& [k, v] : meta) os << "# " << k << '=' << v << '\n';
  os << scan_csv_header << '\n';
  for (const auto& r : records) {
    os << format_double(r.at.a1) << ',' << format_double(r.at.a2) << ',' << format_double(r.value)
       << ',' << format_double(r.metric.g11) << ',' << format_double(r.metric.g12) << ','
       << format_double(r.metric.g22) << ',' << format_double(r.det) << ','
       << (r.curvature ? format_double(*r.curvature) : std::string("nan")) << ','
       << to_string(r.cls) << '\n';
  }
}

struct scan_table {
  metadata meta;
  std::vector<geometry_report> records;

  const std::string* find(std::string_view key) const {
    for (const auto& [k, v] : meta)
      if (k == key) return &v;
    return nullptr;
  }
};

namespace detail {

inline double parse_double_field(std::string_view text, std::size_t line) {
  const std::string s(text);
  if (s == "nan") return std::nan("");
  char* end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (s.empty() || end != s.c_str() + s.size()) {
    throw error(errc::schema_mismatch,
                "line " + std::to_string(line) + ": '" + s + "' is not a number");
  }
  return v;
}

inline std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (;;) {
    const auto pos = s.find(sep, start);
    out.push_back(s.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

}  // namespace detail

inline scan_table read_scan_csv(std::istream& is) {
  scan_table t;
  std::string line;
  std::size_t lineno = 0;
  bool header_seen = false;
  while (std::getline(is, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line.front() == '#') {
      if (header_seen) continue;
      std::string_view body(line);
      body.remove_prefix(1);
      while (!body.empty() && body.front() == ' ') body.remove_prefix(1);
      const auto eq = body.find('=');
      if (eq != std::string_view::npos) {
        t.meta.emplace_back(std::string(body.substr(0, eq)), std::string(body.substr(eq + 1)));
      }
      continue;
    }
    if (!header_seen) {
      if (line != scan_csv_header) {
        throw error(errc::schema_mismatch, "expected columns '" + std::string(scan_csv_header) +
                                               "', found '" + line + "'");
      }
      header_seen = true;
      continue;
    }
    const auto cols = detail::split(line, ',');
    if (cols.size() != 9) {
      throw error(errc::schema_mismatch, "line " + std::to_string(lineno) + " has " +
                                             std::to_string(cols.size()) + " columns, expected 9");
    }
    geometry_report r;
    r.at = {detail::parse_double_field(cols[0], lineno), detail::parse_double_field(cols[1], lineno)};
    r.value = detail::parse_double_field(cols[2], lineno);
    r.metric = {detail::parse_double_field(cols[3], lineno), detail::parse_double_field(cols[4], lineno),
                detail::parse_double_field(cols[5], lineno), r.at};
    r.det = detail::parse_double_field(cols[6], lineno);
    const double curv = detail::parse_double_field(cols[7], lineno);
    if (!std::isnan(curv)) r.curvature = curv;
    const auto cls = parse_stability_class(cols[8]);
    if (!cls) {
      throw error(errc::schema_mismatch,
                  "line " + std::to_string(lineno) + ": unknown class '" + std::string(cols[8]) + "'");
    }
    r.cls = *cls;
    t.records.push_back(r);
  }
  if (!header_seen) throw error(errc::schema_mismatch, "no column header found");
  return t;
}

inline scan_table read_scan_csv_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw error(errc::io_error, "cannot open " + path.string());
  return read_scan_csv(in);
}

inline nlohmann::ordered_json report_json(const geometry_report& r) {
  nlohmann::ordered_json j;
  j["a1"] = r.at.a1;
  j["a2"] = r.at.a2;
  j["value"] = r.value;
  j["g11"] = r.metric.g11;
  j["g12"] = r.metric.g12;
  j["g22"] = r.metric.g22;
  j["det"] = r.det;
  if (r.curvature) j["curvature"] = *r.curvature; else j["curvature"] = nullptr;
  j["class"] = std::string(to_string(r.cls));
  return j;
}

inline nlohmann::ordered_json metadata_json(const metadata& meta) {
  nlohmann::ordered_json j = nlohmann::ordered_json::object();
  for (const auto& [k, v] : meta) j[k] = v;
  return j;
}

inline nlohmann::ordered_json transitions_json(const transition_set& t) {
  nlohmann::ordered_json j;
  j["spike_threshold"] = t.spike_threshold;
  j["bisection_tolerance"] = t.bisection_tolerance;
  j["degenerate_samples"] = t.degenerate_samples;
  j["det_zero_count"] = t.det_zeros.size();
  j["curvature_spike_count"] = t.curvature_spikes.size();
  j["det_zeros"] = nlohmann::ordered_json::array();
  for (const auto& z : t.det_zeros) {
    j["det_zeros"].push_back({{"line", std::string(to_string(z.line))},
                              {"fixed", z.fixed},
                              {"location", z.location},
                              {"bracket", z.bracket},
                              {"a1", z.at.a1},
                              {"a2", z.at.a2},
                              {"det", z.det_at_root}});
  }
  j["curvature_spikes"] = nlohmann::ordered_json::array();
  for (const auto& s : t.curvature_spikes) {
    j["curvature_spikes"].push_back({{"a1", s.at.a1}, {"a2", s.at.a2}, {"abs_curvature", s.magnitude}});
  }
  return j;
}

inline void write_scan_json(std::ostream& os, const metadata& meta,
                            const std::vector<geometry_report>& records,
                            const transition_set* transitions = nullptr) {
  nlohmann::ordered_json j;
  j["metadata"] = metadata_json(meta);
  j["records"] = nlohmann::ordered_json::array();
  for (const auto& r : records) j["records"].push_back(report_json(r));
  if (transitions) j["transitions"] = transitions_json(*transitions);
  os << j.dump(1) << '\n';
}

// ---------------------------------------------------------------------------
// Bus networks

inline bus_network parse_bus_network(const nlohmann::json& j) {
  bus_network net;
  try {
    for (const auto& b : j.at("buses")) {
      net.buses.push_back({b.at("id").get<std::string>(), b.value("vmag", 1.0), b.value("delta", 0.0)});
    }
    for (const auto& br : j.value("branches", nlohmann::json::array())) {
      net.branches.push_back({br.at("from").get<std::string>(), br.at("to").get<std::string>(),
                              br.at("ymag").get<double>(), br.value("g", 0.0), br.value("b", 0.0),
                              br.value("a", 0.0)});
    }
  } catch (const nlohmann::json::exception& e) {
    throw error(errc::parse_error, std::string("bus network: ") + e.what());
  }
  return net;
}

inline bus_network read_bus_network_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw error(errc::io_error, "cannot open " + path.string());
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw error(errc::parse_error, path.string() + ": " + e.what());
  }
  return parse_bus_network(j);
}

// ---------------------------------------------------------------------------
// Plot scripts

enum class plot_field { det, curvature, value };

inline std::optional<plot_field> parse_plot_field(std::string_view s) {
  if (s == "det") return plot_field::det;
  if (s == "curvature") return plot_field::curvature;
  if (s == "value") return plot_field::value;
  return std::nullopt;
}

constexpr std::string_view to_string(plot_field f) {
  switch (f) {
    case plot_field::det: return "det";
    case plot_field::curvature: return "curvature";
    case plot_field::value: return "value";
  }
  return "?";
}

inline bool is_diagonal_scan(const scan_table& t) {
  if (const auto* kind = t.find("kind")) return *kind == "diagonal";
  for (const auto& r : t.records)
    if (r.at.a1 != r.at.a2) return false;
  return !t.records.empty();
}

/// Writes a standalone matplotlib script next to `script`; the CSV is
/// referenced relative to the script's own directory.
inline void emit_plot_script(const std::filesystem::path& csv, plot_field field,
                             const std::filesystem::path& script) {
  namespace fs = std::filesystem;
  const scan_table table = read_scan_csv_file(csv);
  const bool diagonal = is_diagonal_scan(table);

  const fs::path script_dir = fs::absolute(script).parent_path();
  const std::string rel = fs::relative(fs::absolute(csv), script_dir).generic_string();
  const std::string column(to_string(field));

  std::ostringstream py;
  py << "#!/usr/bin/env python3\n"
     << "\"\"\"Plot '" << column << "' from " << rel << ".\"\"\"\n"
     << "from pathlib import Path\n\n"
     << "import matplotlib\n"
     << "matplotlib.use(\"Agg\")\n"
     << "import matplotlib.pyplot as plt\n"
     << "import numpy as np\n\n"
     << "HERE = Path(__file__).resolve().parent\n"
     << "CSV = HERE / \"" << rel << "\"\n"
     << "FIELD = \"" << column << "\"\n\n"
     << "data = np.genfromtxt(CSV, delimiter=\",\", comments=\"#\", names=True, dtype=None,\n"
     << "                     encoding=\"utf-8\", missing_values=\"nan\")\n";
  if (diagonal) {
    py << "a = data[\"a1\"]\n"
       << "fig, ax = plt.subplots()\n"
       << "ax.plot(a, data[FIELD])\n"
       << "ax.set_xlabel(\"a = a1 = a2 (rad)\")\n"
       << "ax.set_ylabel(FIELD)\n";
  } else {
    py << "a1 = np.unique(data[\"a1\"])\n"
       << "a2 = np.unique(data[\"a2\"])\n"
       << "grid = np.asarray(data[FIELD], dtype=float).reshape(len(a2), len(a1))\n"
       << "fig, ax = plt.subplots()\n"
       << "im = ax.imshow(grid, origin=\"lower\", aspect=\"auto\",\n"
       << "               extent=(a1[0], a1[-1], a2[0], a2[-1]))\n"
       << "fig.colorbar(im, ax=ax, label=FIELD)\n"
       << "ax.set_xlabel(\"a1 (rad)\")\n"
       << "ax.set_ylabel(\"a2 (rad)\")\n";
  }
  py << "ax.set_title(FIELD)\n"
     << "fig.savefig(HERE / (CSV.stem + \"_\" + FIELD + \".png\"), dpi=150)\n";

  std::ofstream out(script);
  if (!out) throw error(errc::io_error, "cannot write " + script.string());
  out << py.str();
}

}  // namespace powergeom
