#pragma once

// Two-angle power-flow surfaces, branch phase angles, and bus injections.
//
// Every surface is k * num(u) / (1 + u^2) with u = tan(a1) - tan(a2) and
// k = V^2 / R0; only the numerator depends on the flow kind.

#include <cmath>
#include <numbers>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "powergeom/error.hpp"
#include "powergeom/jet.hpp"

namespace powergeom {

enum class flow_kind { real, imaginary, complex };

constexpr std::string_view to_string(flow_kind kind) {
  switch (kind) {
    case flow_kind::real: return "real";
    case flow_kind::imaginary: return "imaginary";
    case flow_kind::complex: return "complex";
  }
  return "?";
}

inline std::optional<flow_kind> parse_flow_kind(std::string_view name) {
  if (name == "real") return flow_kind::real;
  if (name == "imaginary") return flow_kind::imaginary;
  if (name == "complex") return flow_kind::complex;
  return std::nullopt;
}

/// Angles closer than this to +-pi/2 are rejected.
inline constexpr double default_domain_guard = 1e-6;

struct power_model {
  flow_kind kind = flow_kind::real;
  double v = 1.0;   // bus voltage magnitude
  double r0 = 1.0;  // base resistance

  power_model() = default;
  power_model(flow_kind k, double voltage = 1.0, double base_resistance = 1.0)
      : kind(k), v(voltage), r0(base_resistance) {
    if (!(v > 0.0) || !(r0 > 0.0) || !std::isfinite(v) || !std::isfinite(r0)) {
      throw error(errc::domain_error, "V and R0 must be positive and finite");
    }
  }

  double scale() const { return v * v / r0; }
};

namespace detail {

inline void check_angle(double a, const char* name, double guard) {
  if (!std::isfinite(a) || std::abs(a) >= std::numbers::pi / 2 - guard) {
    throw error(errc::domain_error, std::string("angle ") + name + " = " + std::to_string(a) +
                                        " rad is too close to +-pi/2");
  }
}

}  // namespace detail

inline double eval_power(const power_model& model, double a1, double a2,
                         double guard = default_domain_guard) {
  detail::check_angle(a1, "a1", guard);
  detail::check_angle(a2, "a2", guard);
  const double u = std::tan(a1) - std::tan(a2);
  const double den = 1.0 + u * u;
  const double k = model.scale();
  switch (model.kind) {
    case flow_kind::real: return k / den;
    case flow_kind::imaginary: return k * u / den;
    case flow_kind::complex: return k * (1.0 + u) / den;
  }
  return 0.0;
}

inline jet3 eval_power_jet(const power_model& model, double a1, double a2,
                           double guard = default_domain_guard) {
  detail::check_angle(a1, "a1", guard);
  detail::check_angle(a2, "a2", guard);
  const jet3 u = jet_tan(jet_seed(1, a1)) - jet_tan(jet_seed(2, a2));
  const jet3 one = jet_constant(1.0);
  const jet3 den = one + u * u;
  jet3 num;
  switch (model.kind) {
    case flow_kind::real: num = one; break;
    case flow_kind::imaginary: num = u; break;
    case flow_kind::complex: num = one + u; break;
  }
  return model.scale() * jet_div(num, den);
}

/// Callable adapter so a model can be handed to the geometry routines.
inline auto surface(const power_model& model) {
  return [model](double a1, double a2) { return eval_power_jet(model, a1, a2); };
}

struct branch_params {
  double r = 0.0;   // resistance
  double xl = 0.0;  // inductive reactance
  double xc = 0.0;  // capacitive reactance
};

struct phase_triplet {
  double inductive;
  double capacitive;
  double general;
};

inline phase_triplet phase_angles(const branch_params& b) {
  if (!(b.r > 0.0)) {
    throw error(errc::zero_resistance, "phase angles need a positive resistance");
  }
  return {std::atan(b.xl / b.r), std::atan(b.xc / b.r), std::atan((b.xl - b.xc) / b.r)};
}

struct bus {
  std::string id;
  double vmag = 1.0;
  double delta = 0.0;  // voltage angle, radians
};

struct branch {
  std::string from, to;
  double ymag = 0.0;
  double g = 0.0;
  double b = 0.0;
  double a = 0.0;  // impedance angle, radians
};

struct bus_network {
  std::vector<bus> buses;
  std::vector<branch> branches;
};

struct bus_injection {
  std::string id;
  double p = 0.0;
  double q = 0.0;
};

/// Net injections using the hybrid form |Vi||Vj||Yij| (G cos(.) + B sin(.)),
/// with both |Y| and (G, B) as factors. Each branch contributes to both ends,
/// with the angle argument a + delta_far - delta_near.
inline std::vector<bus_injection> bus_injections(const bus_network& net) {
  std::unordered_map<std::string, std::size_t> index;
  std::vector<bus_injection> out;
  out.reserve(net.buses.size());
  for (const auto& b : net.buses) {
    if (b.vmag < 0.0) {
      throw error(errc::domain_error, "bus " + b.id + " has negative voltage magnitude");
    }
    if (!index.emplace(b.id, out.size()).second) {
      throw error(errc::parse_error, "duplicate bus id " + b.id);
    }
    out.push_back({b.id, 0.0, 0.0});
  }

  auto lookup = [&](const std::string& id) {
    auto it = index.find(id);
    if (it == index.end()) throw error(errc::dangling_branch, "unknown bus id " + id);
    return it->second;
  };

  for (const auto& br : net.branches) {
    const std::size_t i = lookup(br.from);
    const std::size_t j = lookup(br.to);
    if (i == j) throw error(errc::dangling_branch, "self-loop on bus " + br.from);
    const auto& bi = net.buses[i];
    const auto& bj = net.buses[j];
    const double mag = bi.vmag * bj.vmag * br.ymag;
    auto add = [&](std::size_t near, const struct bus& n, const struct bus& far) {
      const double theta = br.a + far.delta - n.delta;
      out[near].p += mag * (br.g * std::cos(theta) + br.b * std::sin(theta));
      out[near].q += mag * (br.g * std::sin(theta) - br.b * std::cos(theta));
    };
    add(i, bi, bj);
    add(j, bj, bi);
  }
  return out;
}

}  // namespace powergeom
