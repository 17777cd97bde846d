#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "powergeom/power_models.hpp"
#include "support/oracles.hpp"

using namespace powergeom;
using std::numbers::pi;

TEST(EvalPower, Anchors) {
  EXPECT_DOUBLE_EQ(eval_power(power_model{flow_kind::real}, 0.0, 0.0), 1.0);
  EXPECT_NEAR(eval_power(power_model{flow_kind::imaginary}, pi / 4, 0.0), 0.5, 1e-15);
  EXPECT_NEAR(eval_power(power_model{flow_kind::complex}, pi / 4, 0.0), 1.0, 1e-15);
}

TEST(EvalPower, MatchesDirectFormulas) {
  const power_model r{flow_kind::real, 1.3, 0.7}, q{flow_kind::imaginary, 1.3, 0.7},
      c{flow_kind::complex, 1.3, 0.7};
  const double k = 1.3 * 1.3 / 0.7;
  for (const auto& p : oracle::random_points(100, 1)) {
    EXPECT_NEAR(eval_power(r, p[0], p[1]), oracle::power_real(p[0], p[1], k), 1e-12);
    EXPECT_NEAR(eval_power(q, p[0], p[1]), oracle::power_imaginary(p[0], p[1], k), 1e-12);
    EXPECT_NEAR(eval_power(c, p[0], p[1]), oracle::power_complex(p[0], p[1], k), 1e-12);
  }
}

TEST(EvalPower, DomainGuardNamesAngle) {
  const power_model m{flow_kind::real};
  try {
    eval_power(m, 0.1, pi / 2);
    FAIL();
  } catch (const error& e) {
    EXPECT_EQ(e.code(), errc::domain_error);
    EXPECT_NE(std::string(e.what()).find("a2"), std::string::npos);
  }
  EXPECT_THROW(eval_power_jet(m, -pi / 2 + 1e-7, 0.0), error);
  EXPECT_NO_THROW(eval_power(m, pi / 2 - 1e-4, 0.0));
}

TEST(PowerModel, RejectsNonPositiveParameters) {
  EXPECT_THROW((power_model{flow_kind::real, 0.0, 1.0}), error);
  EXPECT_THROW((power_model{flow_kind::real, 1.0, -1.0}), error);
  EXPECT_THROW((power_model{flow_kind::real, 1.0, std::nan("")}), error);
}

TEST(PowerModel, ParseKind) {
  EXPECT_EQ(parse_flow_kind("imaginary"), flow_kind::imaginary);
  EXPECT_FALSE(parse_flow_kind("reactive").has_value());
}

TEST(EvalPowerJet, OriginSlots) {
  const jet3 r = eval_power_jet(power_model{flow_kind::real}, 0.0, 0.0);
  EXPECT_DOUBLE_EQ(r.f, 1.0);
  EXPECT_DOUBLE_EQ(r.f1, 0.0);
  EXPECT_DOUBLE_EQ(r.f2, 0.0);
  EXPECT_DOUBLE_EQ(r.f11, -2.0);
  EXPECT_DOUBLE_EQ(r.f12, 2.0);
  EXPECT_DOUBLE_EQ(r.f22, -2.0);
  const jet3 q = eval_power_jet(power_model{flow_kind::imaginary, 2.0, 1.0}, 0.0, 0.0);
  EXPECT_DOUBLE_EQ(q.f1, 4.0);
  EXPECT_DOUBLE_EQ(q.f2, -4.0);
  EXPECT_DOUBLE_EQ(q.f11, 0.0);
  EXPECT_DOUBLE_EQ(q.f12, 0.0);
  EXPECT_DOUBLE_EQ(q.f22, 0.0);
}

TEST(EvalPowerJet, ValueSlotMatchesEvalPower) {
  for (auto kind : {flow_kind::real, flow_kind::imaginary, flow_kind::complex}) {
    const power_model m{kind, 1.1, 0.9};
    for (const auto& p : oracle::random_points(100, 4)) {
      EXPECT_NEAR(eval_power_jet(m, p[0], p[1]).f, eval_power(m, p[0], p[1]), 1e-14);
    }
  }
}

TEST(PowerProperties, ScaleLaw) {
  const double v = 1.7, r0 = 0.6, k = v * v / r0;
  for (auto kind : {flow_kind::real, flow_kind::imaginary, flow_kind::complex}) {
    const power_model unit{kind}, scaled{kind, v, r0};
    for (const auto& p : oracle::random_points(100, 5)) {
      const double a = eval_power(scaled, p[0], p[1]), b = k * eval_power(unit, p[0], p[1]);
      EXPECT_NEAR(a, b, 1e-14 * std::max(1.0, std::abs(b)));
    }
  }
}

TEST(PowerProperties, Symmetries) {
  const power_model r{flow_kind::real}, q{flow_kind::imaginary}, c{flow_kind::complex};
  for (const auto& p : oracle::random_points(100, 6)) {
    EXPECT_NEAR(eval_power(q, p[0], p[1]), -eval_power(q, p[1], p[0]), 1e-12);
    EXPECT_NEAR(eval_power(r, p[0], p[1]), eval_power(r, p[1], p[0]), 1e-12);
    EXPECT_NEAR(eval_power(c, p[0], p[1]), eval_power(r, p[0], p[1]) + eval_power(q, p[0], p[1]), 1e-12);
  }
}

TEST(PhaseAngles, Examples) {
  const auto a = phase_angles({1.0, 1.0, 0.0});
  EXPECT_DOUBLE_EQ(a.inductive, pi / 4);
  EXPECT_DOUBLE_EQ(a.capacitive, 0.0);
  EXPECT_DOUBLE_EQ(a.general, pi / 4);
  const auto b = phase_angles({1.0, 2.0, 2.0});
  EXPECT_DOUBLE_EQ(b.inductive, std::atan(2.0));
  EXPECT_DOUBLE_EQ(b.capacitive, std::atan(2.0));
  EXPECT_DOUBLE_EQ(b.general, 0.0);
  try {
    phase_angles({0.0, 1.0, 0.0});
    FAIL();
  } catch (const error& e) {
    EXPECT_EQ(e.code(), errc::zero_resistance);
  }
}

TEST(BusInjections, SingleBranchConductance) {
  bus_network net{{{"a", 1, 0}, {"b", 1, 0}}, {{"a", "b", 1, 1, 0, 0}}};
  for (const auto& inj : bus_injections(net)) {
    EXPECT_DOUBLE_EQ(inj.p, 1.0);
    EXPECT_DOUBLE_EQ(inj.q, 0.0);
  }
}

TEST(BusInjections, SingleBranchSusceptance) {
  bus_network net{{{"a", 1, 0}, {"b", 1, 0}}, {{"a", "b", 1, 0, 1, 0}}};
  for (const auto& inj : bus_injections(net)) {
    EXPECT_DOUBLE_EQ(inj.p, 0.0);
    EXPECT_DOUBLE_EQ(inj.q, -1.0);
  }
}

TEST(BusInjections, EmptyBranchList) {
  bus_network net{{{"a", 1, 0.2}, {"b", 0.9, -0.1}}, {}};
  for (const auto& inj : bus_injections(net)) {
    EXPECT_EQ(inj.p, 0.0);
    EXPECT_EQ(inj.q, 0.0);
  }
}

TEST(BusInjections, ThreeBusRowSums) {
  // |Y| * G summed over incident branches
  bus_network net{{{"1", 1, 0}, {"2", 1, 0}, {"3", 1, 0}},
                  {{"1", "2", 2.0, 0.5, 0, 0}, {"2", "3", 3.0, 0.25, 0, 0}, {"1", "3", 1.5, 2.0, 0, 0}}};
  const auto inj = bus_injections(net);
  ASSERT_EQ(inj.size(), 3u);
  EXPECT_DOUBLE_EQ(inj[0].p, 2.0 * 0.5 + 1.5 * 2.0);
  EXPECT_DOUBLE_EQ(inj[1].p, 2.0 * 0.5 + 3.0 * 0.25);
  EXPECT_DOUBLE_EQ(inj[2].p, 3.0 * 0.25 + 1.5 * 2.0);
  for (const auto& b : inj) EXPECT_DOUBLE_EQ(b.q, 0.0);
}

TEST(BusInjections, AngleEntersAsFarMinusNear) {
  const double d = 0.3;
  bus_network net{{{"a", 1, 0}, {"b", 1, d}}, {{"a", "b", 1, 1, 0, 0}}};
  const auto inj = bus_injections(net);
  EXPECT_NEAR(inj[0].q, std::sin(d), 1e-15);
  EXPECT_NEAR(inj[1].q, -std::sin(d), 1e-15);
}

TEST(BusInjections, Errors) {
  bus_network dangling{{{"a", 1, 0}}, {{"a", "zz", 1, 1, 0, 0}}};
  try {
    bus_injections(dangling);
    FAIL();
  } catch (const error& e) {
    EXPECT_EQ(e.code(), errc::dangling_branch);
  }
  bus_network loop{{{"a", 1, 0}}, {{"a", "a", 1, 1, 0, 0}}};
  EXPECT_THROW(bus_injections(loop), error);
  bus_network negative{{{"a", -1, 0}}, {}};
  EXPECT_THROW(bus_injections(negative), error);
}
