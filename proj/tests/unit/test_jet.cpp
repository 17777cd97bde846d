#include <gtest/gtest.h>

#include <array>
#include <cmath>
#include <limits>
#include <random>

#include "powergeom/jet.hpp"
#include "powergeom/power_models.hpp"
#include "support/oracles.hpp"

using namespace powergeom;

namespace {

std::array<double, 10> slots(const jet3& j) {
  return {j.f, j.f1, j.f2, j.f11, j.f12, j.f22, j.f111, j.f112, j.f122, j.f222};
}

void expect_slots(const jet3& j, std::array<double, 10> want, double tol = 0.0) {
  const auto got = slots(j);
  for (std::size_t i = 0; i < 10; ++i) EXPECT_NEAR(got[i], want[i], tol) << "slot " << i;
}

void expect_close(const jet3& a, const jet3& b, double tol) {
  const auto x = slots(a), y = slots(b);
  for (std::size_t i = 0; i < 10; ++i) {
    EXPECT_LE(std::abs(x[i] - y[i]), tol * std::max(1.0, std::abs(y[i]))) << "slot " << i;
  }
}

jet3 random_jet(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> d(-2.0, 2.0);
  jet3 j;
  j.f = d(rng); j.f1 = d(rng); j.f2 = d(rng);
  j.f11 = d(rng); j.f12 = d(rng); j.f22 = d(rng);
  j.f111 = d(rng); j.f112 = d(rng); j.f122 = d(rng); j.f222 = d(rng);
  return j;
}

}  // namespace

TEST(JetSeed, VariableOne) { expect_slots(jet_seed(1, 0.7), {0.7, 1, 0, 0, 0, 0, 0, 0, 0, 0}); }

TEST(JetSeed, VariableTwo) { expect_slots(jet_seed(2, -0.3), {-0.3, 0, 1, 0, 0, 0, 0, 0, 0, 0}); }

TEST(JetSeed, RejectsBadIndex) {
  try {
    jet_seed(3, 0.0);
    FAIL();
  } catch (const error& e) {
    EXPECT_EQ(e.code(), errc::index_out_of_range);
  }
}

TEST(JetSeed, RejectsNonFinite) {
  EXPECT_THROW(jet_seed(1, std::numeric_limits<double>::quiet_NaN()), error);
  EXPECT_THROW(jet_constant(std::numeric_limits<double>::infinity()), error);
}

TEST(JetConstant, AllDerivativesZero) { expect_slots(jet_constant(4.5), {4.5, 0, 0, 0, 0, 0, 0, 0, 0, 0}); }

TEST(JetLinear, Examples) {
  const jet3 x = jet_seed(1, 1.3);
  expect_slots(jet_linear(x, x, 1.0, -1.0), {0, 0, 0, 0, 0, 0, 0, 0, 0, 0});
  expect_slots(jet_linear(jet_constant(2.0), jet_constant(3.0), 2.0, 1.0), {7, 0, 0, 0, 0, 0, 0, 0, 0, 0});
  expect_slots(jet_linear(jet_seed(1, 5.0), jet_constant(1.0), 1.0, 1.0), {6, 1, 0, 0, 0, 0, 0, 0, 0, 0});
  EXPECT_THROW(jet_linear(x, x, std::nan(""), 1.0), error);
}

TEST(JetMul, BilinearProduct) {
  expect_slots(jet_seed(1, 2.0) * jet_seed(2, 3.0), {6, 3, 2, 0, 1, 0, 0, 0, 0, 0});
}

TEST(JetMul, Square) {
  const jet3 x = jet_seed(1, 3.0);
  expect_slots(x * x, {9, 6, 0, 2, 0, 0, 0, 0, 0, 0});
}

TEST(JetMul, ConstantScales) {
  std::mt19937_64 rng(3);
  const jet3 j = random_jet(rng);
  const jet3 r = jet_constant(-2.5) * j;
  const auto a = slots(j), b = slots(r);
  for (std::size_t i = 0; i < 10; ++i) EXPECT_DOUBLE_EQ(b[i], -2.5 * a[i]);
}

TEST(JetMul, MonomialThirdOrder) {
  // x^2 y at (2, 3): f = 12, f1 = 2xy, f2 = x^2, f11 = 2y, f12 = 2x, f112 = 2
  const jet3 x = jet_seed(1, 2.0), y = jet_seed(2, 3.0);
  expect_slots(x * x * y, {12, 12, 4, 6, 4, 0, 0, 2, 0, 0});
}

TEST(JetDiv, GeometricSeries) {
  const jet3 x = jet_seed(1, 0.0);
  expect_slots(jet_constant(1.0) / (jet_constant(1.0) + x), {1, -1, 0, 2, 0, 0, -6, 0, 0, 0});
}

TEST(JetDiv, SelfQuotientIsOne) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 20; ++i) {
    jet3 a = random_jet(rng);
    a.f += a.f >= 0 ? 0.5 : -0.5;
    expect_close(a / a, jet_constant(1.0), 1e-12);
  }
}

TEST(JetDiv, GuardRaises) {
  try {
    jet_constant(1.0) / jet_seed(1, 0.0);
    FAIL();
  } catch (const error& e) {
    EXPECT_EQ(e.code(), errc::division_by_near_zero);
  }
  EXPECT_THROW(jet_reciprocal(jet_constant(1e-15)), error);
  EXPECT_NO_THROW(jet_reciprocal(jet_constant(1e-13)));
}

TEST(JetElementary, TanSeries) { expect_slots(jet_tan(jet_seed(1, 0.0)), {0, 1, 0, 0, 0, 0, 2, 0, 0, 0}, 1e-15); }

TEST(JetElementary, SinSeries) { expect_slots(jet_sin(jet_seed(1, 0.0)), {0, 1, 0, 0, 0, 0, -1, 0, 0, 0}, 1e-15); }

TEST(JetElementary, IdentityOuter) {
  std::mt19937_64 rng(9);
  const jet3 u = random_jet(rng);
  EXPECT_EQ(jet_apply_univariate<double>({u.f, 1.0, 0.0, 0.0}, u), u);
}

TEST(JetElementary, TanEqualsSinOverCos) {
  for (const auto& p : oracle::random_points(100, 11)) {
    const jet3 u = jet_linear(jet_seed(1, p[0]), jet_seed(2, p[1]), 0.6, -0.4);
    expect_close(jet_tan(u), jet_sin(u) / jet_cos(u), 1e-12);
  }
}

TEST(JetAlgebra, CommutativityAndDistributivity) {
  std::mt19937_64 rng(21);
  for (int i = 0; i < 100; ++i) {
    const jet3 a = random_jet(rng), b = random_jet(rng), c = random_jet(rng);
    expect_close(a * b, b * a, 1e-12);
    const jet3 lhs = a * jet_linear(b, c, 0.75, -1.25);
    const jet3 rhs = jet_linear(a * b, a * c, 0.75, -1.25);
    expect_close(lhs, rhs, 1e-12);
  }
}

TEST(JetAlgebra, DivisionInverse) {
  std::mt19937_64 rng(22);
  for (int i = 0; i < 100; ++i) {
    const jet3 a = random_jet(rng);
    jet3 b = random_jet(rng);
    b.f = b.f >= 0 ? b.f + 0.5 : b.f - 0.5;
    expect_close((a / b) * b, a, 1e-12);
  }
}

TEST(JetOracle, PowerModelsMatchRichardsonCentralDifferences) {
  const auto points = oracle::random_points(100, 2024);
  for (int which = 0; which < 3; ++which) {
    const flow_kind kind = static_cast<flow_kind>(which);
    const power_model m{kind};
    const oracle::field2 f = oracle::power_field(which);
    double worst = 0.0;
    for (const auto& p : points) {
      const auto s = slots(eval_power_jet(m, p[0], p[1]));
      for (std::size_t k = 1; k < 10; ++k) {
        const auto [i, j] = oracle::slot_orders[k];
        const double fd = oracle::partial(f, p[0], p[1], i, j, oracle::base_step(i + j));
        worst = std::max(worst, std::abs(fd - s[k]) / std::max(1.0, std::abs(s[k])));
      }
    }
    EXPECT_LE(worst, 1e-6) << to_string(kind);
  }
}
