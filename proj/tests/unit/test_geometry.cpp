#include <gtest/gtest.h>

#include <cmath>

#include "powergeom/geometry.hpp"
#include "powergeom/power_models.hpp"
#include "support/oracles.hpp"

using namespace powergeom;

namespace {

// S = a1^2 + a2^2
jet3 quadratic(double a1, double a2) {
  const jet3 x = jet_seed(1, a1), y = jet_seed(2, a2);
  return x * x + y * y;
}

// S = exp(a1) + exp(2 a2) + a1 a2 / 2, non-trivial third derivatives, positive definite near 0
jet3 exp_field(double a1, double a2) {
  jet3 s;
  const double e1 = std::exp(a1), e2 = std::exp(2 * a2);
  s.f = e1 + e2 + 0.5 * a1 * a2;
  s.f1 = e1 + 0.5 * a2;
  s.f2 = 2 * e2 + 0.5 * a1;
  s.f11 = e1;
  s.f12 = 0.5;
  s.f22 = 4 * e2;
  s.f111 = e1;
  s.f222 = 8 * e2;
  return s;
}

double rel(double a, double b) { return std::abs(a - b) / std::max(1.0, std::abs(b)); }

double brioschi_r(const jet3& j) {
  return 2 * oracle::brioschi_gaussian_curvature(j.f11, j.f12, j.f22, j.f111, j.f112, j.f122, j.f222);
}

const flow_kind all_kinds[] = {flow_kind::real, flow_kind::imaginary, flow_kind::complex};

}  // namespace

TEST(HessianMetric, QuadraticField) {
  const metric2 g = hessian_metric(quadratic, {0.3, -1.1});
  EXPECT_EQ(g.g11, 2.0);
  EXPECT_EQ(g.g12, 0.0);
  EXPECT_EQ(g.g22, 2.0);
  EXPECT_EQ(metric_determinant(g), 4.0);
}

TEST(HessianMetric, PowerOrigin) {
  const metric2 r = hessian_metric(surface(power_model{flow_kind::real}), {0, 0});
  EXPECT_NEAR(r.g11, -2, 1e-12);
  EXPECT_NEAR(r.g12, 2, 1e-12);
  EXPECT_NEAR(r.g22, -2, 1e-12);
  EXPECT_NEAR(metric_determinant(r), 0, 1e-12);
  const metric2 q = hessian_metric(surface(power_model{flow_kind::imaginary}), {0, 0});
  EXPECT_EQ(q.g11, 0.0);
  EXPECT_EQ(q.g12, 0.0);
  EXPECT_EQ(q.g22, 0.0);
}

TEST(HessianMetric, MatchesFiniteDifferenceHessian) {
  for (int which = 0; which < 3; ++which) {
    const power_model m{all_kinds[which]};
    const oracle::field2 f = oracle::power_field(which);
    for (const auto& p : oracle::random_points(25, 31)) {
      const metric2 g = hessian_metric(surface(m), {p[0], p[1]});
      EXPECT_LE(rel(g.g11, oracle::partial(f, p[0], p[1], 2, 0, 1e-3)), 1e-6);
      EXPECT_LE(rel(g.g12, oracle::partial(f, p[0], p[1], 1, 1, 1e-3)), 1e-6);
      EXPECT_LE(rel(g.g22, oracle::partial(f, p[0], p[1], 0, 2, 1e-3)), 1e-6);
    }
  }
}

TEST(HessianMetric, PropagatesDomainError) {
  EXPECT_THROW(hessian_metric(surface(power_model{flow_kind::real}), {1.5707963, 0.0}), error);
}

TEST(Degeneracy, RelativeToMetricScale) {
  const metric2 big{1e6, 1e6, 1e6, {}};
  EXPECT_TRUE(is_degenerate(big));
  const metric2 tiny{1e-3, 0, 1e-3, {}};
  EXPECT_FALSE(is_degenerate(tiny));
  EXPECT_TRUE(is_degenerate(metric2{}));
}

TEST(Curvature, QuadraticIsFlat) {
  EXPECT_EQ(scalar_curvature_closed(quadratic, {0.2, 0.4}), 0.0);
  EXPECT_EQ(scalar_curvature_oracle(quadratic, {0.2, 0.4}), 0.0);
}

TEST(Curvature, DegenerateAtRealOrigin) {
  try {
    scalar_curvature_closed(surface(power_model{flow_kind::real}), {0, 0});
    FAIL();
  } catch (const error& e) {
    EXPECT_EQ(e.code(), errc::degenerate_metric);
  }
  EXPECT_THROW(scalar_curvature_oracle(surface(power_model{flow_kind::real}), {0, 0}), error);
}

TEST(Curvature, ImaginaryDiagonalVanishes) {
  const auto f = surface(power_model{flow_kind::imaginary});
  EXPECT_NEAR(scalar_curvature_closed(f, {0.5, 0.5}), 0.0, 1e-9);
  EXPECT_NEAR(scalar_curvature_oracle(f, {0.5, 0.5}), 0.0, 1e-9);
}

TEST(Curvature, ClosedMatchesChristoffelAtSpecPoints) {
  const auto r = surface(power_model{flow_kind::real});
  const auto q = surface(power_model{flow_kind::imaginary});
  EXPECT_LE(rel(scalar_curvature_closed(r, {0.4, -0.3}), scalar_curvature_oracle(r, {0.4, -0.3})), 1e-6);
  EXPECT_LE(rel(scalar_curvature_closed(q, {0.7, 0.2}), scalar_curvature_oracle(q, {0.7, 0.2})), 1e-6);
}

TEST(Curvature, ClosedMatchesChristoffelAndBrioschi) {
  for (auto kind : all_kinds) {
    const power_model m{kind, 1.2, 0.8};
    const double k = m.scale();
    std::size_t used = 0;
    for (const auto& p : oracle::random_points(400, 41)) {
      const jet3 j = eval_power_jet(m, p[0], p[1]);
      if (std::abs(metric_determinant(metric_from_jet(j))) <= 0.1 * k * k) continue;
      const double closed = scalar_curvature_closed(j);
      EXPECT_LE(rel(closed, scalar_curvature_oracle(j)), 1e-6);
      EXPECT_LE(rel(closed, brioschi_r(j)), 1e-6);
      if (++used == 100) break;
    }
    EXPECT_EQ(used, 100u) << to_string(kind);
  }
}

TEST(Curvature, SyntheticFieldAgreesWithBrioschi) {
  for (const auto& p : oracle::random_points(50, 43, -0.5, 0.5)) {
    const jet3 j = exp_field(p[0], p[1]);
    EXPECT_LE(rel(scalar_curvature_closed(j), brioschi_r(j)), 1e-10);
    EXPECT_LE(rel(scalar_curvature_oracle(j), brioschi_r(j)), 1e-10);
  }
}

TEST(Curvature, AsPrintedVariantDisagrees) {
  // S12 S111 S222 != 0 at this point, so the two brackets differ
  const jet3 j = eval_power_jet(power_model{flow_kind::complex}, 0.4, -0.3);
  EXPECT_GT(rel(scalar_curvature_as_printed(j), scalar_curvature_oracle(j)), 1e-3);
}

TEST(Geometry, ScaleCovariance) {
  const double c = 3.5;
  for (auto kind : all_kinds) {
    const power_model base{kind}, scaled{kind, std::sqrt(c), 1.0};
    for (const auto& p : oracle::random_points(100, 47)) {
      const jet3 a = eval_power_jet(base, p[0], p[1]);
      const jet3 b = eval_power_jet(scaled, p[0], p[1]);
      EXPECT_LE(rel(b.f11, c * a.f11), 1e-12);
      EXPECT_LE(rel(b.f12, c * a.f12), 1e-12);
      EXPECT_LE(rel(b.f22, c * a.f22), 1e-12);
      const metric2 ga = metric_from_jet(a), gb = metric_from_jet(b);
      EXPECT_LE(rel(metric_determinant(gb), c * c * metric_determinant(ga)), 1e-9);
      if (std::abs(metric_determinant(ga)) > 1e-3) {
        EXPECT_LE(rel(scalar_curvature_closed(b), scalar_curvature_closed(a) / c), 1e-8);
      }
    }
  }
}

TEST(Geometry, RealExchangeSymmetry) {
  const power_model m{flow_kind::real};
  for (const auto& p : oracle::random_points(100, 53)) {
    const jet3 a = eval_power_jet(m, p[0], p[1]);
    const jet3 b = eval_power_jet(m, p[1], p[0]);
    EXPECT_NEAR(a.f11, b.f22, 1e-12 * std::max(1.0, std::abs(a.f11)));
    EXPECT_NEAR(a.f22, b.f11, 1e-12 * std::max(1.0, std::abs(a.f22)));
    EXPECT_NEAR(a.f12, b.f12, 1e-12 * std::max(1.0, std::abs(a.f12)));
    const double da = metric_determinant(metric_from_jet(a)), db = metric_determinant(metric_from_jet(b));
    EXPECT_LE(rel(da, db), 1e-12);
    if (!is_degenerate(metric_from_jet(a))) {
      EXPECT_LE(rel(scalar_curvature_closed(a), scalar_curvature_closed(b)), 1e-10);
    }
  }
}

TEST(Geometry, DiagonalIdentities) {
  const power_model r{flow_kind::real, 1.5, 2.0}, q{flow_kind::imaginary, 1.5, 2.0},
      c{flow_kind::complex, 1.5, 2.0};
  const double k = r.scale();
  for (double a : oracle::diagonal_samples()) {
    const double sec8 = std::pow(1 / std::cos(a), 8);
    const metric2 gr = metric_from_jet(eval_power_jet(r, a, a));
    const auto want = oracle::real_diagonal_metric(a, k);
    EXPECT_LE(rel(gr.g11, want[0]), 1e-12);
    EXPECT_LE(rel(gr.g12, want[1]), 1e-12);
    EXPECT_LE(rel(gr.g22, want[2]), 1e-12);
    EXPECT_LE(std::abs(metric_determinant(gr)), 1e-9 * k * k * sec8);

    const double expected = oracle::complex_diagonal_det(a, k);
    for (const auto& m : {q, c}) {
      const double det = metric_determinant(metric_from_jet(eval_power_jet(m, a, a)));
      EXPECT_LE(std::abs(det - expected), 1e-9 * std::abs(expected)) << to_string(m.kind) << " a=" << a;
    }
    EXPECT_LE(std::abs(scalar_curvature_closed(eval_power_jet(q, a, a))), 1e-6);
  }
}
