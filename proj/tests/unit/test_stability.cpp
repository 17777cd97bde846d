#include <gtest/gtest.h>

#include <cmath>

#include "powergeom/stability.hpp"
#include "support/oracles.hpp"

using namespace powergeom;

namespace {

jet3 quadratic(double a1, double a2) {
  const jet3 x = jet_seed(1, a1), y = jet_seed(2, a2);
  return x * x + y * y;
}

// S = a1^3/6 + a2^2/2: g = diag(a1, 1), det = a1
jet3 linear_det(double a1, double a2) {
  const jet3 x = jet_seed(1, a1), y = jet_seed(2, a2);
  return jet_linear(x * x * x, y * y, 1.0 / 6.0, 0.5);
}

}  // namespace

TEST(Classify, Examples) {
  EXPECT_EQ(classify_point(quadratic, {0.1, 0.2}), stability_class::stable);
  EXPECT_EQ(classify_point(surface(power_model{flow_kind::real}), {0, 0}), stability_class::degenerate);
  EXPECT_EQ(classify_point(surface(power_model{flow_kind::imaginary}), {0.5, 0.5}),
            stability_class::indefinite);
  EXPECT_EQ(classify_metric({-1, 0, -2, {}}), stability_class::negative_definite);
  EXPECT_EQ(classify_metric({1, 2, 1, {}}), stability_class::indefinite);
}

TEST(Classify, LabelsRoundTrip) {
  for (auto c : {stability_class::stable, stability_class::negative_definite, stability_class::indefinite,
                 stability_class::degenerate}) {
    EXPECT_EQ(parse_stability_class(to_string(c)), c);
  }
  EXPECT_FALSE(parse_stability_class("Stable").has_value());
}

TEST(Classify, InvariantUnderScale) {
  for (auto kind : {flow_kind::real, flow_kind::imaginary, flow_kind::complex}) {
    const auto a = surface(power_model{kind});
    const auto b = surface(power_model{kind, 3.0, 0.25});
    for (const auto& p : oracle::random_points(100, 61)) {
      EXPECT_EQ(classify_point(a, {p[0], p[1]}), classify_point(b, {p[0], p[1]}));
    }
  }
}

TEST(Report, DegenerateHasNoCurvature) {
  const auto r = analyze_point(surface(power_model{flow_kind::real}), {0.3, 0.3});
  EXPECT_EQ(r.cls, stability_class::degenerate);
  EXPECT_FALSE(r.curvature.has_value());
  const auto s = analyze_point(surface(power_model{flow_kind::real}), {0.3, -0.6});
  EXPECT_NE(s.cls, stability_class::degenerate);
  EXPECT_TRUE(s.curvature.has_value());
}

TEST(ScanGrid, ShapeAndOrder) {
  scan_options opt;
  opt.axis1 = {-0.1, 0.1};
  opt.axis2 = {0.2, 0.3};
  opt.n = 2;
  const grid_scan g = scan_grid(quadratic, opt);
  ASSERT_EQ(g.records.size(), 4u);
  EXPECT_EQ(g.records[0].at, (point2{-0.1, 0.2}));
  EXPECT_EQ(g.records[1].at, (point2{0.1, 0.2}));
  EXPECT_EQ(g.records[2].at, (point2{-0.1, 0.3}));
  EXPECT_EQ(g.records[3].at, (point2{0.1, 0.3}));
}

TEST(ScanGrid, BadDomain) {
  scan_options opt;
  opt.axis1 = {-1.56, 1.0};
  try {
    scan_grid(power_model{flow_kind::real}, opt);
    FAIL();
  } catch (const error& e) {
    EXPECT_EQ(e.code(), errc::bad_domain);
  }
  scan_options inverted;
  inverted.axis2 = {0.5, -0.5};
  EXPECT_THROW(scan_grid(power_model{flow_kind::real}, inverted), error);
}

TEST(ScanGrid, RealFlowHasBands) {
  const grid_scan g = scan_grid(power_model{flow_kind::real}, scan_options{});
  ASSERT_EQ(g.records.size(), 64u * 64u);
  std::size_t stable = 0;
  for (const auto& r : g.records) stable += r.cls == stability_class::stable;
  EXPECT_GT(stable, 0u);
  EXPECT_LT(stable, g.records.size());
}

TEST(ScanGrid, DeterministicAndThreadIndependent) {
  scan_options opt;
  opt.n = 41;
  const power_model m{flow_kind::complex};
  const grid_scan a = scan_grid(m, opt);
  const grid_scan b = scan_grid(m, opt);
  opt.threads = 5;
  const grid_scan c = scan_grid(m, opt);
  EXPECT_EQ(a.records, b.records);
  EXPECT_EQ(a.records, c.records);
}

TEST(ScanGrid, RefinementSharesPoints) {
  scan_options coarse, fine;
  coarse.n = 17;
  fine.n = 2 * 17 - 1;
  const power_model m{flow_kind::imaginary};
  const grid_scan a = scan_grid(m, coarse), b = scan_grid(m, fine);
  for (std::size_t j = 0; j < coarse.n; ++j)
    for (std::size_t i = 0; i < coarse.n; ++i) EXPECT_EQ(a.at(i, j), b.at(2 * i, 2 * j));
}

TEST(ScanDiagonal, ImaginaryCurvatureVanishes) {
  const auto recs = scan_diagonal(power_model{flow_kind::imaginary}, {-1.4, 1.4}, 101);
  ASSERT_EQ(recs.size(), 101u);
  std::size_t defined = 0;
  for (const auto& r : recs) {
    if (!r.curvature) continue;
    ++defined;
    EXPECT_LE(std::abs(*r.curvature), 1e-6) << r.at.a1;
  }
  EXPECT_GT(defined, 90u);
}

TEST(ScanDiagonal, RealDeterminantVanishes) {
  const power_model m{flow_kind::real};
  for (const auto& r : scan_diagonal(m, {-1.4, 1.4}, 101)) {
    EXPECT_LE(std::abs(r.det), 1e-9 * std::pow(1 / std::cos(r.at.a1), 8));
    EXPECT_EQ(r.cls, stability_class::degenerate);
  }
}

TEST(ScanDiagonal, ComplexOriginDegenerate) {
  const auto recs = scan_diagonal(power_model{flow_kind::complex}, {-1.0, 1.0}, 101);
  EXPECT_EQ(recs[50].at.a1, 0.0);
  EXPECT_EQ(recs[50].cls, stability_class::degenerate);
}

TEST(Transitions, LinearDeterminantRoot) {
  const auto line = scan_diagonal(linear_det, {-0.55, 0.45}, 11);
  // along the diagonal det = a, the root sits at 0
  const auto t = locate_transitions(linear_det, line, 1.0);
  ASSERT_EQ(t.det_zeros.size(), 1u);
  EXPECT_NEAR(t.det_zeros[0].location, 0.0, 1e-10);
  EXPECT_LE(t.det_zeros[0].bracket, 1e-10);
}

TEST(Transitions, GridRootsAlongA1) {
  scan_options opt;
  opt.axis1 = {-0.37, 0.61};
  opt.axis2 = {-0.5, 0.5};
  opt.n = 6;
  const grid_scan g = scan_grid(linear_det, opt);
  const auto t = locate_transitions(linear_det, g, 1.0);
  ASSERT_EQ(t.det_zeros.size(), 6u);
  for (const auto& z : t.det_zeros) {
    EXPECT_EQ(z.line, line_kind::vary_a1);
    EXPECT_NEAR(z.location, 0.0, 1e-10);
  }
}

TEST(Transitions, QuadraticIsEmpty) {
  scan_options opt;
  opt.n = 12;
  const auto t = locate_transitions(quadratic, scan_grid(quadratic, opt), 1.0);
  EXPECT_TRUE(t.det_zeros.empty());
  EXPECT_TRUE(t.curvature_spikes.empty());
  EXPECT_EQ(t.degenerate_samples, 0u);
}

TEST(Transitions, RootsHaveSmallDeterminant) {
  for (auto kind : {flow_kind::real, flow_kind::imaginary, flow_kind::complex}) {
    const power_model m{kind, 1.4, 0.9};
    const double k = m.scale();
    scan_options opt;
    opt.n = 48;
    opt.axis1 = opt.axis2 = {-1.3, 1.3};
    const auto t = locate_transitions(m, scan_grid(m, opt));
    EXPECT_FALSE(t.det_zeros.empty()) << to_string(kind);
    for (const auto& z : t.det_zeros) {
      EXPECT_LT(std::abs(metric_determinant(hessian_metric(surface(m), z.at))), 1e-8 * k * k);
      EXPECT_LE(z.bracket, 1e-10);
    }
    EXPECT_DOUBLE_EQ(t.spike_threshold, 1e6 / k);
  }
}

TEST(Transitions, ComplexDiagonalCountsReported) {
  const power_model m{flow_kind::complex};
  const auto t = locate_transitions(m, scan_diagonal(m, {-1.55, 1.55}, 257));
  // det(a,a) <= 0 with one zero at a = 0: no sign change, one degenerate sample
  EXPECT_TRUE(t.det_zeros.empty());
  EXPECT_EQ(t.degenerate_samples, 1u);
}
