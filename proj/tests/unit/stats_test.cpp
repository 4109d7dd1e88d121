// Copyright 2026 The palmfbm Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "oracles.hpp"
#include "palmfbm/errors.hpp"
#include "palmfbm/point_process.hpp"
#include "palmfbm/stats.hpp"
#include "palmfbm/stream.hpp"

namespace palmfbm {
namespace {

TEST(CountInBall, DirectExample) {
  const PointConfiguration c({-1.5, 0.0, 2.0}, ConfigKind::kPalm, {});
  EXPECT_EQ(count_in_ball(c, 1.6), 2u);
}

TEST(CountInBall, UnperturbedLatticeIntegerRadius) {
  std::vector<double> pts;
  for (int n = -50; n <= 50; ++n) pts.push_back(n);
  const PointConfiguration c(pts, ConfigKind::kPalm, {});
  for (int r = 1; r <= 50; ++r) EXPECT_EQ(count_in_ball(c, r), static_cast<std::size_t>(2 * r + 1));
}

TEST(CountInBall, MatchesBruteForceScan) {
  for (std::uint64_t i = 0; i < 100; ++i) {
    const auto c = poisson_configuration(100.0, StreamKey{40, i});
    RandomStream s(StreamKey{41, i});
    for (int j = 0; j < 10; ++j) {
      const double r = 0.1 + s.next_uniform() * (c.extent() / 2.0 - 0.1);
      EXPECT_EQ(count_in_ball(c, r), testing::brute_count(c.points(), -r, r));
    }
  }
}

TEST(CountInBall, RejectsRadiusBeyondHalfExtent) {
  const PointConfiguration c({-1.0, 0.0, 1.0}, ConfigKind::kPalm, {});
  EXPECT_THROW(count_in_ball(c, 1.5), WindowTooSmall);
  EXPECT_THROW(count_in_ball(c, 0.0), InvalidParameter);
}

TEST(LogSpaced, EndpointsAndRatio) {
  const auto r = log_spaced(16.0, 4096.0, 24);
  ASSERT_EQ(r.size(), 24u);
  EXPECT_EQ(r.front(), 16.0);
  EXPECT_EQ(r.back(), 4096.0);
  for (std::size_t i = 2; i < r.size(); ++i) {
    EXPECT_NEAR(r[i] / r[i - 1], r[1] / r[0], 1e-12);
  }
  EXPECT_EQ(default_radii(1 << 16).back(), 4096.0);
}

TEST(LoglogRegress, ExactPowerLaw) {
  RadialVarianceTable t;
  t.radii = log_spaced(2.0, 500.0, 12);
  for (double r : t.radii) t.var_count.push_back(3.0 * std::pow(r, 0.7));
  const auto fit = loglog_regress(t);
  EXPECT_NEAR(fit.slope, 0.7, 1e-12);
  EXPECT_NEAR(fit.intercept, std::log(3.0), 1e-12);
  EXPECT_NEAR(fit.r_squared, 1.0, 1e-12);
  EXPECT_EQ(fit.n_points, 12u);
  for (double e : fit.residuals) EXPECT_NEAR(e, 0.0, 1e-12);
}

TEST(LoglogRegress, ConstantVarianceHasZeroSlope) {
  RadialVarianceTable t;
  t.radii = {1.0, 2.0, 4.0, 8.0};
  t.var_count = {5.0, 5.0, 5.0, 5.0};
  const auto fit = loglog_regress(t);
  EXPECT_NEAR(fit.slope, 0.0, 1e-14);
  EXPECT_GE(fit.r_squared, 0.0);
  EXPECT_LE(fit.r_squared, 1.0);
}

TEST(LoglogRegress, Errors) {
  RadialVarianceTable t;
  t.radii = {1.0, 2.0};
  t.var_count = {1.0, 2.0};
  EXPECT_THROW(loglog_regress(t), InsufficientData);
  t.radii = {1.0, 2.0, 3.0};
  t.var_count = {1.0, 0.0, 2.0};
  EXPECT_THROW(loglog_regress(t), NonpositiveVariance);
}

TEST(LoglogRegress, WeightedRecoversExactPowerLaw) {
  RadialVarianceTable t;
  t.radii = log_spaced(2.0, 64.0, 6);
  for (double r : t.radii) {
    t.var_count.push_back(std::pow(r, 1.3));
    t.var_stderr.push_back(0.1 * r);
  }
  EXPECT_NEAR(loglog_regress_weighted(t).slope, 1.3, 1e-12);
}

ScanParameters small_scan(double h) {
  ScanParameters p;
  p.hurst = h;
  p.half_width = 1 << 12;
  p.radii = log_spaced(8.0, 256.0, 10);
  p.realizations = 400;
  p.bootstrap_resamples = 50;
  return p;
}

TEST(NumberVarianceScan, DegenerateEnsemble) {
  auto p = small_scan(0.25);
  p.realizations = 1;
  EXPECT_THROW(number_variance_scan(p, StreamKey{1, 0}), DegenerateEnsemble);
}

TEST(NumberVarianceScan, RadiusBeyondHalfWindow) {
  auto p = small_scan(0.25);
  p.radii = {8.0, 16.0, 3000.0};
  EXPECT_THROW(number_variance_scan(p, StreamKey{1, 0}), WindowTooSmall);
}

TEST(NumberVarianceScan, IdenticalAcrossThreadCounts) {
  auto p = small_scan(0.3);
  p.realizations = 101;
  p.threads = 1;
  const auto a = number_variance_scan(p, StreamKey{5, 0});
  p.threads = 4;
  const auto b = number_variance_scan(p, StreamKey{5, 0});
  EXPECT_EQ(a.var_count, b.var_count);
  EXPECT_EQ(a.mean_count, b.mean_count);
  EXPECT_EQ(a.var_stderr, b.var_stderr);
}

TEST(NumberVarianceScan, TableInvariants) {
  const auto t = number_variance_scan(small_scan(0.25), StreamKey{6, 0});
  EXPECT_EQ(t.realizations, 400u);
  for (std::size_t i = 0; i < t.radii.size(); ++i) {
    EXPECT_GE(t.var_count[i], 0.0);
    EXPECT_GT(t.var_stderr[i], 0.0);
    EXPECT_NEAR(t.mean_count[i], 2.0 * t.radii[i], 0.05 * t.radii[i]);
  }
}

TEST(NumberVarianceScan, PalmAndStationarizedAgreeOnExponent) {
  auto p = small_scan(0.25);
  p.mode = ScanMode::kPalm;
  const auto palm = exponent_sweep(std::vector<double>{0.25}, p, StreamKey{7, 0}).front();
  p.mode = ScanMode::kStationarized;
  const auto st = exponent_sweep(std::vector<double>{0.25}, p, StreamKey{8, 0}).front();
  EXPECT_NEAR(palm.slope, st.slope, 5.0 * std::hypot(palm.slope_stderr, st.slope_stderr));
}

TEST(ExponentSweep, SlopeOrderingAcrossTransition) {
  const auto sweep = exponent_sweep(std::vector<double>{0.25, 0.5, 0.75}, small_scan(0.5), StreamKey{9, 0});
  ASSERT_EQ(sweep.size(), 3u);
  EXPECT_LT(sweep[0].slope + 2.0 * sweep[0].slope_stderr, 1.0);
  EXPECT_GT(sweep[2].slope - 2.0 * sweep[2].slope_stderr, 1.0);
  EXPECT_NEAR(sweep[0].slope, 0.5, 0.08);
  EXPECT_NEAR(sweep[1].slope, 1.0, 0.1);
  EXPECT_NEAR(sweep[2].slope, 1.5, 0.12);
  for (const auto& e : sweep) EXPECT_GT(e.slope_stderr, 0.0);
}

TEST(ScanMode, ParsesNames) {
  EXPECT_EQ(parse_scan_mode("palm"), ScanMode::kPalm);
  EXPECT_EQ(parse_scan_mode(to_string(ScanMode::kStationarized)), ScanMode::kStationarized);
  EXPECT_FALSE(parse_scan_mode("x").has_value());
}

}  // namespace
}  // namespace palmfbm
