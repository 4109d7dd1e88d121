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

#include <boost/math/special_functions/zeta.hpp>

#include <cmath>
#include <numbers>
#include <vector>

#include "oracles.hpp"
#include "palmfbm/errors.hpp"
#include "palmfbm/point_process.hpp"
#include "palmfbm/spectrum.hpp"

namespace palmfbm {
namespace {

constexpr double kPi = std::numbers::pi;

TEST(StructureFactorSum, BrownianClosedForm) {
  for (int k = 1; k <= 31; ++k) {
    const double t = 0.1 * k;
    EXPECT_NEAR(structure_factor_sum(HurstIndex(0.5), t).value, brownian_structure_factor(t), 1e-10)
        << "t=" << t;
  }
}

TEST(StructureFactorSum, EvenInT) {
  for (double h : {0.25, 0.6}) {
    EXPECT_EQ(structure_factor_sum(HurstIndex(h), 1.3).value, structure_factor_sum(HurstIndex(h), -1.3).value);
  }
}

TEST(StructureFactorSum, MatchesLongerBruteForceSum) {
  const HurstIndex h(0.25);
  const auto adaptive = structure_factor_sum(h, kPi, 1e-10);
  const double brute = structure_factor_partial_sum(h, kPi, 10 * adaptive.terms);
  EXPECT_NEAR(adaptive.value, brute, 1e-8);
}

TEST(StructureFactorSum, TruncationCap) {
  EXPECT_THROW(structure_factor_sum(HurstIndex(0.1), 1e-3, 1e-12, 1000000), TruncationTooLarge);
  EXPECT_THROW(structure_factor_sum(HurstIndex(0.5), 0.0), InvalidParameter);
}

TEST(StructureFactorSum, NonnegativeOnGrid) {
  for (double h : {0.2, 0.5, 0.8}) {
    for (double t = 0.3; t < kPi; t += 0.4) {
      EXPECT_GE(structure_factor_sum(HurstIndex(h), t, 1e-10).value, -1e-9);
    }
  }
}

TEST(ContinuumStructureFactor, BrownianLaplaceCosineForm) {
  for (double t : {0.2, 1.0, 2.5}) {
    EXPECT_NEAR(continuum_structure_factor(HurstIndex(0.5), t), 1.0 / (1.0 + t * t / 4.0), 1e-9);
  }
}

TEST(ContinuumStructureFactor, MatchesContourRotationOracle) {
  for (double h : {0.15, 0.25, 0.4}) {
    for (double t : {1e-3, 0.05, 0.7, 2.0}) {
      EXPECT_NEAR(continuum_structure_factor(HurstIndex(h), t, 1e-10),
                  testing::continuum_by_rotation(h, t), 1e-8)
          << "h=" << h << " t=" << t;
    }
  }
}

TEST(ContinuumStructureFactor, MatchesStableSeriesOracle) {
  const std::pair<double, double> cases[] = {{0.6, 2.0}, {0.6, 3.0}, {0.75, 0.5}, {0.75, 1.0},
                                             {0.75, 2.0}, {0.9, 0.5}, {0.9, 1.5}};
  for (const auto& [h, t] : cases) {
    {
      EXPECT_NEAR(continuum_structure_factor(HurstIndex(h), t, 1e-10),
                  testing::continuum_by_stable_series(h, t), 1e-8)
          << "h=" << h << " t=" << t;
    }
  }
}

TEST(ContinuumStructureFactor, SmallTAsymptotics) {
  const HurstIndex h(0.25);
  EXPECT_NEAR(continuum_structure_factor(h, 0.02) / asymptotic_structure_factor(h, 0.02), 1.0, 0.05);
  for (double hv : {0.2, 0.25, 0.3}) {
    const HurstIndex hh(hv);
    EXPECT_NEAR(continuum_structure_factor(hh, 1e-3) / asymptotic_structure_factor(hh, 1e-3), 1.0, 0.02);
  }
}

TEST(ContinuumStructureFactor, PositiveEverywhereTested) {
  for (double h : {0.1, 0.3, 0.5, 0.7, 0.9}) {
    for (double t : {1e-3, 0.01, 0.1, 1.0, 3.0}) {
      EXPECT_GT(continuum_structure_factor(HurstIndex(h), t), 0.0) << h << ' ' << t;
    }
  }
}

TEST(ContinuumStructureFactor, HyperuniformityDichotomy) {
  EXPECT_LT(continuum_structure_factor(HurstIndex(0.3), 1e-3), 0.1);
  EXPECT_GT(continuum_structure_factor(HurstIndex(0.7), 1e-3), 10.0);
  EXPECT_NEAR(continuum_structure_factor(HurstIndex(0.5), 1e-3), 1.0, 0.01);
}

TEST(AsymptoticConstant, KnownValues) {
  EXPECT_NEAR(asymptotic_constant(HurstIndex(0.5)), 1.0, 1e-15);
  EXPECT_NEAR(asymptotic_constant(HurstIndex(0.25)), 0.5 * std::sqrt(kPi) * std::sin(kPi / 4.0), 1e-15);
  EXPECT_NEAR(asymptotic_constant(HurstIndex(0.25)), 0.6266571, 1e-7);
  for (double h = 0.01; h < 1.0; h += 0.01) EXPECT_GT(asymptotic_constant(HurstIndex(h)), 0.0);
}

TEST(AsymptoticStructureFactor, PowerLaw) {
  const HurstIndex h(0.25);
  EXPECT_NEAR(asymptotic_structure_factor(h, 0.04), asymptotic_constant(h) * 0.2, 1e-15);
}

TEST(DualGrid, MembershipAndRange) {
  const auto g = dual_grid(100.0, 0.5, 3.0);
  ASSERT_FALSE(g.empty());
  EXPECT_GE(g.front(), 0.5);
  EXPECT_LE(g.back(), 3.0);
  for (double t : g) EXPECT_TRUE(on_dual_grid(t, 100.0));
  EXPECT_FALSE(on_dual_grid(1.0, 100.0));
  EXPECT_FALSE(on_dual_grid(0.0, 100.0));
}

TEST(EmpiricalStructureFactor, BraggPeaksOfTheLattice) {
  const std::int64_t n = 256;
  std::vector<double> zero(2 * n + 1, 0.0);
  const std::vector<PointConfiguration> configs{perturb_lattice_with(zero, {})};
  EmpiricalOptions opt;
  opt.window_length = static_cast<double>(n);
  const double dt = 2.0 * kPi / opt.window_length;
  const std::vector<double> t{dt, 17 * dt, 2.0 * kPi};
  const auto curve = empirical_structure_factor(configs, t, opt);
  EXPECT_NEAR(curve.s[0], 0.0, 1e-9);
  EXPECT_NEAR(curve.s[1], 0.0, 1e-9);
  EXPECT_NEAR(curve.s[2], static_cast<double>(n), 1e-6);
}

TEST(EmpiricalStructureFactor, PoissonIsFlat) {
  std::vector<PointConfiguration> configs;
  for (std::uint64_t i = 0; i < 400; ++i) configs.push_back(poisson_configuration(512.0, StreamKey{3, i}));
  EmpiricalOptions opt;
  opt.window_length = 512.0;
  const auto t = dual_grid(512.0, 0.5, 3.0);
  const auto curve = empirical_structure_factor(configs, t, opt);
  for (std::size_t i = 0; i < t.size(); ++i) {
    EXPECT_NEAR(curve.s[i], 1.0, 5.0 * curve.trunc[i]) << "t=" << t[i];
  }
}

TEST(EmpiricalStructureFactor, TranslationInvariantOnDualGrid) {
  std::vector<PointConfiguration> a, b;
  for (std::uint64_t i = 0; i < 5; ++i) {
    auto c = poisson_configuration(64.0, StreamKey{4, i});
    a.push_back(c);
    b.push_back(translate(c, 0.37));
  }
  EmpiricalOptions opt;
  opt.window_length = 200.0;
  const auto t = dual_grid(200.0, 0.1, 3.0);
  const auto sa = empirical_structure_factor(a, t, opt);
  const auto sb = empirical_structure_factor(b, t, opt);
  for (std::size_t i = 0; i < t.size(); ++i) EXPECT_NEAR(sa.s[i], sb.s[i], 1e-9);
}

TEST(EmpiricalStructureFactor, RecurrenceMatchesDirectSum) {
  std::vector<PointConfiguration> configs{poisson_configuration(300.0, StreamKey{5, 0})};
  EmpiricalOptions grid;
  grid.window_length = 300.0;
  const auto t = dual_grid(300.0, 0.01, 6.0);
  const auto fast = empirical_structure_factor(configs, t, grid);
  const auto pts = configs[0].points();
  for (std::size_t i = 0; i < t.size(); i += 7) {
    double re = 0.0, im = 0.0;
    for (double x : pts) {
      re += std::cos(t[i] * x);
      im += std::sin(t[i] * x);
    }
    EXPECT_NEAR(fast.s[i], (re * re + im * im) / pts.size(), 1e-9);
  }
}

TEST(EmpiricalStructureFactor, OffGridNeedsOverride) {
  std::vector<PointConfiguration> configs{poisson_configuration(100.0, StreamKey{6, 0})};
  EmpiricalOptions opt;
  opt.window_length = 100.0;
  const std::vector<double> t{1.0};
  EXPECT_THROW(empirical_structure_factor(configs, t, opt), GridMismatch);
  opt.allow_off_grid = true;
  EXPECT_NO_THROW(empirical_structure_factor(configs, t, opt));
}

TEST(EmpiricalStructureFactor, PerturbedLatticeMatchesSum) {
  const HurstIndex h(0.25);
  const std::int64_t n = 1 << 10;
  EmpiricalOptions opt;
  opt.window_length = static_cast<double>(n);
  opt.threads = 2;
  const auto t = dual_grid(opt.window_length, 0.5, 3.0);
  std::vector<double> sub;
  for (std::size_t i = 0; i < t.size(); i += 20) sub.push_back(t[i]);
  const auto curve = empirical_structure_factor_lattice(h, n, 1000, StreamKey{7, 0}, sub, opt);
  for (std::size_t i = 0; i < sub.size(); ++i) {
    EXPECT_NEAR(curve.s[i], structure_factor_sum(h, sub[i], 1e-10).value, 5.0 * curve.trunc[i])
        << "t=" << sub[i];
  }
}

TEST(ApproximationGap, BrownianGapIsClosedForm) {
  const std::vector<double> t{0.3, 1.0, 2.0};
  const auto report = approximation_gap(HurstIndex(0.5), t);
  for (const auto& row : report.rows) {
    EXPECT_NEAR(row.gap, brownian_structure_factor(row.t) - 1.0 / (1.0 + row.t * row.t / 4.0), 1e-8);
  }
}

TEST(ApproximationGap, SubBrownianGapScalesLikeTSquared) {
  const HurstIndex h(0.25);
  const std::vector<double> t{0.4, 0.3, 0.2, 0.1};
  const auto report = approximation_gap(h, t);
  EXPECT_TRUE(report.within_bound);
  // Leading small-t behaviour of the sum-minus-integral difference:
  // gap / t^2 -> Gamma(1+2h) sin(pi h) 2 zeta(1+2h) / (2 pi)^{1+2h}.
  const double e = h.two_h();
  const double limit = std::tgamma(1.0 + e) * std::sin(kPi * h.value()) * 2.0 *
                       boost::math::zeta(1.0 + e) / std::pow(2.0 * kPi, 1.0 + e);
  const auto& last = report.rows.back();
  EXPECT_NEAR(last.gap / (last.t * last.t), limit, 0.02 * limit);
  for (const auto& row : report.rows) EXPECT_LE(row.gap / (row.t * row.t), report.max_gap_over_t2);
}

TEST(ApproximationGap, SuperBrownianGapBetweenZeroAndSix) {
  std::vector<double> t;
  for (double x = 0.2; x < kPi; x += 0.3) t.push_back(x);
  const auto report = approximation_gap(HurstIndex(0.75), t);
  EXPECT_TRUE(report.within_bound);
  for (const auto& row : report.rows) {
    EXPECT_GE(row.gap, -1e-8);
    EXPECT_LE(row.gap, 6.0);
  }
}

TEST(SpectrumMethod, ParsesNames) {
  for (auto m : {SpectrumMethod::kSum, SpectrumMethod::kContinuum, SpectrumMethod::kAsymptotic,
                 SpectrumMethod::kEmpirical}) {
    EXPECT_EQ(parse_spectrum_method(to_string(m)), m);
  }
}

TEST(EvaluateStructureFactor, TruncColumnSemantics) {
  const std::vector<double> t{0.5, 1.5};
  const auto sum = evaluate_structure_factor(HurstIndex(0.5), SpectrumMethod::kSum, t, 1e-10);
  EXPECT_GE(sum.trunc[0], 1.0);
  const auto asym = evaluate_structure_factor(HurstIndex(0.5), SpectrumMethod::kAsymptotic, t, 1e-10);
  EXPECT_EQ(asym.trunc[1], 0.0);
  EXPECT_EQ(asym.s[0], 1.0);
  EXPECT_THROW(evaluate_structure_factor(HurstIndex(0.5), SpectrumMethod::kEmpirical, t, 1e-10),
               InvalidParameter);
}

}  // namespace
}  // namespace palmfbm
