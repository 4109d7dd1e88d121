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

#include "palmfbm/fbm.hpp"

#include <Eigen/Cholesky>
#include <Eigen/Core>

#include <algorithm>
#include <cmath>
#include <string>

#include "palmfbm/errors.hpp"

namespace palmfbm {
namespace detail {

/// Lower Cholesky factor of the fBm covariance at the nonzero points of a
/// sorted point set; the zero point is re-inserted with value exactly 0.
class DenseFbmFactor {
 public:
  DenseFbmFactor(HurstIndex h, std::span<const double> points) {
    const std::size_t n = points.size();
    if (n == 0) throw InvalidParameter("dense fBm sampler needs at least one point");
    if (n > kDenseSamplerLimit) {
      throw InvalidParameter("dense fBm sampler is limited to " +
                             std::to_string(kDenseSamplerLimit) + " points, got " +
                             std::to_string(n));
    }
    for (std::size_t i = 1; i < n; ++i) {
      if (!(points[i] > points[i - 1])) {
        throw InvalidParameter("points must be strictly increasing");
      }
    }
    const auto zero = std::find(points.begin(), points.end(), 0.0);
    if (zero == points.end()) throw InvalidParameter("points must contain the origin");
    zero_index_ = static_cast<std::size_t>(zero - points.begin());
    size_ = n;

    nonzero_.reserve(n - 1);
    for (std::size_t i = 0; i < n; ++i) {
      if (i != zero_index_) nonzero_.push_back(points[i]);
    }
    const auto k = static_cast<Eigen::Index>(nonzero_.size());
    if (k == 0) return;

    Eigen::MatrixXd cov(k, k);
    for (Eigen::Index i = 0; i < k; ++i) {
      for (Eigen::Index j = 0; j <= i; ++j) {
        cov(i, j) = cov(j, i) = fbm_covariance(h, nonzero_[i], nonzero_[j]);
      }
    }
    Eigen::LLT<Eigen::MatrixXd> llt(cov);
    if (llt.info() != Eigen::Success) {
      const double jitter = 1e-12 * cov.trace() / static_cast<double>(k);
      cov.diagonal().array() += jitter;
      llt.compute(cov);
      if (llt.info() != Eigen::Success) {
        throw FactorizationFailure("fBm covariance of " + std::to_string(k) +
                                   " points is not positive definite after jitter " +
                                   std::to_string(jitter));
      }
    }
    lower_ = llt.matrixL();
  }

  std::size_t size() const noexcept { return size_; }

  std::vector<double> sample(StreamKey key) const {
    std::vector<double> out(size_, 0.0);
    const auto k = lower_.rows();
    if (k == 0) return out;
    const RandomStream stream(key);
    Eigen::VectorXd z(k);
    for (Eigen::Index i = 0; i < k; i += 2) {
      const auto pair = stream.normal_pair(static_cast<std::uint64_t>(i / 2));
      z(i) = pair[0];
      if (i + 1 < k) z(i + 1) = pair[1];
    }
    const Eigen::VectorXd values = lower_.triangularView<Eigen::Lower>() * z;
    std::size_t src = 0;
    for (std::size_t i = 0; i < size_; ++i) {
      if (i != zero_index_) out[i] = values(static_cast<Eigen::Index>(src++));
    }
    return out;
  }

 private:
  std::size_t size_ = 0;
  std::size_t zero_index_ = 0;
  std::vector<double> nonzero_;
  Eigen::MatrixXd lower_;
};

}  // namespace detail

namespace {

void require_half_width(std::int64_t half_width) {
  if (half_width < 1) {
    throw InvalidParameter("lattice half-width N must be >= 1, got " + std::to_string(half_width));
  }
}

// B_n for n in [-N, N] from 2N increments, summed outward from the middle:
// B_n = X_N + ... + X_{N+n-1} and B_{-n} = -(X_{N-n} + ... + X_{N-1}).
std::vector<double> rebase(std::span<const double> increments, std::int64_t half_width) {
  const auto N = static_cast<std::size_t>(half_width);
  std::vector<double> values(2 * N + 1);
  values[N] = 0.0;
  double up = 0.0;
  double down = 0.0;
  for (std::size_t n = 1; n <= N; ++n) {
    up += increments[N + n - 1];
    down -= increments[N - n];
    values[N + n] = up;
    values[N - n] = down;
  }
  return values;
}

std::vector<double> glue_branches(std::span<const double> forward, std::span<const double> backward,
                                  std::int64_t half_width) {
  const auto N = static_cast<std::size_t>(half_width);
  std::vector<double> values(2 * N + 1);
  values[N] = 0.0;
  double up = 0.0;
  double down = 0.0;
  for (std::size_t n = 1; n <= N; ++n) {
    up += forward[n - 1];
    down += backward[n - 1];
    values[N + n] = up;
    values[N - n] = down;
  }
  return values;
}

}  // namespace

std::string_view to_string(TwoSidedMode mode) noexcept {
  switch (mode) {
    case TwoSidedMode::kRebased:
      return "rebased";
    case TwoSidedMode::kIndependentBranches:
      return "branches";
    case TwoSidedMode::kDense:
      return "dense";
  }
  return "unknown";
}

std::optional<TwoSidedMode> parse_two_sided_mode(std::string_view text) noexcept {
  if (text == "rebased") return TwoSidedMode::kRebased;
  if (text == "branches") return TwoSidedMode::kIndependentBranches;
  if (text == "dense") return TwoSidedMode::kDense;
  return std::nullopt;
}

double fbm_covariance(HurstIndex h, double s, double t) {
  const double e = h.two_h();
  return 0.5 * (std::pow(std::fabs(s), e) + std::pow(std::fabs(t), e) - std::pow(std::fabs(s - t), e));
}

FbmLatticeSampler::FbmLatticeSampler(HurstIndex h, std::int64_t half_width, TwoSidedMode mode)
    : h_(h), half_width_(half_width), mode_(mode) {
  require_half_width(half_width);
  const auto N = static_cast<std::size_t>(half_width);
  switch (mode) {
    case TwoSidedMode::kRebased:
      fgn_.emplace(h, 2 * N);
      break;
    case TwoSidedMode::kIndependentBranches:
      fgn_.emplace(h, std::max<std::size_t>(N, 2));
      break;
    case TwoSidedMode::kDense: {
      std::vector<double> lattice(2 * N + 1);
      for (std::size_t i = 0; i < lattice.size(); ++i) {
        lattice[i] = static_cast<double>(static_cast<std::int64_t>(i) - half_width);
      }
      dense_ = std::make_shared<const detail::DenseFbmFactor>(h, lattice);
      break;
    }
  }
}

std::pair<FbmPath, FbmPath> FbmLatticeSampler::sample_pair(StreamKey key) const {
  auto make = [&](std::vector<double> values, StreamKey k) {
    return FbmPath{half_width_, std::move(values), h_.value(), k, mode_};
  };
  switch (mode_) {
    case TwoSidedMode::kRebased: {
      auto [re, im] = fgn_->sample_pair(key);
      return {make(rebase(re, half_width_), key), make(rebase(im, half_width_), key)};
    }
    case TwoSidedMode::kIndependentBranches: {
      const StreamKey k0 = key.child(0);
      const StreamKey k1 = key.child(1);
      auto [fwd0, bwd0] = fgn_->sample_pair(k0);
      auto [fwd1, bwd1] = fgn_->sample_pair(k1);
      return {make(glue_branches(fwd0, bwd0, half_width_), key),
              make(glue_branches(fwd1, bwd1, half_width_), key)};
    }
    case TwoSidedMode::kDense:
      return {make(dense_->sample(key.child(0)), key), make(dense_->sample(key.child(1)), key)};
  }
  throw InvalidParameter("unknown two-sided mode");
}

FbmPath FbmLatticeSampler::sample(StreamKey key) const { return std::move(sample_pair(key).first); }

FbmPath sample_fbm_lattice(HurstIndex h, std::int64_t half_width, StreamKey key, TwoSidedMode mode) {
  return FbmLatticeSampler(h, half_width, mode).sample(key);
}

std::vector<double> sample_fbm_points(HurstIndex h, std::span<const double> points, StreamKey key) {
  return detail::DenseFbmFactor(h, points).sample(key);
}

}  // namespace palmfbm
