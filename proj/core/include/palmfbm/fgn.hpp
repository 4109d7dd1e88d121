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

#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <utility>
#include <vector>

#include "palmfbm/hurst.hpp"
#include "palmfbm/stream.hpp"

namespace palmfbm {

namespace detail {
class ForwardDft;
}

/// Covariance of unit-lag fBm increments:
/// gamma(k) = (|k+1|^{2h} - 2|k|^{2h} + |k-1|^{2h}) / 2.
double fgn_autocovariance(HurstIndex h, std::int64_t k);

/// Eigenvalues of the 2n x 2n circulant matrix whose first row is
/// [gamma(0), ..., gamma(n), gamma(n-1), ..., gamma(1)].
///
/// Values in [-tau, 0) with tau = 1e-10 * max eigenvalue are clamped to 0;
/// anything below -tau throws NegativeEigenvalue.
std::vector<double> circulant_eigenvalues(HurstIndex h, std::size_t n);

/// Exact fractional Gaussian noise sampler by circulant embedding.
///
/// Construction computes the embedding spectrum once (O(n log n)); each
/// sample is one complex FFT of size 2n whose real and imaginary parts are
/// two independent exact fGn vectors. The object is immutable and may be
/// shared between threads.
class CirculantFgnSampler {
 public:
  CirculantFgnSampler(HurstIndex h, std::size_t n);

  HurstIndex hurst() const noexcept { return h_; }
  std::size_t size() const noexcept { return n_; }
  std::size_t embedding_size() const noexcept { return 2 * n_; }
  std::span<const double> eigenvalues() const noexcept { return eigenvalues_; }

  /// Real and imaginary outputs of one FFT, in that order.
  std::pair<std::vector<double>, std::vector<double>> sample_pair(StreamKey key) const;
  /// First member of sample_pair(key).
  std::vector<double> sample(StreamKey key) const;

 private:
  HurstIndex h_;
  std::size_t n_;
  std::vector<double> eigenvalues_;
  std::vector<double> amplitudes_;  // sqrt(lambda_k / 2n)
  std::shared_ptr<const detail::ForwardDft> dft_;
};

/// n exact fGn increments; equivalent to CirculantFgnSampler(h, n).sample(key).
std::vector<double> sample_fgn(HurstIndex h, std::size_t n, StreamKey key);

}  // namespace palmfbm
