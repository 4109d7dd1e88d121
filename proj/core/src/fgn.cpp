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

#include "palmfbm/fgn.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "fft.hpp"
#include "palmfbm/errors.hpp"

namespace palmfbm {
namespace {

constexpr double kEigenTolerance = 1e-10;

std::vector<double> embedding_spectrum(HurstIndex h, std::size_t n, const detail::ForwardDft& dft) {
  const std::size_t m = 2 * n;
  detail::ComplexBuffer row(m);
  detail::ComplexBuffer spectrum(m);
  for (std::size_t j = 0; j <= n; ++j) {
    row[j] = fgn_autocovariance(h, static_cast<std::int64_t>(j));
  }
  for (std::size_t j = n + 1; j < m; ++j) row[j] = row[m - j];
  dft.execute(row, spectrum);

  std::vector<double> lambda(m);
  double largest = 0.0;
  for (std::size_t k = 0; k < m; ++k) {
    lambda[k] = spectrum[k].real();
    largest = std::max(largest, lambda[k]);
  }
  const double tau = kEigenTolerance * largest;
  for (std::size_t k = 0; k < m; ++k) {
    if (lambda[k] < -tau) {
      throw NegativeEigenvalue("eigenvalue " + std::to_string(lambda[k]) + " at index " +
                               std::to_string(k) + " (h=" + std::to_string(h.value()) +
                               ", n=" + std::to_string(n) + ")");
    }
    if (lambda[k] < 0.0) lambda[k] = 0.0;
  }
  return lambda;
}

}  // namespace

double fgn_autocovariance(HurstIndex h, std::int64_t k) {
  const double a = std::fabs(static_cast<double>(k));
  const double e = h.two_h();
  if (a == 0.0) return 1.0;
  return 0.5 * (std::pow(a + 1.0, e) - 2.0 * std::pow(a, e) + std::pow(a - 1.0, e));
}

std::vector<double> circulant_eigenvalues(HurstIndex h, std::size_t n) {
  if (n < 2) throw InvalidParameter("circulant embedding needs n >= 2, got " + std::to_string(n));
  const detail::ForwardDft dft(2 * n);
  return embedding_spectrum(h, n, dft);
}

CirculantFgnSampler::CirculantFgnSampler(HurstIndex h, std::size_t n) : h_(h), n_(n) {
  if (n < 2) throw InvalidParameter("fGn sampler needs n >= 2, got " + std::to_string(n));
  dft_ = std::make_shared<const detail::ForwardDft>(2 * n);
  eigenvalues_ = embedding_spectrum(h, n, *dft_);
  const double scale = 1.0 / static_cast<double>(2 * n);
  amplitudes_.resize(eigenvalues_.size());
  std::transform(eigenvalues_.begin(), eigenvalues_.end(), amplitudes_.begin(),
                 [scale](double l) { return std::sqrt(l * scale); });
}

std::pair<std::vector<double>, std::vector<double>> CirculantFgnSampler::sample_pair(
    StreamKey key) const {
  const std::size_t m = 2 * n_;
  const RandomStream stream(key);
  detail::ComplexBuffer weights(m);
  detail::ComplexBuffer out(m);
  // Draw k supplies the complex normal attached to frequency k.
  for (std::size_t k = 0; k < m; ++k) {
    const auto z = stream.normal_pair(k);
    weights[k] = std::complex<double>(amplitudes_[k] * z[0], amplitudes_[k] * z[1]);
  }
  dft_->execute(weights, out);

  std::pair<std::vector<double>, std::vector<double>> result;
  result.first.resize(n_);
  result.second.resize(n_);
  for (std::size_t j = 0; j < n_; ++j) {
    result.first[j] = out[j].real();
    result.second[j] = out[j].imag();
  }
  return result;
}

std::vector<double> CirculantFgnSampler::sample(StreamKey key) const {
  return std::move(sample_pair(key).first);
}

std::vector<double> sample_fgn(HurstIndex h, std::size_t n, StreamKey key) {
  return CirculantFgnSampler(h, n).sample(key);
}

}  // namespace palmfbm
