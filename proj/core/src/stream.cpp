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

#include "palmfbm/stream.hpp"

#include <cmath>
#include <numbers>

namespace palmfbm {
namespace {

constexpr std::uint32_t kPhiloxM0 = 0xD2511F53u;
constexpr std::uint32_t kPhiloxM1 = 0xCD9E8D57u;
constexpr std::uint32_t kPhiloxW0 = 0x9E3779B9u;
constexpr std::uint32_t kPhiloxW1 = 0xBB67AE85u;

std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

// 53 random bits mapped to the open interval (0, 1).
double to_open_unit(std::uint64_t x) noexcept {
  return (static_cast<double>(x >> 11) + 0.5) * 0x1.0p-53;
}

}  // namespace

StreamKey StreamKey::child(std::uint64_t index) const noexcept {
  return {master_seed, splitmix64(splitmix64(stream_index) ^ (index + 0x632BE59BD9B4E019ull))};
}

Philox4x32::Counter Philox4x32::apply(Counter ctr, Key key) noexcept {
  for (int round = 0; round < 10; ++round) {
    const std::uint64_t p0 = static_cast<std::uint64_t>(kPhiloxM0) * ctr[0];
    const std::uint64_t p1 = static_cast<std::uint64_t>(kPhiloxM1) * ctr[2];
    const auto hi0 = static_cast<std::uint32_t>(p0 >> 32);
    const auto lo0 = static_cast<std::uint32_t>(p0);
    const auto hi1 = static_cast<std::uint32_t>(p1 >> 32);
    const auto lo1 = static_cast<std::uint32_t>(p1);
    ctr = {hi1 ^ ctr[1] ^ key[0], lo1, hi0 ^ ctr[3] ^ key[1], lo0};
    key[0] += kPhiloxW0;
    key[1] += kPhiloxW1;
  }
  return ctr;
}

RandomStream::RandomStream(StreamKey key) noexcept
    : key_(key),
      philox_key_{static_cast<std::uint32_t>(key.master_seed),
                  static_cast<std::uint32_t>(key.master_seed >> 32)} {}

std::array<std::uint64_t, 2> RandomStream::bits(std::uint64_t draw) const noexcept {
  const Philox4x32::Counter ctr{static_cast<std::uint32_t>(draw),
                                static_cast<std::uint32_t>(draw >> 32),
                                static_cast<std::uint32_t>(key_.stream_index),
                                static_cast<std::uint32_t>(key_.stream_index >> 32)};
  const auto out = Philox4x32::apply(ctr, philox_key_);
  return {(static_cast<std::uint64_t>(out[1]) << 32) | out[0],
          (static_cast<std::uint64_t>(out[3]) << 32) | out[2]};
}

std::array<double, 2> RandomStream::uniform_pair(std::uint64_t draw) const noexcept {
  const auto b = bits(draw);
  return {to_open_unit(b[0]), to_open_unit(b[1])};
}

std::array<double, 2> RandomStream::normal_pair(std::uint64_t draw) const noexcept {
  const auto u = uniform_pair(draw);
  const double radius = std::sqrt(-2.0 * std::log(u[0]));
  const double angle = 2.0 * std::numbers::pi * u[1];
  return {radius * std::cos(angle), radius * std::sin(angle)};
}

double RandomStream::next_uniform() noexcept {
  if (has_spare_uniform_) {
    has_spare_uniform_ = false;
    return spare_uniform_;
  }
  const auto u = uniform_pair(cursor_++);
  spare_uniform_ = u[1];
  has_spare_uniform_ = true;
  return u[0];
}

double RandomStream::next_normal() noexcept {
  if (has_spare_normal_) {
    has_spare_normal_ = false;
    return spare_normal_;
  }
  const auto z = normal_pair(cursor_++);
  spare_normal_ = z[1];
  has_spare_normal_ = true;
  return z[0];
}

__extension__ using Uint128 = unsigned __int128;

std::uint64_t RandomStream::next_below(std::uint64_t bound) noexcept {
  // Lemire's multiply-shift with rejection; unbiased.
  const std::uint64_t threshold = (0 - bound) % bound;
  for (;;) {
    const auto b = bits(cursor_++);
    for (std::uint64_t x : b) {
      const Uint128 m = static_cast<Uint128>(x) * bound;
      if (static_cast<std::uint64_t>(m) >= threshold) {
        return static_cast<std::uint64_t>(m >> 64);
      }
    }
  }
}

}  // namespace palmfbm
