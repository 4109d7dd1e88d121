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

#include <array>
#include <cstdint>

namespace palmfbm {

/// Identifies one independent random stream: a master seed plus an index.
///
/// Every draw made on behalf of a stream is a pure function of the key and
/// a draw counter, so results never depend on which worker produced them.
struct StreamKey {
  std::uint64_t master_seed = 0;
  std::uint64_t stream_index = 0;

  /// Child stream `index` of this stream. Pure function of (key, index).
  StreamKey child(std::uint64_t index) const noexcept;

  friend bool operator==(const StreamKey&, const StreamKey&) = default;
};

/// Philox4x32-10 block function (Salmon et al., "Parallel random numbers:
/// as easy as 1, 2, 3").
struct Philox4x32 {
  using Counter = std::array<std::uint32_t, 4>;
  using Key = std::array<std::uint32_t, 2>;

  static Counter apply(Counter counter, Key key) noexcept;
};

/// Counter-addressed draws for one StreamKey.
///
/// The master seed is the Philox key; the 128-bit counter carries the
/// stream index in its upper half and the draw index in its lower half.
/// Random access methods are const and thread-safe; the sequential helpers
/// advance an internal cursor.
class RandomStream {
 public:
  explicit RandomStream(StreamKey key) noexcept;

  std::array<std::uint64_t, 2> bits(std::uint64_t draw) const noexcept;
  /// Two uniforms in the open interval (0, 1).
  std::array<double, 2> uniform_pair(std::uint64_t draw) const noexcept;
  /// Two independent standard normals (Box-Muller on uniform_pair).
  std::array<double, 2> normal_pair(std::uint64_t draw) const noexcept;

  double next_uniform() noexcept;
  double next_normal() noexcept;
  /// Uniform integer in [0, bound); bound must be positive.
  std::uint64_t next_below(std::uint64_t bound) noexcept;

  StreamKey key() const noexcept { return key_; }

 private:
  StreamKey key_;
  Philox4x32::Key philox_key_;
  std::uint64_t cursor_ = 0;
  double spare_uniform_ = 0.0;
  double spare_normal_ = 0.0;
  bool has_spare_uniform_ = false;
  bool has_spare_normal_ = false;
};

}  // namespace palmfbm
