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

#include "palmfbm/fbm.hpp"
#include "palmfbm/parallel.hpp"
#include "palmfbm/point_process.hpp"
#include "palmfbm/stream.hpp"

namespace palmfbm::detail {

/// Stream layout for an ensemble of M lattice realizations: realizations
/// 2j and 2j+1 are the two paths drawn from key.child(j); the dePalmization
/// shift of realization i uses key.child(j).child(2 + i % 2).
inline StreamKey pair_key(StreamKey key, std::size_t pair) { return key.child(pair); }

inline StreamKey shift_key(StreamKey key, std::size_t realization) {
  return key.child(realization / 2).child(2 + realization % 2);
}

/// Calls visit(i, config) for every realization i in [0, M). `visit` must be
/// safe to call concurrently for distinct i. When `shift_halfwidth` > 0
/// each configuration is dePalmized first.
template <typename Visit>
void for_each_lattice_realization(const FbmLatticeSampler& sampler, std::size_t realizations,
                                  StreamKey key, double shift_halfwidth, unsigned threads,
                                  Visit&& visit) {
  const std::size_t pairs = (realizations + 1) / 2;
  parallel_for(pairs, threads, [&](std::size_t j) {
    auto paths = sampler.sample_pair(pair_key(key, j));
    for (std::size_t member = 0; member < 2; ++member) {
      const std::size_t i = 2 * j + member;
      if (i >= realizations) break;
      const FbmPath& path = member == 0 ? paths.first : paths.second;
      PointConfiguration palm = perturb_lattice_with(path);
      if (shift_halfwidth > 0.0) {
        visit(i, depalmize(palm, shift_halfwidth, shift_key(key, i)));
      } else {
        visit(i, palm);
      }
    }
  });
}

}  // namespace palmfbm::detail
