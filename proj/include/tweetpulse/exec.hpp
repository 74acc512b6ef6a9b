// Copyright 2026 The Tweetpulse Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <vector>

namespace tp {

// Execution policy for the per-record corpus kernels. Serial is the
// reference path; parallel must produce identical output for any thread
// count, so kernels write results by index and never share mutable state.
enum class Exec { serial, parallel };

// Applies fn(i) for i in [0, n) and collects results in index order.
// The serial branch is the reference implementation the parallel branch is
// tested against.
template <typename Result, typename Fn>
std::vector<Result> map_indexed(std::size_t n, Exec exec, Fn&& fn) {
  std::vector<Result> out(n);
  if (exec == Exec::serial) {
    for (std::size_t i = 0; i < n; ++i) {
      out[i] = fn(i);
    }
    return out;
  }
#pragma omp parallel for schedule(static)
  for (long long i = 0; i < static_cast<long long>(n); ++i) {
    out[static_cast<std::size_t>(i)] = fn(static_cast<std::size_t>(i));
  }
  return out;
}

// splitmix64 step; used to derive independent RNG streams from one seed.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt);

}  // namespace tp
