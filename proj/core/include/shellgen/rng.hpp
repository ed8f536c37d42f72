// Copyright 2026 The Shellgen Authors.
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

#include <cstdint>
#include <optional>
#include <string_view>

#include "shellgen/hash.hpp"

namespace shellgen {

/// Deterministic random stream: SplitMix64 (Steele, Lea & Flood) over a 64-bit
/// state. Every consumer in the library draws from this generator, never from
/// <random> distributions, whose output is implementation-defined.
///
/// Derived values:
///  - uniform01(): top 53 bits of next_u64() scaled by 2^-53, in [0, 1).
///  - uniform_int(lo, hi): rejection sampling on next_u64(), unbiased.
///  - gaussian(): Box-Muller on (1 - uniform01(), uniform01()); both variates
///    are used, the sine branch is cached and returned by the following call.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) noexcept : state_(seed) {}

  /// Independent child stream: seeded with derive_seed(seed, label, index).
  [[nodiscard]] static Rng child(std::uint64_t parent_seed, std::string_view label,
                                 std::uint64_t index = 0) noexcept {
    return Rng(derive_seed(parent_seed, label, index));
  }

  std::uint64_t next_u64() noexcept {
    state_ += 0x9e3779b97f4a7c15ULL;
    return mix64(state_);
  }

  double uniform01() noexcept {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) noexcept { return lo + (hi - lo) * uniform01(); }

  /// Uniform integer in the closed range [lo, hi].
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) noexcept;

  /// Standard normal variate.
  double gaussian() noexcept;
  double gaussian(double mean, double stddev) noexcept { return mean + stddev * gaussian(); }

 private:
  std::uint64_t state_;
  std::optional<double> spare_;
};

}  // namespace shellgen
