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
#include <span>
#include <string_view>

namespace shellgen {

/// 64-bit FNV-1a. Used for manifest content hashes and seed derivation, so the
/// constants below are part of the on-disk contract.
class Fnv1a64 {
 public:
  static constexpr std::uint64_t kOffsetBasis = 0xcbf29ce484222325ULL;
  static constexpr std::uint64_t kPrime = 0x100000001b3ULL;

  void update(std::span<const std::uint8_t> bytes) noexcept {
    for (std::uint8_t b : bytes) {
      state_ ^= b;
      state_ *= kPrime;
    }
  }
  void update(std::string_view text) noexcept {
    for (char c : text) {
      state_ ^= static_cast<std::uint8_t>(c);
      state_ *= kPrime;
    }
  }
  /// Feeds the value as 8 little-endian bytes.
  void update_u64(std::uint64_t value) noexcept {
    for (int i = 0; i < 8; ++i) {
      state_ ^= static_cast<std::uint8_t>(value >> (8 * i));
      state_ *= kPrime;
    }
  }

  [[nodiscard]] std::uint64_t digest() const noexcept { return state_; }

 private:
  std::uint64_t state_ = kOffsetBasis;
};

[[nodiscard]] inline std::uint64_t fnv1a64(std::string_view bytes) noexcept {
  Fnv1a64 h;
  h.update(bytes);
  return h.digest();
}

/// SplitMix64 output finalizer.
[[nodiscard]] constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// Stable seed for a (parent, label, index) triple:
/// mix64(FNV-1a(parent as 8 LE bytes || label bytes || index as 8 LE bytes)).
[[nodiscard]] inline std::uint64_t derive_seed(std::uint64_t parent, std::string_view label,
                                               std::uint64_t index = 0) noexcept {
  Fnv1a64 h;
  h.update_u64(parent);
  h.update(label);
  h.update_u64(index);
  return mix64(h.digest());
}

}  // namespace shellgen
