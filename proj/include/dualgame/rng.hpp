// Copyright 2026 The dualgame Authors
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

#ifndef DUALGAME_RNG_HPP
#define DUALGAME_RNG_HPP

#include <cmath>
#include <cstdint>

namespace dualgame {

/// Counter-based pseudo-random stream with cheap splitting.
///
/// Every draw is a pure function of (seed, stream path, counter), so results
/// are identical across platforms and independent of how work is divided
/// among loops or threads: `substream(i)` yields a stream that is disjoint
/// from its parent and from every other child id, which lets simulations
/// assign one child per trial and stay reproducible under any scheduling.
///
/// The mixing function is the 64-bit finalizer used by splitmix64; outputs
/// pass casual uniformity checks and are more than adequate for Monte Carlo
/// sampling (this is not a cryptographic generator).
class SeedStream {
 public:
  explicit SeedStream(std::uint64_t seed, std::uint64_t stream = 0)
      : key_(mix(mix(seed + kGolden) ^ mix(stream + kStreamSalt))) {}

  /// Next raw 64-bit draw.
  std::uint64_t next_u64() {
    counter_ += 1;
    return mix(key_ + counter_ * kGolden);
  }

  /// Uniform double in [0, 1), with 53 random bits.
  double next_unit() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  /// Standard normal deviate (Box-Muller; consumes two uniform draws).
  double next_normal() {
    // 1 - u keeps the argument of log strictly positive.
    double u = 1.0 - next_unit();
    double v = next_unit();
    return std::sqrt(-2.0 * std::log(u)) * std::cos(2.0 * kPi * v);
  }

  /// Independent child stream; disjoint from this stream and from children
  /// with other ids, regardless of how many draws either side has made.
  SeedStream substream(std::uint64_t id) const {
    SeedStream child(0, 0);
    child.key_ = mix(key_ ^ mix(id + kChildSalt));
    child.counter_ = 0;
    return child;
  }

 private:
  static constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ull;
  static constexpr std::uint64_t kStreamSalt = 0x6a09e667f3bcc909ull;
  static constexpr std::uint64_t kChildSalt = 0x3c6ef372fe94f82bull;
  static constexpr double kPi = 3.14159265358979323846;

  static std::uint64_t mix(std::uint64_t x) {
    x ^= x >> 30;
    x *= 0xbf58476d1ce4e5b9ull;
    x ^= x >> 27;
    x *= 0x94d049bb133111ebull;
    x ^= x >> 31;
    return x;
  }

  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

}  // namespace dualgame

#endif  // DUALGAME_RNG_HPP
