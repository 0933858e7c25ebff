// include/adcf/rng.hpp

// Copyright 2026  The adcf authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#ifndef ADCF_RNG_HPP_
#define ADCF_RNG_HPP_

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

namespace adcf {

// Seed mixing (splitmix64).  Used to derive independent substreams from one
// user seed; std::seed_seq is avoided because its output is not pinned down
// well enough for cross-build reproducibility guarantees we document.
inline std::uint64_t MixSeed(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

inline std::uint64_t DeriveSeed(std::uint64_t seed, std::uint64_t stream,
                                std::uint64_t step = 0) {
  return MixSeed(MixSeed(seed ^ (stream * 0xA24BAED4963EE407ULL)) ^
                 (step * 0x9FB21C651E98DF25ULL));
}

// Deterministic random source.  The engine is the standard mt19937_64 (its
// output sequence is fully specified); all value mappings are implemented
// here instead of via std distributions, whose results may differ between
// standard library implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t Bits() { return engine_(); }

  /// Uniform double in [0, 1), 53-bit resolution.
  double Unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  /// Uniform double in [lo, hi).
  double Uniform(double lo, double hi) { return lo + (hi - lo) * Unit(); }

  /// Standard normal deviate via Box-Muller; caches the paired value.
  double Gaussian() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    // 1 - Unit() lies in (0, 1], so the log argument never vanishes.
    double u1 = 1.0 - Unit();
    double u2 = Unit();
    double radius = std::sqrt(-2.0 * std::log(u1));
    double angle = 2.0 * M_PI * u2;
    spare_ = radius * std::sin(angle);
    has_spare_ = true;
    return radius * std::cos(angle);
  }

  /// Uniform integer in [0, n) by rejection sampling; n must be positive.
  std::uint64_t Below(std::uint64_t n) {
    std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t value = engine_();
    while (value >= limit) value = engine_();
    return value % n;
  }

  /// Fisher-Yates shuffle with this source.
  template <typename T>
  void Shuffle(std::vector<T> *items) {
    for (std::size_t i = items->size(); i > 1; --i) {
      std::size_t j = static_cast<std::size_t>(Below(i));
      std::swap((*items)[i - 1], (*items)[j]);
    }
  }

 private:
  std::mt19937_64 engine_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace adcf

#endif  // ADCF_RNG_HPP_
