// include/remixkit/rng.h

// Copyright 2026  RemixKit Authors

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

#ifndef REMIXKIT_RNG_H_
#define REMIXKIT_RNG_H_

#include <cstdint>
#include <initializer_list>
#include <random>

namespace remixkit {

// Named stream components. Every random decision in the toolkit draws from a
// stream addressed as (master seed, component, indices...), so output is
// independent of scheduling and reproducible byte-for-byte.
namespace streams {
inline constexpr std::uint64_t kSpeech = 1;
inline constexpr std::uint64_t kNoise = 2;
inline constexpr std::uint64_t kSnrLaw = 3;
inline constexpr std::uint64_t kPermP = 4;
inline constexpr std::uint64_t kPermQ = 5;
inline constexpr std::uint64_t kSnrTarget = 6;
inline constexpr std::uint64_t kShuffle = 7;
inline constexpr std::uint64_t kModelInit = 8;
}  // namespace streams

// Deterministic RNG. The engine is std::mt19937_64 (bit-exact by the
// standard); uniform and gaussian variates are derived from raw engine output
// here rather than through std::*_distribution, whose algorithms are
// implementation-defined.
class Rng {
 public:
  explicit Rng(std::uint64_t seed);

  // Derives an independent stream from (seed, path...). Same path, same
  // stream.
  static Rng stream(std::uint64_t seed, std::initializer_list<std::uint64_t> path);

  // Uniform on [0, 1).
  double uniform();
  // Uniform on [lo, hi).
  double uniform(double lo, double hi);
  // Uniform integer on [0, n). n must be positive.
  std::uint64_t uniform_int(std::uint64_t n);
  // Standard normal via Box-Muller; consumes two uniforms per call.
  double gaussian();
  double gaussian(double mean, double stddev);

  std::uint64_t raw() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

}  // namespace remixkit

#endif  // REMIXKIT_RNG_H_
