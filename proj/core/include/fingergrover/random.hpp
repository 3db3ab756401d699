// Copyright 2026 The FingerGrover Authors. All rights reserved.
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

#ifndef FINGERGROVER_RANDOM_HPP_
#define FINGERGROVER_RANDOM_HPP_

#include <cstddef>
#include <cstdint>
#include <random>

namespace fingergrover {

// Well-known substream identifiers. A single user seed fans out into
// independent streams so that the classical hash draw and the quantum
// measurement can be reproduced separately.
enum class Stream : std::uint64_t {
  kHashDraw = 1,
  kMeasurement = 2,
  kTrial = 3,
  kInstance = 4,
};

// Seeded 64-bit generator with platform-independent derived quantities.
// std::uniform_*_distribution is implementation-defined, so sampling is done
// by hand on top of the (fully specified) mt19937_64 engine.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // Derives an independent generator from (seed, stream, index).
  static Rng derive(std::uint64_t seed, Stream stream, std::uint64_t index = 0);

  std::uint64_t next() { return engine_(); }

  // Uniform double in [0, 1) with 53 random bits.
  double unit();

  // Uniform integer in [0, bound). bound must be positive.
  std::uint64_t below(std::uint64_t bound);

  bool coin() { return (next() >> 63) != 0; }

 private:
  std::mt19937_64 engine_;
};

// SplitMix64 finalizer, used for seed derivation.
std::uint64_t mix64(std::uint64_t x);

}  // namespace fingergrover

#endif  // FINGERGROVER_RANDOM_HPP_
