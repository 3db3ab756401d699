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

#ifndef FINGERGROVER_UNIVERSALITY_HPP_
#define FINGERGROVER_UNIVERSALITY_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fingergrover/bit_string.hpp"
#include "fingergrover/hash_family.hpp"

namespace fingergrover {

struct UniversalityOptions {
  // Largest number of (Set, w) cases enumerated exhaustively; above it the
  // verifier samples `samples` random cases instead.
  std::uint64_t exhaustive_budget = 5'000'000;
  std::uint64_t samples = 20'000;
  std::uint64_t seed = 0;
};

struct UniversalityWitness {
  std::vector<BitString> set;
  BitString word;
  double ratio = 0.0;
};

struct UniversalityReport {
  std::size_t subset_size = 0;
  std::size_t word_length = 0;
  double eps = 0.0;
  double max_ratio = 0.0;
  bool exhaustive = false;
  std::uint64_t cases_tested = 0;
  // Total number of (Set, w) cases; saturates at UINT64_MAX.
  std::uint64_t cases_total = 0;
  double coverage = 0.0;
  bool violated = false;
  // Present whenever max_ratio > eps.
  std::optional<UniversalityWitness> witness;
};

// Checks |F_{Set,w}| / |F| <= eps where F_{Set,w} is the set of members that
// map w onto the image of some v in Set, over n-subsets Set of {0,1}^m not
// containing w. Exhaustive when the case count fits the budget, otherwise a
// seeded random sample (reported as non-exhaustive with its coverage).
// Requires 1 <= m <= 20.
UniversalityReport verify_strong_universality(
    const HashFamily& family, std::size_t n, double eps, std::size_t m,
    const UniversalityOptions& options = {});

std::string to_json(const UniversalityReport& report, bool pretty = false);

}  // namespace fingergrover

#endif  // FINGERGROVER_UNIVERSALITY_HPP_
