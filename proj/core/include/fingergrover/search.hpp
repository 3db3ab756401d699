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

#ifndef FINGERGROVER_SEARCH_HPP_
#define FINGERGROVER_SEARCH_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>

#include "fingergrover/amplitude.hpp"
#include "fingergrover/bit_string.hpp"
#include "fingergrover/fingerprint.hpp"
#include "fingergrover/hash_family.hpp"
#include "fingergrover/random.hpp"
#include "fingergrover/vocabulary.hpp"

namespace fingergrover {

struct SearchConfig {
  // Redundancy factor; the prime family has d = c * n * m members.
  std::uint64_t c = 3;
  std::uint64_t seed = 0;
  // Compare the returned window with the pattern afterwards. Observational
  // only, the returned index is never changed.
  bool verify_classically = false;
};

// Result of amplitude amplification over a hashed vocabulary.
struct AmplificationResult {
  std::size_t index = 0;
  std::size_t marked_count = 0;
  std::size_t iterations = 0;
  std::size_t oracle_queries = 0;
  double success_probability = 0.0;
};

struct SearchOutcome {
  std::size_t index = 0;
  // Prime for the Freivalds family, member index otherwise.
  std::uint64_t hash_id = 0;
  std::size_t hash_index = 0;
  std::size_t iterations = 0;
  std::size_t oracle_queries = 0;
  QubitBudget qubits;
  std::size_t marked_count = 0;
  // Exact probability mass on the marked set before measurement.
  double success_probability = 0.0;
  std::optional<bool> is_correct;
  // The pattern does not occur exactly once in the text.
  bool contract_violation = false;
};

// Grover search for `target` among hashed windows. Marks every k with
// hashed[k] == target and always schedules iteration_count(n, 1) rounds, the
// single-occurrence schedule, even when collisions mark more than one index.
// With nothing marked (or n = 1) no iterations run and the uniform state is
// measured. Raises InvalidArgument on a width mismatch or an empty list.
AmplificationResult amplify_hashed_vocabulary(
    std::span<const FingerprintWord> hashed, const FingerprintWord& target,
    Rng& measurement_rng, const GroverOptions& options = {});

// Search with a fixed family member j. Measurement randomness comes from
// Rng::derive(seed, Stream::kMeasurement).
SearchOutcome search_with_member(const Vocabulary& vocabulary,
                                 const BitString& pattern,
                                 const HashFamily& family, std::size_t j,
                                 std::uint64_t seed, bool verify_classically);

// Draws j uniformly from the family with Rng::derive(seed, Stream::kHashDraw)
// and runs search_with_member.
SearchOutcome search_with_family(const BitString& text, const BitString& pattern,
                                 const HashFamily& family,
                                 const SearchConfig& config);

// Same as search_with_family over freivalds_family(c, n, m).
SearchOutcome search_with_random_prime(const BitString& text,
                                       const BitString& pattern,
                                       const SearchConfig& config);

// Stable single-line JSON (two-space indented when pretty), newline
// terminated.
std::string to_json(const SearchOutcome& outcome, bool pretty = false);

}  // namespace fingergrover

#endif  // FINGERGROVER_SEARCH_HPP_
