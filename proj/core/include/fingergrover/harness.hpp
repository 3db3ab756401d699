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

#ifndef FINGERGROVER_HARNESS_HPP_
#define FINGERGROVER_HARNESS_HPP_

#include <cstddef>
#include <cstdint>
#include <string>

#include "fingergrover/bit_string.hpp"
#include "fingergrover/random.hpp"
#include "fingergrover/search.hpp"

namespace fingergrover {

// Monte Carlo error statistics of the random-prime search on one instance.
struct ErrorStats {
  std::uint64_t trials = 0;
  std::uint64_t errors = 0;
  double empirical_rate = 0.0;
  // 1/c + 1/n.
  double theoretical_bound = 0.0;
  std::uint64_t bad_draws = 0;
  double bad_draw_fraction = 0.0;
  // 1/c.
  double bad_mass_bound = 0.0;
  // Exact fraction of bad primes in the family.
  double census_mass = 0.0;
  std::uint64_t good_draws = 0;
  std::uint64_t good_errors = 0;
  double good_failure_rate = 0.0;
  // sqrt(rate (1 - rate) / trials), binomial standard error.
  double stderr_rate = 0.0;
  double good_stderr = 0.0;
  double bad_fraction_stderr = 0.0;
};

// Trial i runs search_with_random_prime with a seed derived from
// (config.seed, i), so results do not depend on evaluation order. An error
// is a returned index whose window differs from the pattern. Raises
// ContractViolation unless the pattern occurs exactly once and
// InvalidArgument for trials < 100.
ErrorStats estimate_error_rate(const BitString& text, const BitString& pattern,
                               const SearchConfig& config, std::uint64_t trials);

// Exact error probability, averaged over every prime of the family. Good
// primes use the closed form, bad primes are simulated with the
// single-occurrence schedule.
struct ExactErrorBreakdown {
  double census_mass = 0.0;
  // Mean error over bad primes (0 when there are none).
  double bad_branch_error = 0.0;
  // 1 - sin^2((2r+1) theta).
  double good_branch_error = 0.0;
  double total = 0.0;
  double bound = 0.0;
};

ExactErrorBreakdown exact_error_rate(const BitString& text,
                                     const BitString& pattern, std::uint64_t c);

struct ComplexityReport {
  std::uint64_t n = 0;
  std::uint64_t m = 0;
  std::uint64_t c = 0;
  std::uint64_t d = 0;
  std::uint64_t largest_prime = 0;
  unsigned l = 0;
  unsigned qubits_total = 0;
  std::size_t queries = 0;
  double pi4_sqrt_n = 0.0;
};

// d = c n m, the largest of the first d primes and its bit length l, the
// qubit total ceil(log2 n) + l + 1, and the query count
// floor(pi / (4 asin(1/sqrt n))).
ComplexityReport complexity_report(std::uint64_t n, std::uint64_t m,
                                   std::uint64_t c);

std::string to_json(const ComplexityReport& report, bool pretty = false);

struct PlantedInstance {
  BitString text;
  BitString pattern;
  std::size_t position = 0;
};

// Random text of length n + m - 1 whose window at a random position occurs
// exactly once; rejection sampled. Raises Error after max_attempts.
PlantedInstance plant_unique_instance(std::size_t n, std::size_t m, Rng& rng,
                                      std::size_t max_attempts = 10'000);

}  // namespace fingergrover

#endif  // FINGERGROVER_HARNESS_HPP_
