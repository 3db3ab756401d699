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

#include "fingergrover/harness.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <nlohmann/json.hpp>

#include "fingergrover/census.hpp"
#include "fingergrover/errors.hpp"
#include "fingergrover/hash_family.hpp"
#include "fingergrover/primes.hpp"
#include "fingergrover/vocabulary.hpp"

namespace fingergrover {
namespace {

double binomial_stderr(double rate, std::uint64_t trials) {
  if (trials == 0) return 0.0;
  return std::sqrt(rate * (1.0 - rate) / static_cast<double>(trials));
}

double ratio(std::uint64_t num, std::uint64_t den) {
  return den == 0 ? 0.0 : static_cast<double>(num) / static_cast<double>(den);
}

}  // namespace

ErrorStats estimate_error_rate(const BitString& text, const BitString& pattern,
                               const SearchConfig& config, std::uint64_t trials) {
  if (trials < 100) throw InvalidArgument("at least 100 trials are required");
  const auto occurrences = find_occurrences_classical(text, pattern);
  if (occurrences.size() != 1) {
    throw ContractViolation("pattern occurs " + std::to_string(occurrences.size()) +
                            " times; error estimation needs exactly one occurrence");
  }
  const Vocabulary vocabulary = build_vocabulary(text, pattern.size());
  const FreivaldsFamily family =
      freivalds_family(config.c, vocabulary.n(), vocabulary.m());
  const auto bad = bad_prime_census(vocabulary, pattern, family.primes());

  ErrorStats stats;
  stats.trials = trials;
  for (std::uint64_t i = 0; i < trials; ++i) {
    const std::uint64_t trial_seed = Rng::derive(config.seed, Stream::kTrial, i).next();
    const SearchOutcome outcome =
        search_with_family(text, pattern, family, {config.c, trial_seed, false});
    const bool error = vocabulary[outcome.index] != pattern;
    const bool bad_draw = std::binary_search(bad.begin(), bad.end(), outcome.hash_id);
    stats.errors += error ? 1 : 0;
    if (bad_draw) {
      ++stats.bad_draws;
    } else {
      ++stats.good_draws;
      stats.good_errors += error ? 1 : 0;
    }
  }

  const double c = static_cast<double>(config.c);
  stats.empirical_rate = ratio(stats.errors, trials);
  stats.theoretical_bound = 1.0 / c + 1.0 / static_cast<double>(vocabulary.n());
  stats.bad_draw_fraction = ratio(stats.bad_draws, trials);
  stats.bad_mass_bound = 1.0 / c;
  stats.census_mass = census_mass(bad, family.primes());
  stats.good_failure_rate = ratio(stats.good_errors, stats.good_draws);
  stats.stderr_rate = binomial_stderr(stats.empirical_rate, trials);
  stats.good_stderr = binomial_stderr(stats.good_failure_rate, stats.good_draws);
  stats.bad_fraction_stderr = binomial_stderr(stats.census_mass, trials);
  return stats;
}

ExactErrorBreakdown exact_error_rate(const BitString& text,
                                     const BitString& pattern, std::uint64_t c) {
  const auto occurrences = find_occurrences_classical(text, pattern);
  if (occurrences.size() != 1) {
    throw ContractViolation("exact error rate needs exactly one occurrence");
  }
  const std::size_t truth = occurrences.front();
  const Vocabulary vocabulary = build_vocabulary(text, pattern.size());
  const std::size_t n = vocabulary.n();
  const FreivaldsFamily family = freivalds_family(c, n, vocabulary.m());
  const auto bad = bad_prime_census(vocabulary, pattern, family.primes());

  ExactErrorBreakdown out;
  out.census_mass = census_mass(bad, family.primes());
  out.bound = 1.0 / static_cast<double>(c) + 1.0 / static_cast<double>(n);
  const std::size_t r = n >= 2 ? iteration_count(n, 1).iterations : 0;
  if (n >= 2) {
    const double a = closed_form_amplitudes(n, 1, r).marked;
    out.good_branch_error = 1.0 - a * a;
  }

  double bad_error_sum = 0.0;
  for (std::uint64_t p : bad) {
    const auto residues = window_residues(vocabulary, p);
    const std::uint64_t target = horner_residue(pattern, p);
    OracleSpec oracle;
    for (std::size_t k = 0; k < n; ++k) {
      if (residues[k] == target) oracle.marked.push_back(k);
    }
    AmplitudeState state = init_uniform(n);
    for (std::size_t i = 0; i < r; ++i) {
      oracle_phase_flip(state, oracle);
      diffusion(state);
    }
    bad_error_sum += 1.0 - state.probability(truth);
  }
  if (!bad.empty()) bad_error_sum /= static_cast<double>(bad.size());
  out.bad_branch_error = bad_error_sum;
  out.total = out.census_mass * out.bad_branch_error +
              (1.0 - out.census_mass) * out.good_branch_error;
  return out;
}

ComplexityReport complexity_report(std::uint64_t n, std::uint64_t m,
                                   std::uint64_t c) {
  if (n == 0 || m == 0) throw InvalidArgument("n and m must be positive");
  if (c < 3) throw InvalidArgument("c must be >= 3");
  ComplexityReport report;
  report.n = n;
  report.m = m;
  report.c = c;
  report.d = c * n * m;
  report.largest_prime = first_primes(report.d).largest();
  report.l = bit_length(report.largest_prime);
  report.qubits_total = ceil_log2(n) + report.l + 1;
  report.queries = n >= 2 ? iteration_count(n, 1).iterations : 0;
  report.pi4_sqrt_n = std::numbers::pi / 4.0 * std::sqrt(static_cast<double>(n));
  return report;
}

std::string to_json(const ComplexityReport& report, bool pretty) {
  nlohmann::ordered_json j;
  j["n"] = report.n;
  j["m"] = report.m;
  j["c"] = report.c;
  j["d"] = report.d;
  j["largest_prime"] = report.largest_prime;
  j["l"] = report.l;
  j["qubits_total"] = report.qubits_total;
  j["queries"] = report.queries;
  j["pi4_sqrt_n"] = report.pi4_sqrt_n;
  return j.dump(pretty ? 2 : -1) + "\n";
}

PlantedInstance plant_unique_instance(std::size_t n, std::size_t m, Rng& rng,
                                      std::size_t max_attempts) {
  if (n == 0 || m == 0) throw InvalidArgument("n and m must be positive");
  const std::size_t length = n + m - 1;
  for (std::size_t attempt = 0; attempt < max_attempts; ++attempt) {
    std::vector<std::uint8_t> bits(length);
    for (auto& b : bits) b = rng.coin() ? 1 : 0;
    BitString text(std::move(bits));
    const std::size_t position = rng.below(n);
    BitString pattern = text.slice(position, m);
    if (find_occurrences_classical(text, pattern).size() == 1) {
      return PlantedInstance{std::move(text), std::move(pattern), position};
    }
  }
  throw Error("no unique-occurrence instance found for n = " + std::to_string(n) +
              ", m = " + std::to_string(m) + " after " +
              std::to_string(max_attempts) + " attempts");
}

}  // namespace fingergrover
