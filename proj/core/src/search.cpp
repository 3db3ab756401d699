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

#include "fingergrover/search.hpp"

#include <nlohmann/json.hpp>

#include "fingergrover/errors.hpp"
#include "fingergrover/primes.hpp"

namespace fingergrover {

AmplificationResult amplify_hashed_vocabulary(
    std::span<const FingerprintWord> hashed, const FingerprintWord& target,
    Rng& measurement_rng, const GroverOptions& options) {
  if (hashed.empty()) throw InvalidArgument("hashed vocabulary is empty");
  OracleSpec oracle;
  for (std::size_t k = 0; k < hashed.size(); ++k) {
    if (hashed[k].width() != target.width()) {
      throw InvalidArgument("fingerprint width mismatch between target and vocabulary");
    }
    if (hashed[k] == target) oracle.marked.push_back(k);
  }

  const std::size_t n = hashed.size();
  std::size_t iterations = 0;
  if (!oracle.marked.empty() && n >= 2) iterations = iteration_count(n, 1).iterations;

  GroverOptions run_options = options;
  run_options.fingerprint_qubits = target.width();
  const GroverRun run = run_grover(n, oracle, iterations, measurement_rng, run_options);
  return AmplificationResult{run.measured_index, oracle.count(), iterations,
                             run.oracle_queries, run.success_probability};
}

SearchOutcome search_with_member(const Vocabulary& vocabulary,
                                 const BitString& pattern,
                                 const HashFamily& family, std::size_t j,
                                 std::uint64_t seed, bool verify_classically) {
  if (pattern.size() != vocabulary.m()) {
    throw InvalidArgument("pattern length differs from vocabulary window length");
  }
  const auto hashed = hashed_vocabulary(vocabulary, family, j);
  const FingerprintWord target = family.evaluate(j, pattern);
  Rng measurement = Rng::derive(seed, Stream::kMeasurement);
  const AmplificationResult result =
      amplify_hashed_vocabulary(hashed, target, measurement);

  SearchOutcome outcome;
  outcome.index = result.index;
  outcome.hash_id = family.hash_id(j);
  outcome.hash_index = j;
  outcome.iterations = result.iterations;
  outcome.oracle_queries = result.oracle_queries;
  outcome.qubits = QubitBudget{ceil_log2(vocabulary.n()), family.width(), 1};
  outcome.marked_count = result.marked_count;
  outcome.success_probability = result.success_probability;
  outcome.contract_violation =
      find_occurrences_classical(vocabulary.text(), pattern).size() != 1;
  if (verify_classically) outcome.is_correct = vocabulary[result.index] == pattern;
  return outcome;
}

SearchOutcome search_with_family(const BitString& text, const BitString& pattern,
                                 const HashFamily& family,
                                 const SearchConfig& config) {
  const Vocabulary vocabulary = build_vocabulary(text, pattern.size());
  Rng draw = Rng::derive(config.seed, Stream::kHashDraw);
  const std::size_t j = draw.below(family.size());
  return search_with_member(vocabulary, pattern, family, j, config.seed,
                            config.verify_classically);
}

SearchOutcome search_with_random_prime(const BitString& text,
                                       const BitString& pattern,
                                       const SearchConfig& config) {
  if (config.c < 3) throw InvalidArgument("c must be >= 3");
  if (pattern.empty()) throw InvalidArgument("window length must be at least 1");
  if (pattern.size() > text.size()) throw InvalidArgument("pattern longer than text");
  const std::uint64_t n = text.size() - pattern.size() + 1;
  const FreivaldsFamily family = freivalds_family(config.c, n, pattern.size());
  return search_with_family(text, pattern, family, config);
}

std::string to_json(const SearchOutcome& outcome, bool pretty) {
  nlohmann::ordered_json j;
  j["index"] = outcome.index;
  j["hash_id"] = outcome.hash_id;
  j["iterations"] = outcome.iterations;
  j["queries"] = outcome.oracle_queries;
  j["qubits"] = {{"index", outcome.qubits.index},
                 {"fingerprint", outcome.qubits.fingerprint},
                 {"ancilla", outcome.qubits.ancilla}};
  j["marked_count"] = outcome.marked_count;
  j["success_probability"] = outcome.success_probability;
  if (outcome.is_correct) j["is_correct"] = *outcome.is_correct;
  if (outcome.contract_violation) j["contract_violation"] = true;
  return j.dump(pretty ? 2 : -1) + "\n";
}

}  // namespace fingergrover
