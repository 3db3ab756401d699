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

#ifndef FINGERGROVER_AMPLITUDE_HPP_
#define FINGERGROVER_AMPLITUDE_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "fingergrover/random.hpp"

namespace fingergrover {

// Qubits needed by one search: index register, fingerprint register and the
// phase-kickback ancilla.
struct QubitBudget {
  unsigned index = 0;
  unsigned fingerprint = 0;
  unsigned ancilla = 1;

  unsigned total() const { return index + fingerprint + ancilla; }
  friend bool operator==(const QubitBudget&, const QubitBudget&) = default;
};

// Real amplitudes over the n-element index register.
//
// The fingerprint register of the full state is a deterministic function of
// the index and the ancilla returns to |1> after every oracle call, so the
// full state is (sum_k a_k |k>|v_k>) |1> and only a_k needs storing. The
// budget still records the width of the registers that are not simulated.
class AmplitudeState {
 public:
  AmplitudeState(std::vector<double> amplitudes, QubitBudget budget);

  std::size_t size() const { return amplitudes_.size(); }
  std::span<const double> amplitudes() const { return amplitudes_; }
  std::span<double> amplitudes() { return amplitudes_; }
  double operator[](std::size_t k) const { return amplitudes_[k]; }
  const QubitBudget& budget() const { return budget_; }

  double norm_squared() const;
  double probability(std::size_t k) const { return amplitudes_[k] * amplitudes_[k]; }

 private:
  std::vector<double> amplitudes_;
  QubitBudget budget_;
};

// Indices whose hashed window matches the hashed pattern. Sorted, unique.
struct OracleSpec {
  std::vector<std::size_t> marked;

  std::size_t count() const { return marked.size(); }
};

// Uniform 1/sqrt(n) superposition. n >= 1.
AmplitudeState init_uniform(std::size_t n, unsigned fingerprint_qubits = 0);

// Negates amplitudes of marked indices. Raises InvalidArgument on an index
// outside the register.
void oracle_phase_flip(AmplitudeState& state, const OracleSpec& oracle);

// Inversion about the mean: a_k <- 2 * mean - a_k with
// mean = coefficient * sum(a). The unitary operator uses coefficient = 1/n;
// other values exist only to demonstrate that they break unitarity.
void diffusion(AmplitudeState& state);
void diffusion(AmplitudeState& state, double coefficient);

struct IterationSchedule {
  std::size_t iterations = 0;
  // False when the count is undefined (t = 0 or n < 2); iterations is 0.
  bool defined = true;
};

// floor(pi / (4 theta)) with theta = asin(sqrt(t / n)).
IterationSchedule iteration_count(std::size_t n, std::size_t t = 1);

// Amplitude of each marked (marked) and each unmarked (unmarked) basis state
// in the two-dimensional invariant subspace.
struct AmplitudePair {
  double marked = 0.0;
  double unmarked = 0.0;
};

// After j iterations: sin((2j+1) theta) / sqrt(t) and
// cos((2j+1) theta) / sqrt(n - t). Requires 0 < t < n.
AmplitudePair closed_form_amplitudes(std::size_t n, std::size_t t, std::size_t j);

// One iteration as a 2x2 linear map:
//   marked'   = (n - 2t)/n * marked + 2(n - t)/n * unmarked
//   unmarked' = (n - 2t)/n * unmarked - 2t/n * marked
// Raises InvalidArgument when t*marked^2 + (n-t)*unmarked^2 is off 1 by more
// than 1e-9.
AmplitudePair recurrence_step(std::size_t n, std::size_t t, AmplitudePair in);

// Samples an index with probability amplitude^2.
std::size_t measure(const AmplitudeState& state, Rng& rng);

struct GroverOptions {
  unsigned fingerprint_qubits = 0;
  // Overrides the diffusion mean coefficient (default 1/n).
  std::optional<double> diffusion_coefficient;
};

struct GroverRun {
  std::size_t measured_index = 0;
  double success_probability = 0.0;
  std::size_t oracle_queries = 0;
  AmplitudeState final_state;
};

// Applies `iterations` rounds of (phase flip, diffusion) to the uniform state
// and measures the index register.
GroverRun run_grover(std::size_t n, const OracleSpec& oracle,
                     std::size_t iterations, Rng& rng,
                     const GroverOptions& options = {});

}  // namespace fingergrover

#endif  // FINGERGROVER_AMPLITUDE_HPP_
