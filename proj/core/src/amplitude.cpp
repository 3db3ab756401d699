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

#include "fingergrover/amplitude.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <string>

#include "fingergrover/errors.hpp"
#include "fingergrover/primes.hpp"

namespace fingergrover {

AmplitudeState::AmplitudeState(std::vector<double> amplitudes, QubitBudget budget)
    : amplitudes_(std::move(amplitudes)), budget_(budget) {
  if (amplitudes_.empty()) throw InvalidArgument("empty amplitude vector");
}

double AmplitudeState::norm_squared() const {
  double sum = 0.0;
  for (double a : amplitudes_) sum += a * a;
  return sum;
}

AmplitudeState init_uniform(std::size_t n, unsigned fingerprint_qubits) {
  if (n == 0) throw InvalidArgument("register dimension must be at least 1");
  const double a = 1.0 / std::sqrt(static_cast<double>(n));
  QubitBudget budget{ceil_log2(n), fingerprint_qubits, 1};
  return AmplitudeState(std::vector<double>(n, a), budget);
}

void oracle_phase_flip(AmplitudeState& state, const OracleSpec& oracle) {
  auto amps = state.amplitudes();
  for (std::size_t k : oracle.marked) {
    if (k >= amps.size()) {
      throw InvalidArgument("marked index " + std::to_string(k) +
                            " outside register of size " +
                            std::to_string(amps.size()));
    }
    amps[k] = -amps[k];
  }
}

void diffusion(AmplitudeState& state) {
  diffusion(state, 1.0 / static_cast<double>(state.size()));
}

void diffusion(AmplitudeState& state, double coefficient) {
  auto amps = state.amplitudes();
  const double mean = coefficient * std::accumulate(amps.begin(), amps.end(), 0.0);
  for (double& a : amps) a = 2.0 * mean - a;
}

IterationSchedule iteration_count(std::size_t n, std::size_t t) {
  if (t == 0 || n < 2) return {0, false};
  if (t > n) throw InvalidArgument("marked count exceeds register size");
  const double theta = std::asin(std::sqrt(static_cast<double>(t) / static_cast<double>(n)));
  // The slack absorbs asin rounding at exact multiples (n = 2 gives
  // pi / (4 * pi/4) = 1, which must not floor to 0).
  const double x = std::numbers::pi / (4.0 * theta);
  return {static_cast<std::size_t>(std::floor(x + 1e-9)), true};
}

AmplitudePair closed_form_amplitudes(std::size_t n, std::size_t t, std::size_t j) {
  if (t == 0 || t >= n) {
    throw InvalidArgument("closed form needs 0 < t < n");
  }
  const double nd = static_cast<double>(n);
  const double td = static_cast<double>(t);
  const double theta = std::asin(std::sqrt(td / nd));
  const double angle = (2.0 * static_cast<double>(j) + 1.0) * theta;
  return {std::sin(angle) / std::sqrt(td), std::cos(angle) / std::sqrt(nd - td)};
}

AmplitudePair recurrence_step(std::size_t n, std::size_t t, AmplitudePair in) {
  if (t == 0 || t >= n) throw InvalidArgument("recurrence needs 0 < t < n");
  const double nd = static_cast<double>(n);
  const double td = static_cast<double>(t);
  const double norm = td * in.marked * in.marked + (nd - td) * in.unmarked * in.unmarked;
  if (std::abs(norm - 1.0) > 1e-9) {
    throw InvalidArgument("input amplitudes are not normalized");
  }
  const double keep = (nd - 2.0 * td) / nd;
  return {keep * in.marked + 2.0 * (nd - td) / nd * in.unmarked,
          keep * in.unmarked - 2.0 * td / nd * in.marked};
}

std::size_t measure(const AmplitudeState& state, Rng& rng) {
  const double u = rng.unit() * state.norm_squared();
  double acc = 0.0;
  for (std::size_t k = 0; k < state.size(); ++k) {
    acc += state.probability(k);
    if (u < acc) return k;
  }
  // Rounding left u at or above the final partial sum.
  for (std::size_t k = state.size(); k-- > 0;) {
    if (state.probability(k) > 0.0) return k;
  }
  return state.size() - 1;
}

GroverRun run_grover(std::size_t n, const OracleSpec& oracle,
                     std::size_t iterations, Rng& rng,
                     const GroverOptions& options) {
  AmplitudeState state = init_uniform(n, options.fingerprint_qubits);
  const double coefficient =
      options.diffusion_coefficient.value_or(1.0 / static_cast<double>(n));
  std::size_t queries = 0;
  for (std::size_t i = 0; i < iterations; ++i) {
    oracle_phase_flip(state, oracle);
    ++queries;
    diffusion(state, coefficient);
  }
  double success = 0.0;
  for (std::size_t k : oracle.marked) success += state.probability(k);
  const std::size_t index = measure(state, rng);
  return GroverRun{index, success, queries, std::move(state)};
}

}  // namespace fingergrover
