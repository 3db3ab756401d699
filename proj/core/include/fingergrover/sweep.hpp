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

#ifndef FINGERGROVER_SWEEP_HPP_
#define FINGERGROVER_SWEEP_HPP_

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace fingergrover {

struct SweepSpec {
  std::vector<std::uint64_t> n_values;
  std::vector<std::uint64_t> m_values;
  std::uint64_t c = 3;
  std::uint64_t trials = 1000;
  std::uint64_t seed = 0;
};

struct SweepRow {
  std::uint64_t n = 0;
  std::uint64_t m = 0;
  std::uint64_t c = 0;
  std::uint64_t d = 0;
  unsigned l = 0;
  unsigned qubits = 0;
  std::size_t queries = 0;
  double pi4_sqrt_n = 0.0;
  double empirical_error = 0.0;
  double bound = 0.0;
  double bad_fraction = 0.0;
  double census_mass = 0.0;
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
  // Not serialized; kept for bound checks by callers.
  double stderr_rate = 0.0;
};

struct SweepFailure {
  std::uint64_t n = 0;
  std::uint64_t m = 0;
  std::string message;
};

struct SweepTable {
  std::vector<SweepRow> rows;
  std::vector<SweepFailure> failures;
};

// One row per (n, m), n-major. Each row plants its own unique-occurrence
// instance from (seed, row index) and runs estimate_error_rate on it. Rows
// that fail are recorded in `failures` and the sweep moves on.
SweepTable sweep(const SweepSpec& spec);

// Header line plus one line per row:
// n,m,c,d,l,qubits,queries,pi4_sqrt_n,empirical_error,bound,bad_fraction,
// census_mass,trials,seed
std::string to_csv(const SweepTable& table);

// Array of row objects with the CSV column names as keys.
std::string to_json(const SweepTable& table, bool pretty = false);

}  // namespace fingergrover

#endif  // FINGERGROVER_SWEEP_HPP_
