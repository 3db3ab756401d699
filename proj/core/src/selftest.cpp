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

#include "fingergrover/selftest.hpp"

#include <cmath>
#include <sstream>

#include "fingergrover/amplitude.hpp"
#include "fingergrover/census.hpp"
#include "fingergrover/fingerprint.hpp"
#include "fingergrover/gates.hpp"
#include "fingergrover/hash_family.hpp"
#include "fingergrover/primes.hpp"
#include "fingergrover/random.hpp"
#include "fingergrover/vocabulary.hpp"

namespace fingergrover {
namespace {

constexpr std::uint64_t kSelftestSeed = 20260417;

CheckResult check_equivalence(const SelftestOptions& options) {
  CheckResult result{"grover.three_way_equivalence", true, {}};
  Rng rng(kSelftestSeed);
  for (std::size_t n = 2; n <= 32; ++n) {
    for (std::size_t t = 1; t <= std::min<std::size_t>(4, n - 1); ++t) {
      OracleSpec oracle;
      for (std::size_t k = 0; k < t; ++k) oracle.marked.push_back(k);
      AmplitudePair rec = closed_form_amplitudes(n, t, 0);
      const auto j_max = static_cast<std::size_t>(2.0 * std::sqrt(static_cast<double>(n)));
      for (std::size_t j = 0; j <= j_max; ++j) {
        GroverOptions run_options;
        if (options.corrupt_diffusion) {
          run_options.diffusion_coefficient = 1.0 / std::log2(static_cast<double>(n));
        }
        const GroverRun run = run_grover(n, oracle, j, rng, run_options);
        const AmplitudePair closed = closed_form_amplitudes(n, t, j);
        const double sim_marked = run.final_state[0];
        const double sim_unmarked = run.final_state[n - 1];
        const double err = std::max({std::abs(sim_marked - closed.marked),
                                     std::abs(sim_unmarked - closed.unmarked),
                                     std::abs(rec.marked - closed.marked),
                                     std::abs(rec.unmarked - closed.unmarked)});
        if (!(err <= 1e-9)) {
          std::ostringstream msg;
          msg << "n=" << n << " t=" << t << " j=" << j << " deviation " << err;
          return {result.name, false, msg.str()};
        }
        rec = recurrence_step(n, t, rec);
      }
    }
  }
  return result;
}

CheckResult check_failure_bound() {
  for (std::size_t n = 2; n <= 4096; n *= 2) {
    const std::size_t r = iteration_count(n, 1).iterations;
    const double a = closed_form_amplitudes(n, 1, r).marked;
    if (1.0 - a * a > 1.0 / static_cast<double>(n) + 1e-12) {
      return {"grover.failure_bound", false, "n=" + std::to_string(n)};
    }
  }
  return {"grover.failure_bound", true, {}};
}

CheckResult check_gate_kickback() {
  Rng rng(kSelftestSeed + 1);
  // (index, fingerprint) pairs for 10, 11 and 12 qubits including the ancilla.
  const std::pair<unsigned, unsigned> shapes[] = {{5, 4}, {6, 4}, {7, 4}};
  for (auto [index_qubits, l] : shapes) {
    const std::size_t n = std::size_t{1} << index_qubits;
    std::vector<std::uint64_t> map(n);
    for (auto& v : map) v = rng.below(std::uint64_t{1} << l);
    const std::uint64_t target = map[rng.below(n)];
    if (!gate_level_oracle_check(index_qubits, l, target, map)) {
      return {"gates.oracle_kickback", false,
              "mismatch at " + std::to_string(index_qubits + l + 1) + " qubits"};
    }
    if (gate_level_oracle_check(index_qubits, l, target, map,
                                OracleFault::kWrongBasisState)) {
      return {"gates.oracle_kickback", false, "corrupted oracle was accepted"};
    }
  }
  return {"gates.oracle_kickback", true, {}};
}

CheckResult check_gate_algebra() {
  const GateMatrix i = GateMatrix::identity();
  const GateMatrix x = GateMatrix::pauli_x();
  const GateMatrix z = GateMatrix::pauli_z();
  const GateMatrix h = GateMatrix::hadamard();
  const bool ok = i.is_unitary() && x.is_unitary() && z.is_unitary() &&
                  h.is_unitary() && (h * h).approx_equal(i) &&
                  (h * x * h).approx_equal(z);
  return {"gates.algebra", ok, ok ? "" : "gate identity failed"};
}

CheckResult check_horner() {
  const PrimeFamily primes = first_primes(40);
  for (std::size_t m = 1; m <= 10; ++m) {
    for (std::uint64_t a = 0; a < (std::uint64_t{1} << m); ++a) {
      const BitString w = BitString::from_value(a, m);
      for (std::uint64_t p : primes.primes) {
        if (horner_residue(w, p) != a % p) {
          return {"fingerprint.horner", false,
                  "w=" + w.to_string() + " p=" + std::to_string(p)};
        }
      }
    }
  }
  return {"fingerprint.horner", true, {}};
}

CheckResult check_census() {
  // Every pair of distinct 8-bit words collides under at most 8 primes, and
  // every window pattern of every 8-bit text with m = 3 has bad mass <= 1/c.
  const PrimeFamily wide = first_primes(200);
  for (std::uint64_t a = 0; a < 256; ++a) {
    for (std::uint64_t b = a + 1; b < 256; ++b) {
      const auto hits = colliding_primes(BitString::from_value(a, 8),
                                         BitString::from_value(b, 8), wide);
      if (hits.size() > 8) {
        return {"fingerprint.census", false,
                "pair " + std::to_string(a) + "," + std::to_string(b)};
      }
    }
  }
  for (std::uint64_t t = 0; t < 256; ++t) {
    const BitString text = BitString::from_value(t, 8);
    const Vocabulary vocabulary = build_vocabulary(text, 3);
    const FreivaldsFamily family = freivalds_family(3, vocabulary.n(), 3);
    for (const BitString& pattern : vocabulary.windows()) {
      const auto bad = bad_prime_census(vocabulary, pattern, family.primes());
      if (census_mass(bad, family.primes()) > 1.0 / 3.0) {
        return {"fingerprint.census", false, "text " + text.to_string()};
      }
    }
  }
  return {"fingerprint.census", true, {}};
}

CheckResult check_kmp() {
  Rng rng(kSelftestSeed + 2);
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t length = 1 + rng.below(60);
    const std::size_t m = 1 + rng.below(std::min<std::size_t>(length, 6));
    std::vector<std::uint8_t> bits(length), pat(m);
    for (auto& b : bits) b = rng.coin() ? 1 : 0;
    for (auto& b : pat) b = rng.coin() ? 1 : 0;
    const BitString text(bits);
    const BitString pattern(pat);
    if (find_occurrences_kmp(text, pattern) != find_occurrences_naive(text, pattern)) {
      return {"core.kmp_vs_naive", false, text.to_string() + " / " + pattern.to_string()};
    }
  }
  return {"core.kmp_vs_naive", true, {}};
}

}  // namespace

std::vector<CheckResult> run_selftest(const SelftestOptions& options) {
  return {
      check_equivalence(options),
      check_failure_bound(),
      check_gate_kickback(),
      check_gate_algebra(),
      check_horner(),
      check_census(),
      check_kmp(),
  };
}

std::string format_selftest(const std::vector<CheckResult>& results) {
  std::ostringstream out;
  std::size_t passed = 0;
  for (const CheckResult& r : results) {
    if (r.passed) {
      ++passed;
      out << "PASS " << r.name << '\n';
    } else {
      out << "FAIL " << r.name << ": " << r.detail << '\n';
    }
  }
  out << "selftest: " << passed << '/' << results.size() << " checks passed\n";
  return out.str();
}

}  // namespace fingergrover
