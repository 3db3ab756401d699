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

// Acceptance suite. Prints one PASS/FAIL line per criterion and exits
// non-zero if any criterion fails. Tolerances and runtime limits are fixed
// here and must not be tuned to make a run pass.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "fingergrover/amplitude.hpp"
#include "fingergrover/census.hpp"
#include "fingergrover/gates.hpp"
#include "fingergrover/harness.hpp"
#include "fingergrover/hash_family.hpp"
#include "fingergrover/primes.hpp"
#include "fingergrover/random.hpp"
#include "fingergrover/search.hpp"
#include "fingergrover/sweep.hpp"
#include "oracles.hpp"

namespace fg = fingergrover;

namespace {

constexpr double kPi = std::numbers::pi;
// Slack for floating-point evaluation of an exact inequality such as
// 1 - sin^2 <= 1/n, which holds with equality at n = 2.
constexpr double kRounding = 1e-12;

struct Verdict {
  bool passed = true;
  std::string detail;
};

struct Criterion {
  int id;
  std::string title;
  double time_limit_s;
  std::function<Verdict()> check;
};

std::string fmt(const char* format, double a, double b = 0, double c = 0, double d = 0) {
  char buf[256];
  std::snprintf(buf, sizeof(buf), format, a, b, c, d);
  return buf;
}

Verdict fail(std::string why) { return {false, std::move(why)}; }

// 1. n = 4, one marked index, one iteration lands exactly on the target.
Verdict exact_fixed_point() {
  fg::Rng rng(1);
  const fg::GroverRun run = fg::run_grover(4, {{2}}, 1, rng);
  const double closed = std::sin(3 * kPi / 6);
  if (std::abs(run.success_probability - 1.0) > 1e-12) {
    return fail(fmt("simulated success %.17g", run.success_probability));
  }
  if (std::abs(closed * closed - 1.0) > 1e-12) return fail("closed form differs from 1");
  if (fg::iteration_count(4, 1).iterations != 1) return fail("schedule is not r = 1");
  return {true, fmt("success=%.15f closed=%.15f tol=1e-12", run.success_probability, closed * closed)};
}

// 2. Failure probability with r = floor(pi / (4 theta)) is at most 1/n.
Verdict failure_bound() {
  std::set<std::size_t> ns;
  for (std::size_t n = 2; n <= 4096; n *= 2) ns.insert(n);
  fg::Rng pick(20261017);
  std::size_t non_powers = 0;
  while (non_powers < 20) {
    const std::size_t n = 3 + pick.below(4094);
    if ((n & (n - 1)) == 0 || ns.count(n)) continue;
    ns.insert(n);
    ++non_powers;
  }
  double worst = -1.0;
  std::size_t simulated = 0;
  fg::Rng rng(2);
  for (std::size_t n : ns) {
    const std::size_t r = fg::iteration_count(n, 1).iterations;
    const double theta = std::asin(1.0 / std::sqrt(static_cast<double>(n)));
    const double failure = 1.0 - std::pow(std::sin((2.0 * r + 1.0) * theta), 2);
    const double bound = 1.0 / static_cast<double>(n);
    worst = std::max(worst, failure * n);
    if (failure > bound + kRounding) return fail("closed form exceeds 1/n at n=" + std::to_string(n));
    if (n <= 512) {
      const fg::GroverRun run = fg::run_grover(n, {{n / 3}}, r, rng);
      ++simulated;
      if (1.0 - run.success_probability > bound + kRounding) {
        return fail("simulation exceeds 1/n at n=" + std::to_string(n));
      }
    }
  }
  return {true, fmt("%g sizes, %g simulated, max n*failure=%.6f (<= 1)", double(ns.size()),
                    double(simulated), worst)};
}

// 3. Closed form, recurrence and full simulation agree.
Verdict three_way_equivalence() {
  double worst = 0.0;
  std::size_t cases = 0;
  for (std::size_t n = 2; n <= 64; ++n) {
    for (std::size_t t = 1; t <= std::min<std::size_t>(4, n - 1); ++t) {
      fg::OracleSpec oracle;
      for (std::size_t i = 0; i < t; ++i) oracle.marked.push_back((i * n) / t);
      fg::AmplitudeState state = fg::init_uniform(n);
      fg::AmplitudePair rec{1 / std::sqrt(double(n)), 1 / std::sqrt(double(n))};
      const auto j_max = static_cast<std::size_t>(2 * std::sqrt(double(n)));
      for (std::size_t j = 0; j <= j_max; ++j) {
        const fg::AmplitudePair closed = fg::closed_form_amplitudes(n, t, j);
        worst = std::max({worst, std::abs(rec.marked - closed.marked),
                          std::abs(rec.unmarked - closed.unmarked)});
        for (std::size_t k = 0; k < n; ++k) {
          const bool marked = std::binary_search(oracle.marked.begin(), oracle.marked.end(), k);
          worst = std::max(worst, std::abs(state[k] - (marked ? closed.marked : closed.unmarked)));
        }
        ++cases;
        rec = fg::recurrence_step(n, t, rec);
        fg::oracle_phase_flip(state, oracle);
        fg::diffusion(state);
      }
    }
  }
  if (worst > 1e-9) return fail(fmt("max deviation %.3e > 1e-9", worst));
  return {true, fmt("%g (n,t,j) cases, max deviation %.3e (tol 1e-9)", double(cases), worst)};
}

// 4. H, U_f, H on the ancilla equals the phase flip with the ancilla in |1>.
Verdict gate_level_oracle() {
  fg::Rng rng(4);
  std::size_t with_match = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const unsigned index_qubits = 2 + static_cast<unsigned>(rng.below(3));
    const unsigned l = 2 + static_cast<unsigned>(rng.below(2));
    std::vector<std::uint64_t> map(std::size_t{1} << index_qubits);
    for (auto& v : map) v = rng.below(std::uint64_t{1} << l);
    const std::uint64_t target = rng.below(std::uint64_t{1} << l);
    with_match += std::count(map.begin(), map.end(), target) > 0 ? 1 : 0;
    if (!fg::gate_level_oracle_check(index_qubits, l, target, map, fg::OracleFault::kNone, 1e-10)) {
      return fail("case " + std::to_string(trial) + " differs");
    }
  }
  const std::vector<std::uint64_t> control = {0, 1, 3, 2};
  if (fg::gate_level_oracle_check(2, 2, 3, control, fg::OracleFault::kWrongBasisState)) {
    return fail("negative control accepted");
  }
  return {true, fmt("100 random cases (%g with a match), tol 1e-10, negative control rejected",
                    double(with_match))};
}

// 5. Bad-prime mass <= 1/c, and pairwise collision sets of size <= m.
Verdict bad_prime_mass() {
  fg::Rng rng(5);
  const std::uint64_t cs[] = {3, 5, 10};
  double worst_ratio = 0.0;
  for (int i = 0; i < 200; ++i) {
    const std::size_t n = 1 + rng.below(16);
    const std::size_t m = 1 + rng.below(12);
    const std::uint64_t c = cs[i % 3];
    std::vector<std::uint8_t> text(n + m - 1), pattern(m);
    for (auto& b : text) b = rng.coin();
    const bool planted = rng.coin();
    const std::size_t at = rng.below(n);
    for (std::size_t k = 0; k < m; ++k) pattern[k] = planted ? text[at + k] : rng.coin();
    const fg::Vocabulary v = fg::build_vocabulary(fg::BitString(text), m);
    const fg::FreivaldsFamily family = fg::freivalds_family(c, n, m);
    const auto bad = fg::bad_prime_census(v, fg::BitString(pattern), family.primes());
    const double mass = fg::census_mass(bad, family.primes());
    worst_ratio = std::max(worst_ratio, mass * static_cast<double>(c));
    if (mass > 1.0 / static_cast<double>(c)) {
      return fail("instance " + std::to_string(i) + " has mass above 1/c");
    }
  }

  // Every prime that can divide a difference below 2^12 is below 2^12; 600
  // primes reach 4409.
  const fg::PrimeFamily primes = fg::first_primes(600);
  std::uint64_t pairs = 0;
  std::size_t worst_pair = 0;
  for (std::size_t m = 1; m <= 12; ++m) {
    const std::uint64_t words = std::uint64_t{1} << m;
    // Collisions of (a1, a2) depend only on a2 - a1; tabulate per difference
    // with the library and with trial division, then sweep every pair.
    std::vector<std::size_t> per_diff(words, 0);
    for (std::uint64_t diff = 1; diff < words; ++diff) {
      per_diff[diff] = fg::colliding_primes(fg::BitString::from_value(0, m),
                                            fg::BitString::from_value(diff, m), primes).size();
      if (per_diff[diff] != fg::testing::count_dividing(diff, primes.primes)) {
        return fail("collision count disagrees with divisor count at diff " + std::to_string(diff));
      }
    }
    for (std::uint64_t a1 = 0; a1 < words; ++a1) {
      for (std::uint64_t a2 = a1 + 1; a2 < words; ++a2) {
        ++pairs;
        const std::size_t count = per_diff[a2 - a1];
        worst_pair = std::max(worst_pair, count);
        if (count > m) return fail("pair exceeds m primes");
      }
    }
  }
  return {true, fmt("200 instances, max c*mass=%.4f (<= 1); %g pairs, max |P| = %g", worst_ratio,
                    double(pairs), double(worst_pair))};
}

// 6. Error bound 1/c + 1/n on a planted n = 64, m = 16 instance.
Verdict theorem_error_bound() {
  fg::Rng rng(6);
  const fg::PlantedInstance instance = fg::plant_unique_instance(64, 16, rng);
  const fg::ErrorStats stats =
      fg::estimate_error_rate(instance.text, instance.pattern, {3, 606, false}, 2000);
  const double bound = 1.0 / 3.0 + 1.0 / 64.0;
  if (stats.empirical_rate > bound + 4 * stats.stderr_rate) {
    return fail(fmt("empirical %.4f > %.4f + 4*%.4f", stats.empirical_rate, bound, stats.stderr_rate));
  }
  const fg::ExactErrorBreakdown exact = fg::exact_error_rate(instance.text, instance.pattern, 3);
  if (exact.total > bound) return fail(fmt("exact mixture %.6f > %.6f", exact.total, bound));
  return {true, fmt("empirical=%.4f (stderr %.4f) exact=%.5f bound=%.5f", stats.empirical_rate,
                    stats.stderr_rate, exact.total, bound)};
}

std::size_t expected_queries(std::size_t n) {
  return static_cast<std::size_t>(
      std::floor(kPi / (4.0 * std::asin(1.0 / std::sqrt(static_cast<double>(n)))) + 1e-9));
}

// 7. Query accounting.
Verdict query_accounting() {
  fg::Rng rng(7);
  std::size_t runs = 0;
  for (std::size_t n : {2, 3, 5, 16, 31, 64, 100, 256, 700, 1024}) {
    for (int rep = 0; rep < 5; ++rep) {
      const fg::PlantedInstance inst = fg::plant_unique_instance(n, 24, rng);
      const fg::SearchOutcome out =
          fg::search_with_random_prime(inst.text, inst.pattern, {3, rng.next(), false});
      ++runs;
      if (out.oracle_queries != expected_queries(n) || out.oracle_queries != out.iterations) {
        return fail("run at n=" + std::to_string(n) + " reported " + std::to_string(out.oracle_queries));
      }
    }
  }
  double lo = 10.0, hi = 0.0;
  std::string outside;
  for (std::size_t n = 16; n <= 4096; ++n) {
    const double ratio = static_cast<double>(fg::iteration_count(n, 1).iterations) /
                         (kPi / 4.0 * std::sqrt(static_cast<double>(n)));
    lo = std::min(lo, ratio);
    hi = std::max(hi, ratio);
    if (ratio < 0.8 || ratio > 1.2) outside += (outside.empty() ? "" : ",") + std::to_string(n);
  }
  if (!outside.empty()) {
    return fail(fmt("%g runs match the query formula, but ratio range is [%.4f, %.4f]; outside "
                    "[0.8, 1.2] at n=",
                    double(runs), lo, hi) +
                outside);
  }
  return {true, fmt("%g runs match floor(pi/(4 asin(1/sqrt n))); ratio range [%.4f, %.4f] for n in [16, 4096]",
                    double(runs), lo, hi)};
}

// 8. Qubit accounting at the grid corners.
Verdict qubit_accounting() {
  fg::Rng rng(8);
  std::ostringstream detail;
  for (std::uint64_t n : {2, 1024}) {
    for (std::uint64_t m : {2, 64}) {
      const std::uint64_t d = 3 * n * m;
      const std::uint64_t p_d = fg::testing::primes_by_trial_division(d).back();
      const unsigned bitlen = static_cast<unsigned>(std::floor(std::log2(double(p_d)))) + 1;
      const unsigned log_n = static_cast<unsigned>(std::ceil(std::log2(double(n))));
      const fg::ComplexityReport report = fg::complexity_report(n, m, 3);
      if (report.largest_prime != p_d) return fail("largest prime differs");
      if (report.qubits_total != log_n + bitlen + 1) return fail("qubit total differs");
      const double x = double(d);
      if (double(bitlen) > std::log2(2 * x * (std::log(x) + std::log(std::log(x))))) {
        return fail("bit length exceeds log2 bound");
      }
      // A real search reports the same budget when its instance has n windows
      // of length m (m = 2 only admits n <= 4 unique occurrences, so plant a
      // pattern with the needed n and m where one exists).
      if (m == 64 || n == 2) {
        const fg::PlantedInstance inst = fg::plant_unique_instance(n, m, rng);
        const fg::SearchOutcome out =
            fg::search_with_random_prime(inst.text, inst.pattern, {3, rng.next(), false});
        if (out.qubits.total() != report.qubits_total) return fail("search budget differs");
      }
      detail << "(" << n << "," << m << ")=" << report.qubits_total << " ";
    }
  }
  return {true, "qubits " + detail.str()};
}

// 9. Prime search and generic-family search agree; identity family is pure
// amplitude amplification.
Verdict family_coherence() {
  fg::Rng rng(9);
  double worst_identity = 1.0;
  for (int i = 0; i < 100; ++i) {
    const std::size_t n = 2 + rng.below(200);
    const std::size_t m = 8 + rng.below(17);
    const fg::PlantedInstance inst = fg::plant_unique_instance(n, m, rng);
    const std::uint64_t seed = rng.next();
    const fg::SearchOutcome a = fg::search_with_random_prime(inst.text, inst.pattern, {3, seed, true});
    const fg::FreivaldsFamily family = fg::freivalds_family(3, n, m);
    const fg::SearchOutcome b = fg::search_with_family(inst.text, inst.pattern, family, {3, seed, true});
    if (fg::to_json(a) != fg::to_json(b)) return fail("outcomes differ on instance " + std::to_string(i));

    const fg::IdentityFamily identity(static_cast<unsigned>(m));
    const fg::SearchOutcome c = fg::search_with_family(inst.text, inst.pattern, identity, {3, seed, false});
    const double margin = c.success_probability - (1.0 - 1.0 / double(n));
    worst_identity = std::min(worst_identity, margin);
    if (c.marked_count != 1 || margin < -kRounding) {
      return fail("identity family below 1 - 1/n on instance " + std::to_string(i));
    }
  }
  return {true, fmt("100 instances identical; identity min(success - (1 - 1/n)) = %.3e", worst_identity)};
}

// 10. Sweeps are reproducible byte for byte.
Verdict sweep_determinism() {
  const fg::SweepSpec spec{{4, 16, 64, 256}, {8, 16}, 3, 500, 10};
  const std::string first = fg::to_csv(fg::sweep(spec));
  const std::string second = fg::to_csv(fg::sweep(spec));
  if (first != second) return fail("CSV differs between runs");
  const auto rows = std::count(first.begin(), first.end(), '\n') - 1;
  if (rows != 8) return fail("expected 8 rows, got " + std::to_string(rows));
  return {true, fmt("%g rows, %g identical bytes", double(rows), double(first.size()))};
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "exact Grover fixed point", 1.0, exact_fixed_point},
      {2, "failure bound 1/n", 10.0, failure_bound},
      {3, "three-way amplitude equivalence", 60.0, three_way_equivalence},
      {4, "gate-level oracle equivalence", 5.0, gate_level_oracle},
      {5, "bad-prime mass and pairwise bound", 30.0, bad_prime_mass},
      {6, "error bound 1/c + 1/n", 120.0, theorem_error_bound},
      {7, "query accounting", 60.0, query_accounting},
      {8, "qubit accounting", 60.0, qubit_accounting},
      {9, "prime/generic family coherence", 60.0, family_coherence},
      {10, "sweep determinism", 60.0, sweep_determinism},
  };

  int failures = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = c.check();
    } catch (const std::exception& e) {
      v = fail(std::string("exception: ") + e.what());
    }
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (v.passed && elapsed > c.time_limit_s) {
      v = fail(fmt("took %.2f s, limit %.0f s", elapsed, c.time_limit_s));
    }
    failures += v.passed ? 0 : 1;
    std::printf("%s AC%-2d %s: %s [%.3f s]\n", v.passed ? "PASS" : "FAIL", c.id, c.title.c_str(),
                v.detail.c_str(), elapsed);
  }
  std::printf("acceptance: %d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
              criteria.size());
  return failures == 0 ? 0 : 1;
}
