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

#include "fingergrover/census.hpp"

#include "fingergrover/errors.hpp"
#include "fingergrover/fingerprint.hpp"

namespace fingergrover {

std::vector<std::uint64_t> window_residues(const Vocabulary& vocabulary,
                                           std::uint64_t p) {
  const auto text = vocabulary.text().bits();
  const std::size_t m = vocabulary.m();
  const std::size_t n = vocabulary.n();

  // top = 2^(m-1) mod p, the weight of the bit leaving the window.
  std::uint64_t top = 1 % p;
  for (std::size_t i = 1; i < m; ++i) {
    top = 2 * top;
    if (top >= p) top -= p;
  }

  std::vector<std::uint64_t> residues(n);
  std::uint64_t r = horner_residue(vocabulary[0], p);
  residues[0] = r;
  for (std::size_t k = 1; k < n; ++k) {
    if (text[k - 1] != 0) r = (r + p - top) % p;
    r = 2 * r + text[k + m - 1];
    r %= p;
    residues[k] = r;
  }
  return residues;
}

std::vector<std::uint64_t> bad_prime_census(const Vocabulary& vocabulary,
                                            const BitString& pattern,
                                            const PrimeFamily& family) {
  if (pattern.size() != vocabulary.m()) {
    throw InvalidArgument("pattern length differs from vocabulary window length");
  }
  std::vector<bool> differs(vocabulary.n());
  bool any_differs = false;
  for (std::size_t k = 0; k < vocabulary.n(); ++k) {
    differs[k] = vocabulary[k] != pattern;
    any_differs = any_differs || differs[k];
  }

  std::vector<std::uint64_t> bad;
  if (!any_differs) return bad;
  for (std::uint64_t p : family.primes) {
    const std::uint64_t target = horner_residue(pattern, p);
    const auto residues = window_residues(vocabulary, p);
    for (std::size_t k = 0; k < residues.size(); ++k) {
      if (differs[k] && residues[k] == target) {
        bad.push_back(p);
        break;
      }
    }
  }
  return bad;
}

double census_mass(const std::vector<std::uint64_t>& bad,
                   const PrimeFamily& family) {
  return static_cast<double>(bad.size()) / static_cast<double>(family.size());
}

std::vector<std::uint64_t> colliding_primes(const BitString& u,
                                            const BitString& v,
                                            const PrimeFamily& family) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t p : family.primes) {
    if (horner_residue(u, p) == horner_residue(v, p)) out.push_back(p);
  }
  return out;
}

}  // namespace fingergrover
