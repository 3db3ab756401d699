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

#ifndef FINGERGROVER_CENSUS_HPP_
#define FINGERGROVER_CENSUS_HPP_

#include <cstdint>
#include <vector>

#include "fingergrover/bit_string.hpp"
#include "fingergrover/primes.hpp"
#include "fingergrover/vocabulary.hpp"

namespace fingergrover {

// Primes p of the family under which the pattern's residue equals the
// residue of at least one window that differs from the pattern. Ascending.
//
// Residues are compared directly (rolling over the text once per prime), so
// no big-integer differences are formed. Raises InvalidArgument when
// pattern.size() != vocabulary.m().
std::vector<std::uint64_t> bad_prime_census(const Vocabulary& vocabulary,
                                            const BitString& pattern,
                                            const PrimeFamily& family);

// |bad| / d.
double census_mass(const std::vector<std::uint64_t>& bad,
                   const PrimeFamily& family);

// Primes of the family with a(u) == a(v) (mod p). For u != v of length m
// there are at most m of them.
std::vector<std::uint64_t> colliding_primes(const BitString& u,
                                            const BitString& v,
                                            const PrimeFamily& family);

// Residues a(w_k) mod p for every window, computed with a rolling update.
std::vector<std::uint64_t> window_residues(const Vocabulary& vocabulary,
                                           std::uint64_t p);

}  // namespace fingergrover

#endif  // FINGERGROVER_CENSUS_HPP_
