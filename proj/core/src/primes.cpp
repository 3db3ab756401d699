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

#include "fingergrover/primes.hpp"

#include <array>
#include <bit>
#include <cmath>
#include <string>

#include "fingergrover/errors.hpp"

namespace fingergrover {

unsigned bit_length(std::uint64_t x) {
  return static_cast<unsigned>(std::bit_width(x));
}

unsigned ceil_log2(std::uint64_t x) {
  if (x <= 1) return 0;
  return static_cast<unsigned>(std::bit_width(x - 1));
}

std::uint64_t nth_prime_upper_bound(std::uint64_t d) {
  static constexpr std::array<std::uint64_t, 6> kSmall = {0, 2, 3, 5, 7, 11};
  if (d < 6) return kSmall[d];
  const double x = static_cast<double>(d);
  return static_cast<std::uint64_t>(std::ceil(x * (std::log(x) + std::log(std::log(x)))));
}

PrimeFamily first_primes(std::uint64_t d, std::uint64_t sieve_limit) {
  if (d == 0) throw InvalidArgument("prime family size must be at least 1");
  const std::uint64_t bound = nth_prime_upper_bound(d);
  if (bound > sieve_limit) {
    throw CapacityError("sieve bound " + std::to_string(bound) +
                        " for d = " + std::to_string(d) +
                        " exceeds the configured limit " +
                        std::to_string(sieve_limit));
  }

  // composite[i] refers to the odd number 2i + 1.
  const std::uint64_t half = bound / 2 + 1;
  std::vector<bool> composite(half, false);
  PrimeFamily family;
  family.primes.reserve(d);
  family.primes.push_back(2);
  for (std::uint64_t i = 1; i < half && family.primes.size() < d; ++i) {
    if (composite[i]) continue;
    const std::uint64_t p = 2 * i + 1;
    if (p > bound) break;
    family.primes.push_back(p);
    if (p > bound / p) continue;
    for (std::uint64_t q = p * p; q <= bound; q += 2 * p) composite[q / 2] = true;
  }
  if (family.primes.size() != d) {
    throw Error("sieve produced " + std::to_string(family.primes.size()) +
                " primes, expected " + std::to_string(d));
  }
  return family;
}

}  // namespace fingergrover
