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

#ifndef FINGERGROVER_PRIMES_HPP_
#define FINGERGROVER_PRIMES_HPP_

#include <cstddef>
#include <cstdint>
#include <vector>

namespace fingergrover {

// Default cap on the sieve range (numbers, one bit each): 2^32 -> 512 MiB.
inline constexpr std::uint64_t kDefaultSieveLimit = std::uint64_t{1} << 32;

// The first d primes, optionally tagged with the (c, n, m) that produced
// d = c * n * m. primes is strictly increasing and starts at 2.
struct PrimeFamily {
  std::vector<std::uint64_t> primes;
  std::uint64_t c = 0;
  std::uint64_t n = 0;
  std::uint64_t m = 0;

  std::size_t size() const { return primes.size(); }
  std::uint64_t largest() const { return primes.back(); }
};

// Upper bound on the d-th prime: d (ln d + ln ln d) for d >= 6 (Rosser), a
// table value below that.
std::uint64_t nth_prime_upper_bound(std::uint64_t d);

// Sieve of Eratosthenes over [2, nth_prime_upper_bound(d)]. Raises
// InvalidArgument for d = 0 and CapacityError when the bound exceeds
// sieve_limit.
PrimeFamily first_primes(std::uint64_t d,
                         std::uint64_t sieve_limit = kDefaultSieveLimit);

// Number of bits in the binary representation of x (0 for x = 0).
unsigned bit_length(std::uint64_t x);

// ceil(log2(x)) for x >= 1.
unsigned ceil_log2(std::uint64_t x);

}  // namespace fingergrover

#endif  // FINGERGROVER_PRIMES_HPP_
