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

#include "fingergrover/hash_family.hpp"

#include "fingergrover/errors.hpp"

namespace fingergrover {
namespace {

void check_member(std::size_t j, std::size_t size) {
  if (j >= size) {
    throw InvalidArgument("hash index " + std::to_string(j) +
                          " outside family of size " + std::to_string(size));
  }
}

}  // namespace

FreivaldsFamily::FreivaldsFamily(PrimeFamily primes)
    : primes_(std::move(primes)) {
  if (primes_.primes.empty()) throw InvalidArgument("empty prime family");
  width_ = bit_length(primes_.largest());
}

FingerprintWord FreivaldsFamily::evaluate(std::size_t j,
                                          const BitString& w) const {
  check_member(j, size());
  return FingerprintWord(horner_residue(w, primes_.primes[j]), width_);
}

std::uint64_t FreivaldsFamily::hash_id(std::size_t j) const {
  check_member(j, size());
  return primes_.primes[j];
}

FreivaldsFamily freivalds_family(std::uint64_t c, std::uint64_t n,
                                 std::uint64_t m, std::uint64_t sieve_limit) {
  if (c < 3) throw InvalidArgument("c must be >= 3");
  if (n == 0 || m == 0) throw InvalidArgument("n and m must be positive");
  PrimeFamily primes = first_primes(c * n * m, sieve_limit);
  primes.c = c;
  primes.n = n;
  primes.m = m;
  return FreivaldsFamily(std::move(primes));
}

IdentityFamily::IdentityFamily(unsigned m) : m_(m) {
  if (m == 0 || m > kMaxOracleWidth) {
    throw InvalidArgument("identity family needs 1 <= m <= 62");
  }
}

FingerprintWord IdentityFamily::evaluate(std::size_t j,
                                         const BitString& w) const {
  check_member(j, size());
  if (w.size() != m_) throw InvalidArgument("word length differs from family m");
  return FingerprintWord(numeric_value(w), m_);
}

ConstantFamily::ConstantFamily(std::size_t size, unsigned width)
    : size_(size), width_(width) {
  if (size == 0 || width == 0) {
    throw InvalidArgument("constant family needs positive size and width");
  }
}

FingerprintWord ConstantFamily::evaluate(std::size_t j,
                                         const BitString& /*w*/) const {
  check_member(j, size());
  return FingerprintWord(0, width_);
}

std::vector<FingerprintWord> hashed_vocabulary(const Vocabulary& vocabulary,
                                               const HashFamily& family,
                                               std::size_t j) {
  check_member(j, family.size());
  std::vector<FingerprintWord> out;
  out.reserve(vocabulary.n());
  for (const BitString& window : vocabulary.windows()) {
    out.push_back(family.evaluate(j, window));
  }
  return out;
}

}  // namespace fingergrover
