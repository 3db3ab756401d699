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

#ifndef FINGERGROVER_HASH_FAMILY_HPP_
#define FINGERGROVER_HASH_FAMILY_HPP_

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "fingergrover/bit_string.hpp"
#include "fingergrover/fingerprint.hpp"
#include "fingergrover/primes.hpp"
#include "fingergrover/vocabulary.hpp"

namespace fingergrover {

// A finite family {f_0, ..., f_{d-1}} of functions from binary words to
// width()-bit words. evaluate() is deterministic and every member shares one
// output width.
class HashFamily {
 public:
  virtual ~HashFamily() = default;

  virtual std::size_t size() const = 0;
  virtual unsigned width() const = 0;
  virtual FingerprintWord evaluate(std::size_t j, const BitString& w) const = 0;

  // Identifier reported for member j (the prime for prime families).
  virtual std::uint64_t hash_id(std::size_t j) const { return j; }

  virtual std::string name() const = 0;
};

// f_j(w) = bin(a(w) mod p_j) over the first d = c*n*m primes. The output
// width is the bit length of the largest prime for every member, so register
// widths do not depend on which prime is drawn.
class FreivaldsFamily final : public HashFamily {
 public:
  explicit FreivaldsFamily(PrimeFamily primes);

  std::size_t size() const override { return primes_.size(); }
  unsigned width() const override { return width_; }
  FingerprintWord evaluate(std::size_t j, const BitString& w) const override;
  std::uint64_t hash_id(std::size_t j) const override;
  std::string name() const override { return "freivalds"; }

  const PrimeFamily& primes() const { return primes_; }

 private:
  PrimeFamily primes_;
  unsigned width_;
};

// Raises InvalidArgument when c < 3 or n, m are zero; CapacityError from the
// sieve propagates.
FreivaldsFamily freivalds_family(std::uint64_t c, std::uint64_t n,
                                 std::uint64_t m,
                                 std::uint64_t sieve_limit = kDefaultSieveLimit);

// Single collision-free member f(w) = w. Requires m <= 62.
class IdentityFamily final : public HashFamily {
 public:
  explicit IdentityFamily(unsigned m);

  std::size_t size() const override { return 1; }
  unsigned width() const override { return m_; }
  FingerprintWord evaluate(std::size_t j, const BitString& w) const override;
  std::string name() const override { return "identity"; }

 private:
  unsigned m_;
};

// size() members that all map every word to zero. Worst case: everything
// collides.
class ConstantFamily final : public HashFamily {
 public:
  ConstantFamily(std::size_t size, unsigned width);

  std::size_t size() const override { return size_; }
  unsigned width() const override { return width_; }
  FingerprintWord evaluate(std::size_t j, const BitString& w) const override;
  std::string name() const override { return "constant"; }

 private:
  std::size_t size_;
  unsigned width_;
};

// Element k is family.evaluate(j, vocabulary[k]).
std::vector<FingerprintWord> hashed_vocabulary(const Vocabulary& vocabulary,
                                               const HashFamily& family,
                                               std::size_t j);

}  // namespace fingergrover

#endif  // FINGERGROVER_HASH_FAMILY_HPP_
