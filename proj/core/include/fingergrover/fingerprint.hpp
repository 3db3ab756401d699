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

#ifndef FINGERGROVER_FINGERPRINT_HPP_
#define FINGERGROVER_FINGERPRINT_HPP_

#include <cstdint>

#include "fingergrover/bit_string.hpp"

namespace fingergrover {

// Fixed-width hash output. value < 2^width; bits() gives bin(value) padded to
// width.
class FingerprintWord {
 public:
  FingerprintWord() = default;
  FingerprintWord(std::uint64_t value, unsigned width);

  std::uint64_t value() const { return value_; }
  unsigned width() const { return width_; }
  BitString bits() const { return BitString::from_value(value_, width_); }

  friend bool operator==(const FingerprintWord&, const FingerprintWord&) = default;

 private:
  std::uint64_t value_ = 0;
  unsigned width_ = 0;
};

// a(w) mod p by streaming Horner reduction r <- (2r + bit) mod p. Works for
// any word length; p must be in [2, 2^63).
std::uint64_t horner_residue(const BitString& w, std::uint64_t p);

// bin(a(w) mod p), zero-padded to `width`. Requires width >= bit_length(p).
FingerprintWord mod_fingerprint(const BitString& w, std::uint64_t p,
                                unsigned width);

}  // namespace fingergrover

#endif  // FINGERGROVER_FINGERPRINT_HPP_
