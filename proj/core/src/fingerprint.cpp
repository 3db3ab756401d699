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

#include "fingergrover/fingerprint.hpp"

#include <string>

#include "fingergrover/errors.hpp"
#include "fingergrover/primes.hpp"

namespace fingergrover {

FingerprintWord::FingerprintWord(std::uint64_t value, unsigned width)
    : value_(value), width_(width) {
  if (width > 64 || (width < 64 && (value >> width) != 0)) {
    throw InvalidArgument("fingerprint value " + std::to_string(value) +
                          " does not fit in " + std::to_string(width) +
                          " bits");
  }
}

std::uint64_t horner_residue(const BitString& w, std::uint64_t p) {
  if (p < 2 || (p >> 63) != 0) {
    throw InvalidArgument("modulus must lie in [2, 2^63)");
  }
  std::uint64_t r = 0;
  for (std::uint8_t bit : w.bits()) {
    r = 2 * r + bit;
    if (r >= p) r -= p;
  }
  return r;
}

FingerprintWord mod_fingerprint(const BitString& w, std::uint64_t p,
                                unsigned width) {
  if (width < bit_length(p)) {
    throw InvalidArgument("fingerprint width " + std::to_string(width) +
                          " is narrower than the modulus " + std::to_string(p));
  }
  return FingerprintWord(horner_residue(w, p), width);
}

}  // namespace fingergrover
