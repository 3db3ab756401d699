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

#ifndef FINGERGROVER_ERRORS_HPP_
#define FINGERGROVER_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace fingergrover {

// Base class for every failure raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input or violated precondition (bad digit, m = 0, c < 3, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// A computation would exceed a configured resource cap (sieve size, qubit
// budget, oracle-only integer width).
class CapacityError : public Error {
 public:
  using Error::Error;
};

// The input breaks the single-occurrence contract of the search routines.
class ContractViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace fingergrover

#endif  // FINGERGROVER_ERRORS_HPP_
