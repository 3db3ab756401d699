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

#ifndef FINGERGROVER_SELFTEST_HPP_
#define FINGERGROVER_SELFTEST_HPP_

#include <string>
#include <vector>

namespace fingergrover {

struct SelftestOptions {
  // Test hook: run the simulator with the diffusion mean scaled by
  // 1/log2(n) instead of 1/n. The equivalence checks must then fail.
  bool corrupt_diffusion = false;
};

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

// Built-in consistency checks: simulator/recurrence/closed-form agreement,
// the 1/n failure bound, gate-level phase kickback at 10-12 qubits, gate
// algebra, Horner fingerprints, small exhaustive bad-prime censuses and
// KMP/naive agreement. Deterministic.
std::vector<CheckResult> run_selftest(const SelftestOptions& options = {});

// One "PASS name" / "FAIL name: detail" line per check plus a summary line.
std::string format_selftest(const std::vector<CheckResult>& results);

}  // namespace fingergrover

#endif  // FINGERGROVER_SELFTEST_HPP_
