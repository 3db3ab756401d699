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

#ifndef FINGERGROVER_GATES_HPP_
#define FINGERGROVER_GATES_HPP_

#include <array>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace fingergrover {

using Complex = std::complex<double>;

// Row-major 2x2 complex matrix.
struct GateMatrix {
  std::array<Complex, 4> entries{};

  static GateMatrix identity();
  static GateMatrix pauli_x();
  static GateMatrix pauli_z();
  static GateMatrix hadamard();

  Complex operator()(std::size_t row, std::size_t col) const {
    return entries[row * 2 + col];
  }
  GateMatrix adjoint() const;
  friend GateMatrix operator*(const GateMatrix& a, const GateMatrix& b);

  bool approx_equal(const GateMatrix& other, double tol = 1e-12) const;
  bool is_unitary(double tol = 1e-12) const;
};

// Full 2^s statevector. Qubit 0 is the most significant bit of the basis
// index.
class StateVector {
 public:
  explicit StateVector(unsigned num_qubits);
  StateVector(unsigned num_qubits, std::vector<Complex> amplitudes);

  unsigned num_qubits() const { return num_qubits_; }
  std::size_t dimension() const { return amplitudes_.size(); }
  std::span<const Complex> amplitudes() const { return amplitudes_; }
  std::span<Complex> amplitudes() { return amplitudes_; }

  void apply(const GateMatrix& gate, unsigned qubit);

 private:
  unsigned num_qubits_;
  std::vector<Complex> amplitudes_;
};

// Largest register the gate-level verifier will allocate.
inline constexpr unsigned kMaxGateLevelQubits = 14;

enum class OracleFault {
  kNone,
  // U_f toggles the ancilla on a basis state whose fingerprint differs from
  // the target in its lowest bit, instead of on the target.
  kWrongBasisState,
};

// Builds (1/sqrt(n)) sum_k |k>|v_k>|1> with n = 2^index_qubits, applies H to
// the ancilla, XORs f(v) = [v == target] into the ancilla, applies H again,
// and compares against the phase-flipped state with the ancilla back in |1>,
// amplitude by amplitude within `tol`.
//
// Raises CapacityError when index_qubits + fingerprint_qubits + 1 exceeds
// kMaxGateLevelQubits and InvalidArgument when the map has the wrong length
// or holds words wider than fingerprint_qubits.
bool gate_level_oracle_check(unsigned index_qubits, unsigned fingerprint_qubits,
                             std::uint64_t target,
                             std::span<const std::uint64_t> fingerprint_map,
                             OracleFault fault = OracleFault::kNone,
                             double tol = 1e-10);

}  // namespace fingergrover

#endif  // FINGERGROVER_GATES_HPP_
