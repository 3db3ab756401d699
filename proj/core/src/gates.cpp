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

#include "fingergrover/gates.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "fingergrover/errors.hpp"

namespace fingergrover {

GateMatrix GateMatrix::identity() { return {{1.0, 0.0, 0.0, 1.0}}; }
GateMatrix GateMatrix::pauli_x() { return {{0.0, 1.0, 1.0, 0.0}}; }
GateMatrix GateMatrix::pauli_z() { return {{1.0, 0.0, 0.0, -1.0}}; }

GateMatrix GateMatrix::hadamard() {
  const double s = 1.0 / std::numbers::sqrt2;
  return {{s, s, s, -s}};
}

GateMatrix GateMatrix::adjoint() const {
  return {{std::conj(entries[0]), std::conj(entries[2]), std::conj(entries[1]),
           std::conj(entries[3])}};
}

GateMatrix operator*(const GateMatrix& a, const GateMatrix& b) {
  GateMatrix out;
  for (std::size_t r = 0; r < 2; ++r) {
    for (std::size_t c = 0; c < 2; ++c) {
      out.entries[r * 2 + c] = a(r, 0) * b(0, c) + a(r, 1) * b(1, c);
    }
  }
  return out;
}

bool GateMatrix::approx_equal(const GateMatrix& other, double tol) const {
  for (std::size_t i = 0; i < 4; ++i) {
    if (std::abs(entries[i] - other.entries[i]) > tol) return false;
  }
  return true;
}

bool GateMatrix::is_unitary(double tol) const {
  return (adjoint() * *this).approx_equal(identity(), tol);
}

StateVector::StateVector(unsigned num_qubits)
    : num_qubits_(num_qubits), amplitudes_(std::size_t{1} << num_qubits) {
  amplitudes_[0] = 1.0;
}

StateVector::StateVector(unsigned num_qubits, std::vector<Complex> amplitudes)
    : num_qubits_(num_qubits), amplitudes_(std::move(amplitudes)) {
  if (amplitudes_.size() != (std::size_t{1} << num_qubits)) {
    throw InvalidArgument("statevector length is not 2^qubits");
  }
}

void StateVector::apply(const GateMatrix& gate, unsigned qubit) {
  if (qubit >= num_qubits_) throw InvalidArgument("qubit index out of range");
  const std::size_t stride = std::size_t{1} << (num_qubits_ - 1 - qubit);
  for (std::size_t base = 0; base < amplitudes_.size(); base += 2 * stride) {
    for (std::size_t i = base; i < base + stride; ++i) {
      const Complex a0 = amplitudes_[i];
      const Complex a1 = amplitudes_[i + stride];
      amplitudes_[i] = gate(0, 0) * a0 + gate(0, 1) * a1;
      amplitudes_[i + stride] = gate(1, 0) * a0 + gate(1, 1) * a1;
    }
  }
}

bool gate_level_oracle_check(unsigned index_qubits, unsigned fingerprint_qubits,
                             std::uint64_t target,
                             std::span<const std::uint64_t> fingerprint_map,
                             OracleFault fault, double tol) {
  const unsigned total = index_qubits + fingerprint_qubits + 1;
  if (total > kMaxGateLevelQubits) {
    throw CapacityError("gate-level check needs " + std::to_string(total) +
                        " qubits, limit is " +
                        std::to_string(kMaxGateLevelQubits));
  }
  if (fingerprint_qubits == 0) throw InvalidArgument("fingerprint register is empty");
  const std::size_t n = std::size_t{1} << index_qubits;
  if (fingerprint_map.size() != n) {
    throw InvalidArgument("fingerprint map must have 2^index_qubits entries");
  }
  const std::uint64_t word_limit = std::uint64_t{1} << fingerprint_qubits;
  if (target >= word_limit) throw InvalidArgument("target wider than register");
  for (std::uint64_t v : fingerprint_map) {
    if (v >= word_limit) throw InvalidArgument("fingerprint wider than register");
  }

  // Basis index layout: [index | fingerprint | ancilla], ancilla least
  // significant.
  auto basis = [&](std::size_t k, std::uint64_t v, unsigned ancilla) {
    return (((k << fingerprint_qubits) | v) << 1) | ancilla;
  };

  const double amp = 1.0 / std::sqrt(static_cast<double>(n));
  std::vector<Complex> initial(std::size_t{1} << total, 0.0);
  for (std::size_t k = 0; k < n; ++k) initial[basis(k, fingerprint_map[k], 1)] = amp;
  StateVector state(total, std::move(initial));

  const unsigned ancilla = total - 1;
  state.apply(GateMatrix::hadamard(), ancilla);

  // U_f: |x>|y> -> |x>|y xor f(x)> on the fingerprint register + ancilla.
  std::uint64_t accepted = target;
  if (fault == OracleFault::kWrongBasisState) accepted ^= 1;
  auto amps = state.amplitudes();
  for (std::size_t k = 0; k < n; ++k) {
    std::swap(amps[basis(k, accepted, 0)], amps[basis(k, accepted, 1)]);
  }

  state.apply(GateMatrix::hadamard(), ancilla);

  for (std::size_t i = 0; i < state.dimension(); ++i) {
    const std::size_t k = i >> (fingerprint_qubits + 1);
    const std::uint64_t v = (i >> 1) & (word_limit - 1);
    const unsigned a = static_cast<unsigned>(i & 1U);
    Complex expected = 0.0;
    if (a == 1 && v == fingerprint_map[k]) {
      expected = v == target ? -amp : amp;
    }
    if (std::abs(state.amplitudes()[i] - expected) > tol) return false;
  }
  return true;
}

}  // namespace fingergrover
