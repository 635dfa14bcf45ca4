// Copyright 2026 The Pauliforge Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "pauliforge/pauli.hpp"

namespace pauliforge {

enum class GateKind : std::uint8_t { H, S, Sdg, X, Y, Z, CX, Rot };

/// One circuit element. CX uses q0 as control and q1 as target. A Rot
/// element applies exp(i * sign * theta_target * P) with P the single-qubit
/// Pauli `axis` on q0; `target` indexes both the implemented target Pauli and
/// its angle.
struct Op {
    GateKind kind = GateKind::H;
    std::uint32_t q0 = 0;
    std::uint32_t q1 = 0;
    char axis = 'Z';
    std::int8_t sign = 1;
    std::uint32_t target = 0;

    bool is_cnot() const { return kind == GateKind::CX; }
    bool is_rotation() const { return kind == GateKind::Rot; }
    bool operator==(const Op&) const = default;
};

Op make_gate(GateKind kind, std::size_t q0, std::size_t q1 = 0);
Op make_rotation(char axis, std::size_t qubit, int sign, std::size_t target);

/// Lower-case QASM mnemonic ("h", "s", "sdg", "x", "y", "z", "cx", "rot").
std::string gate_name(GateKind kind);
GateKind gate_from_name(std::string_view name);

/// Inverse of a Clifford gate. Throws std::logic_error on a rotation.
Op inverse_gate(const Op& gate);

/// p <- G p G^dagger with exact sign. Throws std::logic_error on a rotation.
void conjugate_forward(PauliString& p, const Op& gate);

class Circuit {
   public:
    Circuit() = default;
    explicit Circuit(std::size_t num_qubits) : num_qubits_(num_qubits) {}

    std::size_t num_qubits() const { return num_qubits_; }
    const std::vector<Op>& ops() const { return ops_; }
    std::size_t size() const { return ops_.size(); }
    bool empty() const { return ops_.empty(); }

    void append(const Op& op);
    void append(const Circuit& other);
    void h(std::size_t q) { append(make_gate(GateKind::H, q)); }
    void s(std::size_t q) { append(make_gate(GateKind::S, q)); }
    void sdg(std::size_t q) { append(make_gate(GateKind::Sdg, q)); }
    void x(std::size_t q) { append(make_gate(GateKind::X, q)); }
    void y(std::size_t q) { append(make_gate(GateKind::Y, q)); }
    void z(std::size_t q) { append(make_gate(GateKind::Z, q)); }
    void cx(std::size_t c, std::size_t t) { append(make_gate(GateKind::CX, c, t)); }
    void rot(char axis, std::size_t q, int sign, std::size_t target) {
        append(make_rotation(axis, q, sign, target));
    }

    std::size_t cnot_count() const;
    /// CNOTs up to and including the last rotation.
    std::size_t cnot_count_excluding_final_clifford() const;
    std::size_t rotation_count() const;
    /// ASAP layering over all elements.
    std::size_t depth() const;
    bool is_clifford() const;

    /// Reversed circuit with every gate inverted. Clifford circuits only.
    Circuit inverse() const;

    /// Relabels qubit q to to_global[q] in a circuit over n_global qubits.
    Circuit remapped(std::span<const std::size_t> to_global, std::size_t n_global) const;

    /// Removes adjacent mutually inverse gates (including CX pairs) until no
    /// pair is left. Rotations block cancellation on their qubit.
    Circuit& peephole();

    bool operator==(const Circuit&) const = default;

   private:
    std::size_t num_qubits_ = 0;
    std::vector<Op> ops_;
};

}  // namespace pauliforge
