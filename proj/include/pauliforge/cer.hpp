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
#include <span>
#include <string>
#include <vector>

#include "pauliforge/circuit.hpp"
#include "pauliforge/pauli.hpp"

namespace pauliforge {

/// Clifford Executive Representation of a Clifford circuit C: register
/// (q, P) holds C^dagger P_q C, i.e. the Pauli that a P-rotation on qubit q
/// placed after C implements. Only the Z and X registers are stored.
class Cer {
   public:
    Cer() = default;
    /// Identity CER over n qubits.
    explicit Cer(std::size_t n);

    static Cer identity(std::size_t n) { return Cer(n); }
    /// Folds apply_gate over the circuit. Throws std::invalid_argument if the
    /// circuit contains a rotation.
    static Cer from_circuit(const Circuit& circuit);
    /// Builds a CER from explicit rows. Throws std::invalid_argument if the
    /// rows are not a valid symplectic basis with signs +/-1.
    static Cer from_rows(std::vector<PauliString> z_rows, std::vector<PauliString> x_rows);

    std::size_t num_qubits() const { return z_rows_.size(); }
    const PauliString& z_row(std::size_t q) const { return z_rows_.at(q); }
    const PauliString& x_row(std::size_t q) const { return x_rows_.at(q); }
    const std::vector<PauliString>& z_rows() const { return z_rows_; }
    const std::vector<PauliString>& x_rows() const { return x_rows_; }
    /// Hermitian representative of z_row(q) * x_row(q) / i.
    PauliString y_register(std::size_t q) const;
    /// Register for axis 'X', 'Y' or 'Z'.
    PauliString reg(std::size_t q, char axis) const;

    /// Appends a Clifford gate to the represented circuit.
    Cer& apply_gate(const Op& gate);
    Cer& apply(const Circuit& circuit);

    /// C^dagger p C with exact sign.
    PauliString conjugate(const PauliString& p) const;

    bool is_valid() const;
    bool is_identity() const;

    /// "q | Z: <pauli> | X: <pauli> | Y: <pauli>" per qubit.
    std::string dump() const;

    bool operator==(const Cer&) const = default;

   private:
    std::vector<PauliString> z_rows_;
    std::vector<PauliString> x_rows_;
};

/// Per-qubit register choice for a Pauli: axis[q] is 0 (no factor), 'Z', 'X'
/// or 'Y'; sign * prod_q reg(q, axis[q]) equals the decomposed Pauli.
struct Decomposition {
    std::vector<char> axis;
    int sign = 1;

    std::vector<std::size_t> support() const;
    /// The register letters as a signed Pauli string L with C^dagger L C equal
    /// to the decomposed Pauli.
    PauliString letters() const;
};

Decomposition decompose(const Cer& cer, const PauliString& s);
PauliString reconstruct(const Cer& cer, const Decomposition& d);
std::vector<std::size_t> support(const Decomposition& d);

struct ImplementedAt {
    std::size_t target = 0;
    std::size_t qubit = 0;
    char axis = 'Z';
    int sign = 1;

    bool operator==(const ImplementedAt&) const = default;
};

/// Every register (q, P) equal to +/- some target.
std::vector<ImplementedAt> find_implemented(const Cer& cer, std::span<const PauliString> targets);

/// Number of distinct unsigned Paulis over all registers of all CERs.
std::size_t distinct_pauli_count(std::span<const Cer> trace);

/// CER after every prefix of the circuit, starting with the identity.
/// Rotations leave the CER unchanged and produce no new entry.
std::vector<Cer> replay_trace(const Circuit& circuit);

}  // namespace pauliforge
