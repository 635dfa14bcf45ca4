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

#include <complex>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pauliforge/cer.hpp"
#include "pauliforge/circuit.hpp"
#include "pauliforge/pauli.hpp"

namespace pauliforge {

inline constexpr std::size_t kMaxDenseQubits = 12;

/// Square complex matrix stored column-major. Qubit 0 is the most
/// significant bit of the basis index, matching the left-to-right Pauli text.
struct DenseMatrix {
    std::size_t dim = 0;
    std::vector<std::complex<double>> data;

    DenseMatrix() = default;
    explicit DenseMatrix(std::size_t d) : dim(d), data(d * d) {}
    static DenseMatrix identity(std::size_t d);

    std::complex<double>& at(std::size_t r, std::size_t c) { return data[c * dim + r]; }
    const std::complex<double>& at(std::size_t r, std::size_t c) const { return data[c * dim + r]; }
};

DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b);
DenseMatrix adjoint(const DenseMatrix& a);
double max_abs_diff(const DenseMatrix& a, const DenseMatrix& b);

/// Unitary of the circuit; a rotation on target t uses angle angles[t].
/// Columns are evolved independently across OpenMP threads.
DenseMatrix dense_unitary(const Circuit& circuit, std::span<const double> angles);
/// Kronecker-product reference: every gate is expanded to a full matrix and
/// multiplied in. Serial and slow; use for n <= 6.
DenseMatrix dense_unitary_reference(const Circuit& circuit, std::span<const double> angles);

DenseMatrix dense_pauli(const PauliString& p);
/// exp(i theta_L S_L) ... exp(i theta_1 S_1): S_1 acts first.
DenseMatrix pauli_exponential_product(std::span<const PauliString> paulis, std::span<const double> angles);

enum class EquivalenceKind { DenseUpToGlobalPhase, TableauExact, TableauUpToPermutation, PauliNetworkSound };
std::string to_string(EquivalenceKind kind);

struct EquivalenceReport {
    EquivalenceKind kind = EquivalenceKind::DenseUpToGlobalPhase;
    bool pass = false;
    double max_deviation = 0.0;
    std::optional<std::size_t> witness;
    std::string message;
};

/// Passes iff |tr(U^dagger V)| / dim >= 1 - tol.
EquivalenceReport equivalent_up_to_phase(const DenseMatrix& u, const DenseMatrix& v, double tol = 1e-9);

/// Replays the circuit through a CER. Every rotation must sit on a register
/// equal to sign * target, every target must be covered once, and rotations of
/// anticommuting targets must keep the target order. With require_reset the
/// final CER must also be the identity.
EquivalenceReport pauli_network_sound(const Circuit& circuit, std::span<const PauliString> targets,
                                      bool require_reset = false);

EquivalenceReport tableau_equal(const Cer& expected, const Cer& actual);
/// Checks expected == P_perm^dagger actual P_perm: row q of `expected` is
/// row q of `actual` with every qubit j relabeled to perm^-1(j).
EquivalenceReport tableau_equal_up_to_permutation(const Cer& expected, const Cer& actual,
                                                  std::span<const std::size_t> perm);

/// Unitary of the qubit permutation with P Z_i P^dagger = Z_perm[i].
DenseMatrix permutation_unitary(std::span<const std::size_t> perm);

}  // namespace pauliforge
