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

#include <random>
#include <vector>

#include "oracle.hpp"
#include "pauliforge/circuit.hpp"

namespace oracle {

inline Mat gate_matrix(std::size_t n, const pauliforge::Op& op, const std::vector<double>& angles) {
    using pauliforge::GateKind;
    switch (op.kind) {
        case GateKind::H: return on(n, op.q0, 'H');
        case GateKind::S: return on(n, op.q0, 'S');
        case GateKind::Sdg: return on(n, op.q0, 's');
        case GateKind::X: return on(n, op.q0, 'X');
        case GateKind::Y: return on(n, op.q0, 'Y');
        case GateKind::Z: return on(n, op.q0, 'Z');
        case GateKind::CX: return cnot(n, op.q0, op.q1);
        case GateKind::Rot: return pauli_exp(on(n, op.q0, op.axis), op.sign * angles.at(op.target));
    }
    return eye(1);
}

inline Mat circuit_matrix(const pauliforge::Circuit& c, const std::vector<double>& angles = {}) {
    Mat u = eye(std::size_t{1} << c.num_qubits());
    for (const auto& op : c.ops()) u = mul(gate_matrix(c.num_qubits(), op, angles), u);
    return u;
}

inline pauliforge::Op random_clifford_gate(std::mt19937_64& rng, std::size_t n) {
    using pauliforge::GateKind;
    static const GateKind kinds[] = {GateKind::H, GateKind::S, GateKind::Sdg, GateKind::X,
                                     GateKind::Y, GateKind::Z, GateKind::CX};
    GateKind k = kinds[rng() % (n > 1 ? 7 : 6)];
    std::size_t a = rng() % n;
    if (k != GateKind::CX) return pauliforge::make_gate(k, a);
    std::size_t b = rng() % (n - 1);
    if (b >= a) ++b;
    return pauliforge::make_gate(k, a, b);
}

inline pauliforge::Circuit random_clifford(std::mt19937_64& rng, std::size_t n, std::size_t gates) {
    pauliforge::Circuit c(n);
    for (std::size_t i = 0; i < gates; ++i) c.append(random_clifford_gate(rng, n));
    return c;
}

}  // namespace oracle
