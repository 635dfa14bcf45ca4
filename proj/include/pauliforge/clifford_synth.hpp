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
#include <string>
#include <vector>

#include "pauliforge/arch.hpp"
#include "pauliforge/cer.hpp"
#include "pauliforge/circuit.hpp"
#include "pauliforge/clifford_db.hpp"

namespace pauliforge {

enum class CliffordVariant { PauliPair, PauliPairUnordered, Mpcs, MpcsUnordered };

std::string to_string(CliffordVariant v);
CliffordVariant clifford_variant_from_string(const std::string& name);
bool is_unordered(CliffordVariant v);

struct CliffordSpec {
    Cer source;
    CouplingGraph g;
    CliffordVariant variant = CliffordVariant::PauliPair;
    /// Logical qubits settled per round; 2 falls back to 1 when no
    /// connected non-disconnecting pair exists.
    std::size_t k = 1;
};

struct CliffordResult {
    Circuit circuit;
    /// perm[i] is the physical qubit finally holding logical qubit i: the
    /// source Clifford equals circuit * P_perm with P Z_i P^dagger = Z_perm[i].
    std::vector<std::size_t> permutation;
    /// Physical qubit settled in each round, in order.
    std::vector<std::size_t> removal_order;
};

/// Gates G appended after `current` so that G * current = P_perm.
CliffordResult reset_circuit(const Cer& current, const CouplingGraph& g, CliffordVariant variant, CliffordDb* db,
                             std::size_t k = 1);

/// Circuit V (and permutation) with source = V * P_perm.
CliffordResult synthesize_clifford(const CliffordSpec& spec, CliffordDb* db);

/// K repetitions of: two distinct random qubits, a random 1-qubit Clifford
/// on each, a CNOT between them.
Circuit random_clifford_circuit(std::size_t n, std::size_t k, std::uint64_t seed);

}  // namespace pauliforge
