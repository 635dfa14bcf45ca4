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

#include "pauliforge/arch.hpp"
#include "pauliforge/circuit.hpp"
#include "pauliforge/clifford_db.hpp"
#include "pauliforge/pauli.hpp"

namespace pauliforge {

enum class SynthMethod { SS, LS, MPLS, MPR };
enum class ResetPolicy { AtEnd, PerList, None };
enum class LeafChoice { Random, MinCnot };

std::string to_string(SynthMethod m);
std::string to_string(ResetPolicy r);
std::string to_string(LeafChoice l);
SynthMethod synth_method_from_string(const std::string& name);
ResetPolicy reset_policy_from_string(const std::string& name);
LeafChoice leaf_choice_from_string(const std::string& name);

struct SynthesisConfig {
    SynthMethod method = SynthMethod::MPLS;
    std::size_t k_max = 3;
    std::size_t k_prime_max = 8;
    ResetPolicy reset_policy = ResetPolicy::AtEnd;
    LeafChoice leaf_choice = LeafChoice::Random;
    bool immediate_implement = true;
    /// Lets the reset compete against a Clifford resynthesis of the inverse.
    bool resynthesize_reset = true;
    /// SS only: reorder commuting runs for CNOT cancellation.
    bool order_for_cancellation = false;
    std::uint64_t seed = 0;

    /// Settings of the double-excitation experiments: 4 generators, one reset
    /// per sublist.
    static SynthesisConfig mpr_preset();
};

struct SynthesisReport {
    std::size_t total_cnots = 0;
    std::size_t cnots_excluding_final_clifford = 0;
    std::size_t depth = 0;
    /// Index into circuit.ops() of the rotation implementing each target.
    std::vector<std::size_t> implementation_position;
    double wall_seconds = 0.0;
};

struct SynthesisResult {
    Circuit circuit;
    SynthesisReport report;
};

/// Places logical target qubit i on physical node layout[i] of an
/// n_physical-qubit register. An empty layout means the identity.
std::vector<PauliString> embed_targets(std::span<const PauliString> targets, std::span<const std::size_t> layout,
                                       std::size_t n_physical);

/// Per target: basis change, CNOT fold along the Steiner tree, Z rotation,
/// exact unfold. Identity targets are skipped.
Circuit steiner_synthesize(std::span<const PauliString> targets, const CouplingGraph& g);

/// Folds each target into one qubit against the running Clifford and never
/// uncomputes; `db` is used only for the reset resynthesis and may be null.
Circuit lazy_synthesize(std::span<const PauliString> targets, const CouplingGraph& g, ResetPolicy reset,
                        CliffordDb* db = nullptr);

struct Sublist {
    std::size_t length = 0;
    /// Positions (within the input) of the first independent members.
    std::vector<std::size_t> generators;
};

/// Longest prefix with at most k_prime members and GF(2) rank at most k.
Sublist select_sublist(std::span<const PauliString> remaining, std::size_t k, std::size_t k_prime);

SynthesisResult mpls_synthesize(std::span<const PauliString> targets, const CouplingGraph& g,
                                const SynthesisConfig& config, CliffordDb& db);

/// Compression into dest followed by batched implementation and a reset per
/// rank-4 sublist; the reset is a resynthesized inverse of the
/// implementation part and the exact inverse of the compression part.
SynthesisResult mpr_synthesize(std::span<const PauliString> targets, const CouplingGraph& g,
                               const SynthesisConfig& config, CliffordDb& db);

/// Runs the configured method and fills the report.
SynthesisResult synthesize(std::span<const PauliString> targets, const CouplingGraph& g,
                           const SynthesisConfig& config, CliffordDb& db);

struct Excitation {
    std::vector<PauliString> targets;  // c_m * P_m, on the physical register
    double angle_scale = 0.125;        // every term uses angle_scale * theta
};

/// The eight terms of the double excitation a_i^dag a_j^dag a_k a_l - h.c.
/// embedded through `layout`.
Excitation double_excitation(const FermionMapping& mapping, std::size_t i, std::size_t j, std::size_t k,
                             std::size_t l, std::span<const std::size_t> layout, std::size_t n_physical);

/// Clifford C with C P_m C^dagger supported on dest for every m. dest must
/// have exactly paulis.size() nodes, be connected, and admit a removal order
/// keeping the rest of the graph connected.
Circuit compress_general(std::span<const PauliString> paulis, const CouplingGraph& g,
                         std::span<const std::size_t> dest);

/// Fewest qubits any Clifford can localize the Paulis into: rank minus half
/// the rank of their commutation matrix.
std::size_t min_compression_qubits(std::span<const PauliString> paulis);

/// Greedy nearest-neighbour ordering of commuting terms for Steiner
/// synthesis, keeping the cheapest of all starts and the input order.
std::vector<std::size_t> order_for_cancellation(std::span<const PauliString> terms, const CouplingGraph& g);

}  // namespace pauliforge
