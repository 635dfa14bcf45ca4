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
#include <stdexcept>
#include <string>
#include <vector>

#include "pauliforge/clifford_db.hpp"
#include "pauliforge/io.hpp"
#include "pauliforge/pauli.hpp"

namespace pauliforge {

enum class GeneratorKind { Random4Majorana, DoubleExcitation, RandomClifford };

std::string to_string(GeneratorKind g);
GeneratorKind generator_from_string(const std::string& name);

/// A grid of instances. Each cell is (size, count, mapping); each cell runs
/// every method on every seed.
///   Random4Majorana: size = modes = qubits, count = number of Paulis.
///   DoubleExcitation: size = modes; count is ignored.
///   RandomClifford: size = qubits, count = CNOTs of the random circuit.
struct ExperimentSpec {
    GeneratorKind generator = GeneratorKind::Random4Majorana;
    /// "path" builds path_graph(size) per cell; anything else goes through
    /// parse_arch and is shared by all cells.
    std::string arch = "path";
    std::vector<std::size_t> sizes;
    std::vector<std::size_t> counts{0};
    std::vector<MappingKind> mappings{MappingKind::JordanWigner};
    std::vector<std::string> methods;
    std::vector<std::uint64_t> seeds;
};

ExperimentSpec experiment_from_json(const std::string& text);
std::string experiment_to_json(const ExperimentSpec& spec);

/// Method names accepted for each generator family.
const std::vector<std::string>& pauli_methods();
const std::vector<std::string>& clifford_methods();

/// n_paulis products of four distinct Majoranas, angles theta_0, theta_1, ...
std::vector<Target> gen_ansatz(std::size_t n_modes, std::size_t n_paulis, MappingKind mapping, std::uint64_t seed);

/// Eight terms of a double excitation on four distinct random modes, all
/// with angle theta_0 / 8 written as literal multiples of one symbol.
std::vector<Target> gen_double_excitation(std::size_t n_modes, MappingKind mapping, std::uint64_t seed,
                                          std::vector<std::size_t>* modes = nullptr);

struct VerificationFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SweepRow {
    std::size_t size = 0;
    std::size_t count = 0;
    MappingKind mapping = MappingKind::JordanWigner;
    std::string method;
    std::uint64_t seed = 0;
    std::size_t total_cnots = 0;
    std::size_t cnots_excluding_final_clifford = 0;
    std::size_t depth = 0;
    bool verified = false;
    double wall_seconds = 0.0;
};

struct SweepAggregate {
    std::size_t size = 0;
    std::size_t count = 0;
    MappingKind mapping = MappingKind::JordanWigner;
    std::string method;
    std::size_t instances = 0;
    double mean_cnots = 0.0;
    std::size_t min_cnots = 0;
    std::size_t max_cnots = 0;
    double mean_cnots_excluding_final_clifford = 0.0;
};

struct SweepReport {
    ExperimentSpec spec;
    std::vector<SweepRow> rows;  // grid order: cell, seed, method
    std::vector<SweepAggregate> aggregates;
};

/// Runs the grid, verifying every circuit before it is counted. Throws
/// VerificationFailure on the first unsound circuit. `parallel` fans the
/// instances out over OpenMP threads; results do not depend on it.
SweepReport run_sweep(const ExperimentSpec& spec, CliffordDb& db, bool parallel = true);

const SweepAggregate* find_aggregate(const SweepReport& report, std::size_t size, std::size_t count,
                                     MappingKind mapping, const std::string& method);

std::string sweep_to_json(const SweepReport& report, bool include_timing);
std::string sweep_to_csv(const SweepReport& report, bool include_timing);

}  // namespace pauliforge
