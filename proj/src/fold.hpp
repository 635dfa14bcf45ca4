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

#include "pauliforge/arch.hpp"
#include "pauliforge/circuit.hpp"
#include "pauliforge/clifford_db.hpp"
#include "pauliforge/pauli.hpp"

namespace pauliforge::detail {

std::vector<std::size_t> support_of(const PauliString& p);

/// Gates turning `pattern` into +-Z on `root` under forward conjugation:
/// basis changes to Z, then a CNOT fold along the Steiner tree of the
/// support plus root within `allowed`.
std::vector<Op> fold_z(const PauliString& pattern, const CouplingGraph& g, std::span<const char> allowed,
                       std::size_t root);

/// Gates turning `pattern`, which carries X or Y on `root`, into +-X on root
/// while leaving Z_root fixed.
std::vector<Op> fold_x(const PauliString& pattern, const CouplingGraph& g, std::span<const char> allowed,
                       std::size_t root);

/// Independent subset in order of appearance, as positions into `paulis`.
std::vector<std::size_t> independent_subset(std::span<const PauliString> paulis);

/// Letters of p on `nodes`, in that order.
std::string restrict_letters(const PauliString& p, std::span<const std::size_t> nodes);

/// First `count` nodes of a BFS from `start` inside the node set `active`
/// (sorted), neighbours visited in increasing order.
std::vector<std::size_t> bfs_window(const CouplingGraph& g, const std::vector<std::size_t>& active, std::size_t start,
                                    std::size_t count);

/// Compress lookup of the patterns restricted to `window`, emptying
/// `removed`. Returns global gates; an empty result when nothing acts on the
/// removed node.
std::vector<Op> compress_step(CliffordDb& db, const CouplingGraph& g, std::span<const PauliString> patterns,
                              const std::vector<std::size_t>& window, std::size_t removed, std::size_t* cnots);

/// Implement lookup of the patterns restricted to `nodes`.
std::vector<Op> implement_step(CliffordDb& db, const CouplingGraph& g, std::span<const PauliString> patterns,
                               const std::vector<std::size_t>& nodes, std::size_t* cnots);

/// Gates of the 1-qubit Clifford mapping letter `from_z` to Z and `from_x` to
/// X (signs ignored).
std::vector<GateKind> local_to_zx(char from_z, char from_x);

std::size_t count_cnots(std::span<const Op> ops);

}  // namespace pauliforge::detail
