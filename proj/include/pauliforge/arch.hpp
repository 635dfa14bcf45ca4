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
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace pauliforge {

struct DisconnectedGraph : std::runtime_error {
    using std::runtime_error::runtime_error;
};

using Edge = std::pair<std::size_t, std::size_t>;

/// Simple undirected graph over nodes 0..n-1. Edges are stored with
/// first < second and sorted; adjacency lists are sorted.
class CouplingGraph {
   public:
    CouplingGraph() = default;
    explicit CouplingGraph(std::size_t n) : adj_(n) {}
    CouplingGraph(std::size_t n, std::span<const Edge> edges);

    std::size_t num_nodes() const { return adj_.size(); }
    std::size_t num_edges() const { return edges_.size(); }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<std::size_t>& neighbors(std::size_t v) const { return adj_.at(v); }
    std::size_t degree(std::size_t v) const { return adj_.at(v).size(); }
    bool has_edge(std::size_t u, std::size_t v) const;

    /// Throws std::invalid_argument on self-loops or out-of-range nodes;
    /// duplicate edges are ignored.
    void add_edge(std::size_t u, std::size_t v);

    bool is_connected() const;
    /// Hop distances from `source`; unreachable nodes get SIZE_MAX.
    std::vector<std::size_t> distances(std::size_t source) const;
    std::size_t diameter() const;

    bool operator==(const CouplingGraph&) const = default;

   private:
    std::vector<std::vector<std::size_t>> adj_;
    std::vector<Edge> edges_;
};

CouplingGraph path_graph(std::size_t n);
CouplingGraph cycle_graph(std::size_t n);
CouplingGraph star_graph(std::size_t leaves);
CouplingGraph complete_graph(std::size_t n);
CouplingGraph grid_graph(std::size_t rows, std::size_t cols);

/// Heavy-hexagon lattice with d rows of hexagons: d + 1 rows of 2d + 3 qubit
/// columns joined by bridge qubits every fourth column (offset alternating
/// by row), numbered row by row with each bridge layer after its upper row.
/// Unbridged end qubits of the first and last row are dropped. d = 6 gives
/// the 127-qubit Eagle layout.
CouplingGraph heavy_hex(std::size_t d);

struct SteinerResult {
    std::vector<std::size_t> nodes;
    std::vector<Edge> tree_edges;
    std::vector<std::size_t> terminals;
};

/// Mehlhorn's 2-approximate Steiner tree with lowest-id tie breaking.
SteinerResult steiner_tree(const CouplingGraph& g, std::span<const std::size_t> terminals);
/// Same, restricted to nodes with allowed[v] != 0.
SteinerResult steiner_tree(const CouplingGraph& g, std::span<const std::size_t> terminals,
                           std::span<const char> allowed);

/// Subgraph induced on `nodes` (sorted); local node i is to_global[i].
struct InducedSubgraph {
    CouplingGraph graph;
    std::vector<std::size_t> to_global;

    std::size_t local_of(std::size_t global) const;
};

InducedSubgraph induced_subgraph(const CouplingGraph& g, std::span<const std::size_t> nodes);

/// Nodes whose removal keeps the graph connected.
std::vector<std::size_t> non_cut_nodes(const CouplingGraph& g);
/// Same, for the subgraph induced on nodes with alive[v] != 0.
std::vector<std::size_t> non_cut_nodes(const CouplingGraph& g, std::span<const char> alive);

/// Parses "path:<n>", "cycle:<n>", "star:<leaves>", "complete:<n>", "grid:<r>x<c>",
/// "heavyhex:<d>" and "file:<path>".
CouplingGraph parse_arch(const std::string& spec);
CouplingGraph read_graph_file(const std::string& path);
std::string graph_to_text(const CouplingGraph& g);
CouplingGraph graph_from_text(const std::string& text);

/// Deterministic BFS ordering of the nodes starting at node 0: position i of
/// the result is the physical node hosting logical qubit i.
std::vector<std::size_t> bfs_layout(const CouplingGraph& g);

}  // namespace pauliforge
