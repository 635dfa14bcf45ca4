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

#include "pauliforge/arch.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <deque>
#include <random>

using namespace pauliforge;

namespace {

CouplingGraph random_connected_graph(std::mt19937_64& rng, std::size_t n, double extra) {
    CouplingGraph g(n);
    for (std::size_t v = 1; v < n; ++v) g.add_edge(v, rng() % v);
    std::uniform_real_distribution<double> u(0, 1);
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = a + 1; b < n; ++b) {
            if (u(rng) < extra) g.add_edge(a, b);
        }
    }
    return g;
}

bool connected_without(const CouplingGraph& g, std::size_t removed) {
    std::size_t n = g.num_nodes();
    if (n <= 1) return true;
    std::size_t start = removed == 0 ? 1 : 0;
    std::vector<char> seen(n, 0);
    seen[removed] = 1;
    seen[start] = 1;
    std::deque<std::size_t> q{start};
    std::size_t count = 1;
    while (!q.empty()) {
        auto v = q.front();
        q.pop_front();
        for (auto w : g.neighbors(v)) {
            if (!seen[w]) {
                seen[w] = 1;
                ++count;
                q.push_back(w);
            }
        }
    }
    return count == n - 1;
}

bool induced_connected(const CouplingGraph& g, std::uint32_t mask) {
    std::size_t first = static_cast<std::size_t>(std::countr_zero(mask));
    std::uint32_t seen = 1u << first;
    std::deque<std::size_t> q{first};
    while (!q.empty()) {
        auto v = q.front();
        q.pop_front();
        for (auto w : g.neighbors(v)) {
            if ((mask >> w & 1) && !(seen >> w & 1)) {
                seen |= 1u << w;
                q.push_back(w);
            }
        }
    }
    return seen == mask;
}

// Optimal Steiner tree size in edges: smallest connected node superset of the terminals, minus one.
std::size_t optimal_steiner_edges(const CouplingGraph& g, const std::vector<std::size_t>& terms) {
    std::uint32_t tmask = 0;
    for (auto t : terms) tmask |= 1u << t;
    std::size_t best = SIZE_MAX;
    for (std::uint32_t m = 1; m < (1u << g.num_nodes()); ++m) {
        if ((m & tmask) != tmask) continue;
        if (static_cast<std::size_t>(std::popcount(m)) - 1 >= best) continue;
        if (induced_connected(g, m)) best = static_cast<std::size_t>(std::popcount(m)) - 1;
    }
    return best;
}

void expect_valid_tree(const SteinerResult& r, const CouplingGraph& g) {
    EXPECT_EQ(r.tree_edges.size() + 1, r.nodes.size());
    for (auto [u, v] : r.tree_edges) EXPECT_TRUE(g.has_edge(u, v));
    for (auto t : r.terminals) EXPECT_TRUE(std::binary_search(r.nodes.begin(), r.nodes.end(), t));
    CouplingGraph tree(g.num_nodes(), r.tree_edges);
    std::uint32_t mask = 0;
    for (auto v : r.nodes) mask |= 1u << v;
    if (g.num_nodes() <= 32) EXPECT_TRUE(induced_connected(tree, mask));
}

}  // namespace

TEST(PathGraph, Basics) {
    EXPECT_EQ(path_graph(1).num_edges(), 0u);
    EXPECT_EQ(path_graph(5).num_edges(), 4u);
    EXPECT_EQ(path_graph(7).diameter(), 6u);
}

TEST(HeavyHex, DegreeAndConnectivity) {
    for (std::size_t d = 2; d <= 8; ++d) {
        auto g = heavy_hex(d);
        EXPECT_TRUE(g.is_connected()) << d;
        for (std::size_t v = 0; v < g.num_nodes(); ++v) EXPECT_LE(g.degree(v), 3u);
    }
    EXPECT_THROW(heavy_hex(1), std::invalid_argument);
}

TEST(HeavyHex, EagleScaleMatchesPublishedLayout) {
    auto g = heavy_hex(6);
    EXPECT_EQ(g.num_nodes(), 127u);
    EXPECT_EQ(g.num_edges(), 144u);
    // Bridge qubits of the published 127-qubit coupling map.
    std::vector<Edge> known = {{0, 14},  {14, 18}, {4, 15},   {15, 22},  {12, 17},  {17, 30},
                               {20, 33}, {33, 39}, {32, 36},  {36, 51},  {96, 109}, {109, 114},
                               {108, 112}, {112, 126}, {0, 1}, {125, 126}};
    for (auto [u, v] : known) EXPECT_TRUE(g.has_edge(u, v)) << u << "-" << v;
    EXPECT_EQ(g.degree(13), 1u);
    EXPECT_EQ(g.degree(113), 1u);
}

TEST(Steiner, Examples) {
    std::size_t t03[] = {0, 3};
    auto r = steiner_tree(path_graph(4), t03);
    EXPECT_EQ(r.nodes, (std::vector<std::size_t>{0, 1, 2, 3}));
    EXPECT_EQ(r.tree_edges.size(), 3u);
    std::size_t single[] = {2};
    r = steiner_tree(path_graph(4), single);
    EXPECT_EQ(r.nodes, std::vector<std::size_t>{2});
    EXPECT_TRUE(r.tree_edges.empty());
    std::size_t leaves[] = {1, 2, 3};
    r = steiner_tree(star_graph(3), leaves);
    EXPECT_EQ(r.nodes, (std::vector<std::size_t>{0, 1, 2, 3}));
    EXPECT_EQ(r.tree_edges.size(), 3u);
    EXPECT_THROW(steiner_tree(path_graph(3), std::span<const std::size_t>{}), std::invalid_argument);
    CouplingGraph split(4);
    split.add_edge(0, 1);
    split.add_edge(2, 3);
    std::size_t across[] = {0, 3};
    EXPECT_THROW(steiner_tree(split, across), DisconnectedGraph);
}

TEST(Steiner, TwoApproximationOnSmallGraphs) {
    std::mt19937_64 rng(1);
    for (int trial = 0; trial < 300; ++trial) {
        std::size_t n = 2 + rng() % 7;
        auto g = random_connected_graph(rng, n, 0.15);
        std::vector<std::size_t> terms;
        for (std::size_t v = 0; v < n; ++v) {
            if (rng() % 2) terms.push_back(v);
        }
        if (terms.empty()) terms.push_back(rng() % n);
        auto r = steiner_tree(g, terms);
        expect_valid_tree(r, g);
        std::size_t opt = optimal_steiner_edges(g, terms);
        EXPECT_LE(r.tree_edges.size(), 2 * opt);
        EXPECT_GE(r.tree_edges.size(), opt);
        // Leaves of the tree are terminals.
        std::vector<std::size_t> deg(n, 0);
        for (auto [u, v] : r.tree_edges) {
            ++deg[u];
            ++deg[v];
        }
        for (auto v : r.nodes) {
            if (deg[v] <= 1) EXPECT_TRUE(std::find(terms.begin(), terms.end(), v) != terms.end());
        }
        EXPECT_EQ(steiner_tree(g, terms).tree_edges, r.tree_edges);
    }
}

TEST(Steiner, RespectsAllowedMask) {
    auto g = cycle_graph(6);
    std::vector<char> allowed(6, 1);
    allowed[1] = 0;
    std::size_t t[] = {0, 2};
    auto r = steiner_tree(g, t, allowed);
    EXPECT_EQ(r.nodes, (std::vector<std::size_t>{0, 2, 3, 4, 5}));
}

TEST(InducedSubgraph, Examples) {
    auto sub = induced_subgraph(path_graph(6), std::vector<std::size_t>{2, 3, 4});
    EXPECT_EQ(sub.graph, path_graph(3));
    EXPECT_EQ(sub.to_global, (std::vector<std::size_t>{2, 3, 4}));
    EXPECT_EQ(sub.local_of(4), 2u);
    auto tri = complete_graph(3);
    std::size_t all[] = {0, 1, 2};
    auto st = steiner_tree(tri, all);
    EXPECT_EQ(st.tree_edges.size(), 2u);
    EXPECT_EQ(induced_subgraph(tri, st.nodes).graph.num_edges(), 3u);
    EXPECT_EQ(induced_subgraph(tri, std::vector<std::size_t>{}).graph.num_nodes(), 0u);
}

TEST(InducedSubgraph, ContainsSteinerTreeEdges) {
    std::mt19937_64 rng(2);
    for (int trial = 0; trial < 100; ++trial) {
        auto g = random_connected_graph(rng, 3 + rng() % 10, 0.2);
        std::vector<std::size_t> terms = {rng() % g.num_nodes(), rng() % g.num_nodes(), rng() % g.num_nodes()};
        auto st = steiner_tree(g, terms);
        auto sub = induced_subgraph(g, st.nodes);
        for (auto [u, v] : st.tree_edges) EXPECT_TRUE(sub.graph.has_edge(sub.local_of(u), sub.local_of(v)));
    }
}

TEST(NonCutNodes, Examples) {
    EXPECT_EQ(non_cut_nodes(path_graph(3)), (std::vector<std::size_t>{0, 2}));
    EXPECT_EQ(non_cut_nodes(cycle_graph(5)).size(), 5u);
    auto star = non_cut_nodes(star_graph(4));
    EXPECT_EQ(star, (std::vector<std::size_t>{1, 2, 3, 4}));
    EXPECT_EQ(non_cut_nodes(path_graph(1)), std::vector<std::size_t>{0});
}

TEST(NonCutNodes, AgreesWithBruteForce) {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 300; ++trial) {
        auto g = random_connected_graph(rng, 1 + rng() % 12, 0.1);
        std::vector<std::size_t> brute;
        for (std::size_t v = 0; v < g.num_nodes(); ++v) {
            if (connected_without(g, v)) brute.push_back(v);
        }
        EXPECT_EQ(non_cut_nodes(g), brute);
    }
}

TEST(NonCutNodes, AliveMask) {
    auto g = path_graph(5);
    std::vector<char> alive = {0, 1, 1, 1, 0};
    EXPECT_EQ(non_cut_nodes(g, alive), (std::vector<std::size_t>{1, 3}));
}

TEST(GraphText, RoundTripAndArchSpecs) {
    auto g = heavy_hex(2);
    EXPECT_EQ(graph_from_text(graph_to_text(g)), g);
    EXPECT_EQ(parse_arch("path:4"), path_graph(4));
    EXPECT_EQ(parse_arch("heavyhex:3"), heavy_hex(3));
    EXPECT_THROW(parse_arch("ring:3"), std::invalid_argument);
    EXPECT_THROW(graph_from_text("0 1\n"), std::invalid_argument);
    EXPECT_THROW(graph_from_text("n 2\n0 0\n"), std::invalid_argument);
}

TEST(BfsLayout, VisitsEveryNodeOnce) {
    auto g = heavy_hex(3);
    auto layout = bfs_layout(g);
    auto sorted = layout;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size(); ++i) EXPECT_EQ(sorted[i], i);
    EXPECT_EQ(layout.front(), 0u);
}
