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

#include "pauliforge/clifford_synth.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

#include "circuit_oracle.hpp"
#include "pauliforge/verify.hpp"

namespace pauliforge {
namespace {

const CliffordVariant kAll[] = {CliffordVariant::PauliPair, CliffordVariant::PauliPairUnordered,
                                CliffordVariant::Mpcs, CliffordVariant::MpcsUnordered};

// Dense matrix of the qubit permutation moving qubit i to perm[i].
oracle::Mat permutation_matrix(const std::vector<std::size_t>& perm) {
    std::size_t n = perm.size(), d = std::size_t{1} << n;
    oracle::Mat m(d);
    for (std::size_t b = 0; b < d; ++b) {
        std::size_t out = 0;
        for (std::size_t i = 0; i < n; ++i) {
            if (b >> (n - 1 - i) & 1) out |= std::size_t{1} << (n - 1 - perm[i]);
        }
        m(out, b) = 1.0;
    }
    return m;
}

bool on_edges(const Circuit& c, const CouplingGraph& g) {
    return std::all_of(c.ops().begin(), c.ops().end(),
                       [&](const Op& op) { return !op.is_cnot() || g.has_edge(op.q0, op.q1); });
}

TEST(CliffordSynth, IdentityGivesEmptyCircuit) {
    CliffordDb db;
    for (auto v : kAll) {
        CliffordSpec spec{Cer(5), path_graph(5), v};
        auto r = synthesize_clifford(spec, &db);
        EXPECT_EQ(r.circuit.cnot_count(), 0u) << to_string(v);
        std::vector<std::size_t> id(5);
        std::iota(id.begin(), id.end(), 0);
        EXPECT_EQ(r.permutation, id);
    }
}

TEST(CliffordSynth, SwapIsFreeUpToPermutation) {
    Circuit swap(3);
    swap.cx(0, 1);
    swap.cx(1, 0);
    swap.cx(0, 1);
    Cer src = Cer::from_circuit(swap);
    CliffordDb db;
    for (auto v : kAll) {
        auto r = synthesize_clifford({src, path_graph(3), v}, &db);
        if (is_unordered(v)) {
            EXPECT_EQ(r.circuit.cnot_count(), 0u);
            EXPECT_EQ(r.permutation, (std::vector<std::size_t>{1, 0, 2}));
        } else {
            EXPECT_EQ(r.circuit.cnot_count(), 3u);
        }
        EXPECT_TRUE(tableau_equal_up_to_permutation(src, Cer::from_circuit(r.circuit), r.permutation).pass);
    }
}

TEST(CliffordSynth, RandomCliffordsMatchDenseOracle) {
    CliffordDb db;
    for (std::uint64_t seed = 0; seed < 6; ++seed) {
        std::size_t n = 4 + seed % 3;
        auto g = path_graph(n);
        Circuit c = random_clifford_circuit(n, 20, seed);
        Cer src = Cer::from_circuit(c);
        oracle::Mat u = oracle::circuit_matrix(c);
        for (auto v : kAll) {
            for (std::size_t k : {1u, 2u}) {
                auto r = synthesize_clifford({src, g, v, k}, &db);
                ASSERT_TRUE(on_edges(r.circuit, g));
                auto w = oracle::mul(oracle::circuit_matrix(r.circuit), permutation_matrix(r.permutation));
                EXPECT_GT(oracle::overlap(u, w), 1 - 1e-9) << to_string(v) << " k=" << k << " seed " << seed;
                if (!is_unordered(v)) {
                    std::vector<std::size_t> id(n);
                    std::iota(id.begin(), id.end(), 0);
                    EXPECT_EQ(r.permutation, id);
                }
                auto order = r.removal_order;
                std::sort(order.begin(), order.end());
                for (std::size_t i = 0; i < order.size(); ++i) EXPECT_EQ(order[i], i);
            }
        }
    }
}

TEST(CliffordSynth, TableauCheckOnLargerGraphs) {
    CliffordDb db;
    std::mt19937_64 rng(4);
    for (int trial = 0; trial < 8; ++trial) {
        auto g = trial % 2 ? grid_graph(3, 3) : heavy_hex(2);
        std::size_t n = g.num_nodes();
        Circuit c = random_clifford_circuit(n, 25, trial);
        Cer src = Cer::from_circuit(c);
        for (auto v : kAll) {
            auto r = synthesize_clifford({src, g, v}, &db);
            EXPECT_TRUE(on_edges(r.circuit, g));
            EXPECT_TRUE(tableau_equal_up_to_permutation(src, Cer::from_circuit(r.circuit), r.permutation).pass)
                << to_string(v);
        }
    }
}

TEST(CliffordSynth, ResetReturnsToPermutation) {
    CliffordDb db;
    auto g = path_graph(6);
    Circuit c = random_clifford_circuit(6, 15, 77);
    for (auto v : kAll) {
        auto r = reset_circuit(Cer::from_circuit(c), g, v, &db);
        Circuit full = c;
        full.append(r.circuit);
        // G * C = P_perm: every Z_i and X_i lands on qubit perm[i].
        for (std::size_t i = 0; i < 6; ++i) {
            auto z = PauliString::single(6, i, 'Z'), x = PauliString::single(6, i, 'X');
            for (const auto& op : full.ops()) {
                conjugate_forward(z, op);
                conjugate_forward(x, op);
            }
            EXPECT_EQ(z, PauliString::single(6, r.permutation[i], 'Z')) << to_string(v);
            EXPECT_EQ(x, PauliString::single(6, r.permutation[i], 'X')) << to_string(v);
        }
    }
}

TEST(CliffordSynth, DirectionalMeans) {
    CliffordDb db;
    auto g = path_graph(6);
    double sum[4] = {0, 0, 0, 0};
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        Cer src = Cer::from_circuit(random_clifford_circuit(6, 30, seed));
        for (int v = 0; v < 4; ++v) sum[v] += synthesize_clifford({src, g, kAll[v]}, &db).circuit.cnot_count();
    }
    EXPECT_LE(sum[3], sum[1]);
    EXPECT_LE(sum[1], sum[0]);
    EXPECT_LE(sum[2], sum[0]);
}

TEST(CliffordSynth, Errors) {
    CliffordDb db;
    EXPECT_THROW(synthesize_clifford({Cer(3), path_graph(3), CliffordVariant::Mpcs}, nullptr), std::invalid_argument);
    EXPECT_THROW(synthesize_clifford({Cer(3), path_graph(3), CliffordVariant::PauliPair, 3}, &db),
                 std::invalid_argument);
    EXPECT_THROW(synthesize_clifford({Cer(4), path_graph(3), CliffordVariant::PauliPair}, &db),
                 std::invalid_argument);
    std::vector<Edge> split{{0, 1}, {2, 3}};
    EXPECT_THROW(synthesize_clifford({Cer(4), CouplingGraph(4, split), CliffordVariant::PauliPair}, &db),
                 DisconnectedGraph);
}

TEST(RandomClifford, ShapeAndDeterminism) {
    Circuit a = random_clifford_circuit(5, 12, 3), b = random_clifford_circuit(5, 12, 3);
    EXPECT_EQ(a.ops(), b.ops());
    EXPECT_EQ(a.cnot_count(), 12u);
    EXPECT_NE(a.ops(), random_clifford_circuit(5, 12, 4).ops());
    EXPECT_THROW(random_clifford_circuit(1, 3, 0), std::invalid_argument);
}

TEST(CliffordVariantNames, RoundTrip) {
    for (auto v : kAll) EXPECT_EQ(clifford_variant_from_string(to_string(v)), v);
    EXPECT_THROW(clifford_variant_from_string("greedy"), std::invalid_argument);
}

}  // namespace
}  // namespace pauliforge
