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

#include "pauliforge/cer.hpp"

#include <gtest/gtest.h>

#include "circuit_oracle.hpp"

using namespace pauliforge;

namespace {

PauliString P(const char* s) { return PauliString::from_str(s); }

Cer random_cer(std::mt19937_64& rng, std::size_t n, std::size_t gates) {
    return Cer::from_circuit(oracle::random_clifford(rng, n, gates));
}

}  // namespace

TEST(IdentityCer, Rows) {
    Cer c(1);
    EXPECT_EQ(c.z_row(0), P("Z"));
    EXPECT_EQ(c.x_row(0), P("X"));
    EXPECT_EQ(Cer(3).y_register(1), P("IYI"));
    for (std::size_t n = 1; n <= 64; ++n) EXPECT_TRUE(Cer(n).is_valid());
}

TEST(TableOne, HadamardColumn) {
    Cer c(1);
    c.apply_gate(make_gate(GateKind::H, 0));
    EXPECT_EQ(c.z_row(0), P("X"));
    EXPECT_EQ(c.x_row(0), P("Z"));
    EXPECT_EQ(c.y_register(0), P("-Y"));
}

TEST(TableOne, SColumn) {
    Cer c(1);
    c.apply_gate(make_gate(GateKind::S, 0));
    EXPECT_EQ(c.z_row(0), P("Z"));
    EXPECT_EQ(c.x_row(0), P("-Y"));
    EXPECT_EQ(c.y_register(0), P("X"));
}

TEST(TableOne, CnotColumn) {
    Cer c(2);
    c.apply_gate(make_gate(GateKind::CX, 0, 1));
    EXPECT_EQ(c.z_row(0), P("ZI"));
    EXPECT_EQ(c.z_row(1), P("ZZ"));
    EXPECT_EQ(c.x_row(0), P("XX"));
    EXPECT_EQ(c.x_row(1), P("IX"));
    // Y row entries: CER_{c,Y} CER_{t,X} and CER_{t,Y} CER_{c,Z} of the old registers.
    EXPECT_EQ(c.y_register(0), P("YI") * P("IX"));
    EXPECT_EQ(c.y_register(1), P("IY") * P("ZI"));
}

TEST(TableOne, AllEntriesOnRandomCers) {
    std::mt19937_64 rng(4);
    for (int trial = 0; trial < 200; ++trial) {
        std::size_t n = 2 + rng() % 5;
        Cer old = random_cer(rng, n, 25);
        std::size_t q = rng() % n, t = (q + 1 + rng() % (n - 1)) % n;
        Cer h = old, s = old, cx = old;
        h.apply_gate(make_gate(GateKind::H, q));
        s.apply_gate(make_gate(GateKind::S, q));
        cx.apply_gate(make_gate(GateKind::CX, q, t));
        EXPECT_EQ(h.z_row(q), old.x_row(q));
        EXPECT_EQ(h.x_row(q), old.z_row(q));
        EXPECT_EQ(h.y_register(q), old.y_register(q).negated());
        EXPECT_EQ(s.z_row(q), old.z_row(q));
        EXPECT_EQ(s.x_row(q), old.y_register(q).negated());
        EXPECT_EQ(s.y_register(q), old.x_row(q));
        EXPECT_EQ(cx.z_row(q), old.z_row(q));
        EXPECT_EQ(cx.z_row(t), old.z_row(t) * old.z_row(q));
        EXPECT_EQ(cx.x_row(q), old.x_row(q) * old.x_row(t));
        EXPECT_EQ(cx.x_row(t), old.x_row(t));
        EXPECT_EQ(cx.y_register(q), old.y_register(q) * old.x_row(t));
        EXPECT_EQ(cx.y_register(t), old.y_register(t) * old.z_row(q));
        for (std::size_t r = 0; r < n; ++r) {
            if (r == q || r == t) continue;
            EXPECT_EQ(cx.z_row(r), old.z_row(r));
            EXPECT_EQ(cx.x_row(r), old.x_row(r));
        }
    }
}

TEST(FromCircuit, Examples) {
    EXPECT_EQ(Cer::from_circuit(Circuit(3)), Cer(3));
    Circuit c(2);
    c.h(0);
    c.cx(0, 1);
    EXPECT_EQ(Cer::from_circuit(c).z_row(1), P("XZ"));
    Circuit r(1);
    r.rot('Z', 0, 1, 0);
    EXPECT_THROW(Cer::from_circuit(r), std::invalid_argument);
}

TEST(FromCircuit, CircuitThenInverseIsIdentity) {
    std::mt19937_64 rng(6);
    for (int trial = 0; trial < 50; ++trial) {
        std::size_t n = 1 + rng() % 10;
        Circuit c = oracle::random_clifford(rng, n, 40);
        Circuit both = c;
        both.append(c.inverse());
        EXPECT_TRUE(Cer::from_circuit(both).is_identity());
    }
}

TEST(Conjugation, RowsMatchDenseConjugation) {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 100; ++trial) {
        std::size_t n = 1 + rng() % 5;
        Circuit c = oracle::random_clifford(rng, n, rng() % 31);
        Cer cer = Cer::from_circuit(c);
        auto u = oracle::circuit_matrix(c);
        for (std::size_t q = 0; q < n; ++q) {
            for (char axis : {'Z', 'X', 'Y'}) {
                auto want = oracle::mul(oracle::mul(oracle::dagger(u), oracle::on(n, q, axis)), u);
                ASSERT_LT(oracle::dist(oracle::pauli(cer.reg(q, axis).str()), want), 1e-12);
            }
        }
        PauliString p = PauliString::from_str(oracle::random_letters(rng, n)).negated();
        auto want = oracle::mul(oracle::mul(oracle::dagger(u), oracle::pauli(p.str())), u);
        ASSERT_LT(oracle::dist(oracle::pauli(cer.conjugate(p).str()), want), 1e-12);
    }
}

TEST(Validity, PreservedByRandomGateSequences) {
    std::mt19937_64 rng(8);
    for (int trial = 0; trial < 60; ++trial) {
        std::size_t n = 1 + rng() % 16;
        Cer cer(n);
        for (int g = 0; g < 60; ++g) {
            cer.apply_gate(oracle::random_clifford_gate(rng, n));
            ASSERT_TRUE(cer.is_valid());
        }
    }
    Cer bad = Cer(2);
    EXPECT_THROW(Cer::from_rows({P("ZI"), P("ZI")}, {P("XI"), P("IX")}), std::invalid_argument);
}

TEST(Decompose, Examples) {
    auto d = decompose(Cer(1), P("Z"));
    EXPECT_EQ(d.axis, std::vector<char>{'Z'});
    EXPECT_EQ(d.sign, 1);
    auto y = decompose(Cer(5), P("-IIYII"));
    EXPECT_EQ(y.axis[2], 'Y');
    EXPECT_EQ(y.sign, -1);
    EXPECT_EQ(y.support(), std::vector<std::size_t>{2});
    Cer cx(2);
    cx.apply_gate(make_gate(GateKind::CX, 0, 1));
    auto zz = decompose(cx, P("ZZ"));
    EXPECT_EQ(zz.axis, (std::vector<char>{0, 'Z'}));
    EXPECT_EQ(zz.sign, 1);
    EXPECT_EQ(support(decompose(Cer(4), P("ZIIZ"))), (std::vector<std::size_t>{0, 3}));
    EXPECT_TRUE((Decomposition{std::vector<char>(3, 0), 1}.support().empty()));
}

TEST(Decompose, ReconstructionIsExact) {
    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 200; ++trial) {
        std::size_t n = 1 + rng() % 12;
        Cer cer = random_cer(rng, n, 50);
        PauliString s = PauliString::from_str(oracle::random_letters(rng, n));
        if (rng() % 2) s = s.negated();
        auto d = decompose(cer, s);
        ASSERT_EQ(reconstruct(cer, d), s);
        ASSERT_EQ(cer.conjugate(d.letters()), s);
    }
}

TEST(FindImplemented, Examples) {
    std::vector<PauliString> x1 = {P("IX")};
    auto hits = find_implemented(Cer(2), x1);
    ASSERT_EQ(hits.size(), 1u);
    EXPECT_EQ(hits[0], (ImplementedAt{0, 1, 'X', 1}));
    std::vector<PauliString> zz = {P("ZZ")};
    EXPECT_TRUE(find_implemented(Cer(2), zz).empty());
    Cer cx(2);
    cx.apply_gate(make_gate(GateKind::CX, 0, 1));
    hits = find_implemented(cx, zz);
    ASSERT_EQ(hits.size(), 1u);
    EXPECT_EQ(hits[0], (ImplementedAt{0, 1, 'Z', 1}));
    std::vector<PauliString> neg = {P("-ZZ")};
    EXPECT_EQ(find_implemented(cx, neg)[0].sign, -1);
}

TEST(DistinctPauliCount, Bounds) {
    std::vector<Cer> empty_trace = replay_trace(Circuit(3));
    EXPECT_EQ(distinct_pauli_count(empty_trace), 9u);
    Circuit one(2);
    one.cx(0, 1);
    EXPECT_EQ(distinct_pauli_count(replay_trace(one)), 10u);
    std::mt19937_64 rng(10);
    for (int trial = 0; trial < 100; ++trial) {
        std::size_t n = 1 + rng() % 6;
        Circuit c = oracle::random_clifford(rng, n, rng() % 40);
        EXPECT_LE(distinct_pauli_count(replay_trace(c)), 3 * n + 4 * c.cnot_count());
    }
}

TEST(Dump, Format) {
    EXPECT_EQ(Cer(2).dump(), "0 | Z: +ZI | X: +XI | Y: +YI\n1 | Z: +IZ | X: +IX | Y: +IY\n");
}
