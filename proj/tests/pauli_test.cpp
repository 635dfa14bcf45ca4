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

#include "pauliforge/pauli.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "oracle.hpp"

using namespace pauliforge;

namespace {

PauliString random_pauli(std::mt19937_64& rng, std::size_t n, bool any_phase = true) {
    PauliString p = PauliString::from_str(oracle::random_letters(rng, n));
    p.set_phase(any_phase ? rng() % 4 : 2 * (rng() % 2));
    return p;
}

oracle::Mat dense(const PauliString& p) { return oracle::pauli(p.str()); }

}  // namespace

TEST(PauliString, ParseAndPrintRoundTrip) {
    for (const char* text : {"+XXYIZ", "-IZZ", "+I", "-Y"}) {
        EXPECT_EQ(PauliString::from_str(text).str(), text);
    }
    EXPECT_EQ(PauliString::from_str("XZ").str(), "+XZ");
    EXPECT_THROW(PauliString::from_str("XQ"), std::invalid_argument);
}

TEST(PauliString, Weight) {
    EXPECT_EQ(PauliString(4).weight(), 0u);
    EXPECT_EQ(PauliString::from_str("-XIYZ").weight(), 3u);
    PauliString wide(130);
    wide.set_letter(129, 'Y');
    wide.set_letter(64, 'X');
    EXPECT_EQ(wide.weight(), 2u);
}

TEST(Multiply, IdentityTimesPauli) {
    auto r = PauliString::from_str("II") * PauliString::from_str("-ZX");
    EXPECT_EQ(r.str(), "-ZX");
}

TEST(Multiply, ZTimesXIsIY) {
    auto r = PauliString::from_str("Z") * PauliString::from_str("X");
    EXPECT_EQ(r.phase(), 1);
    EXPECT_EQ(r.letter(0), 'Y');
    EXPECT_LT(oracle::dist(dense(r), oracle::mul(oracle::pauli("Z"), oracle::pauli("X"))), 1e-12);
}

TEST(Multiply, TwoQubitExample) {
    auto r = PauliString::from_str("ZX") * PauliString::from_str("XX");
    EXPECT_EQ(r.str(), "+iYI");
    EXPECT_LT(oracle::dist(dense(r), oracle::mul(oracle::pauli("ZX"), oracle::pauli("XX"))), 1e-12);
}

TEST(Multiply, HermitianSquaresToIdentity) {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 50; ++trial) {
        auto p = random_pauli(rng, 1 + rng() % 70, false);
        auto sq = p * p;
        EXPECT_TRUE(sq.is_identity());
        EXPECT_EQ(sq.phase(), 0);
    }
}

TEST(Multiply, DimensionMismatchThrows) {
    EXPECT_THROW(PauliString::from_str("XX") * PauliString::from_str("X"), DimensionError);
}

TEST(Multiply, MatchesDenseProductsAndIsAssociative) {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 300; ++trial) {
        std::size_t n = 1 + rng() % 5;
        auto a = random_pauli(rng, n), b = random_pauli(rng, n), c = random_pauli(rng, n);
        ASSERT_LT(oracle::dist(dense(a * b), oracle::mul(dense(a), dense(b))), 1e-12) << a << " " << b;
        ASSERT_EQ((a * b) * c, a * (b * c));
    }
}

TEST(Multiply, MultiWordStringsMatchPerWordProducts) {
    std::mt19937_64 rng(12);
    for (int trial = 0; trial < 50; ++trial) {
        auto a = random_pauli(rng, 150), b = random_pauli(rng, 150);
        auto r = a * b;
        // Phase of a product of tensor products is the product of per-site phases.
        std::complex<double> expected = std::pow(std::complex<double>(0, 1), a.phase() + b.phase());
        for (std::size_t q = 0; q < 150; ++q) {
            auto s = PauliString::from_str(std::string(1, a.letter(q))) * PauliString::from_str(std::string(1, b.letter(q)));
            ASSERT_EQ(r.letter(q), s.letter(0));
            expected *= std::pow(std::complex<double>(0, 1), s.phase());
        }
        std::complex<double> got = std::pow(std::complex<double>(0, 1), r.phase());
        ASSERT_LT(std::abs(got - expected), 1e-9);
    }
}

TEST(Commutes, Examples) {
    EXPECT_FALSE(commutes(PauliString::from_str("X"), PauliString::from_str("Z")));
    EXPECT_TRUE(commutes(PauliString::from_str("XX"), PauliString::from_str("ZZ")));
    auto p = PauliString::from_str("-XYZIY");
    EXPECT_TRUE(commutes(p, p));
    EXPECT_THROW(commutes(PauliString::from_str("X"), PauliString::from_str("XX")), DimensionError);
}

TEST(Commutes, ExhaustiveAgainstDenseCommutatorUpToTwoQubits) {
    const char* kL = "IXYZ";
    for (std::size_t n = 1; n <= 2; ++n) {
        std::size_t count = n == 1 ? 4 : 16;
        for (std::size_t i = 0; i < count; ++i) {
            for (std::size_t j = 0; j < count; ++j) {
                std::string a, b;
                for (std::size_t q = 0, x = i, y = j; q < n; ++q, x /= 4, y /= 4) {
                    a.push_back(kL[x % 4]);
                    b.push_back(kL[y % 4]);
                }
                auto pa = PauliString::from_str(a), pb = PauliString::from_str(b);
                auto ab = oracle::mul(dense(pa), dense(pb)), ba = oracle::mul(dense(pb), dense(pa));
                EXPECT_EQ(commutes(pa, pb), oracle::dist(ab, ba) < 1e-12) << a << " " << b;
            }
        }
    }
}

TEST(Commutes, RandomAgainstDenseCommutator) {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 200; ++trial) {
        std::size_t n = 1 + rng() % 5;
        auto a = random_pauli(rng, n), b = random_pauli(rng, n);
        auto ab = oracle::mul(dense(a), dense(b)), ba = oracle::mul(dense(b), dense(a));
        ASSERT_EQ(commutes(a, b), oracle::dist(ab, ba) < 1e-12);
    }
}

TEST(Gf2Rank, Examples) {
    std::vector<PauliString> dup = {PauliString::from_str("Z"), PauliString::from_str("Z"), PauliString::from_str("-Z")};
    EXPECT_EQ(gf2_rank(dup), 1u);
    std::vector<PauliString> zxy = {PauliString::from_str("Z"), PauliString::from_str("X"), PauliString::from_str("Y")};
    EXPECT_EQ(gf2_rank(zxy), 2u);
    EXPECT_EQ(gf2_rank(std::span<const PauliString>{}), 0u);
}

TEST(Gf2Rank, BoundedAndInvariantUnderSignsAndDuplication) {
    std::mt19937_64 rng(8);
    for (int trial = 0; trial < 200; ++trial) {
        std::size_t n = 1 + rng() % 6, len = 1 + rng() % 14;
        std::vector<PauliString> list;
        for (std::size_t i = 0; i < len; ++i) list.push_back(random_pauli(rng, n, false));
        std::size_t r = gf2_rank(list);
        EXPECT_LE(r, std::min(2 * n, len));
        auto flipped = list;
        for (auto& p : flipped) {
            if (rng() % 2) p = p.negated();
        }
        flipped.push_back(list[rng() % len]);
        EXPECT_EQ(gf2_rank(flipped), r);
    }
}

TEST(Majorana, JordanWignerExamples) {
    EXPECT_EQ(majorana({MappingKind::JordanWigner, 3}, 4).str(), "+ZZX");
    EXPECT_EQ(majorana({MappingKind::JordanWigner, 3}, 5).str(), "+ZZY");
    EXPECT_EQ(majorana({MappingKind::JordanWigner, 1}, 0).str(), "+X");
    EXPECT_THROW(majorana({MappingKind::JordanWigner, 2}, 4), std::out_of_range);
}

TEST(Majorana, BravyiKitaevFourModesFromFenwickSets) {
    // Update sets U(0)={1,3}, U(1)={3}, U(2)={3}; parity sets P(1)={0},
    // P(2)={1}, P(3)={1,2}; remainder sets R(1)={}, R(2)={1}, R(3)={}.
    FermionMapping bk{MappingKind::BravyiKitaev, 4};
    const char* expected[8] = {"+XXIX", "+YXIX", "+ZXIX", "+IYIX", "+IZXX", "+IZYX", "+IZZX", "+IIIY"};
    for (std::size_t i = 0; i < 8; ++i) EXPECT_EQ(majorana(bk, i).str(), expected[i]) << i;
}

TEST(Majorana, CliffordAlgebraBothMappings) {
    for (auto kind : {MappingKind::JordanWigner, MappingKind::BravyiKitaev}) {
        for (std::size_t n = 1; n <= 8; ++n) {
            FermionMapping m{kind, n};
            for (std::size_t i = 0; i < 2 * n; ++i) {
                auto mi = majorana(m, i);
                EXPECT_TRUE(mi.is_hermitian());
                EXPECT_EQ(mi.phase(), 0);
                auto sq = mi * mi;
                EXPECT_TRUE(sq.is_identity() && sq.phase() == 0);
                for (std::size_t j = i + 1; j < 2 * n; ++j) {
                    EXPECT_FALSE(commutes(mi, majorana(m, j))) << to_string(kind) << " n=" << n << " " << i << "," << j;
                }
            }
        }
    }
}

TEST(Majorana, DenseAnticommutatorsSmallModes) {
    for (auto kind : {MappingKind::JordanWigner, MappingKind::BravyiKitaev}) {
        for (std::size_t n = 1; n <= 4; ++n) {
            FermionMapping m{kind, n};
            for (std::size_t i = 0; i < 2 * n; ++i) {
                for (std::size_t j = 0; j < 2 * n; ++j) {
                    auto a = dense(majorana(m, i)), b = dense(majorana(m, j));
                    auto anti = oracle::add(oracle::mul(a, b), oracle::mul(b, a));
                    auto want = oracle::scale(oracle::eye(a.dim), i == j ? 2.0 : 0.0);
                    ASSERT_LT(oracle::dist(anti, want), 1e-12);
                }
            }
        }
    }
}

TEST(Majorana, BravyiKitaevOccupationParityIsDiagonal) {
    // -i m_2j m_2j+1 encodes (-1)^{n_j} and must be a Z-only string.
    for (std::size_t n = 1; n <= 12; ++n) {
        FermionMapping bk{MappingKind::BravyiKitaev, n};
        for (std::size_t j = 0; j < n; ++j) {
            auto p = majorana(bk, 2 * j) * majorana(bk, 2 * j + 1);
            EXPECT_EQ(p.phase(), 1);
            for (std::size_t q = 0; q < n; ++q) EXPECT_FALSE(p.x(q));
        }
    }
}

TEST(MajoranaProduct, SingleIndex) {
    std::size_t idx[] = {0};
    auto r = majorana_product({MappingKind::JordanWigner, 2}, idx);
    EXPECT_EQ(r.pauli.str(), "+XI");
    EXPECT_EQ(r.i_power, 0);
}

TEST(MajoranaProduct, TwoIndicesNormalizedToHermitian) {
    std::size_t idx[] = {0, 2};
    auto r = majorana_product({MappingKind::JordanWigner, 2}, idx);
    // Dense oracle: m_0 m_2 = (X⊗I)(Z⊗X).
    auto raw = oracle::mul(oracle::pauli("XI"), oracle::pauli("ZX"));
    EXPECT_EQ(r.i_power, 1);
    auto rebuilt = oracle::scale(dense(r.pauli), std::pow(std::complex<double>(0, 1), -r.i_power));
    EXPECT_LT(oracle::dist(rebuilt, raw), 1e-12);
    EXPECT_EQ(r.pauli.str(), "+YX");
}

TEST(MajoranaProduct, RepeatedAdjacentPairCollapses) {
    FermionMapping m{MappingKind::BravyiKitaev, 5};
    std::size_t with_pair[] = {3, 3, 1, 6, 7, 9};
    std::size_t without[] = {1, 6, 7, 9};
    auto a = majorana_product(m, with_pair), b = majorana_product(m, without);
    EXPECT_EQ(a.pauli, b.pauli);
    EXPECT_EQ(a.i_power, b.i_power);
}

TEST(DoubleExcitation, JordanWignerFourModesStructure) {
    FermionMapping jw{MappingKind::JordanWigner, 4};
    auto terms = double_excitation_terms(jw, 0, 1, 2, 3);
    ASSERT_EQ(terms.size(), 8u);
    std::vector<PauliString> paulis;
    for (const auto& t : terms) {
        EXPECT_EQ(t.pauli.weight(), 4u);
        EXPECT_TRUE(t.pauli.is_hermitian());
        paulis.push_back(t.pauli);
    }
    for (std::size_t a = 0; a < 8; ++a) {
        for (std::size_t b = 0; b < 8; ++b) EXPECT_TRUE(commutes(paulis[a], paulis[b]));
    }
    EXPECT_EQ(gf2_rank(paulis), 4u);
    std::vector<PauliString> first_four(paulis.begin(), paulis.begin() + 4);
    EXPECT_EQ(gf2_rank(first_four), 4u);
}

namespace {

// a_j^† and a_j built from dense Majorana matrices: a^† = (m - i m̄)/2.
void check_generator(const FermionMapping& map, std::size_t i, std::size_t j, std::size_t k, std::size_t l) {
    auto m = [&](std::size_t idx) { return dense(majorana(map, idx)); };
    const std::complex<double> I(0, 1);
    auto create = [&](std::size_t p) { return oracle::scale(oracle::add(m(2 * p), m(2 * p + 1), -I), 0.5); };
    auto annihilate = [&](std::size_t p) { return oracle::scale(oracle::add(m(2 * p), m(2 * p + 1), I), 0.5); };
    auto t = oracle::mul(oracle::mul(create(i), create(j)), oracle::mul(annihilate(k), annihilate(l)));
    auto gen = oracle::add(t, oracle::dagger(t), -1.0);
    auto terms = double_excitation_terms(map, i, j, k, l);
    oracle::Mat sum(gen.dim);
    for (const auto& term : terms) sum = oracle::add(sum, dense(term.pauli), static_cast<double>(term.coefficient));
    sum = oracle::scale(sum, I / 8.0);
    EXPECT_LT(oracle::dist(sum, gen), 1e-12) << to_string(map.kind) << " " << i << j << k << l;
}

}  // namespace

TEST(DoubleExcitation, GeneratorMatchesDenseFermionOperators) {
    check_generator({MappingKind::JordanWigner, 4}, 0, 1, 2, 3);
    check_generator({MappingKind::BravyiKitaev, 4}, 0, 1, 2, 3);
    check_generator({MappingKind::JordanWigner, 5}, 3, 0, 4, 1);
    check_generator({MappingKind::BravyiKitaev, 5}, 2, 4, 0, 3);
}

TEST(DoubleExcitation, RandomModesCommuteWithRankFour) {
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 100; ++trial) {
        std::size_t n = 4 + rng() % 10;
        std::vector<std::size_t> modes(n);
        std::iota(modes.begin(), modes.end(), 0);
        std::shuffle(modes.begin(), modes.end(), rng);
        FermionMapping map{trial % 2 ? MappingKind::BravyiKitaev : MappingKind::JordanWigner, n};
        auto terms = double_excitation_terms(map, modes[0], modes[1], modes[2], modes[3]);
        std::vector<PauliString> ps;
        for (const auto& t : terms) ps.push_back(t.pauli);
        for (const auto& a : ps) {
            for (const auto& b : ps) ASSERT_TRUE(commutes(a, b));
        }
        ASSERT_EQ(gf2_rank(ps), 4u);
    }
}

TEST(DoubleExcitation, RepeatedModeIsInvalid) {
    EXPECT_THROW(double_excitation_terms({MappingKind::JordanWigner, 4}, 0, 1, 1, 3), InvalidExcitation);
    EXPECT_THROW(double_excitation_terms({MappingKind::JordanWigner, 4}, 0, 1, 2, 4), InvalidExcitation);
}

TEST(Mapping, NamesRoundTrip) {
    EXPECT_EQ(mapping_from_string(to_string(MappingKind::BravyiKitaev)), MappingKind::BravyiKitaev);
    EXPECT_EQ(mapping_from_string("jw"), MappingKind::JordanWigner);
    EXPECT_THROW(mapping_from_string("parity"), std::invalid_argument);
}
