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

#include <algorithm>
#include <bit>
#include <functional>
#include <ostream>

namespace pauliforge {

namespace {

std::size_t words_for(std::size_t n) { return (n + 63) / 64; }

void check_same_size(const PauliString& a, const PauliString& b) {
    if (a.num_qubits() != b.num_qubits()) {
        throw DimensionError(
            "Pauli size mismatch: " + std::to_string(a.num_qubits()) + " vs " + std::to_string(b.num_qubits()));
    }
}

}  // namespace

PauliString::PauliString(std::size_t num_qubits)
    : num_qubits_(num_qubits), xs_(words_for(num_qubits), 0), zs_(words_for(num_qubits), 0) {}

PauliString PauliString::from_str(std::string_view text) {
    std::uint8_t phase = 0;
    if (!text.empty() && (text.front() == '+' || text.front() == '-')) {
        phase = text.front() == '-' ? 2 : 0;
        text.remove_prefix(1);
    }
    PauliString result(text.size());
    for (std::size_t q = 0; q < text.size(); ++q) {
        char c = text[q];
        if (c == '_') c = 'I';
        result.set_letter(q, c);
    }
    result.phase_ = phase;
    return result;
}

PauliString PauliString::single(std::size_t num_qubits, std::size_t qubit, char letter) {
    if (qubit >= num_qubits) {
        throw std::out_of_range("qubit " + std::to_string(qubit) + " out of range");
    }
    PauliString result(num_qubits);
    result.set_letter(qubit, letter);
    return result;
}

void PauliString::set_x(std::size_t q, bool v) {
    std::uint64_t mask = std::uint64_t{1} << (q & 63);
    if (v) {
        xs_[q >> 6] |= mask;
    } else {
        xs_[q >> 6] &= ~mask;
    }
}

void PauliString::set_z(std::size_t q, bool v) {
    std::uint64_t mask = std::uint64_t{1} << (q & 63);
    if (v) {
        zs_[q >> 6] |= mask;
    } else {
        zs_[q >> 6] &= ~mask;
    }
}

char PauliString::letter(std::size_t q) const {
    static constexpr char kLetters[4] = {'I', 'X', 'Z', 'Y'};
    return kLetters[static_cast<int>(x(q)) | (static_cast<int>(z(q)) << 1)];
}

void PauliString::set_letter(std::size_t q, char letter) {
    switch (letter) {
        case 'I':
            set_x(q, false);
            set_z(q, false);
            break;
        case 'X':
            set_x(q, true);
            set_z(q, false);
            break;
        case 'Y':
            set_x(q, true);
            set_z(q, true);
            break;
        case 'Z':
            set_x(q, false);
            set_z(q, true);
            break;
        default:
            throw std::invalid_argument(std::string("not a Pauli letter: '") + letter + "'");
    }
}

int PauliString::sign() const {
    if (!is_hermitian()) {
        throw std::logic_error("Pauli " + str() + " is not Hermitian");
    }
    return phase_ == 0 ? 1 : -1;
}

PauliString PauliString::negated() const {
    PauliString r = *this;
    r.phase_ = static_cast<std::uint8_t>((phase_ + 2) & 3);
    return r;
}

PauliString PauliString::unsigned_copy() const {
    PauliString r = *this;
    r.phase_ = 0;
    return r;
}

std::size_t PauliString::weight() const {
    std::size_t w = 0;
    for (std::size_t k = 0; k < xs_.size(); ++k) {
        w += static_cast<std::size_t>(std::popcount(xs_[k] | zs_[k]));
    }
    return w;
}

bool PauliString::is_identity() const {
    for (std::size_t k = 0; k < xs_.size(); ++k) {
        if (xs_[k] | zs_[k]) return false;
    }
    return true;
}

bool PauliString::same_letters(const PauliString& other) const {
    return num_qubits_ == other.num_qubits_ && xs_ == other.xs_ && zs_ == other.zs_;
}

PauliString& PauliString::operator*=(const PauliString& rhs) {
    check_same_size(*this, rhs);
    // Work in the X^x Z^z form where Y = i X Z, then convert back.
    unsigned p = phase_;
    for (std::size_t k = 0; k < xs_.size(); ++k) {
        std::uint64_t ax = xs_[k], az = zs_[k], bx = rhs.xs_[k], bz = rhs.zs_[k];
        p += static_cast<unsigned>(std::popcount(ax & az));
        p += static_cast<unsigned>(std::popcount(bx & bz));
        p += 2u * static_cast<unsigned>(std::popcount(az & bx));
        std::uint64_t rx = ax ^ bx, rz = az ^ bz;
        p += 3u * static_cast<unsigned>(std::popcount(rx & rz));
        xs_[k] = rx;
        zs_[k] = rz;
    }
    p += rhs.phase_;
    phase_ = static_cast<std::uint8_t>(p & 3);
    return *this;
}

std::string PauliString::str() const {
    std::string out;
    switch (phase_) {
        case 0:
            out = "+";
            break;
        case 1:
            out = "+i";
            break;
        case 2:
            out = "-";
            break;
        default:
            out = "-i";
            break;
    }
    for (std::size_t q = 0; q < num_qubits_; ++q) out.push_back(letter(q));
    return out;
}

std::size_t PauliString::letters_hash() const {
    std::size_t h = std::hash<std::size_t>{}(num_qubits_);
    for (std::size_t k = 0; k < xs_.size(); ++k) {
        h ^= std::hash<std::uint64_t>{}(xs_[k] * 0x9E3779B97F4A7C15ull + zs_[k]) + 0x9e3779b9 + (h << 6) + (h >> 2);
    }
    return h;
}

PauliString operator*(const PauliString& a, const PauliString& b) {
    PauliString r = a;
    r *= b;
    return r;
}

PauliString multiply(const PauliString& a, const PauliString& b) { return a * b; }

bool commutes(const PauliString& a, const PauliString& b) {
    check_same_size(a, b);
    auto ax = a.x_words(), az = a.z_words(), bx = b.x_words(), bz = b.z_words();
    unsigned parity = 0;
    for (std::size_t k = 0; k < ax.size(); ++k) {
        parity ^= static_cast<unsigned>(std::popcount((ax[k] & bz[k]) ^ (az[k] & bx[k])));
    }
    return (parity & 1) == 0;
}

std::size_t gf2_rank(std::span<const PauliString> paulis) {
    if (paulis.empty()) return 0;
    std::size_t n = paulis.front().num_qubits();
    std::size_t words = paulis.front().num_words();
    std::vector<std::vector<std::uint64_t>> rows;
    rows.reserve(paulis.size());
    for (const auto& p : paulis) {
        if (p.num_qubits() != n) throw DimensionError("gf2_rank: mixed Pauli sizes");
        std::vector<std::uint64_t> row(2 * words);
        std::copy(p.x_words().begin(), p.x_words().end(), row.begin());
        std::copy(p.z_words().begin(), p.z_words().end(), row.begin() + static_cast<std::ptrdiff_t>(words));
        rows.push_back(std::move(row));
    }
    std::size_t rank = 0;
    for (std::size_t w = 0; w < 2 * words && rank < rows.size(); ++w) {
        for (int b = 0; b < 64 && rank < rows.size(); ++b) {
            std::uint64_t mask = std::uint64_t{1} << b;
            std::size_t pivot = rank;
            while (pivot < rows.size() && !(rows[pivot][w] & mask)) ++pivot;
            if (pivot == rows.size()) continue;
            std::swap(rows[pivot], rows[rank]);
            for (std::size_t r = 0; r < rows.size(); ++r) {
                if (r != rank && (rows[r][w] & mask)) {
                    for (std::size_t k = 0; k < rows[r].size(); ++k) rows[r][k] ^= rows[rank][k];
                }
            }
            ++rank;
        }
    }
    return rank;
}

std::ostream& operator<<(std::ostream& out, const PauliString& p) { return out << p.str(); }

std::string to_string(MappingKind kind) {
    return kind == MappingKind::JordanWigner ? "jw" : "bk";
}

MappingKind mapping_from_string(std::string_view name) {
    if (name == "jw" || name == "JW" || name == "jordan-wigner") return MappingKind::JordanWigner;
    if (name == "bk" || name == "BK" || name == "bravyi-kitaev") return MappingKind::BravyiKitaev;
    throw std::invalid_argument("unknown fermion mapping: " + std::string(name));
}

namespace {

// Fenwick-tree index sets for the Bravyi-Kitaev encoding (0-indexed).
std::vector<std::size_t> bk_update_set(std::size_t j, std::size_t n) {
    std::vector<std::size_t> out;
    for (std::size_t k = j | (j + 1); k < n; k = k | (k + 1)) out.push_back(k);
    return out;
}

std::vector<std::size_t> bk_parity_set(std::size_t j) {
    std::vector<std::size_t> out;
    for (std::ptrdiff_t k = static_cast<std::ptrdiff_t>(j) - 1; k >= 0;
         k = static_cast<std::ptrdiff_t>(static_cast<std::size_t>(k) & (static_cast<std::size_t>(k) + 1)) - 1) {
        out.push_back(static_cast<std::size_t>(k));
    }
    return out;
}

std::vector<std::size_t> bk_flip_set(std::size_t j) {
    std::vector<std::size_t> out;
    auto lo = static_cast<std::ptrdiff_t>(j & (j + 1));
    for (std::ptrdiff_t k = static_cast<std::ptrdiff_t>(j) - 1; k >= lo;
         k = static_cast<std::ptrdiff_t>(static_cast<std::size_t>(k) & (static_cast<std::size_t>(k) + 1)) - 1) {
        out.push_back(static_cast<std::size_t>(k));
    }
    return out;
}

}  // namespace

PauliString majorana(const FermionMapping& mapping, std::size_t index) {
    if (mapping.n_modes == 0 || index >= 2 * mapping.n_modes) {
        throw std::out_of_range("majorana index " + std::to_string(index) + " out of range for " +
                                std::to_string(mapping.n_modes) + " modes");
    }
    std::size_t n = mapping.n_modes;
    std::size_t j = index / 2;
    bool odd = index & 1;
    PauliString p(n);
    if (mapping.kind == MappingKind::JordanWigner) {
        for (std::size_t q = 0; q < j; ++q) p.set_letter(q, 'Z');
        p.set_letter(j, odd ? 'Y' : 'X');
        return p;
    }
    for (std::size_t q : bk_update_set(j, n)) p.set_letter(q, 'X');
    p.set_letter(j, odd ? 'Y' : 'X');
    std::vector<std::size_t> z_set = bk_parity_set(j);
    if (odd) {
        std::vector<std::size_t> flip = bk_flip_set(j);
        std::erase_if(z_set, [&](std::size_t q) { return std::find(flip.begin(), flip.end(), q) != flip.end(); });
    }
    for (std::size_t q : z_set) p.set_letter(q, 'Z');
    return p;
}

MajoranaProduct majorana_product(const FermionMapping& mapping, std::span<const std::size_t> indices) {
    if (indices.empty()) throw std::invalid_argument("majorana_product: empty index list");
    PauliString acc(mapping.n_modes);
    for (std::size_t idx : indices) acc *= majorana(mapping, idx);
    MajoranaProduct out;
    out.i_power = acc.phase() & 1;
    acc.set_phase(acc.phase() + static_cast<unsigned>(out.i_power));
    out.pauli = std::move(acc);
    return out;
}

std::vector<ExcitationTerm> double_excitation_terms(
    const FermionMapping& mapping, std::size_t i, std::size_t j, std::size_t k, std::size_t l) {
    std::size_t modes[4] = {i, j, k, l};
    for (int a = 0; a < 4; ++a) {
        if (modes[a] >= mapping.n_modes) throw InvalidExcitation("excitation mode out of range");
        for (int b = a + 1; b < 4; ++b) {
            if (modes[a] == modes[b]) throw InvalidExcitation("excitation modes must be pairwise distinct");
        }
    }
    // bar[a] selects m̄ (odd Majorana) for mode a.
    struct Monomial {
        bool bar[4];
        int coefficient;
    };
    static constexpr Monomial kMonomials[8] = {
        {{false, false, false, true}, +1}, {{false, false, true, false}, +1},
        {{false, true, false, false}, -1}, {{true, false, false, false}, -1},
        {{true, true, true, false}, -1},   {{true, true, false, true}, -1},
        {{true, false, true, true}, +1},   {{false, true, true, true}, +1},
    };
    std::vector<ExcitationTerm> out;
    out.reserve(8);
    for (const auto& mono : kMonomials) {
        std::size_t idx[4];
        for (int a = 0; a < 4; ++a) idx[a] = 2 * modes[a] + (mono.bar[a] ? 1 : 0);
        MajoranaProduct prod = majorana_product(mapping, idx);
        if (prod.i_power != 0) throw std::logic_error("four-Majorana product must be Hermitian");
        out.push_back({std::move(prod.pauli), mono.coefficient});
    }
    return out;
}

}  // namespace pauliforge
