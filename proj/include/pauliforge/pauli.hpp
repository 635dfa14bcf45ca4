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
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace pauliforge {

struct DimensionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A Pauli operator i^phase * (P_0 ⊗ P_1 ⊗ ... ⊗ P_{n-1}) where each P_q is
/// I, X, Y or Z. Qubit q carries bit x_q and bit z_q; (1,1) denotes Y itself,
/// so phase 0/2 are the Hermitian +/- Paulis and phase 1/3 only show up as
/// intermediate products.
class PauliString {
   public:
    PauliString() = default;
    explicit PauliString(std::size_t num_qubits);

    /// Parses "+XYZ", "-IZZ", "XX". Qubit 0 is the leftmost character.
    static PauliString from_str(std::string_view text);
    static PauliString single(std::size_t num_qubits, std::size_t qubit, char letter);

    std::size_t num_qubits() const { return num_qubits_; }
    std::size_t num_words() const { return xs_.size(); }

    bool x(std::size_t q) const { return (xs_[q >> 6] >> (q & 63)) & 1; }
    bool z(std::size_t q) const { return (zs_[q >> 6] >> (q & 63)) & 1; }
    void set_x(std::size_t q, bool v);
    void set_z(std::size_t q, bool v);
    /// 'I', 'X', 'Y' or 'Z'.
    char letter(std::size_t q) const;
    void set_letter(std::size_t q, char letter);

    std::uint8_t phase() const { return phase_; }
    void set_phase(unsigned p) { phase_ = static_cast<std::uint8_t>(p & 3); }
    bool is_hermitian() const { return (phase_ & 1) == 0; }
    /// +1 or -1. Throws std::logic_error on a non-Hermitian value.
    int sign() const;
    PauliString negated() const;
    PauliString unsigned_copy() const;

    std::size_t weight() const;
    bool is_identity() const;
    /// Same letters on every qubit, phase ignored.
    bool same_letters(const PauliString& other) const;

    std::span<const std::uint64_t> x_words() const { return xs_; }
    std::span<const std::uint64_t> z_words() const { return zs_; }

    /// this = this * rhs, exact phase.
    PauliString& operator*=(const PauliString& rhs);

    std::string str() const;

    bool operator==(const PauliString& other) const = default;

    /// Hash of the letters only (phase ignored).
    std::size_t letters_hash() const;

   private:
    std::size_t num_qubits_ = 0;
    std::vector<std::uint64_t> xs_;
    std::vector<std::uint64_t> zs_;
    std::uint8_t phase_ = 0;
};

PauliString operator*(const PauliString& a, const PauliString& b);
PauliString multiply(const PauliString& a, const PauliString& b);
bool commutes(const PauliString& a, const PauliString& b);
/// Rank over GF(2) of the (x|z) rows; signs and phases are ignored.
std::size_t gf2_rank(std::span<const PauliString> paulis);

std::ostream& operator<<(std::ostream& out, const PauliString& p);

enum class MappingKind { JordanWigner, BravyiKitaev };

struct FermionMapping {
    MappingKind kind = MappingKind::JordanWigner;
    std::size_t n_modes = 1;
};

std::string to_string(MappingKind kind);
MappingKind mapping_from_string(std::string_view name);

/// Majorana operator with index in [0, 2*n_modes). Even indices are
/// a_j^† + a_j, odd indices are i(a_j^† - a_j), j = index / 2.
PauliString majorana(const FermionMapping& mapping, std::size_t index);

/// A Majorana monomial as a Hermitian Pauli: product == i^(-i_power) * pauli.
/// Products whose raw phase is imaginary are multiplied by i, so i_power is
/// 0 or 1. Four distinct Majoranas are already Hermitian; two or three are not.
struct MajoranaProduct {
    PauliString pauli;
    int i_power = 0;
};

MajoranaProduct majorana_product(const FermionMapping& mapping, std::span<const std::size_t> indices);

struct InvalidExcitation : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// One Majorana monomial of the double-excitation generator.
struct ExcitationTerm {
    PauliString pauli;  // Hermitian, includes the mapping's sign
    int coefficient = 1;  // +1 or -1
};

/// The eight commuting monomials of a_i^† a_j^† a_k a_l - h.c. in the order
///   m_i m_j m_k m̄_l, m_i m_j m̄_k m_l, m_i m̄_j m_k m_l, m̄_i m_j m_k m_l,
///   m̄_i m̄_j m̄_k m_l, m̄_i m̄_j m_k m̄_l, m̄_i m_j m̄_k m̄_l, m_i m̄_j m̄_k m̄_l
/// with coefficients (+,+,-,-,-,-,+,+). The generator equals
/// (i/8) * sum_m coefficient_m * pauli_m, so exp(theta * G) is the product of
/// exp(i * (theta * coefficient_m / 8) * pauli_m).
std::vector<ExcitationTerm> double_excitation_terms(
    const FermionMapping& mapping, std::size_t i, std::size_t j, std::size_t k, std::size_t l);

}  // namespace pauliforge
