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

#include <algorithm>
#include <sstream>
#include <unordered_set>

namespace pauliforge {

Cer::Cer(std::size_t n) {
    z_rows_.reserve(n);
    x_rows_.reserve(n);
    for (std::size_t q = 0; q < n; ++q) {
        z_rows_.push_back(PauliString::single(n, q, 'Z'));
        x_rows_.push_back(PauliString::single(n, q, 'X'));
    }
}

Cer Cer::from_circuit(const Circuit& circuit) {
    if (!circuit.is_clifford()) throw std::invalid_argument("from_circuit: circuit contains rotations");
    Cer cer(circuit.num_qubits());
    cer.apply(circuit);
    return cer;
}

Cer Cer::from_rows(std::vector<PauliString> z_rows, std::vector<PauliString> x_rows) {
    if (z_rows.size() != x_rows.size() || z_rows.empty()) throw DimensionError("from_rows: row count mismatch");
    for (std::size_t q = 0; q < z_rows.size(); ++q) {
        if (z_rows[q].num_qubits() != z_rows.size() || x_rows[q].num_qubits() != z_rows.size()) {
            throw DimensionError("from_rows: rows must have one letter per qubit");
        }
    }
    Cer cer;
    cer.z_rows_ = std::move(z_rows);
    cer.x_rows_ = std::move(x_rows);
    if (!cer.is_valid()) throw std::invalid_argument("from_rows: rows do not form a valid CER");
    return cer;
}

PauliString Cer::y_register(std::size_t q) const {
    PauliString y = z_rows_.at(q) * x_rows_[q];
    y.set_phase(y.phase() + 3);
    return y;
}

PauliString Cer::reg(std::size_t q, char axis) const {
    switch (axis) {
        case 'Z':
            return z_rows_.at(q);
        case 'X':
            return x_rows_.at(q);
        case 'Y':
            return y_register(q);
        default:
            throw std::invalid_argument(std::string("bad register axis '") + axis + "'");
    }
}

Cer& Cer::apply_gate(const Op& gate) {
    std::size_t n = num_qubits();
    if (gate.q0 >= n || (gate.is_cnot() && gate.q1 >= n)) throw std::out_of_range("apply_gate: qubit out of range");
    std::size_t q = gate.q0;
    switch (gate.kind) {
        case GateKind::H:
            std::swap(z_rows_[q], x_rows_[q]);
            break;
        case GateKind::S: {
            PauliString y = y_register(q);
            x_rows_[q] = y.negated();
            break;
        }
        case GateKind::Sdg:
            x_rows_[q] = y_register(q);
            break;
        case GateKind::X:
            z_rows_[q] = z_rows_[q].negated();
            break;
        case GateKind::Y:
            z_rows_[q] = z_rows_[q].negated();
            x_rows_[q] = x_rows_[q].negated();
            break;
        case GateKind::Z:
            x_rows_[q] = x_rows_[q].negated();
            break;
        case GateKind::CX: {
            std::size_t t = gate.q1;
            z_rows_[t] *= z_rows_[q];
            x_rows_[q] *= x_rows_[t];
            break;
        }
        case GateKind::Rot:
            throw std::invalid_argument("apply_gate: rotation is not a Clifford gate");
    }
    return *this;
}

Cer& Cer::apply(const Circuit& circuit) {
    if (circuit.num_qubits() != num_qubits()) throw DimensionError("Cer::apply: qubit count mismatch");
    for (const Op& op : circuit.ops()) {
        if (!op.is_rotation()) apply_gate(op);
    }
    return *this;
}

PauliString Cer::conjugate(const PauliString& p) const {
    if (p.num_qubits() != num_qubits()) throw DimensionError("Cer::conjugate: size mismatch");
    PauliString out(num_qubits());
    out.set_phase(p.phase());
    for (std::size_t q = 0; q < num_qubits(); ++q) {
        char l = p.letter(q);
        if (l != 'I') out *= reg(q, l);
    }
    return out;
}

bool Cer::is_valid() const {
    std::size_t n = num_qubits();
    if (x_rows_.size() != n) return false;
    for (std::size_t q = 0; q < n; ++q) {
        if (!z_rows_[q].is_hermitian() || !x_rows_[q].is_hermitian()) return false;
        if (z_rows_[q].num_qubits() != n || x_rows_[q].num_qubits() != n) return false;
        if (commutes(z_rows_[q], x_rows_[q])) return false;
        for (std::size_t r = q + 1; r < n; ++r) {
            if (!commutes(z_rows_[q], z_rows_[r]) || !commutes(z_rows_[q], x_rows_[r]) ||
                !commutes(x_rows_[q], z_rows_[r]) || !commutes(x_rows_[q], x_rows_[r])) {
                return false;
            }
        }
    }
    return true;
}

bool Cer::is_identity() const { return *this == Cer(num_qubits()); }

std::string Cer::dump() const {
    std::ostringstream out;
    for (std::size_t q = 0; q < num_qubits(); ++q) {
        out << q << " | Z: " << z_rows_[q] << " | X: " << x_rows_[q] << " | Y: " << y_register(q) << "\n";
    }
    return out.str();
}

std::vector<std::size_t> Decomposition::support() const {
    std::vector<std::size_t> out;
    for (std::size_t q = 0; q < axis.size(); ++q) {
        if (axis[q]) out.push_back(q);
    }
    return out;
}

PauliString Decomposition::letters() const {
    PauliString p(axis.size());
    for (std::size_t q = 0; q < axis.size(); ++q) {
        if (axis[q]) p.set_letter(q, axis[q]);
    }
    if (sign < 0) p.set_phase(2);
    return p;
}

std::vector<std::size_t> support(const Decomposition& d) { return d.support(); }

PauliString reconstruct(const Cer& cer, const Decomposition& d) {
    PauliString out(cer.num_qubits());
    for (std::size_t q = 0; q < d.axis.size(); ++q) {
        if (d.axis[q]) out *= cer.reg(q, d.axis[q]);
    }
    if (d.sign < 0) out = out.negated();
    return out;
}

Decomposition decompose(const Cer& cer, const PauliString& s) {
    if (s.num_qubits() != cer.num_qubits()) throw DimensionError("decompose: size mismatch");
    if (!s.is_hermitian()) throw std::invalid_argument("decompose: Pauli must have sign +/-1");
    Decomposition d;
    d.axis.assign(cer.num_qubits(), 0);
    for (std::size_t q = 0; q < cer.num_qubits(); ++q) {
        bool ex = !commutes(s, cer.z_row(q));
        bool ez = !commutes(s, cer.x_row(q));
        if (ex && ez) {
            d.axis[q] = 'Y';
        } else if (ex) {
            d.axis[q] = 'X';
        } else if (ez) {
            d.axis[q] = 'Z';
        }
    }
    PauliString r = reconstruct(cer, d);
    d.sign = r.phase() == s.phase() ? 1 : -1;
    return d;
}

std::vector<ImplementedAt> find_implemented(const Cer& cer, std::span<const PauliString> targets) {
    std::vector<ImplementedAt> out;
    for (std::size_t t = 0; t < targets.size(); ++t) {
        if (targets[t].num_qubits() != cer.num_qubits()) throw DimensionError("find_implemented: size mismatch");
        if (targets[t].is_identity()) continue;
        for (std::size_t q = 0; q < cer.num_qubits(); ++q) {
            for (char axis : {'Z', 'X', 'Y'}) {
                PauliString r = cer.reg(q, axis);
                if (r.same_letters(targets[t])) out.push_back({t, q, axis, r.phase() == targets[t].phase() ? 1 : -1});
            }
        }
    }
    return out;
}

std::size_t distinct_pauli_count(std::span<const Cer> trace) {
    struct Hash {
        std::size_t operator()(const PauliString& p) const { return p.letters_hash(); }
    };
    std::unordered_set<PauliString, Hash> seen;
    for (const Cer& cer : trace) {
        for (std::size_t q = 0; q < cer.num_qubits(); ++q) {
            for (char axis : {'Z', 'X', 'Y'}) seen.insert(cer.reg(q, axis).unsigned_copy());
        }
    }
    return seen.size();
}

std::vector<Cer> replay_trace(const Circuit& circuit) {
    std::vector<Cer> trace;
    trace.emplace_back(circuit.num_qubits());
    for (const Op& op : circuit.ops()) {
        if (op.is_rotation()) continue;
        Cer next = trace.back();
        next.apply_gate(op);
        trace.push_back(std::move(next));
    }
    return trace;
}

}  // namespace pauliforge
