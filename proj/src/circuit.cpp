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

#include "pauliforge/circuit.hpp"

#include <algorithm>
#include <stdexcept>

namespace pauliforge {

Op make_gate(GateKind kind, std::size_t q0, std::size_t q1) {
    if (kind == GateKind::Rot) throw std::invalid_argument("make_gate: use make_rotation");
    if (kind == GateKind::CX && q0 == q1) throw std::invalid_argument("cx control equals target");
    Op op;
    op.kind = kind;
    op.q0 = static_cast<std::uint32_t>(q0);
    op.q1 = kind == GateKind::CX ? static_cast<std::uint32_t>(q1) : 0;
    return op;
}

Op make_rotation(char axis, std::size_t qubit, int sign, std::size_t target) {
    if (axis != 'X' && axis != 'Y' && axis != 'Z') throw std::invalid_argument("bad rotation axis");
    if (sign != 1 && sign != -1) throw std::invalid_argument("rotation sign must be +1 or -1");
    Op op;
    op.kind = GateKind::Rot;
    op.q0 = static_cast<std::uint32_t>(qubit);
    op.axis = axis;
    op.sign = static_cast<std::int8_t>(sign);
    op.target = static_cast<std::uint32_t>(target);
    return op;
}

std::string gate_name(GateKind kind) {
    switch (kind) {
        case GateKind::H:
            return "h";
        case GateKind::S:
            return "s";
        case GateKind::Sdg:
            return "sdg";
        case GateKind::X:
            return "x";
        case GateKind::Y:
            return "y";
        case GateKind::Z:
            return "z";
        case GateKind::CX:
            return "cx";
        case GateKind::Rot:
            return "rot";
    }
    return "?";
}

GateKind gate_from_name(std::string_view name) {
    if (name == "h") return GateKind::H;
    if (name == "s") return GateKind::S;
    if (name == "sdg") return GateKind::Sdg;
    if (name == "x") return GateKind::X;
    if (name == "y") return GateKind::Y;
    if (name == "z") return GateKind::Z;
    if (name == "cx" || name == "cnot") return GateKind::CX;
    throw std::invalid_argument("unknown gate: " + std::string(name));
}

Op inverse_gate(const Op& gate) {
    Op inv = gate;
    switch (gate.kind) {
        case GateKind::S:
            inv.kind = GateKind::Sdg;
            break;
        case GateKind::Sdg:
            inv.kind = GateKind::S;
            break;
        case GateKind::Rot:
            throw std::logic_error("inverse_gate: rotation has no Clifford inverse");
        default:
            break;
    }
    return inv;
}

void conjugate_forward(PauliString& p, const Op& gate) {
    std::size_t q = gate.q0;
    bool x = p.x(q), z = p.z(q);
    unsigned flip = 0;
    switch (gate.kind) {
        case GateKind::H:
            flip = x && z;
            p.set_x(q, z);
            p.set_z(q, x);
            break;
        case GateKind::S:
            if (x) {
                flip = z;
                p.set_z(q, !z);
            }
            break;
        case GateKind::Sdg:
            if (x) {
                flip = !z;
                p.set_z(q, !z);
            }
            break;
        case GateKind::X:
            flip = z;
            break;
        case GateKind::Y:
            flip = x != z;
            break;
        case GateKind::Z:
            flip = x;
            break;
        case GateKind::CX: {
            std::size_t t = gate.q1;
            bool xt = p.x(t), zt = p.z(t);
            flip = x && zt && (xt == z);
            p.set_x(t, xt != x);
            p.set_z(q, z != zt);
            break;
        }
        case GateKind::Rot:
            throw std::logic_error("conjugate_forward: rotation is not Clifford");
    }
    if (flip) p.set_phase(p.phase() + 2);
}

void Circuit::append(const Op& op) {
    if (op.q0 >= num_qubits_ || (op.kind == GateKind::CX && op.q1 >= num_qubits_)) {
        throw std::out_of_range("gate qubit out of range for " + std::to_string(num_qubits_) + "-qubit circuit");
    }
    ops_.push_back(op);
}

void Circuit::append(const Circuit& other) {
    if (other.num_qubits_ != num_qubits_) throw DimensionError("Circuit::append: qubit count mismatch");
    ops_.insert(ops_.end(), other.ops_.begin(), other.ops_.end());
}

std::size_t Circuit::cnot_count() const {
    return static_cast<std::size_t>(std::count_if(ops_.begin(), ops_.end(), [](const Op& o) { return o.is_cnot(); }));
}

std::size_t Circuit::cnot_count_excluding_final_clifford() const {
    std::size_t count = 0, upto_last_rot = 0;
    for (const Op& o : ops_) {
        if (o.is_cnot()) ++count;
        if (o.is_rotation()) upto_last_rot = count;
    }
    return upto_last_rot;
}

std::size_t Circuit::rotation_count() const {
    return static_cast<std::size_t>(
        std::count_if(ops_.begin(), ops_.end(), [](const Op& o) { return o.is_rotation(); }));
}

std::size_t Circuit::depth() const {
    std::vector<std::size_t> level(num_qubits_, 0);
    std::size_t d = 0;
    for (const Op& o : ops_) {
        std::size_t l = level[o.q0];
        if (o.is_cnot()) l = std::max(l, level[o.q1]);
        ++l;
        level[o.q0] = l;
        if (o.is_cnot()) level[o.q1] = l;
        d = std::max(d, l);
    }
    return d;
}

bool Circuit::is_clifford() const {
    return std::none_of(ops_.begin(), ops_.end(), [](const Op& o) { return o.is_rotation(); });
}

Circuit Circuit::inverse() const {
    Circuit inv(num_qubits_);
    inv.ops_.reserve(ops_.size());
    for (auto it = ops_.rbegin(); it != ops_.rend(); ++it) inv.ops_.push_back(inverse_gate(*it));
    return inv;
}

Circuit Circuit::remapped(std::span<const std::size_t> to_global, std::size_t n_global) const {
    if (to_global.size() != num_qubits_) throw DimensionError("remapped: map size differs from qubit count");
    Circuit out(n_global);
    out.ops_.reserve(ops_.size());
    for (Op o : ops_) {
        o.q0 = static_cast<std::uint32_t>(to_global[o.q0]);
        if (o.is_cnot()) o.q1 = static_cast<std::uint32_t>(to_global[o.q1]);
        out.append(o);
    }
    return out;
}

namespace {

bool cancels(const Op& a, const Op& b) {
    if (a.is_rotation() || b.is_rotation()) return false;
    if (a.is_cnot() || b.is_cnot()) return a == b;
    return a.q0 == b.q0 && inverse_gate(a).kind == b.kind;
}

}  // namespace

Circuit& Circuit::peephole() {
    // Per-qubit stacks of surviving op indices; an incoming gate cancels the
    // op on top of every stack it touches when that op is its inverse.
    std::vector<std::vector<std::size_t>> stacks(num_qubits_);
    std::vector<char> alive(ops_.size(), 1);
    for (std::size_t i = 0; i < ops_.size(); ++i) {
        const Op& o = ops_[i];
        auto& s0 = stacks[o.q0];
        if (!s0.empty()) {
            std::size_t j = s0.back();
            bool same_top = !o.is_cnot() || (!stacks[o.q1].empty() && stacks[o.q1].back() == j);
            if (same_top && cancels(ops_[j], o)) {
                alive[j] = 0;
                alive[i] = 0;
                s0.pop_back();
                if (o.is_cnot()) stacks[o.q1].pop_back();
                continue;
            }
        }
        s0.push_back(i);
        if (o.is_cnot()) stacks[o.q1].push_back(i);
    }
    std::vector<Op> kept;
    kept.reserve(ops_.size());
    for (std::size_t i = 0; i < ops_.size(); ++i) {
        if (alive[i]) kept.push_back(ops_[i]);
    }
    ops_ = std::move(kept);
    return *this;
}

}  // namespace pauliforge
