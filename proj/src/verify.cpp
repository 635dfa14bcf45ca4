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

#include "pauliforge/verify.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <sstream>

namespace pauliforge {

namespace {

using cd = std::complex<double>;
constexpr cd kI{0.0, 1.0};

void check_dense_size(std::size_t n) {
    if (n > kMaxDenseQubits) {
        throw std::invalid_argument("dense simulation limited to " + std::to_string(kMaxDenseQubits) + " qubits, got " +
                                    std::to_string(n));
    }
}

double angle_of(const Op& op, std::span<const double> angles) {
    if (op.target >= angles.size()) {
        throw std::out_of_range("rotation references angle " + std::to_string(op.target) + " but only " +
                                std::to_string(angles.size()) + " given");
    }
    return op.sign * angles[op.target];
}

// Applies one op to a state vector in place.
void apply_to_vector(cd* v, std::size_t n, const Op& op, std::span<const double> angles) {
    std::size_t dim = std::size_t{1} << n;
    std::size_t m = std::size_t{1} << (n - 1 - op.q0);
    static const double r2 = 1.0 / std::sqrt(2.0);
    if (op.kind == GateKind::CX) {
        std::size_t mt = std::size_t{1} << (n - 1 - op.q1);
        for (std::size_t i = 0; i < dim; ++i) {
            if ((i & m) && !(i & mt)) std::swap(v[i], v[i | mt]);
        }
        return;
    }
    double c = 1.0, s = 0.0;
    if (op.kind == GateKind::Rot) {
        double a = angle_of(op, angles);
        c = std::cos(a);
        s = std::sin(a);
    }
    for (std::size_t i = 0; i < dim; ++i) {
        if (i & m) continue;
        cd a = v[i], b = v[i | m];
        switch (op.kind) {
            case GateKind::H:
                v[i] = (a + b) * r2;
                v[i | m] = (a - b) * r2;
                break;
            case GateKind::S:
                v[i | m] = b * kI;
                break;
            case GateKind::Sdg:
                v[i | m] = -b * kI;
                break;
            case GateKind::X:
                v[i] = b;
                v[i | m] = a;
                break;
            case GateKind::Y:
                v[i] = -kI * b;
                v[i | m] = kI * a;
                break;
            case GateKind::Z:
                v[i | m] = -b;
                break;
            case GateKind::Rot:
                if (op.axis == 'Z') {
                    v[i] = a * cd(c, s);
                    v[i | m] = b * cd(c, -s);
                } else if (op.axis == 'X') {
                    v[i] = c * a + kI * s * b;
                    v[i | m] = kI * s * a + c * b;
                } else {
                    v[i] = c * a + s * b;
                    v[i | m] = c * b - s * a;
                }
                break;
            case GateKind::CX:
                break;
        }
    }
}

struct PauliMasks {
    std::size_t xmask = 0, zmask = 0;
    cd factor{1.0, 0.0};
};

PauliMasks masks_of(const PauliString& p) {
    std::size_t n = p.num_qubits();
    PauliMasks pm;
    unsigned ipow = p.phase();
    for (std::size_t q = 0; q < n; ++q) {
        std::size_t bit = std::size_t{1} << (n - 1 - q);
        if (p.x(q)) pm.xmask |= bit;
        if (p.z(q)) pm.zmask |= bit;
        if (p.x(q) && p.z(q)) ++ipow;
    }
    static const std::array<cd, 4> kPow = {cd(1, 0), cd(0, 1), cd(-1, 0), cd(0, -1)};
    pm.factor = kPow[ipow & 3];
    return pm;
}

using Mat2 = std::array<cd, 4>;  // row-major 2x2

DenseMatrix kron_chain(std::size_t n, std::size_t q0, const Mat2& g0, std::size_t q1 = SIZE_MAX,
                       const Mat2& g1 = Mat2{}) {
    static const Mat2 kId = {cd(1), cd(0), cd(0), cd(1)};
    DenseMatrix acc = DenseMatrix::identity(1);
    for (std::size_t q = 0; q < n; ++q) {
        const Mat2& g = q == q0 ? g0 : (q == q1 ? g1 : kId);
        DenseMatrix next(acc.dim * 2);
        for (std::size_t r = 0; r < acc.dim; ++r) {
            for (std::size_t c = 0; c < acc.dim; ++c) {
                for (std::size_t a = 0; a < 2; ++a) {
                    for (std::size_t b = 0; b < 2; ++b) next.at(2 * r + a, 2 * c + b) = acc.at(r, c) * g[2 * a + b];
                }
            }
        }
        acc = std::move(next);
    }
    return acc;
}

Mat2 pauli_mat2(char axis) {
    switch (axis) {
        case 'X':
            return {cd(0), cd(1), cd(1), cd(0)};
        case 'Y':
            return {cd(0), -kI, kI, cd(0)};
        default:
            return {cd(1), cd(0), cd(0), cd(-1)};
    }
}

DenseMatrix reference_gate(std::size_t n, const Op& op, std::span<const double> angles) {
    const double r2 = 1.0 / std::sqrt(2.0);
    switch (op.kind) {
        case GateKind::H:
            return kron_chain(n, op.q0, {cd(r2), cd(r2), cd(r2), cd(-r2)});
        case GateKind::S:
            return kron_chain(n, op.q0, {cd(1), cd(0), cd(0), kI});
        case GateKind::Sdg:
            return kron_chain(n, op.q0, {cd(1), cd(0), cd(0), -kI});
        case GateKind::X:
            return kron_chain(n, op.q0, pauli_mat2('X'));
        case GateKind::Y:
            return kron_chain(n, op.q0, pauli_mat2('Y'));
        case GateKind::Z:
            return kron_chain(n, op.q0, pauli_mat2('Z'));
        case GateKind::CX: {
            DenseMatrix p0 = kron_chain(n, op.q0, {cd(1), cd(0), cd(0), cd(0)});
            DenseMatrix p1 = kron_chain(n, op.q0, {cd(0), cd(0), cd(0), cd(1)}, op.q1, pauli_mat2('X'));
            for (std::size_t k = 0; k < p0.data.size(); ++k) p0.data[k] += p1.data[k];
            return p0;
        }
        case GateKind::Rot: {
            double a = angle_of(op, angles);
            Mat2 p = pauli_mat2(op.axis);
            Mat2 e;
            for (int k = 0; k < 4; ++k) e[k] = (k == 0 || k == 3 ? std::cos(a) : 0.0) + kI * std::sin(a) * p[k];
            return kron_chain(n, op.q0, e);
        }
    }
    throw std::logic_error("unreachable");
}

}  // namespace

DenseMatrix DenseMatrix::identity(std::size_t d) {
    DenseMatrix m(d);
    for (std::size_t i = 0; i < d; ++i) m.at(i, i) = 1.0;
    return m;
}

DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b) {
    if (a.dim != b.dim) throw DimensionError("matrix dimension mismatch");
    DenseMatrix out(a.dim);
    for (std::size_t c = 0; c < a.dim; ++c) {
        for (std::size_t k = 0; k < a.dim; ++k) {
            cd bk = b.at(k, c);
            if (bk == cd(0)) continue;
            for (std::size_t r = 0; r < a.dim; ++r) out.at(r, c) += a.at(r, k) * bk;
        }
    }
    return out;
}

DenseMatrix adjoint(const DenseMatrix& a) {
    DenseMatrix out(a.dim);
    for (std::size_t r = 0; r < a.dim; ++r) {
        for (std::size_t c = 0; c < a.dim; ++c) out.at(c, r) = std::conj(a.at(r, c));
    }
    return out;
}

double max_abs_diff(const DenseMatrix& a, const DenseMatrix& b) {
    if (a.dim != b.dim) throw DimensionError("matrix dimension mismatch");
    double m = 0.0;
    for (std::size_t k = 0; k < a.data.size(); ++k) m = std::max(m, std::abs(a.data[k] - b.data[k]));
    return m;
}

DenseMatrix dense_unitary(const Circuit& circuit, std::span<const double> angles) {
    std::size_t n = circuit.num_qubits();
    check_dense_size(n);
    std::size_t dim = std::size_t{1} << n;
    DenseMatrix u = DenseMatrix::identity(dim);
    const auto& ops = circuit.ops();
    for (const Op& op : ops) {
        if (op.is_rotation()) angle_of(op, angles);
    }
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t c = 0; c < static_cast<std::ptrdiff_t>(dim); ++c) {
        cd* col = u.data.data() + static_cast<std::size_t>(c) * dim;
        for (const Op& op : ops) apply_to_vector(col, n, op, angles);
    }
    return u;
}

DenseMatrix dense_unitary_reference(const Circuit& circuit, std::span<const double> angles) {
    std::size_t n = circuit.num_qubits();
    check_dense_size(n);
    DenseMatrix u = DenseMatrix::identity(std::size_t{1} << n);
    for (const Op& op : circuit.ops()) u = reference_gate(n, op, angles) * u;
    return u;
}

DenseMatrix dense_pauli(const PauliString& p) {
    std::size_t n = p.num_qubits();
    check_dense_size(n);
    std::size_t dim = std::size_t{1} << n;
    PauliMasks pm = masks_of(p);
    DenseMatrix m(dim);
    for (std::size_t k = 0; k < dim; ++k) {
        double sgn = (std::popcount(k & pm.zmask) & 1) ? -1.0 : 1.0;
        m.at(k ^ pm.xmask, k) = pm.factor * sgn;
    }
    return m;
}

DenseMatrix pauli_exponential_product(std::span<const PauliString> paulis, std::span<const double> angles) {
    if (paulis.size() != angles.size()) throw DimensionError("one angle per Pauli required");
    if (paulis.empty()) return DenseMatrix::identity(1);
    std::size_t n = paulis.front().num_qubits();
    check_dense_size(n);
    std::size_t dim = std::size_t{1} << n;
    std::vector<PauliMasks> masks;
    for (const auto& p : paulis) {
        if (p.num_qubits() != n) throw DimensionError("mixed Pauli sizes");
        masks.push_back(masks_of(p));
    }
    DenseMatrix u = DenseMatrix::identity(dim);
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t c = 0; c < static_cast<std::ptrdiff_t>(dim); ++c) {
        cd* col = u.data.data() + static_cast<std::size_t>(c) * dim;
        std::vector<cd> tmp(dim);
        for (std::size_t l = 0; l < masks.size(); ++l) {
            const PauliMasks& pm = masks[l];
            double co = std::cos(angles[l]), si = std::sin(angles[l]);
            for (std::size_t k = 0; k < dim; ++k) {
                double sgn = (std::popcount(k & pm.zmask) & 1) ? -1.0 : 1.0;
                tmp[k ^ pm.xmask] = pm.factor * sgn * col[k];
            }
            for (std::size_t k = 0; k < dim; ++k) col[k] = co * col[k] + kI * si * tmp[k];
        }
    }
    return u;
}

std::string to_string(EquivalenceKind kind) {
    switch (kind) {
        case EquivalenceKind::DenseUpToGlobalPhase:
            return "dense";
        case EquivalenceKind::TableauExact:
            return "tableau";
        case EquivalenceKind::TableauUpToPermutation:
            return "tableau-permuted";
        case EquivalenceKind::PauliNetworkSound:
            return "sound";
    }
    return "?";
}

EquivalenceReport equivalent_up_to_phase(const DenseMatrix& u, const DenseMatrix& v, double tol) {
    if (u.dim != v.dim) throw DimensionError("equivalent_up_to_phase: dimension mismatch");
    cd tr = 0.0;
    for (std::size_t k = 0; k < u.data.size(); ++k) tr += std::conj(u.data[k]) * v.data[k];
    EquivalenceReport rep;
    rep.kind = EquivalenceKind::DenseUpToGlobalPhase;
    rep.max_deviation = std::max(0.0, 1.0 - std::abs(tr) / static_cast<double>(u.dim));
    rep.pass = rep.max_deviation <= tol;
    if (!rep.pass) rep.message = "|tr(U^dagger V)|/dim deviates from 1 by " + std::to_string(rep.max_deviation);
    return rep;
}

EquivalenceReport pauli_network_sound(const Circuit& circuit, std::span<const PauliString> targets,
                                      bool require_reset) {
    EquivalenceReport rep;
    rep.kind = EquivalenceKind::PauliNetworkSound;
    auto fail = [&](std::size_t pos, const std::string& msg) {
        rep.pass = false;
        rep.witness = pos;
        rep.message = msg;
        rep.max_deviation = 1.0;
        return rep;
    };
    std::size_t n = circuit.num_qubits();
    for (const auto& t : targets) {
        if (t.num_qubits() != n) throw DimensionError("pauli_network_sound: target size mismatch");
    }
    Cer cer(n);
    std::vector<char> done(targets.size(), 0);
    const auto& ops = circuit.ops();
    for (std::size_t i = 0; i < ops.size(); ++i) {
        const Op& op = ops[i];
        if (!op.is_rotation()) {
            cer.apply_gate(op);
            continue;
        }
        if (op.target >= targets.size()) return fail(i, "rotation references unknown target " + std::to_string(op.target));
        const PauliString& t = targets[op.target];
        if (done[op.target]) return fail(i, "target " + std::to_string(op.target) + " implemented twice");
        PauliString r = cer.reg(op.q0, op.axis);
        if (op.sign < 0) r = r.negated();
        if (r != t) {
            std::ostringstream msg;
            msg << "rotation on (" << op.q0 << "," << op.axis << ") with sign " << int(op.sign) << " gives " << r
                << " but target " << op.target << " is " << t;
            return fail(i, msg.str());
        }
        for (std::size_t e = 0; e < op.target; ++e) {
            if (!done[e] && !commutes(targets[e], t)) {
                return fail(i, "target " + std::to_string(op.target) + " placed before anticommuting target " +
                                   std::to_string(e));
            }
        }
        done[op.target] = 1;
    }
    for (std::size_t t = 0; t < targets.size(); ++t) {
        if (!done[t] && !targets[t].is_identity()) return fail(ops.size(), "target " + std::to_string(t) + " never implemented");
    }
    if (require_reset && !cer.is_identity()) return fail(ops.size(), "final CER is not the identity");
    rep.pass = true;
    return rep;
}

EquivalenceReport tableau_equal(const Cer& expected, const Cer& actual) {
    EquivalenceReport rep;
    rep.kind = EquivalenceKind::TableauExact;
    if (expected.num_qubits() != actual.num_qubits()) throw DimensionError("tableau_equal: size mismatch");
    for (std::size_t q = 0; q < expected.num_qubits(); ++q) {
        if (expected.z_row(q) != actual.z_row(q) || expected.x_row(q) != actual.x_row(q)) {
            rep.witness = q;
            rep.max_deviation = 1.0;
            rep.message = "row " + std::to_string(q) + " differs";
            return rep;
        }
    }
    rep.pass = true;
    return rep;
}

EquivalenceReport tableau_equal_up_to_permutation(const Cer& expected, const Cer& actual,
                                                  std::span<const std::size_t> perm) {
    std::size_t n = expected.num_qubits();
    if (actual.num_qubits() != n || perm.size() != n) throw DimensionError("tableau_equal_up_to_permutation: size mismatch");
    std::vector<std::size_t> inv(n, SIZE_MAX);
    for (std::size_t i = 0; i < n; ++i) {
        if (perm[i] >= n || inv[perm[i]] != SIZE_MAX) throw std::invalid_argument("not a permutation");
        inv[perm[i]] = i;
    }
    auto relabel = [&](const PauliString& p) {
        PauliString out(n);
        for (std::size_t j = 0; j < n; ++j) out.set_letter(inv[j], p.letter(j));
        out.set_phase(p.phase());
        return out;
    };
    std::vector<PauliString> zs, xs;
    for (std::size_t q = 0; q < n; ++q) {
        zs.push_back(relabel(actual.z_row(q)));
        xs.push_back(relabel(actual.x_row(q)));
    }
    EquivalenceReport rep = tableau_equal(expected, Cer::from_rows(std::move(zs), std::move(xs)));
    rep.kind = EquivalenceKind::TableauUpToPermutation;
    return rep;
}

DenseMatrix permutation_unitary(std::span<const std::size_t> perm) {
    std::size_t n = perm.size();
    check_dense_size(n);
    std::size_t dim = std::size_t{1} << n;
    DenseMatrix m(dim);
    for (std::size_t k = 0; k < dim; ++k) {
        std::size_t out = 0;
        for (std::size_t i = 0; i < n; ++i) {
            if ((k >> (n - 1 - i)) & 1) out |= std::size_t{1} << (n - 1 - perm[i]);
        }
        m.at(out, k) = 1.0;
    }
    return m;
}

}  // namespace pauliforge
