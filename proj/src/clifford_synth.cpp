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

#include <algorithm>
#include <optional>
#include <random>
#include <tuple>

#include "fold.hpp"

namespace pauliforge {

namespace {

using detail::count_cnots;

void apply_all(std::vector<PauliString>& ps, std::span<const Op> ops) {
    for (const auto& op : ops) {
        for (auto& p : ps) conjugate_forward(p, op);
    }
}

std::vector<std::size_t> union_support(std::span<const PauliString> ps) {
    std::vector<std::size_t> out;
    for (const auto& p : ps) {
        auto s = detail::support_of(p);
        out.insert(out.end(), s.begin(), s.end());
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

// Sign fixes turning +-Z_q, +-X_q into +Z_q, +X_q.
void fix_signs(std::vector<Op>& ops, const PauliString& dz, const PauliString& dx, std::size_t q) {
    if (dz.sign() < 0) ops.push_back(make_gate(GateKind::X, q));
    if (dx.sign() < 0) ops.push_back(make_gate(GateKind::Z, q));
}

std::vector<Op> pauli_pair_ops(PauliString dz, PauliString dx, const CouplingGraph& g, std::span<const char> alive,
                               std::size_t q) {
    std::vector<PauliString> ps = {dz, dx};
    auto ops = detail::fold_z(ps[0], g, alive, q);
    apply_all(ps, ops);
    auto second = detail::fold_x(ps[1], g, alive, q);
    apply_all(ps, second);
    ops.insert(ops.end(), second.begin(), second.end());
    fix_signs(ops, ps[0], ps[1], q);
    return ops;
}

// Removes non-cut nodes other than the kept ones until only `keep` is left,
// picking the cheapest database compression each time.
std::optional<std::vector<Op>> db_compress_into(std::vector<PauliString>& ps, const CouplingGraph& g,
                                                std::span<const char> alive, const std::vector<std::size_t>& keep,
                                                std::size_t window, CliffordDb& db) {
    auto terms = union_support(ps);
    for (auto q : keep) terms.push_back(q);
    std::sort(terms.begin(), terms.end());
    terms.erase(std::unique(terms.begin(), terms.end()), terms.end());
    auto active = steiner_tree(g, terms, alive).nodes;
    std::vector<Op> ops;
    while (active.size() > keep.size()) {
        std::vector<char> mask(g.num_nodes(), 0);
        for (auto v : active) mask[v] = 1;
        std::optional<std::vector<Op>> best;
        std::size_t best_cost = 0, removed = 0;
        for (auto u : non_cut_nodes(g, mask)) {
            if (std::find(keep.begin(), keep.end(), u) != keep.end()) continue;
            auto w = detail::bfs_window(g, active, u, std::min(active.size(), window));
            std::size_t cost = 0;
            std::vector<Op> step;
            try {
                step = detail::compress_step(db, g, ps, w, u, &cost);
            } catch (const DatabaseMiss&) {
                continue;
            }
            if (!best || cost < best_cost) {
                best = std::move(step);
                best_cost = cost;
                removed = u;
            }
        }
        if (!best) return std::nullopt;
        apply_all(ps, *best);
        ops.insert(ops.end(), best->begin(), best->end());
        active.erase(std::find(active.begin(), active.end(), removed));
    }
    return ops;
}

std::optional<std::vector<Op>> mpcs_ops(PauliString dz, PauliString dx, const CouplingGraph& g,
                                        std::span<const char> alive, std::size_t q, CliffordDb& db) {
    std::vector<PauliString> ps = {dz, dx};
    auto ops = db_compress_into(ps, g, alive, {q}, 3, db);
    if (!ops) return std::nullopt;
    for (auto k : detail::local_to_zx(ps[0].letter(q), ps[1].letter(q))) {
        Op op = make_gate(k, q);
        apply_all(ps, std::span<const Op>(&op, 1));
        ops->push_back(op);
    }
    fix_signs(*ops, ps[0], ps[1], q);
    return ops;
}

struct Round {
    std::vector<std::size_t> logical;
    std::vector<std::size_t> physical;
    std::vector<Op> ops;
    std::size_t cost = 0;
};

bool mpcs_variant(CliffordVariant v) { return v == CliffordVariant::Mpcs || v == CliffordVariant::MpcsUnordered; }

class ResetBuilder {
   public:
    ResetBuilder(const Cer& current, const CouplingGraph& g, CliffordVariant variant, CliffordDb* db)
        : g_(g), variant_(variant), db_(db), n_(g.num_nodes()) {
        if (current.num_qubits() != n_) throw std::invalid_argument("reset_circuit: CER width differs from graph");
        if (!g.is_connected()) throw DisconnectedGraph("reset_circuit: graph is not connected");
        if (mpcs_variant(variant) && !db) throw std::invalid_argument("reset_circuit: MPCS needs a database");
        for (std::size_t i = 0; i < n_; ++i) {
            pats_.push_back(decompose(current, PauliString::single(n_, i, 'Z')).letters());
            pats_.push_back(decompose(current, PauliString::single(n_, i, 'X')).letters());
        }
        alive_.assign(n_, 1);
        settled_.assign(n_, 0);
        result_.circuit = Circuit(n_);
        result_.permutation.assign(n_, 0);
    }

    CliffordResult run(std::size_t k) {
        std::size_t left = n_;
        while (left > 0) {
            std::optional<Round> r;
            if (k >= 2 && left >= 2 && mpcs_variant(variant_)) r = best_pair_round();
            if (!r) r = best_single_round();
            commit(*r);
            left -= r->logical.size();
        }
        return result_;
    }

   private:
    const PauliString& z(std::size_t i) const { return pats_[2 * i]; }
    const PauliString& x(std::size_t i) const { return pats_[2 * i + 1]; }

    std::vector<std::size_t> unsettled() const {
        std::vector<std::size_t> out;
        for (std::size_t i = 0; i < n_; ++i) {
            if (!settled_[i]) out.push_back(i);
        }
        return out;
    }

    Round best_single_round() {
        auto nc = non_cut_nodes(g_, alive_);
        struct Cand {
            std::size_t lb, i, q;
        };
        std::vector<Cand> cands;
        for (auto i : unsettled()) {
            std::vector<PauliString> pair = {z(i), x(i)};
            auto u = union_support(pair);
            for (auto q : nc) {
                if (!is_unordered(variant_) && q != i) continue;
                std::size_t lb = u.size() - (std::binary_search(u.begin(), u.end(), q) ? 1 : 0);
                cands.push_back({lb, i, q});
            }
        }
        if (cands.empty()) throw std::logic_error("reset_circuit: no removable qubit");
        std::sort(cands.begin(), cands.end(),
                  [](const Cand& a, const Cand& b) { return std::tie(a.lb, a.i, a.q) < std::tie(b.lb, b.i, b.q); });
        std::optional<Round> best;
        for (const auto& c : cands) {
            if (best) {
                if (c.lb > best->cost) break;
                if (c.lb == best->cost &&
                    std::tie(c.i, c.q) > std::tie(best->logical[0], best->physical[0]))
                    continue;
            }
            Round r;
            r.logical = {c.i};
            r.physical = {c.q};
            r.ops = pauli_pair_ops(z(c.i), x(c.i), g_, alive_, c.q);
            r.cost = count_cnots(r.ops);
            if (mpcs_variant(variant_)) {
                auto m = mpcs_ops(z(c.i), x(c.i), g_, alive_, c.q, *db_);
                if (m && count_cnots(*m) < r.cost) {
                    r.ops = std::move(*m);
                    r.cost = count_cnots(r.ops);
                }
            }
            if (!best || r.cost < best->cost ||
                (r.cost == best->cost && std::tie(c.i, c.q) < std::tie(best->logical[0], best->physical[0])))
                best = std::move(r);
        }
        return *best;
    }

    std::optional<Round> best_pair_round() {
        std::optional<Round> best;
        auto free = unsettled();
        for (auto [a, b] : g_.edges()) {
            if (!alive_[a] || !alive_[b]) continue;
            for (auto [q1, q2] : {Edge{a, b}, Edge{b, a}}) {
                auto nc = non_cut_nodes(g_, alive_);
                if (!std::binary_search(nc.begin(), nc.end(), q1)) continue;
                auto rest = alive_;
                rest[q1] = 0;
                auto nc2 = non_cut_nodes(g_, rest);
                if (!std::binary_search(nc2.begin(), nc2.end(), q2)) continue;
                for (auto i : free) {
                    for (auto j : free) {
                        if (i == j) continue;
                        if (!is_unordered(variant_) && (i != q1 || j != q2)) continue;
                        std::vector<PauliString> ps = {z(i), x(i), z(j), x(j)};
                        auto u = union_support(ps);
                        u.push_back(q1);
                        u.push_back(q2);
                        std::sort(u.begin(), u.end());
                        u.erase(std::unique(u.begin(), u.end()), u.end());
                        if (best && u.size() - 2 > best->cost) continue;
                        auto ops = db_compress_into(ps, g_, alive_, {q1, q2}, 5, *db_);
                        if (!ops) continue;
                        std::vector<char> pair_alive(n_, 0);
                        pair_alive[q1] = pair_alive[q2] = 1;
                        auto first = pauli_pair_ops(ps[0], ps[1], g_, pair_alive, q1);
                        apply_all(ps, first);
                        pair_alive[q1] = 0;
                        auto second = pauli_pair_ops(ps[2], ps[3], g_, pair_alive, q2);
                        ops->insert(ops->end(), first.begin(), first.end());
                        ops->insert(ops->end(), second.begin(), second.end());
                        Round r;
                        r.logical = {i, j};
                        r.physical = {q1, q2};
                        r.cost = count_cnots(*ops);
                        r.ops = std::move(*ops);
                        if (!best || r.cost < best->cost) best = std::move(r);
                    }
                }
            }
        }
        return best;
    }

    void commit(const Round& r) {
        apply_all(pats_, r.ops);
        for (const auto& op : r.ops) result_.circuit.append(op);
        for (std::size_t t = 0; t < r.logical.size(); ++t) {
            std::size_t i = r.logical[t], q = r.physical[t];
            if (z(i) != PauliString::single(n_, q, 'Z') || x(i) != PauliString::single(n_, q, 'X'))
                throw std::logic_error("reset_circuit: qubit not settled");
            settled_[i] = 1;
            alive_[q] = 0;
            result_.permutation[i] = q;
            result_.removal_order.push_back(q);
        }
    }

    const CouplingGraph& g_;
    CliffordVariant variant_;
    CliffordDb* db_;
    std::size_t n_;
    std::vector<PauliString> pats_;
    std::vector<char> alive_;
    std::vector<char> settled_;
    CliffordResult result_;
};

}  // namespace

std::string to_string(CliffordVariant v) {
    switch (v) {
        case CliffordVariant::PauliPair:
            return "paulipair";
        case CliffordVariant::PauliPairUnordered:
            return "paulipair-uo";
        case CliffordVariant::Mpcs:
            return "mpcs";
        case CliffordVariant::MpcsUnordered:
            return "mpcs-uo";
    }
    return "?";
}

CliffordVariant clifford_variant_from_string(const std::string& name) {
    for (auto v : {CliffordVariant::PauliPair, CliffordVariant::PauliPairUnordered, CliffordVariant::Mpcs,
                   CliffordVariant::MpcsUnordered}) {
        if (to_string(v) == name) return v;
    }
    throw std::invalid_argument("unknown Clifford variant '" + name + "'");
}

bool is_unordered(CliffordVariant v) {
    return v == CliffordVariant::PauliPairUnordered || v == CliffordVariant::MpcsUnordered;
}

CliffordResult reset_circuit(const Cer& current, const CouplingGraph& g, CliffordVariant variant, CliffordDb* db,
                             std::size_t k) {
    if (k == 0 || k > 2) throw std::invalid_argument("reset_circuit: k must be 1 or 2");
    ResetBuilder builder(current, g, variant, db);
    return builder.run(k);
}

CliffordResult synthesize_clifford(const CliffordSpec& spec, CliffordDb* db) {
    if (!spec.source.is_valid()) throw std::invalid_argument("synthesize_clifford: invalid source CER");
    auto r = reset_circuit(spec.source, spec.g, spec.variant, db, spec.k);
    r.circuit = r.circuit.inverse();
    return r;
}

Circuit random_clifford_circuit(std::size_t n, std::size_t k, std::uint64_t seed) {
    if (n < 2) throw std::invalid_argument("random_clifford_circuit: need at least 2 qubits");
    const auto& words = single_qubit_cliffords();
    std::mt19937_64 rng(seed);
    Circuit c(n);
    for (std::size_t step = 0; step < k; ++step) {
        std::size_t a = rng() % n;
        std::size_t b = rng() % (n - 1);
        if (b >= a) ++b;
        for (auto q : {a, b}) {
            for (auto g : words[rng() % words.size()]) c.append(make_gate(g, q));
        }
        c.cx(a, b);
    }
    return c;
}

}  // namespace pauliforge
