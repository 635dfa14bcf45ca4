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

#include "pauliforge/pauli_synth.hpp"

#include <algorithm>
#include <chrono>
#include <limits>
#include <numeric>
#include <random>

#include "fold.hpp"
#include "pauliforge/cer.hpp"
#include "pauliforge/clifford_synth.hpp"

namespace pauliforge {

namespace {

using detail::count_cnots;

class State {
   public:
    State(std::span<const PauliString> targets, std::size_t n, std::uint64_t seed)
        : circuit(n), targets_(targets.begin(), targets.end()), pats(targets.begin(), targets.end()),
          done(targets.size(), 0), rng(seed) {
        for (std::size_t j = 0; j < targets.size(); ++j) {
            if (targets[j].num_qubits() != n) throw DimensionError("target width differs from the architecture");
            if (!targets[j].is_hermitian()) throw std::invalid_argument("targets must be Hermitian");
            if (targets[j].is_identity()) done[j] = 1;
        }
    }

    void apply(const Op& op) {
        circuit.append(op);
        for (std::size_t j = 0; j < pats.size(); ++j) {
            if (!done[j]) conjugate_forward(pats[j], op);
        }
    }

    void apply(std::span<const Op> ops, const std::vector<std::size_t>* scope) {
        for (const auto& op : ops) {
            apply(op);
            if (scope) implement_ready(*scope);
        }
    }

    // Emits a rotation for every target in scope that sits on a register and
    // commutes with the earlier unfinished targets of the scope.
    void implement_ready(const std::vector<std::size_t>& scope) {
        for (std::size_t a = 0; a < scope.size(); ++a) {
            std::size_t j = scope[a];
            if (done[j] || pats[j].weight() != 1) continue;
            bool ok = true;
            for (std::size_t b = 0; ok && b < a; ++b) {
                std::size_t i = scope[b];
                if (!done[i] && !commutes(targets_[i], targets_[j])) ok = false;
            }
            if (!ok) continue;
            std::size_t q = detail::support_of(pats[j])[0];
            circuit.rot(pats[j].letter(q), q, pats[j].sign(), j);
            done[j] = 1;
        }
    }

    std::vector<std::size_t> not_done(const std::vector<std::size_t>& scope) const {
        std::vector<std::size_t> out;
        for (auto j : scope) {
            if (!done[j]) out.push_back(j);
        }
        return out;
    }

    std::vector<std::size_t> all_not_done() const {
        std::vector<std::size_t> out;
        for (std::size_t j = 0; j < pats.size(); ++j) {
            if (!done[j]) out.push_back(j);
        }
        return out;
    }

    // After the running Clifford is back to the identity.
    void mark_reset() {
        for (std::size_t j = 0; j < pats.size(); ++j) {
            if (!done[j]) pats[j] = targets_[j];
        }
        reset_mark = circuit.size();
    }

    const PauliString& target(std::size_t j) const { return targets_[j]; }

    Circuit circuit;
    std::vector<PauliString> targets_;
    std::vector<PauliString> pats;
    std::vector<char> done;
    std::mt19937_64 rng;
    std::size_t reset_mark = 0;
};

Circuit clifford_slice(const Circuit& c, std::size_t from, std::size_t to) {
    Circuit out(c.num_qubits());
    for (std::size_t i = from; i < to; ++i) {
        if (!c.ops()[i].is_rotation()) out.append(c.ops()[i]);
    }
    return out;
}

std::vector<std::size_t> union_support(const std::vector<PauliString>& ps) {
    std::vector<std::size_t> out;
    for (const auto& p : ps) {
        auto s = detail::support_of(p);
        out.insert(out.end(), s.begin(), s.end());
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

// Circuit resetting `clifford` (given as gates) on graph g: the cheaper of
// its exact inverse and an ordered Clifford resynthesis.
Circuit reset_for(const Circuit& clifford, const CouplingGraph& g, CliffordDb* db, bool resynth) {
    Circuit naive = clifford.inverse();
    if (!resynth || clifford.cnot_count() == 0) return naive;
    auto variant = db ? CliffordVariant::Mpcs : CliffordVariant::PauliPair;
    Circuit alt = reset_circuit(Cer::from_circuit(clifford), g, variant, db).circuit;
    return alt.cnot_count() < naive.cnot_count() ? alt : naive;
}

void apply_reset(State& s, const CouplingGraph& g, CliffordDb* db, bool resynth) {
    Circuit cl = clifford_slice(s.circuit, s.reset_mark, s.circuit.size());
    Circuit naive = s.circuit;
    naive.append(cl.inverse());
    naive.peephole();
    Circuit best = naive;
    if (resynth && cl.cnot_count() > 0) {
        Circuit alt = s.circuit;
        auto variant = db ? CliffordVariant::Mpcs : CliffordVariant::PauliPair;
        alt.append(reset_circuit(Cer::from_circuit(cl), g, variant, db).circuit);
        alt.peephole();
        if (alt.cnot_count() < best.cnot_count()) best = alt;
    }
    s.circuit = best;
    s.mark_reset();
}

SynthesisReport make_report(const Circuit& c, std::size_t n_targets) {
    SynthesisReport r;
    r.total_cnots = c.cnot_count();
    r.cnots_excluding_final_clifford = c.cnot_count_excluding_final_clifford();
    r.depth = c.depth();
    r.implementation_position.assign(n_targets, std::numeric_limits<std::size_t>::max());
    for (std::size_t i = 0; i < c.size(); ++i) {
        const Op& op = c.ops()[i];
        if (op.is_rotation() && op.target < n_targets) r.implementation_position[op.target] = i;
    }
    return r;
}

std::size_t lowest_support(const PauliString& p) { return detail::support_of(p).front(); }

void ls_reduce(State& s, std::size_t j, const CouplingGraph& g) {
    if (s.pats[j].weight() != 1) {
        auto ops = detail::fold_z(s.pats[j], g, {}, lowest_support(s.pats[j]));
        s.apply(ops, nullptr);
    }
    std::vector<std::size_t> one{j};
    s.implement_ready(one);
    if (!s.done[j]) throw std::logic_error("lazy reduction left the target unimplemented");
}

// Removes non-cut nodes of `active` until at most rank(remaining) are left.
void compress_phase(State& s, const std::vector<std::size_t>& scope, std::vector<std::size_t>& active,
                    const CouplingGraph& g, const SynthesisConfig& cfg, CliffordDb& db) {
    const std::vector<std::size_t>* watch = cfg.immediate_implement ? &scope : nullptr;
    while (true) {
        auto rem = s.not_done(scope);
        if (rem.empty()) return;
        std::vector<PauliString> rp;
        for (auto j : rem) rp.push_back(s.pats[j]);
        auto gi = detail::independent_subset(rp);
        std::vector<PauliString> gens;
        for (auto i : gi) gens.push_back(rp[i]);
        std::size_t r = gens.size();
        if (active.size() <= r) return;
        std::vector<char> mask(g.num_nodes(), 0);
        for (auto v : active) mask[v] = 1;
        auto cands = non_cut_nodes(g, mask);
        std::size_t width = std::min(active.size(), r + 1);
        std::size_t u = 0, best = std::numeric_limits<std::size_t>::max();
        std::vector<Op> ops;
        if (cfg.leaf_choice == LeafChoice::Random) {
            // the drawn node first, then the others in order
            std::rotate(cands.begin(), cands.begin() + static_cast<std::ptrdiff_t>(s.rng() % cands.size()),
                        cands.end());
        }
        for (auto c : cands) {
            std::size_t cost = 0;
            std::vector<Op> o;
            try {
                o = detail::compress_step(db, g, gens, detail::bfs_window(g, active, c, width), c, &cost);
            } catch (const DatabaseMiss&) {
                continue;
            }
            if (cost < best) {
                best = cost;
                u = c;
                ops = std::move(o);
            }
            if (cfg.leaf_choice == LeafChoice::Random) break;
        }
        if (best == std::numeric_limits<std::size_t>::max()) return;
        s.apply(ops, watch);
        active.erase(std::find(active.begin(), active.end(), u));
    }
}

// Implements up to three pending patterns; smaller batches when the search
// finds nothing for the larger one.
void implement_batch(State& s, const std::vector<std::size_t>& scope, const std::vector<std::size_t>& rem,
                     const std::vector<std::size_t>& active, const CouplingGraph& g, CliffordDb& db) {
    std::vector<Op> ops;
    bool found = false;
    for (std::size_t size = std::min<std::size_t>(3, rem.size()); size > 0 && !found && active.size() <= kMaxDbNodes;
         --size) {
        std::vector<PauliString> batch;
        for (std::size_t i = 0; i < size; ++i) batch.push_back(s.pats[rem[i]]);
        try {
            ops = detail::implement_step(db, g, batch, active, nullptr);
            found = true;
        } catch (const DatabaseMiss&) {
        }
    }
    if (!found) {
        // fold the first pattern inside the active set
        std::vector<char> allowed(g.num_nodes(), 0);
        for (auto v : active) allowed[v] = 1;
        ops = detail::fold_z(s.pats[rem[0]], g, allowed, lowest_support(s.pats[rem[0]]));
    }
    s.apply(ops, &scope);
    s.implement_ready(scope);
    if (!s.done[rem[0]]) throw std::logic_error("implementation entry left its first pattern pending");
}

void implement_batches(State& s, const std::vector<std::size_t>& scope, const std::vector<std::size_t>& active,
                       const CouplingGraph& g, CliffordDb& db) {
    s.implement_ready(scope);
    while (true) {
        auto rem = s.not_done(scope);
        if (rem.empty()) return;
        implement_batch(s, scope, rem, active, g, db);
    }
}

void mpls_trial(State& s, const std::vector<std::size_t>& scope, const CouplingGraph& g, const SynthesisConfig& cfg,
                CliffordDb& db) {
    if (cfg.immediate_implement) s.implement_ready(scope);
    while (true) {
        auto rem = s.not_done(scope);
        if (rem.empty()) return;
        std::vector<PauliString> rp;
        for (auto j : rem) rp.push_back(s.pats[j]);
        auto active = steiner_tree(g, union_support(rp)).nodes;
        compress_phase(s, scope, active, g, cfg, db);
        rem = s.not_done(scope);
        if (rem.empty()) return;
        // One batch, then recompute the active tree for what is left.
        implement_batch(s, scope, rem, active, g, db);
    }
}

std::vector<std::size_t> dfs_removal_order(const CouplingGraph& g, std::vector<std::size_t> dest) {
    // Order dest so that deleting dest[0..m-1] keeps the graph connected for
    // every m < dest.size().
    std::vector<std::size_t> order;
    std::vector<char> alive(g.num_nodes(), 1);
    std::vector<char> used(dest.size(), 0);
    auto rec = [&](auto&& self) -> bool {
        if (order.size() + 1 >= dest.size()) {
            for (std::size_t i = 0; i < dest.size(); ++i) {
                if (!used[i]) {
                    order.push_back(dest[i]);
                    return true;
                }
            }
            return true;
        }
        auto nc = non_cut_nodes(g, alive);
        for (std::size_t i = 0; i < dest.size(); ++i) {
            if (used[i] || !std::binary_search(nc.begin(), nc.end(), dest[i])) continue;
            used[i] = 1;
            alive[dest[i]] = 0;
            order.push_back(dest[i]);
            if (self(self)) return true;
            order.pop_back();
            alive[dest[i]] = 1;
            used[i] = 0;
        }
        return false;
    };
    if (dest.empty()) return {};
    if (!rec(rec)) throw std::invalid_argument("compress_general: no removal order keeps the graph connected");
    return order;
}

}  // namespace

std::string to_string(SynthMethod m) {
    switch (m) {
        case SynthMethod::SS:
            return "ss";
        case SynthMethod::LS:
            return "ls";
        case SynthMethod::MPLS:
            return "mpls";
        case SynthMethod::MPR:
            return "mpr";
    }
    return "?";
}

std::string to_string(ResetPolicy r) {
    switch (r) {
        case ResetPolicy::AtEnd:
            return "at-end";
        case ResetPolicy::PerList:
            return "per-list";
        case ResetPolicy::None:
            return "none";
    }
    return "?";
}

std::string to_string(LeafChoice l) { return l == LeafChoice::Random ? "random" : "min-cnot"; }

SynthMethod synth_method_from_string(const std::string& name) {
    for (auto m : {SynthMethod::SS, SynthMethod::LS, SynthMethod::MPLS, SynthMethod::MPR}) {
        if (to_string(m) == name) return m;
    }
    throw std::invalid_argument("unknown synthesis method '" + name + "'");
}

ResetPolicy reset_policy_from_string(const std::string& name) {
    for (auto r : {ResetPolicy::AtEnd, ResetPolicy::PerList, ResetPolicy::None}) {
        if (to_string(r) == name) return r;
    }
    throw std::invalid_argument("unknown reset policy '" + name + "'");
}

LeafChoice leaf_choice_from_string(const std::string& name) {
    if (name == "random") return LeafChoice::Random;
    if (name == "min-cnot") return LeafChoice::MinCnot;
    throw std::invalid_argument("unknown leaf choice '" + name + "'");
}

SynthesisConfig SynthesisConfig::mpr_preset() {
    SynthesisConfig c;
    c.method = SynthMethod::MPR;
    c.k_max = 4;
    c.k_prime_max = 8;
    c.reset_policy = ResetPolicy::PerList;
    c.leaf_choice = LeafChoice::MinCnot;
    return c;
}

std::vector<PauliString> embed_targets(std::span<const PauliString> targets, std::span<const std::size_t> layout,
                                       std::size_t n_physical) {
    std::vector<PauliString> out;
    for (const auto& t : targets) {
        std::size_t n = t.num_qubits();
        if (n > n_physical) throw DimensionError("targets use more qubits than the architecture has");
        if (!layout.empty() && layout.size() < n) throw std::invalid_argument("layout shorter than the targets");
        PauliString p(n_physical);
        for (std::size_t q = 0; q < n; ++q) {
            std::size_t phys = layout.empty() ? q : layout[q];
            if (phys >= n_physical) throw std::invalid_argument("layout entry out of range");
            p.set_letter(phys, t.letter(q));
        }
        p.set_phase(t.phase());
        out.push_back(p);
    }
    return out;
}

Circuit steiner_synthesize(std::span<const PauliString> targets, const CouplingGraph& g) {
    Circuit c(g.num_nodes());
    for (std::size_t j = 0; j < targets.size(); ++j) {
        const auto& t = targets[j];
        if (t.num_qubits() != g.num_nodes()) throw DimensionError("target width differs from the architecture");
        if (t.is_identity()) continue;
        std::size_t root = lowest_support(t);
        auto ops = detail::fold_z(t, g, {}, root);
        PauliString p = t;
        for (const auto& op : ops) {
            conjugate_forward(p, op);
            c.append(op);
        }
        c.rot('Z', root, p.sign(), j);
        for (auto it = ops.rbegin(); it != ops.rend(); ++it) c.append(inverse_gate(*it));
    }
    c.peephole();
    return c;
}

Circuit lazy_synthesize(std::span<const PauliString> targets, const CouplingGraph& g, ResetPolicy reset,
                        CliffordDb* db) {
    State s(targets, g.num_nodes(), 0);
    for (std::size_t j = 0; j < targets.size(); ++j) {
        if (s.done[j]) continue;
        ls_reduce(s, j, g);
        if (reset == ResetPolicy::PerList) apply_reset(s, g, db, true);
    }
    if (reset == ResetPolicy::AtEnd) apply_reset(s, g, db, true);
    s.circuit.peephole();
    return s.circuit;
}

Sublist select_sublist(std::span<const PauliString> remaining, std::size_t k, std::size_t k_prime) {
    Sublist out;
    std::vector<PauliString> basis;
    for (std::size_t i = 0; i < remaining.size() && i < k_prime; ++i) {
        basis.push_back(remaining[i]);
        if (gf2_rank(basis) == basis.size()) {
            if (basis.size() > k) break;
            out.generators.push_back(i);
        } else {
            basis.pop_back();
        }
        out.length = i + 1;
    }
    return out;
}

SynthesisResult mpls_synthesize(std::span<const PauliString> targets, const CouplingGraph& g,
                                const SynthesisConfig& config, CliffordDb& db) {
    if (config.k_max == 0 || config.k_max > kMaxDbPatterns) throw std::invalid_argument("k_max must be 1..4");
    State s(targets, g.num_nodes(), config.seed);
    while (true) {
        auto rem = s.all_not_done();
        if (rem.empty()) break;
        std::vector<PauliString> rp;
        for (auto j : rem) rp.push_back(s.pats[j]);
        auto sub = select_sublist(rp, config.k_max, std::max(config.k_prime_max, config.k_max));
        std::size_t base = s.circuit.cnot_count();
        std::optional<State> best;
        double best_ratio = 0;
        for (std::size_t i = 1; i <= sub.length; ++i) {
            std::vector<std::size_t> scope(rem.begin(), rem.begin() + static_cast<std::ptrdiff_t>(i));
            State trial = s;
            mpls_trial(trial, scope, g, config, db);
            double ratio = static_cast<double>(trial.circuit.cnot_count() - base) / static_cast<double>(i);
            if (i == 1) {
                State lazy = s;
                ls_reduce(lazy, rem[0], g);
                if (lazy.circuit.cnot_count() < trial.circuit.cnot_count()) {
                    lazy.rng = trial.rng;
                    trial = std::move(lazy);
                    ratio = static_cast<double>(trial.circuit.cnot_count() - base);
                }
            }
            if (!best || ratio <= best_ratio) {
                best = std::move(trial);
                best_ratio = ratio;
            }
        }
        s = std::move(*best);
        if (config.reset_policy == ResetPolicy::PerList) apply_reset(s, g, &db, config.resynthesize_reset);
    }
    if (config.reset_policy == ResetPolicy::AtEnd) apply_reset(s, g, &db, config.resynthesize_reset);
    s.circuit.peephole();
    SynthesisResult out;
    out.circuit = std::move(s.circuit);
    out.report = make_report(out.circuit, targets.size());
    return out;
}

SynthesisResult mpr_synthesize(std::span<const PauliString> targets, const CouplingGraph& g,
                               const SynthesisConfig& config, CliffordDb& db) {
    std::size_t k = std::min<std::size_t>(std::max<std::size_t>(config.k_max, 1), kMaxDbPatterns);
    State s(targets, g.num_nodes(), config.seed);
    while (true) {
        auto rem = s.all_not_done();
        if (rem.empty()) break;
        std::vector<PauliString> rp;
        for (auto j : rem) rp.push_back(s.pats[j]);
        auto sub = select_sublist(rp, k, std::max(config.k_prime_max, k));
        std::vector<std::size_t> scope(rem.begin(), rem.begin() + static_cast<std::ptrdiff_t>(sub.length));
        std::vector<PauliString> sp(rp.begin(), rp.begin() + static_cast<std::ptrdiff_t>(sub.length));
        auto active = steiner_tree(g, union_support(sp)).nodes;

        std::size_t mark0 = s.circuit.size();
        if (config.immediate_implement) s.implement_ready(scope);
        compress_phase(s, scope, active, g, config, db);
        std::size_t mark1 = s.circuit.size();
        implement_batches(s, scope, active, g, db);
        std::size_t mark2 = s.circuit.size();

        Circuit impl = clifford_slice(s.circuit, mark1, mark2);
        auto sub_graph = induced_subgraph(g, active);
        std::vector<std::size_t> local(g.num_nodes(), 0);
        for (std::size_t i = 0; i < active.size(); ++i) local[sub_graph.to_global[i]] = i;
        Circuit impl_local = impl.remapped(local, active.size());
        Circuit undo = reset_for(impl_local, sub_graph.graph, &db, config.resynthesize_reset);
        Circuit undo_global = undo.remapped(sub_graph.to_global, g.num_nodes());
        Circuit uncompress = clifford_slice(s.circuit, mark0, mark1).inverse();
        for (const auto& op : undo_global.ops()) s.apply(op);
        for (const auto& op : uncompress.ops()) s.apply(op);
        s.mark_reset();
    }
    s.circuit.peephole();
    SynthesisResult out;
    out.circuit = std::move(s.circuit);
    out.report = make_report(out.circuit, targets.size());
    return out;
}

SynthesisResult synthesize(std::span<const PauliString> targets, const CouplingGraph& g,
                           const SynthesisConfig& config, CliffordDb& db) {
    auto start = std::chrono::steady_clock::now();
    SynthesisResult out;
    switch (config.method) {
        case SynthMethod::SS: {
            if (config.order_for_cancellation) {
                // Reorder maximal runs of mutually commuting targets.
                std::vector<PauliString> ordered;
                std::vector<std::size_t> index;
                std::size_t i = 0;
                while (i < targets.size()) {
                    std::size_t j = i + 1;
                    while (j < targets.size()) {
                        bool ok = true;
                        for (std::size_t a = i; ok && a < j; ++a) ok = commutes(targets[a], targets[j]);
                        if (!ok) break;
                        ++j;
                    }
                    auto run = targets.subspan(i, j - i);
                    for (auto p : order_for_cancellation(run, g)) {
                        ordered.push_back(targets[i + p]);
                        index.push_back(i + p);
                    }
                    i = j;
                }
                Circuit c = steiner_synthesize(ordered, g);
                Circuit relabeled(c.num_qubits());
                for (auto op : c.ops()) {
                    if (op.is_rotation()) op.target = static_cast<std::uint32_t>(index[op.target]);
                    relabeled.append(op);
                }
                out.circuit = relabeled;
            } else {
                out.circuit = steiner_synthesize(targets, g);
            }
            break;
        }
        case SynthMethod::LS:
            out.circuit = lazy_synthesize(targets, g, config.reset_policy, &db);
            break;
        case SynthMethod::MPLS:
            out.circuit = mpls_synthesize(targets, g, config, db).circuit;
            break;
        case SynthMethod::MPR:
            out.circuit = mpr_synthesize(targets, g, config, db).circuit;
            break;
    }
    out.report = make_report(out.circuit, targets.size());
    out.report.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return out;
}

Excitation double_excitation(const FermionMapping& mapping, std::size_t i, std::size_t j, std::size_t k,
                             std::size_t l, std::span<const std::size_t> layout, std::size_t n_physical) {
    std::vector<PauliString> terms;
    for (const auto& t : double_excitation_terms(mapping, i, j, k, l)) {
        terms.push_back(t.coefficient < 0 ? t.pauli.negated() : t.pauli);
    }
    Excitation e;
    e.targets = embed_targets(terms, layout, n_physical);
    return e;
}

Circuit compress_general(std::span<const PauliString> paulis, const CouplingGraph& g,
                         std::span<const std::size_t> dest) {
    std::size_t n = g.num_nodes();
    std::size_t m = paulis.size();
    if (m >= n) throw std::invalid_argument("compress_general: need fewer Paulis than qubits");
    if (dest.size() != m) throw std::invalid_argument("compress_general: dest size must equal the Pauli count");
    for (const auto& p : paulis) {
        if (p.num_qubits() != n) throw DimensionError("compress_general: Pauli width differs from the graph");
    }
    std::vector<std::size_t> d(dest.begin(), dest.end());
    std::sort(d.begin(), d.end());
    if (std::adjacent_find(d.begin(), d.end()) != d.end() || (!d.empty() && d.back() >= n))
        throw std::invalid_argument("compress_general: bad destination nodes");
    if (m > 0 && !induced_subgraph(g, d).graph.is_connected())
        throw std::invalid_argument("compress_general: destination is not connected");

    std::vector<char> in_dest(n, 0);
    for (auto q : d) in_dest[q] = 1;
    bool local = std::all_of(paulis.begin(), paulis.end(), [&](const PauliString& p) {
        auto sp = detail::support_of(p);
        return std::all_of(sp.begin(), sp.end(), [&](std::size_t q) { return in_dest[q] != 0; });
    });
    if (local) return Circuit(n);

    auto order = dfs_removal_order(g, std::vector<std::size_t>(dest.begin(), dest.end()));
    std::vector<PauliString> ps(paulis.begin(), paulis.end());
    Circuit c(n);
    std::vector<char> allowed(n, 1);
    for (std::size_t mi = 0; mi < m; ++mi) {
        PauliString tilde = ps[mi].unsigned_copy();
        for (std::size_t q = 0; q < n; ++q) {
            if (!allowed[q]) tilde.set_letter(q, 'I');
        }
        auto ts = detail::support_of(tilde);
        if (!ts.empty() && !(ts.size() == 1 && ts[0] == order[mi])) {
            auto ops = detail::fold_z(tilde, g, allowed, order[mi]);
            for (const auto& op : ops) {
                c.append(op);
                for (auto& p : ps) conjugate_forward(p, op);
            }
        }
        allowed[order[mi]] = 0;
    }
    return c;
}

std::size_t min_compression_qubits(std::span<const PauliString> paulis) {
    auto idx = detail::independent_subset(paulis);
    std::size_t r = idx.size();
    std::vector<PauliString> gram;
    for (auto a : idx) {
        PauliString row(r);
        for (std::size_t b = 0; b < r; ++b) {
            if (!commutes(paulis[a], paulis[idx[b]])) row.set_letter(b, 'X');
        }
        gram.push_back(row);
    }
    return r - gf2_rank(gram) / 2;
}

std::vector<std::size_t> order_for_cancellation(std::span<const PauliString> terms, const CouplingGraph& g) {
    std::size_t m = terms.size();
    std::vector<std::size_t> identity(m);
    std::iota(identity.begin(), identity.end(), 0);
    if (m <= 2) return identity;
    for (std::size_t a = 0; a < m; ++a) {
        for (std::size_t b = a + 1; b < m; ++b) {
            if (!commutes(terms[a], terms[b])) throw std::invalid_argument("order_for_cancellation: terms must commute");
        }
    }
    std::vector<std::size_t> single(m);
    for (std::size_t a = 0; a < m; ++a) {
        single[a] = steiner_synthesize(std::span<const PauliString>(&terms[a], 1), g).cnot_count();
    }
    // dist[a][b]: CNOTs that SS(b) adds after SS(a) once cancellations apply.
    std::vector<std::vector<std::size_t>> dist(m, std::vector<std::size_t>(m, 0));
    for (std::size_t a = 0; a < m; ++a) {
        for (std::size_t b = 0; b < m; ++b) {
            if (a == b) continue;
            std::vector<PauliString> pair = {terms[a], terms[b]};
            dist[a][b] = steiner_synthesize(pair, g).cnot_count() - single[a];
        }
    }
    auto cost_of = [&](const std::vector<std::size_t>& order) {
        std::vector<PauliString> seq;
        for (auto i : order) seq.push_back(terms[i]);
        return steiner_synthesize(seq, g).cnot_count();
    };
    std::vector<std::size_t> best = identity;
    std::size_t best_cost = cost_of(identity);
    for (std::size_t start = 0; start < m; ++start) {
        std::vector<std::size_t> order{start};
        std::vector<char> used(m, 0);
        used[start] = 1;
        while (order.size() < m) {
            std::size_t last = order.back(), pick = m;
            for (std::size_t b = 0; b < m; ++b) {
                if (!used[b] && (pick == m || dist[last][b] < dist[last][pick])) pick = b;
            }
            used[pick] = 1;
            order.push_back(pick);
        }
        std::size_t c = cost_of(order);
        if (c < best_cost) {
            best_cost = c;
            best = order;
        }
    }
    return best;
}

}  // namespace pauliforge
