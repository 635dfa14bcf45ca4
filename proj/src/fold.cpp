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

#include "fold.hpp"

#include <algorithm>
#include <deque>

namespace pauliforge::detail {

namespace {

struct RootedTree {
    std::vector<std::size_t> post_order;  // children before parents, root excluded
    std::vector<std::size_t> parent;
};

RootedTree root_tree(std::size_t n, const std::vector<Edge>& edges, std::size_t root) {
    std::vector<std::vector<std::size_t>> adj(n);
    for (auto [u, v] : edges) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    for (auto& a : adj) std::sort(a.begin(), a.end());
    RootedTree t;
    t.parent.assign(n, n);
    std::vector<std::size_t> order{root};
    std::vector<char> seen(n, 0);
    seen[root] = 1;
    for (std::size_t i = 0; i < order.size(); ++i) {
        for (auto w : adj[order[i]]) {
            if (!seen[w]) {
                seen[w] = 1;
                t.parent[w] = order[i];
                order.push_back(w);
            }
        }
    }
    for (std::size_t i = order.size(); i-- > 1;) t.post_order.push_back(order[i]);
    return t;
}

SteinerResult tree_for(const PauliString& pattern, const CouplingGraph& g, std::span<const char> allowed,
                       std::size_t root) {
    auto terms = support_of(pattern);
    if (std::find(terms.begin(), terms.end(), root) == terms.end()) terms.push_back(root);
    std::sort(terms.begin(), terms.end());
    return allowed.empty() ? steiner_tree(g, terms) : steiner_tree(g, terms, allowed);
}

}  // namespace

std::vector<std::size_t> support_of(const PauliString& p) {
    std::vector<std::size_t> out;
    for (std::size_t q = 0; q < p.num_qubits(); ++q) {
        if (p.x(q) || p.z(q)) out.push_back(q);
    }
    return out;
}

std::vector<Op> fold_z(const PauliString& pattern, const CouplingGraph& g, std::span<const char> allowed,
                       std::size_t root) {
    std::size_t n = g.num_nodes();
    std::vector<Op> ops;
    if (pattern.is_identity()) throw std::invalid_argument("fold_z: identity pattern");
    auto st = tree_for(pattern, g, allowed, root);
    std::vector<char> in_support(n, 0);
    for (auto q : support_of(pattern)) {
        in_support[q] = 1;
        char l = pattern.letter(q);
        if (l == 'X') {
            ops.push_back(make_gate(GateKind::H, q));
        } else if (l == 'Y') {
            ops.push_back(make_gate(GateKind::S, q));
            ops.push_back(make_gate(GateKind::H, q));
        }
    }
    auto tree = root_tree(n, st.tree_edges, root);
    for (auto c : tree.post_order) {
        std::size_t v = tree.parent[c];
        if (!in_support[v]) {
            ops.push_back(make_gate(GateKind::CX, v, c));
            in_support[v] = 1;
        }
        ops.push_back(make_gate(GateKind::CX, c, v));
        in_support[c] = 0;
    }
    return ops;
}

std::vector<Op> fold_x(const PauliString& pattern, const CouplingGraph& g, std::span<const char> allowed,
                       std::size_t root) {
    std::size_t n = g.num_nodes();
    char rl = pattern.letter(root);
    if (rl != 'X' && rl != 'Y') throw std::invalid_argument("fold_x: root must carry X or Y");
    std::vector<Op> ops;
    auto st = tree_for(pattern, g, allowed, root);
    std::vector<char> in_support(n, 0);
    for (auto q : support_of(pattern)) {
        in_support[q] = 1;
        if (q == root) continue;
        char l = pattern.letter(q);
        if (l == 'Z') {
            ops.push_back(make_gate(GateKind::H, q));
        } else if (l == 'Y') {
            ops.push_back(make_gate(GateKind::S, q));
        }
    }
    auto tree = root_tree(n, st.tree_edges, root);
    for (auto c : tree.post_order) {
        std::size_t v = tree.parent[c];
        if (!in_support[v]) {
            ops.push_back(make_gate(GateKind::CX, c, v));
            in_support[v] = 1;
        }
        ops.push_back(make_gate(GateKind::CX, v, c));
        in_support[c] = 0;
    }
    if (rl == 'Y') ops.push_back(make_gate(GateKind::S, root));
    return ops;
}

std::vector<std::size_t> independent_subset(std::span<const PauliString> paulis) {
    std::vector<std::size_t> out;
    std::vector<PauliString> chosen;
    for (std::size_t i = 0; i < paulis.size(); ++i) {
        chosen.push_back(paulis[i]);
        if (gf2_rank(chosen) == chosen.size()) {
            out.push_back(i);
        } else {
            chosen.pop_back();
        }
    }
    return out;
}

std::string restrict_letters(const PauliString& p, std::span<const std::size_t> nodes) {
    std::string s;
    s.reserve(nodes.size());
    for (auto q : nodes) s += p.letter(q);
    return s;
}

std::vector<std::size_t> bfs_window(const CouplingGraph& g, const std::vector<std::size_t>& active, std::size_t start,
                                    std::size_t count) {
    std::vector<char> in(g.num_nodes(), 0);
    for (auto v : active) in[v] = 1;
    std::vector<std::size_t> order{start};
    std::vector<char> seen(g.num_nodes(), 0);
    seen[start] = 1;
    for (std::size_t i = 0; i < order.size() && order.size() < count; ++i) {
        for (auto w : g.neighbors(order[i])) {
            if (in[w] && !seen[w]) {
                seen[w] = 1;
                order.push_back(w);
                if (order.size() == count) break;
            }
        }
    }
    return order;
}

namespace {

std::vector<std::string> restricted_basis(std::span<const PauliString> patterns, std::span<const std::size_t> nodes) {
    std::vector<PauliString> restricted;
    for (const auto& p : patterns) {
        auto s = restrict_letters(p, nodes);
        if (s.find_first_not_of('I') != std::string::npos) restricted.push_back(PauliString::from_str(s));
    }
    std::vector<std::string> out;
    for (auto i : independent_subset(restricted)) out.push_back(restricted[i].unsigned_copy().str().substr(1));
    return out;
}

std::vector<Op> to_global(const Circuit& local, const std::vector<std::size_t>& to_global) {
    std::vector<Op> out;
    for (auto op : local.ops()) {
        op.q0 = static_cast<std::uint32_t>(to_global[op.q0]);
        if (op.is_cnot()) op.q1 = static_cast<std::uint32_t>(to_global[op.q1]);
        out.push_back(op);
    }
    return out;
}

}  // namespace

std::vector<Op> compress_step(CliffordDb& db, const CouplingGraph& g, std::span<const PauliString> patterns,
                              const std::vector<std::size_t>& window, std::size_t removed, std::size_t* cnots) {
    auto sub = induced_subgraph(g, window);
    auto basis = restricted_basis(patterns, sub.to_global);
    std::size_t r = sub.local_of(removed);
    bool touches = std::any_of(basis.begin(), basis.end(), [&](const std::string& s) { return s[r] != 'I'; });
    if (cnots) *cnots = 0;
    if (!touches) return {};
    DbTask task;
    task.kind = DbKind::Compress;
    task.graph = sub.graph;
    task.patterns = basis;
    task.removed = r;
    auto res = db.lookup(task);
    if (cnots) *cnots = res.cnots;
    return to_global(res.circuit, sub.to_global);
}

std::vector<Op> implement_step(CliffordDb& db, const CouplingGraph& g, std::span<const PauliString> patterns,
                               const std::vector<std::size_t>& nodes, std::size_t* cnots) {
    auto sub = induced_subgraph(g, nodes);
    DbTask task;
    task.kind = DbKind::Implement;
    task.graph = sub.graph;
    for (const auto& p : patterns) task.patterns.push_back(restrict_letters(p, sub.to_global));
    auto res = db.lookup(task);
    if (cnots) *cnots = res.cnots;
    return to_global(res.circuit, sub.to_global);
}

std::vector<GateKind> local_to_zx(char from_z, char from_x) {
    for (const auto& word : single_qubit_cliffords()) {
        PauliString z(1), x(1);
        z.set_letter(0, from_z);
        x.set_letter(0, from_x);
        for (auto k : word) {
            conjugate_forward(z, make_gate(k, 0));
            conjugate_forward(x, make_gate(k, 0));
        }
        if (z.letter(0) == 'Z' && x.letter(0) == 'X') return word;
    }
    throw std::invalid_argument("local_to_zx: letters do not anticommute");
}

std::size_t count_cnots(std::span<const Op> ops) {
    return static_cast<std::size_t>(std::count_if(ops.begin(), ops.end(), [](const Op& o) { return o.is_cnot(); }));
}

}  // namespace pauliforge::detail
