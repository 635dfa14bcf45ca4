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

#include "pauliforge/clifford_db.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <deque>
#include <fstream>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include <json.hpp>

namespace pauliforge {

namespace {

using json = nlohmann::json;

// Letter codes: bit 0 is x, bit 1 is z.
constexpr std::uint8_t kI = 0, kX = 1, kZ = 2, kY = 3;

std::uint8_t letter_code(char c) {
    switch (c) {
        case 'I':
        case '_':
            return kI;
        case 'X':
            return kX;
        case 'Z':
            return kZ;
        case 'Y':
            return kY;
    }
    throw std::invalid_argument(std::string("bad Pauli letter '") + c + "'");
}

char code_letter(std::uint8_t c) { return "IXZY"[c & 3]; }

std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

// Unsigned patterns as bit masks over at most 32 nodes.
struct Pat {
    std::uint32_t x = 0;
    std::uint32_t z = 0;
    int weight() const { return std::popcount(x | z); }
};

bool pats_commute(const Pat& a, const Pat& b) {
    return (std::popcount((a.x & b.z) ^ (a.z & b.x)) & 1) == 0;
}

std::uint8_t pat_code(const Pat& p, std::size_t q) {
    return static_cast<std::uint8_t>(((p.x >> q) & 1) | (((p.z >> q) & 1) << 1));
}

void set_pat_code(Pat& p, std::size_t q, std::uint8_t c) {
    std::uint32_t bit = 1u << q;
    p.x = (p.x & ~bit) | ((c & 1) ? bit : 0);
    p.z = (p.z & ~bit) | ((c & 2) ? bit : 0);
}

void apply_letter_gate(std::vector<Pat>& pats, const Op& op) {
    std::uint32_t a = 1u << op.q0;
    for (auto& p : pats) {
        switch (op.kind) {
            case GateKind::H: {
                std::uint32_t xa = p.x & a, za = p.z & a;
                p.x = (p.x & ~a) | za;
                p.z = (p.z & ~a) | xa;
                break;
            }
            case GateKind::S:
            case GateKind::Sdg:
                p.z ^= p.x & a;
                break;
            case GateKind::CX: {
                std::size_t c = op.q0, t = op.q1;
                p.x ^= ((p.x >> c) & 1u) << t;
                p.z ^= ((p.z >> t) & 1u) << c;
                break;
            }
            default:
                break;
        }
    }
}

void apply_cx(std::vector<Pat>& pats, std::size_t c, std::size_t t) {
    for (auto& p : pats) {
        p.x ^= ((p.x >> c) & 1u) << t;
        p.z ^= ((p.z >> t) & 1u) << c;
    }
}

struct CliffordGroup {
    std::vector<std::vector<GateKind>> words;
    // action[e][code] for code in 0..3
    std::vector<std::array<std::uint8_t, 4>> action;
    // shortest element realizing each letter permutation, indexed by
    // (image of X, image of Z) codes.
    std::array<std::array<int, 4>, 4> perm_element{};
};

const CliffordGroup& clifford_group() {
    static const CliffordGroup group = [] {
        CliffordGroup g;
        for (auto& row : g.perm_element) row.fill(-1);
        auto key_of = [](const std::vector<GateKind>& w) {
            PauliString x = PauliString::from_str("X"), z = PauliString::from_str("Z");
            for (auto k : w) {
                conjugate_forward(x, make_gate(k, 0));
                conjugate_forward(z, make_gate(k, 0));
            }
            return x.str() + z.str();
        };
        std::set<std::string> seen;
        std::deque<std::vector<GateKind>> queue{{}};
        seen.insert(key_of({}));
        while (!queue.empty()) {
            auto w = queue.front();
            queue.pop_front();
            g.words.push_back(w);
            for (auto k : {GateKind::H, GateKind::S}) {
                auto next = w;
                next.push_back(k);
                if (seen.insert(key_of(next)).second) queue.push_back(next);
            }
        }
        for (std::size_t e = 0; e < g.words.size(); ++e) {
            std::array<std::uint8_t, 4> act{};
            for (std::uint8_t c = 0; c < 4; ++c) {
                std::vector<Pat> p(1);
                set_pat_code(p[0], 0, c);
                for (auto k : g.words[e]) apply_letter_gate(p, make_gate(k, 0));
                act[c] = pat_code(p[0], 0);
            }
            g.action.push_back(act);
            int& slot = g.perm_element[act[kX]][act[kZ]];
            if (slot < 0) slot = static_cast<int>(e);
        }
        return g;
    }();
    return group;
}

std::vector<Pat> pats_from_strings(const std::vector<std::string>& patterns, std::size_t m) {
    std::vector<Pat> out;
    for (const auto& s : patterns) {
        if (s.size() != m) throw std::invalid_argument("pattern length differs from node count");
        Pat p;
        for (std::size_t q = 0; q < m; ++q) set_pat_code(p, q, letter_code(s[q]));
        out.push_back(p);
    }
    return out;
}

std::size_t pats_rank(std::vector<Pat> pats) {
    std::vector<std::uint64_t> rows;
    for (auto& p : pats) rows.push_back(static_cast<std::uint64_t>(p.x) | (static_cast<std::uint64_t>(p.z) << 32));
    std::size_t rank = 0;
    for (int bit = 63; bit >= 0 && rank < rows.size(); --bit) {
        std::uint64_t mask = 1ull << bit;
        auto it = std::find_if(rows.begin() + static_cast<std::ptrdiff_t>(rank), rows.end(),
                               [&](std::uint64_t r) { return r & mask; });
        if (it == rows.end()) continue;
        std::swap(*it, rows[rank]);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i != rank && (rows[i] & mask)) rows[i] ^= rows[rank];
        }
        ++rank;
    }
    return rank;
}

// Success condition tracker shared by verification and search.
class TaskChecker {
   public:
    TaskChecker(DbKind kind, std::size_t n_pats, int removed) : kind_(kind), removed_(removed), done_(n_pats, 0) {}

    bool check(const std::vector<Pat>& pats) {
        switch (kind_) {
            case DbKind::Compress: {
                std::uint32_t bit = 1u << removed_;
                for (const auto& p : pats) {
                    if ((p.x | p.z) & bit) return false;
                }
                return true;
            }
            case DbKind::SimultaneousImplement:
                for (const auto& p : pats) {
                    if (p.weight() != 1) return false;
                }
                return true;
            case DbKind::Implement: {
                bool all = true;
                for (std::size_t j = 0; j < pats.size(); ++j) {
                    if (done_[j]) continue;
                    bool ok = pats[j].weight() == 1;
                    for (std::size_t i = 0; ok && i < j; ++i) {
                        if (!done_[i] && !pats_commute(pats[i], pats[j])) ok = false;
                    }
                    if (ok) {
                        done_[j] = 1;
                    } else {
                        all = false;
                    }
                }
                return all;
            }
        }
        return false;
    }

    std::string failure(const std::vector<Pat>& pats) const {
        switch (kind_) {
            case DbKind::Compress:
                for (std::size_t j = 0; j < pats.size(); ++j) {
                    if ((pats[j].x | pats[j].z) >> removed_ & 1)
                        return "pattern " + std::to_string(j) + " still acts on the removed node";
                }
                break;
            case DbKind::SimultaneousImplement:
                for (std::size_t j = 0; j < pats.size(); ++j) {
                    if (pats[j].weight() != 1) return "pattern " + std::to_string(j) + " is not a register at the end";
                }
                break;
            case DbKind::Implement:
                for (std::size_t j = 0; j < done_.size(); ++j) {
                    if (!done_[j]) return "pattern " + std::to_string(j) + " never became an allowed register";
                }
                break;
        }
        return "unknown failure";
    }

    void reset() { std::fill(done_.begin(), done_.end(), 0); }

   private:
    DbKind kind_;
    int removed_;
    std::vector<char> done_;
};

std::size_t lower_bound_cnots(DbKind kind, const std::vector<Pat>& pats, int removed) {
    if (kind == DbKind::Compress) {
        TaskChecker c(kind, pats.size(), removed);
        return c.check(pats) ? 0 : 1;
    }
    std::size_t lb = 0;
    for (const auto& p : pats) lb = std::max<std::size_t>(lb, static_cast<std::size_t>(std::max(p.weight() - 1, 0)));
    return lb;
}

void validate_task(const DbTask& task) {
    std::size_t m = task.graph.num_nodes();
    if (m == 0 || m > kMaxDbNodes) throw std::invalid_argument("database task needs 1 to 5 nodes");
    if (!task.graph.is_connected()) throw std::invalid_argument("database task graph is not connected");
    if (task.patterns.empty()) throw std::invalid_argument("database task has no patterns");
    if (task.patterns.size() > kMaxDbPatterns) throw std::invalid_argument("database task has too many patterns");
    for (const auto& p : task.patterns) {
        if (p.size() != m) throw std::invalid_argument("pattern length differs from node count");
        for (char c : p) letter_code(c);
    }
    if (task.kind == DbKind::Compress) {
        if (!task.removed || *task.removed >= m) throw std::invalid_argument("compress task needs a removed node");
    } else {
        for (const auto& p : task.patterns) {
            if (std::all_of(p.begin(), p.end(), [](char c) { return c == 'I' || c == '_'; }))
                throw std::invalid_argument("implementation task with identity pattern");
        }
    }
}

Circuit word_circuit(std::size_t n, std::size_t q, const std::vector<GateKind>& word) {
    Circuit c(n);
    for (auto k : word) c.append(make_gate(k, q));
    return c;
}

std::string circuit_signature(const Circuit& c) {
    std::string s;
    for (const auto& op : c.ops()) {
        s += gate_name(op.kind);
        s += ' ';
        s += std::to_string(op.q0);
        if (op.is_cnot()) {
            s += ' ';
            s += std::to_string(op.q1);
        }
        s += ';';
    }
    return s;
}

json circuit_to_json(const Circuit& c) {
    json out = json::array();
    for (const auto& op : c.ops()) {
        if (op.is_cnot()) {
            out.push_back({gate_name(op.kind), op.q0, op.q1});
        } else {
            out.push_back({gate_name(op.kind), op.q0});
        }
    }
    return out;
}

Circuit circuit_from_json(const json& j, std::size_t n) {
    Circuit c(n);
    for (const auto& g : j) {
        GateKind kind = gate_from_name(g.at(0).get<std::string>());
        if (kind == GateKind::Rot) throw std::runtime_error("database circuit contains a rotation");
        std::size_t q0 = g.at(1).get<std::size_t>();
        std::size_t q1 = kind == GateKind::CX ? g.at(2).get<std::size_t>() : 0;
        c.append(make_gate(kind, q0, q1));
    }
    return c;
}

std::optional<DbEntry> generate_with_schedule(const DbKey& key, const DbConfig& config) {
    std::uint64_t seed = config.seed ^ fnv1a(key.str());
    for (std::size_t k : budget_schedule(key.num_nodes())) {
        auto e = generate_entry(key, k, config.attempts, seed);
        if (e) return e;
    }
    return std::nullopt;
}

std::string task_cache_key(const DbTask& task) {
    std::string s = to_string(task.kind);
    s += '|';
    s += std::to_string(task.graph.num_nodes());
    for (auto [u, v] : task.graph.edges()) {
        s += ',';
        s += std::to_string(u);
        s += '-';
        s += std::to_string(v);
    }
    s += '|';
    s += task.removed ? std::to_string(*task.removed) : "-";
    for (const auto& p : task.patterns) {
        s += '|';
        s += p;
    }
    return s;
}

// Letter-level 2-qubit symplectic group, used to decide feasibility of
// simultaneous implementation on two nodes.
const std::vector<std::array<std::uint8_t, 4>>& two_qubit_group() {
    static const std::vector<std::array<std::uint8_t, 4>> group = [] {
        // images of basis X0, Z0, X1, Z1; vectors packed as x bits 0..1, z bits 2..3
        auto apply = [](std::uint8_t v, const Op& op) {
            std::vector<Pat> p(1);
            p[0].x = v & 3u;
            p[0].z = (v >> 2) & 3u;
            apply_letter_gate(p, op);
            return static_cast<std::uint8_t>(p[0].x | (p[0].z << 2));
        };
        std::array<std::uint8_t, 4> id = {1, 4, 2, 8};
        std::vector<Op> gens = {make_gate(GateKind::H, 0), make_gate(GateKind::H, 1), make_gate(GateKind::S, 0),
                                make_gate(GateKind::S, 1), make_gate(GateKind::CX, 0, 1)};
        std::set<std::array<std::uint8_t, 4>> seen{id};
        std::deque<std::array<std::uint8_t, 4>> queue{id};
        std::vector<std::array<std::uint8_t, 4>> out;
        while (!queue.empty()) {
            auto s = queue.front();
            queue.pop_front();
            out.push_back(s);
            for (const auto& g : gens) {
                auto t = s;
                for (auto& v : t) v = apply(v, g);
                if (seen.insert(t).second) queue.push_back(t);
            }
        }
        return out;
    }();
    return group;
}

bool simultaneous_feasible(const DbKey& key) {
    std::size_t m = key.num_nodes();
    auto pats = pats_from_strings(key.patterns, m);
    if (m == 1) return true;
    if (m != 2) return true;
    for (const auto& s : two_qubit_group()) {
        bool ok = true;
        for (const auto& p : pats) {
            std::uint8_t img = 0;
            if (p.x & 1) img ^= s[0];
            if (p.z & 1) img ^= s[1];
            if (p.x & 2) img ^= s[2];
            if (p.z & 2) img ^= s[3];
            std::uint8_t support = static_cast<std::uint8_t>((img | (img >> 2)) & 3u);
            if (std::popcount(support) != 1) {
                ok = false;
                break;
            }
        }
        if (ok) return true;
    }
    return false;
}

}  // namespace

std::string to_string(DbKind kind) {
    switch (kind) {
        case DbKind::Compress:
            return "compress";
        case DbKind::Implement:
            return "implement";
        case DbKind::SimultaneousImplement:
            return "simultaneous";
    }
    return "?";
}

DbKind db_kind_from_string(const std::string& name) {
    if (name == "compress") return DbKind::Compress;
    if (name == "implement") return DbKind::Implement;
    if (name == "simultaneous") return DbKind::SimultaneousImplement;
    throw std::invalid_argument("unknown database kind '" + name + "'");
}

std::size_t DbKey::num_nodes() const {
    if (graph6.empty()) return 0;
    return static_cast<std::size_t>(graph6[0] - 63);
}

std::string DbKey::str() const {
    std::string s = to_string(kind) + "|" + graph6 + "|r" + std::to_string(removed) + "|";
    for (std::size_t i = 0; i < patterns.size(); ++i) {
        if (i) s += '.';
        s += patterns[i];
    }
    return s;
}

std::string graph6_encode(const CouplingGraph& g) {
    std::size_t n = g.num_nodes();
    if (n > 62) throw std::invalid_argument("graph6 encoding supports at most 62 nodes");
    std::string out(1, static_cast<char>(63 + n));
    int acc = 0, bits = 0;
    for (std::size_t j = 1; j < n; ++j) {
        for (std::size_t i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (++bits == 6) {
                out += static_cast<char>(63 + acc);
                acc = bits = 0;
            }
        }
    }
    if (bits) out += static_cast<char>(63 + (acc << (6 - bits)));
    return out;
}

CouplingGraph graph6_decode(const std::string& code) {
    if (code.empty() || code[0] < 63 || code[0] > 125) throw std::invalid_argument("bad graph6 code");
    std::size_t n = static_cast<std::size_t>(code[0] - 63);
    CouplingGraph g(n);
    std::size_t need = (n * (n - (n ? 1 : 0)) / 2 + 5) / 6;
    if (code.size() != 1 + need) throw std::invalid_argument("bad graph6 length");
    std::size_t k = 0;
    for (std::size_t j = 1; j < n; ++j) {
        for (std::size_t i = 0; i < j; ++i, ++k) {
            int c = code[1 + k / 6] - 63;
            if (c < 0 || c > 63) throw std::invalid_argument("bad graph6 character");
            if ((c >> (5 - k % 6)) & 1) g.add_edge(i, j);
        }
    }
    return g;
}

const std::vector<std::vector<GateKind>>& single_qubit_cliffords() { return clifford_group().words; }

Canonicalization canonicalize(const DbTask& task) {
    validate_task(task);
    const auto& group = clifford_group();
    std::size_t m = task.graph.num_nodes();
    std::size_t np = task.patterns.size();

    std::vector<std::size_t> perm(m);
    std::iota(perm.begin(), perm.end(), 0);
    std::string best_code;
    std::vector<std::vector<std::size_t>> best_perms;
    do {
        CouplingGraph relabeled(m);
        for (auto [u, v] : task.graph.edges()) {
            std::size_t pu = 0, pv = 0;
            for (std::size_t i = 0; i < m; ++i) {
                if (perm[i] == u) pu = i;
                if (perm[i] == v) pv = i;
            }
            relabeled.add_edge(pu, pv);
        }
        std::string code = graph6_encode(relabeled);
        if (best_perms.empty() || code < best_code) {
            best_code = code;
            best_perms.clear();
        }
        if (code == best_code) best_perms.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));

    bool permute_columns = task.kind != DbKind::Implement;
    std::vector<std::size_t> cols(np);
    std::iota(cols.begin(), cols.end(), 0);

    Canonicalization best;
    bool have = false;
    std::vector<std::array<std::uint8_t, 4>> best_maps;
    for (const auto& nodes : best_perms) {
        std::vector<std::size_t> col = cols;
        do {
            DbKey key;
            key.kind = task.kind;
            key.graph6 = best_code;
            key.patterns.assign(np, std::string(m, 'I'));
            key.removed = -1;
            std::vector<std::array<std::uint8_t, 4>> maps(m);
            for (std::size_t i = 0; i < m; ++i) {
                std::size_t v = nodes[i];
                if (task.removed && *task.removed == v) key.removed = static_cast<int>(i);
                std::array<std::uint8_t, 4> map = {kI, 0, 0, 0};
                std::array<bool, 4> used_target{};
                const std::uint8_t order[3] = {kX, kY, kZ};
                std::size_t next = 0;
                for (std::size_t c = 0; c < np; ++c) {
                    std::uint8_t l = letter_code(task.patterns[col[c]][v]);
                    if (l != kI && map[l] == 0) {
                        map[l] = order[next++];
                        used_target[map[l]] = true;
                    }
                    key.patterns[c][i] = code_letter(map[l]);
                }
                for (std::uint8_t l : {kX, kY, kZ}) {
                    if (map[l] != 0) continue;
                    for (std::uint8_t t : order) {
                        if (!used_target[t]) {
                            map[l] = t;
                            used_target[t] = true;
                            break;
                        }
                    }
                }
                maps[i] = map;
            }
            if (!have || std::tie(key.removed, key.patterns) < std::tie(best.key.removed, best.key.patterns)) {
                have = true;
                best.key = key;
                best.node_of = nodes;
                best.column_of = col;
                best_maps = maps;
            }
        } while (permute_columns && std::next_permutation(col.begin(), col.end()));
    }

    best.prefix = Circuit(m);
    for (std::size_t i = 0; i < m; ++i) {
        const auto& map = best_maps[i];
        if (map[kX] == kX && map[kZ] == kZ) continue;
        int e = group.perm_element[map[kX]][map[kZ]];
        if (e < 0) throw std::logic_error("letter permutation without a local Clifford");
        best.prefix.append(word_circuit(m, best.node_of[i], group.words[static_cast<std::size_t>(e)]));
    }
    return best;
}

DbTask task_from_key(const DbKey& key) {
    DbTask t;
    t.kind = key.kind;
    t.graph = graph6_decode(key.graph6);
    t.patterns = key.patterns;
    if (key.removed >= 0) t.removed = static_cast<std::size_t>(key.removed);
    return t;
}

DbCheck verify_task(const DbTask& task, const Circuit& circuit) {
    try {
        validate_task(task);
    } catch (const std::exception& e) {
        return {false, e.what()};
    }
    std::size_t m = task.graph.num_nodes();
    if (circuit.num_qubits() != m) return {false, "circuit width differs from the subgraph"};
    auto pats = pats_from_strings(task.patterns, m);
    TaskChecker checker(task.kind, pats.size(), task.removed ? static_cast<int>(*task.removed) : -1);
    bool ok = task.kind == DbKind::Implement ? checker.check(pats) : false;
    for (std::size_t i = 0; i < circuit.size(); ++i) {
        const Op& op = circuit.ops()[i];
        if (op.is_rotation()) return {false, "gate " + std::to_string(i) + " is a rotation"};
        if (op.is_cnot() && !task.graph.has_edge(op.q0, op.q1))
            return {false, "gate " + std::to_string(i) + " uses a missing edge"};
        apply_letter_gate(pats, op);
        if (task.kind == DbKind::Implement) ok = checker.check(pats);
    }
    if (task.kind != DbKind::Implement) ok = checker.check(pats);
    if (!ok) return {false, checker.failure(pats)};
    return {true, ""};
}

DbCheck verify_entry(const DbEntry& entry) {
    DbTask task;
    try {
        task = task_from_key(entry.key);
    } catch (const std::exception& e) {
        return {false, e.what()};
    }
    if (entry.circuit.cnot_count() != entry.cnot_count) return {false, "stored cnot_count does not match circuit"};
    return verify_task(task, entry.circuit);
}

std::optional<DbEntry> generate_entry(const DbKey& key, std::size_t max_cnots, std::size_t attempts,
                                      std::uint64_t seed) {
    DbTask task = task_from_key(key);
    validate_task(task);
    const auto& group = clifford_group();
    std::size_t m = task.graph.num_nodes();
    auto initial = pats_from_strings(task.patterns, m);
    TaskChecker checker(key.kind, initial.size(), key.removed);

    DbEntry entry;
    entry.key = key;
    entry.circuit = Circuit(m);
    if (checker.check(initial)) {
        entry.found_at_budget = max_cnots;
        return entry;
    }
    std::size_t lb = lower_bound_cnots(key.kind, initial, key.removed);
    const auto& edges = task.graph.edges();
    if (edges.empty() || lb > max_cnots) return std::nullopt;

    struct Step {
        std::uint8_t edge, dir, la, lb;
    };
    std::mt19937_64 rng(seed);
    std::size_t best_len = max_cnots + 1;
    std::vector<Step> best, steps;
    std::vector<Pat> pats;
    for (std::size_t a = 0; a < attempts; ++a) {
        std::size_t limit = std::min(max_cnots, best_len - 1);
        if (limit < lb) break;
        pats = initial;
        checker.reset();
        checker.check(pats);
        steps.clear();
        for (std::size_t s = 1; s <= limit; ++s) {
            Step st{static_cast<std::uint8_t>(rng() % edges.size()), static_cast<std::uint8_t>(rng() & 1),
                    static_cast<std::uint8_t>(rng() % group.words.size()),
                    static_cast<std::uint8_t>(rng() % group.words.size())};
            steps.push_back(st);
            auto [u, v] = edges[st.edge];
            for (auto& p : pats) {
                set_pat_code(p, u, group.action[st.la][pat_code(p, u)]);
                set_pat_code(p, v, group.action[st.lb][pat_code(p, v)]);
            }
            if (st.dir) {
                apply_cx(pats, u, v);
            } else {
                apply_cx(pats, v, u);
            }
            if (checker.check(pats)) {
                best_len = s;
                best = steps;
                break;
            }
        }
        if (best_len == lb) break;
    }
    if (best_len > max_cnots) return std::nullopt;
    for (const auto& st : best) {
        auto [u, v] = edges[st.edge];
        entry.circuit.append(word_circuit(m, u, group.words[st.la]));
        entry.circuit.append(word_circuit(m, v, group.words[st.lb]));
        if (st.dir) {
            entry.circuit.cx(u, v);
        } else {
            entry.circuit.cx(v, u);
        }
    }
    entry.cnot_count = best_len;
    entry.found_at_budget = max_cnots;
    return entry;
}

std::size_t initial_budget(std::size_t nodes) {
    if (nodes <= 3) return 3;
    if (nodes == 4) return 6;
    return 8;
}

std::vector<std::size_t> budget_schedule(std::size_t nodes) {
    std::vector<std::size_t> out;
    for (std::size_t k = initial_budget(nodes);; k *= 2) {
        out.push_back(std::min<std::size_t>(k, 10));
        if (k >= 10) break;
    }
    return out;
}

CliffordDb::CliffordDb(const CliffordDb& other) {
    std::shared_lock lock(other.mutex_);
    config_ = other.config_;
    entries_ = other.entries_;
    canon_cache_ = other.canon_cache_;
    generated_ = other.generated_;
}

CliffordDb& CliffordDb::operator=(const CliffordDb& other) {
    if (this == &other) return *this;
    CliffordDb copy(other);
    std::unique_lock lock(mutex_);
    config_ = copy.config_;
    entries_ = std::move(copy.entries_);
    canon_cache_ = std::move(copy.canon_cache_);
    generated_ = copy.generated_;
    return *this;
}

std::optional<DbEntry> CliffordDb::find(const DbKey& key) const {
    std::shared_lock lock(mutex_);
    auto it = entries_.find(key);
    if (it == entries_.end()) return std::nullopt;
    return it->second;
}

void CliffordDb::insert(const DbEntry& entry) {
    std::unique_lock lock(mutex_);
    auto it = entries_.find(entry.key);
    if (it == entries_.end()) {
        entries_.emplace(entry.key, entry);
        return;
    }
    const DbEntry& old = it->second;
    if (entry.cnot_count < old.cnot_count ||
        (entry.cnot_count == old.cnot_count &&
         circuit_signature(entry.circuit) < circuit_signature(old.circuit))) {
        it->second = entry;
    }
}

DbEntry CliffordDb::get_or_generate(const DbKey& key) {
    if (auto e = find(key)) return *e;
    if (!config_.generate_on_miss) throw DatabaseMiss("database miss: " + key.str());
    auto e = generate_with_schedule(key, config_);
    if (!e) throw DatabaseMiss("database generation failed: " + key.str());
    insert(*e);
    {
        std::unique_lock lock(mutex_);
        ++generated_;
    }
    return *find(key);
}

LookupResult CliffordDb::lookup(const DbTask& task) {
    std::string ck = task_cache_key(task);
    Canonicalization canon;
    bool cached = false;
    {
        std::shared_lock lock(mutex_);
        auto it = canon_cache_.find(ck);
        if (it != canon_cache_.end()) {
            canon = it->second;
            cached = true;
        }
    }
    if (!cached) {
        canon = canonicalize(task);
        std::unique_lock lock(mutex_);
        canon_cache_.emplace(ck, canon);
    }
    DbEntry e = get_or_generate(canon.key);
    std::size_t m = task.graph.num_nodes();
    LookupResult out;
    out.circuit = canon.prefix;
    out.circuit.append(e.circuit.remapped(canon.node_of, m));
    out.cnots = e.cnot_count;
    return out;
}

std::size_t CliffordDb::size() const {
    std::shared_lock lock(mutex_);
    return entries_.size();
}

std::size_t CliffordDb::generated_on_demand() const {
    std::shared_lock lock(mutex_);
    return generated_;
}

std::vector<DbEntry> CliffordDb::entries() const {
    std::shared_lock lock(mutex_);
    std::vector<DbEntry> out;
    out.reserve(entries_.size());
    for (const auto& [k, e] : entries_) out.push_back(e);
    return out;
}

std::string CliffordDb::to_json() const {
    json root;
    root["version"] = 1;
    root["cost_metric"] = "cnot";
    json list = json::array();
    for (const auto& e : entries()) {
        json key;
        key["kind"] = to_string(e.key.kind);
        key["graph"] = e.key.graph6;
        key["patterns"] = e.key.patterns;
        key["removed_node"] = e.key.removed;
        list.push_back({{"key", key},
                        {"circuit", circuit_to_json(e.circuit)},
                        {"cnots", e.cnot_count},
                        {"found_at_budget", e.found_at_budget}});
    }
    root["entries"] = std::move(list);
    return root.dump(1) + "\n";
}

CliffordDb CliffordDb::from_json(const std::string& text, DbConfig config) {
    json root = json::parse(text);
    if (root.at("version").get<int>() != 1) throw std::runtime_error("unsupported database version");
    if (root.at("cost_metric").get<std::string>() != "cnot") throw std::runtime_error("unsupported cost metric");
    CliffordDb db(config);
    for (const auto& j : root.at("entries")) {
        DbEntry e;
        const auto& k = j.at("key");
        e.key.kind = db_kind_from_string(k.at("kind").get<std::string>());
        e.key.graph6 = k.at("graph").get<std::string>();
        e.key.patterns = k.at("patterns").get<std::vector<std::string>>();
        e.key.removed = k.at("removed_node").get<int>();
        e.circuit = circuit_from_json(j.at("circuit"), e.key.num_nodes());
        e.cnot_count = j.at("cnots").get<std::size_t>();
        e.found_at_budget = j.at("found_at_budget").get<std::size_t>();
        auto check = verify_entry(e);
        if (!check.ok) throw std::runtime_error("invalid database entry " + e.key.str() + ": " + check.reason);
        db.insert(e);
    }
    return db;
}

void CliffordDb::save(const std::string& path) const {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << to_json();
}

CliffordDb CliffordDb::load(const std::string& path, DbConfig config) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return from_json(ss.str(), config);
}

std::vector<CouplingGraph> standard_shapes() {
    auto from_edges = [](std::size_t n, std::vector<Edge> edges) { return CouplingGraph(n, edges); };
    return {
        path_graph(2),
        path_graph(3),
        path_graph(4),
        star_graph(3),
        complete_graph(3),
        from_edges(4, {{0, 1}, {1, 2}, {0, 2}, {2, 3}}),
        cycle_graph(4),
        from_edges(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {0, 2}}),
        complete_graph(4),
    };
}

std::vector<DbKey> enumerate_keys(const CouplingGraph& shape, DbKind kind, std::size_t num_patterns) {
    std::size_t m = shape.num_nodes();
    if (num_patterns == 0 || num_patterns > kMaxDbPatterns) throw std::invalid_argument("bad pattern count");
    // Rows are the letters one node carries across the patterns, already in
    // first-appearance normal form.
    std::vector<std::string> rows;
    std::string row(num_patterns, 'I');
    const char order[3] = {'X', 'Y', 'Z'};
    auto gen = [&](auto&& self, std::size_t c, std::size_t used) -> void {
        if (c == num_patterns) {
            rows.push_back(row);
            return;
        }
        row[c] = 'I';
        self(self, c + 1, used);
        for (std::size_t l = 0; l < used; ++l) {
            row[c] = order[l];
            self(self, c + 1, used);
        }
        if (used < 3) {
            row[c] = order[used];
            self(self, c + 1, used + 1);
        }
    };
    gen(gen, 0, 0);

    std::set<DbKey> keys;
    std::vector<std::size_t> idx(m, 0);
    while (true) {
        DbTask task;
        task.kind = kind;
        task.graph = shape;
        task.patterns.assign(num_patterns, std::string(m, 'I'));
        for (std::size_t v = 0; v < m; ++v) {
            for (std::size_t c = 0; c < num_patterns; ++c) task.patterns[c][v] = rows[idx[v]][c];
        }
        bool identity = std::any_of(task.patterns.begin(), task.patterns.end(), [](const std::string& p) {
            return std::all_of(p.begin(), p.end(), [](char ch) { return ch == 'I'; });
        });
        if (!identity) {
            if (kind == DbKind::Compress) {
                if (pats_rank(pats_from_strings(task.patterns, m)) == num_patterns) {
                    for (std::size_t r = 0; r < m; ++r) {
                        task.removed = r;
                        keys.insert(canonicalize(task).key);
                    }
                }
            } else {
                keys.insert(canonicalize(task).key);
            }
        }
        std::size_t v = 0;
        while (v < m && ++idx[v] == rows.size()) idx[v++] = 0;
        if (v == m) break;
    }
    std::vector<DbKey> out(keys.begin(), keys.end());
    if (kind == DbKind::SimultaneousImplement) {
        std::erase_if(out, [](const DbKey& k) { return !simultaneous_feasible(k); });
    }
    return out;
}

std::vector<DbKey> enumerate_standard_keys(std::size_t max_nodes) {
    std::vector<DbKey> keys;
    auto add = [&](const CouplingGraph& shape, DbKind kind, std::size_t p) {
        auto k = enumerate_keys(shape, kind, p);
        keys.insert(keys.end(), k.begin(), k.end());
    };
    for (const auto& shape : standard_shapes()) {
        std::size_t m = shape.num_nodes();
        if (m > max_nodes) continue;
        for (std::size_t p = 1; p < m && p <= kMaxDbPatterns; ++p) add(shape, DbKind::Compress, p);
        for (std::size_t p = 1; p <= 3; ++p) add(shape, DbKind::Implement, p);
        if (m == 2) {
            for (std::size_t p = 1; p <= 4; ++p) add(shape, DbKind::SimultaneousImplement, p);
        }
    }
    return keys;
}

std::size_t build_entries(CliffordDb& db, const std::vector<DbKey>& keys) {
    std::vector<std::optional<DbEntry>> found(keys.size());
    std::vector<char> skip(keys.size(), 0);
    for (std::size_t i = 0; i < keys.size(); ++i) skip[i] = db.find(keys[i]).has_value();
    DbConfig config = db.config();
#pragma omp parallel for schedule(dynamic, 1)
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(keys.size()); ++i) {
        auto u = static_cast<std::size_t>(i);
        if (!skip[u]) found[u] = generate_with_schedule(keys[u], config);
    }
    std::size_t missing = 0;
    for (std::size_t i = 0; i < keys.size(); ++i) {
        if (skip[i]) continue;
        if (found[i]) {
            db.insert(*found[i]);
        } else {
            ++missing;
        }
    }
    return missing;
}

}  // namespace pauliforge
