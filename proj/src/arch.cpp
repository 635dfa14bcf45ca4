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

#include "pauliforge/arch.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <limits>
#include <numeric>
#include <sstream>
#include <tuple>

namespace pauliforge {

namespace {

constexpr std::size_t kInf = std::numeric_limits<std::size_t>::max();

struct UnionFind {
    std::vector<std::size_t> parent;
    explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    std::size_t find(std::size_t v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    }
    bool unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[std::max(a, b)] = std::min(a, b);
        return true;
    }
};

Edge ordered(std::size_t u, std::size_t v) { return u < v ? Edge{u, v} : Edge{v, u}; }

}  // namespace

CouplingGraph::CouplingGraph(std::size_t n, std::span<const Edge> edges) : adj_(n) {
    for (auto [u, v] : edges) add_edge(u, v);
}

bool CouplingGraph::has_edge(std::size_t u, std::size_t v) const {
    if (u >= adj_.size() || v >= adj_.size()) return false;
    return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
}

void CouplingGraph::add_edge(std::size_t u, std::size_t v) {
    if (u >= adj_.size() || v >= adj_.size()) throw std::invalid_argument("add_edge: node out of range");
    if (u == v) throw std::invalid_argument("add_edge: self-loop");
    if (has_edge(u, v)) return;
    adj_[u].insert(std::lower_bound(adj_[u].begin(), adj_[u].end(), v), v);
    adj_[v].insert(std::lower_bound(adj_[v].begin(), adj_[v].end(), u), u);
    Edge e = ordered(u, v);
    edges_.insert(std::lower_bound(edges_.begin(), edges_.end(), e), e);
}

std::vector<std::size_t> CouplingGraph::distances(std::size_t source) const {
    std::vector<std::size_t> dist(adj_.size(), kInf);
    std::deque<std::size_t> queue{source};
    dist.at(source) = 0;
    while (!queue.empty()) {
        std::size_t v = queue.front();
        queue.pop_front();
        for (std::size_t w : adj_[v]) {
            if (dist[w] == kInf) {
                dist[w] = dist[v] + 1;
                queue.push_back(w);
            }
        }
    }
    return dist;
}

bool CouplingGraph::is_connected() const {
    if (adj_.empty()) return true;
    auto d = distances(0);
    return std::none_of(d.begin(), d.end(), [](std::size_t x) { return x == kInf; });
}

std::size_t CouplingGraph::diameter() const {
    std::size_t best = 0;
    for (std::size_t v = 0; v < adj_.size(); ++v) {
        for (std::size_t d : distances(v)) {
            if (d == kInf) throw DisconnectedGraph("diameter of a disconnected graph");
            best = std::max(best, d);
        }
    }
    return best;
}

CouplingGraph path_graph(std::size_t n) {
    CouplingGraph g(n);
    for (std::size_t i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

CouplingGraph cycle_graph(std::size_t n) {
    CouplingGraph g = path_graph(n);
    if (n > 2) g.add_edge(n - 1, 0);
    return g;
}

CouplingGraph star_graph(std::size_t leaves) {
    CouplingGraph g(leaves + 1);
    for (std::size_t i = 1; i <= leaves; ++i) g.add_edge(0, i);
    return g;
}

CouplingGraph complete_graph(std::size_t n) {
    CouplingGraph g(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) g.add_edge(i, j);
    }
    return g;
}

CouplingGraph grid_graph(std::size_t rows, std::size_t cols) {
    CouplingGraph g(rows * cols);
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c) {
            std::size_t v = r * cols + c;
            if (c + 1 < cols) g.add_edge(v, v + 1);
            if (r + 1 < rows) g.add_edge(v, v + cols);
        }
    }
    return g;
}

CouplingGraph heavy_hex(std::size_t d) {
    if (d < 2) throw std::invalid_argument("heavy_hex: need at least 2 hexagon rows");
    std::size_t rows = d + 1;
    std::size_t width = 2 * d + 3;
    auto bridged = [&](std::size_t layer, std::size_t col) { return col % 4 == (layer % 2 == 0 ? 0u : 2u); };
    // Keep a row qubit unless it is an unbridged end of the first or last row.
    auto keep = [&](std::size_t row, std::size_t col) {
        if (col != 0 && col != width - 1) return true;
        if (row == 0) return bridged(0, col);
        if (row == rows - 1) return bridged(rows - 2, col);
        return true;
    };
    std::vector<std::vector<std::size_t>> id(rows, std::vector<std::size_t>(width, kInf));
    std::vector<Edge> edges;
    std::size_t next = 0;
    std::vector<std::tuple<std::size_t, std::size_t, std::size_t>> bridges;  // node, layer, col
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < width; ++c) {
            if (keep(r, c)) id[r][c] = next++;
        }
        if (r + 1 < rows) {
            for (std::size_t c = 0; c < width; ++c) {
                if (bridged(r, c)) bridges.emplace_back(next++, r, c);
            }
        }
    }
    CouplingGraph g(next);
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c + 1 < width; ++c) {
            if (id[r][c] != kInf && id[r][c + 1] != kInf) g.add_edge(id[r][c], id[r][c + 1]);
        }
    }
    for (auto [node, layer, col] : bridges) {
        g.add_edge(node, id[layer][col]);
        g.add_edge(node, id[layer + 1][col]);
    }
    return g;
}

SteinerResult steiner_tree(const CouplingGraph& g, std::span<const std::size_t> terminals) {
    std::vector<char> all(g.num_nodes(), 1);
    return steiner_tree(g, terminals, all);
}

SteinerResult steiner_tree(const CouplingGraph& g, std::span<const std::size_t> terminals,
                           std::span<const char> allowed) {
    if (terminals.empty()) throw std::invalid_argument("steiner_tree: no terminals");
    std::size_t n = g.num_nodes();
    std::vector<std::size_t> terms(terminals.begin(), terminals.end());
    std::sort(terms.begin(), terms.end());
    terms.erase(std::unique(terms.begin(), terms.end()), terms.end());
    for (std::size_t t : terms) {
        if (t >= n || !allowed[t]) throw std::invalid_argument("steiner_tree: terminal not in graph");
    }
    SteinerResult result;
    result.terminals = terms;
    if (terms.size() == 1) {
        result.nodes = terms;
        return result;
    }

    // Voronoi regions by multi-source BFS; sources seeded in id order.
    std::vector<std::size_t> owner(n, kInf), dist(n, kInf), parent(n, kInf);
    std::deque<std::size_t> queue;
    for (std::size_t t : terms) {
        owner[t] = t;
        dist[t] = 0;
        queue.push_back(t);
    }
    while (!queue.empty()) {
        std::size_t v = queue.front();
        queue.pop_front();
        for (std::size_t w : g.neighbors(v)) {
            if (allowed[w] && dist[w] == kInf) {
                dist[w] = dist[v] + 1;
                owner[w] = owner[v];
                parent[w] = v;
                queue.push_back(w);
            }
        }
    }

    // Shortest bridging edge between each pair of regions.
    struct Bridge {
        std::size_t weight, a, b, u, v;
        auto key() const { return std::tie(weight, a, b, u, v); }
    };
    std::vector<Bridge> bridges;
    for (auto [u, v] : g.edges()) {
        if (!allowed[u] || !allowed[v] || owner[u] == kInf || owner[v] == kInf) continue;
        if (owner[u] == owner[v]) continue;
        Bridge br{dist[u] + dist[v] + 1, std::min(owner[u], owner[v]), std::max(owner[u], owner[v]), u, v};
        bridges.push_back(br);
    }
    std::sort(bridges.begin(), bridges.end(), [](const Bridge& x, const Bridge& y) { return x.key() < y.key(); });

    // Kruskal over terminal pairs; a pair's first bridge in sorted order is its
    // shortest, so the MST of the distance network falls out directly.
    UnionFind uf(n);
    std::vector<Edge> union_edges;
    std::size_t joined = 1;
    for (const Bridge& br : bridges) {
        if (!uf.unite(br.a, br.b)) continue;
        ++joined;
        union_edges.push_back(ordered(br.u, br.v));
        for (std::size_t w : {br.u, br.v}) {
            while (parent[w] != kInf) {
                union_edges.push_back(ordered(w, parent[w]));
                w = parent[w];
            }
        }
    }
    if (joined != terms.size()) throw DisconnectedGraph("steiner_tree: terminals are not connected");
    std::sort(union_edges.begin(), union_edges.end());
    union_edges.erase(std::unique(union_edges.begin(), union_edges.end()), union_edges.end());

    // Spanning tree of the expanded subgraph, then prune non-terminal leaves.
    UnionFind span_uf(n);
    std::vector<Edge> tree;
    for (const Edge& e : union_edges) {
        if (span_uf.unite(e.first, e.second)) tree.push_back(e);
    }
    std::vector<char> is_term(n, 0);
    for (std::size_t t : terms) is_term[t] = 1;
    bool pruned = true;
    while (pruned) {
        pruned = false;
        std::vector<std::size_t> deg(n, 0);
        for (auto [u, v] : tree) {
            ++deg[u];
            ++deg[v];
        }
        std::vector<Edge> kept;
        for (const Edge& e : tree) {
            bool leaf_u = deg[e.first] == 1 && !is_term[e.first];
            bool leaf_v = deg[e.second] == 1 && !is_term[e.second];
            if (leaf_u || leaf_v) {
                pruned = true;
            } else {
                kept.push_back(e);
            }
        }
        tree = std::move(kept);
    }
    std::vector<std::size_t> nodes = terms;
    for (auto [u, v] : tree) {
        nodes.push_back(u);
        nodes.push_back(v);
    }
    std::sort(nodes.begin(), nodes.end());
    nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
    result.nodes = std::move(nodes);
    result.tree_edges = std::move(tree);
    return result;
}

std::size_t InducedSubgraph::local_of(std::size_t global) const {
    auto it = std::lower_bound(to_global.begin(), to_global.end(), global);
    if (it == to_global.end() || *it != global) throw std::out_of_range("node not in induced subgraph");
    return static_cast<std::size_t>(it - to_global.begin());
}

InducedSubgraph induced_subgraph(const CouplingGraph& g, std::span<const std::size_t> nodes) {
    InducedSubgraph out;
    out.to_global.assign(nodes.begin(), nodes.end());
    std::sort(out.to_global.begin(), out.to_global.end());
    out.to_global.erase(std::unique(out.to_global.begin(), out.to_global.end()), out.to_global.end());
    out.graph = CouplingGraph(out.to_global.size());
    for (std::size_t i = 0; i < out.to_global.size(); ++i) {
        for (std::size_t j = i + 1; j < out.to_global.size(); ++j) {
            if (g.has_edge(out.to_global[i], out.to_global[j])) out.graph.add_edge(i, j);
        }
    }
    return out;
}

std::vector<std::size_t> non_cut_nodes(const CouplingGraph& g) {
    std::vector<char> all(g.num_nodes(), 1);
    return non_cut_nodes(g, all);
}

std::vector<std::size_t> non_cut_nodes(const CouplingGraph& g, std::span<const char> alive) {
    std::size_t n = g.num_nodes();
    std::size_t root = kInf, count = 0;
    for (std::size_t v = 0; v < n; ++v) {
        if (alive[v]) {
            if (root == kInf) root = v;
            ++count;
        }
    }
    if (count == 0) return {};
    // Iterative Tarjan articulation points.
    std::vector<std::size_t> disc(n, kInf), low(n, 0), parent(n, kInf), child_count(n, 0);
    std::vector<char> cut(n, 0);
    std::vector<std::pair<std::size_t, std::size_t>> stack;  // node, next neighbor index
    std::size_t timer = 0, visited = 0;
    disc[root] = low[root] = timer++;
    ++visited;
    stack.emplace_back(root, 0);
    while (!stack.empty()) {
        auto& [v, idx] = stack.back();
        const auto& nb = g.neighbors(v);
        if (idx < nb.size()) {
            std::size_t w = nb[idx++];
            if (!alive[w]) continue;
            if (disc[w] == kInf) {
                parent[w] = v;
                ++child_count[v];
                disc[w] = low[w] = timer++;
                ++visited;
                stack.emplace_back(w, 0);
            } else if (w != parent[v]) {
                low[v] = std::min(low[v], disc[w]);
            }
        } else {
            std::size_t done = v;
            stack.pop_back();
            if (!stack.empty()) {
                std::size_t p = stack.back().first;
                low[p] = std::min(low[p], low[done]);
                if (p != root && low[done] >= disc[p]) cut[p] = 1;
            }
        }
    }
    if (visited != count) throw DisconnectedGraph("non_cut_nodes: graph is disconnected");
    if (child_count[root] > 1) cut[root] = 1;
    std::vector<std::size_t> out;
    for (std::size_t v = 0; v < n; ++v) {
        if (alive[v] && !cut[v]) out.push_back(v);
    }
    return out;
}

CouplingGraph graph_from_text(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::size_t n = 0;
    bool have_header = false;
    std::vector<Edge> edges;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        std::istringstream ls(line);
        std::string first;
        if (!(ls >> first)) continue;
        if (first == "n") {
            if (!(ls >> n)) throw std::invalid_argument("graph file: bad header on line " + std::to_string(line_no));
            have_header = true;
            continue;
        }
        std::size_t u = 0, v = 0;
        try {
            u = std::stoul(first);
        } catch (const std::exception&) {
            throw std::invalid_argument("graph file: bad edge on line " + std::to_string(line_no));
        }
        if (!(ls >> v)) throw std::invalid_argument("graph file: bad edge on line " + std::to_string(line_no));
        edges.emplace_back(u, v);
    }
    if (!have_header) throw std::invalid_argument("graph file: missing 'n <count>' header");
    return CouplingGraph(n, edges);
}

CouplingGraph read_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open graph file " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return graph_from_text(buf.str());
}

std::string graph_to_text(const CouplingGraph& g) {
    std::ostringstream out;
    out << "n " << g.num_nodes() << "\n";
    for (auto [u, v] : g.edges()) out << u << " " << v << "\n";
    return out.str();
}

CouplingGraph parse_arch(const std::string& spec) {
    auto colon = spec.find(':');
    if (colon == std::string::npos) throw std::invalid_argument("arch spec must be kind:value, got '" + spec + "'");
    std::string kind = spec.substr(0, colon), value = spec.substr(colon + 1);
    if (kind == "file") return read_graph_file(value);
    if (kind == "grid") {
        auto x = value.find('x');
        if (x == std::string::npos) throw std::invalid_argument("grid spec must be grid:<rows>x<cols>");
        try {
            return grid_graph(std::stoul(value.substr(0, x)), std::stoul(value.substr(x + 1)));
        } catch (const std::logic_error&) {
            throw std::invalid_argument("arch spec '" + spec + "' needs numbers");
        }
    }
    std::size_t num = 0;
    try {
        num = std::stoul(value);
    } catch (const std::exception&) {
        throw std::invalid_argument("arch spec '" + spec + "' needs a number");
    }
    if (kind == "path") {
        if (num == 0) throw std::invalid_argument("path graph needs at least one node");
        return path_graph(num);
    }
    if (kind == "heavyhex") return heavy_hex(num);
    if (kind == "cycle") return cycle_graph(num);
    if (kind == "star") return star_graph(num);
    if (kind == "complete") return complete_graph(num);
    throw std::invalid_argument("unknown arch kind '" + kind + "'");
}

std::vector<std::size_t> bfs_layout(const CouplingGraph& g) {
    std::vector<std::size_t> order;
    if (g.num_nodes() == 0) return order;
    std::vector<char> seen(g.num_nodes(), 0);
    std::deque<std::size_t> queue{0};
    seen[0] = 1;
    while (!queue.empty()) {
        std::size_t v = queue.front();
        queue.pop_front();
        order.push_back(v);
        for (std::size_t w : g.neighbors(v)) {
            if (!seen[w]) {
                seen[w] = 1;
                queue.push_back(w);
            }
        }
    }
    if (order.size() != g.num_nodes()) throw DisconnectedGraph("bfs_layout: graph is disconnected");
    return order;
}

}  // namespace pauliforge
