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

// Exhaustive minimum-CNOT search for small database tasks. Unsigned letters
// only; the CNOT action is read off dense matrices and local gates are the
// six permutations of X, Y, Z on each node, which cost nothing.

#pragma once

#include <array>
#include <deque>
#include <map>
#include <string>
#include <vector>

#include "oracle.hpp"
#include "pauliforge/clifford_db.hpp"

namespace db_oracle {

class Oracle {
   public:
    Oracle() {
        const std::string l = "IXYZ";
        for (char a : l) {
            for (char b : l) {
                std::string ab{a, b};
                oracle::Mat c = oracle::cnot(2, 0, 1);
                oracle::Mat img = oracle::mul(oracle::mul(c, oracle::letters(ab)), oracle::dagger(c));
                for (char x : l) {
                    for (char y : l) {
                        if (oracle::overlap(oracle::letters({x, y}), img) > 1 - 1e-9) cx_[key(a, b)] = {x, y};
                    }
                }
            }
        }
    }

    /// Fewest CNOTs solving the task, or cap + 1 if more than cap are needed.
    std::size_t optimum(const pauliforge::DbTask& task, std::size_t cap) const {
        std::size_t m = task.graph.num_nodes();
        State start{task.patterns, std::vector<char>(task.patterns.size(), 0)};
        if (update(task, start)) return 0;
        std::map<std::pair<std::vector<std::string>, std::vector<char>>, std::size_t> dist;
        std::deque<State> q;
        dist[{start.pats, start.done}] = 0;
        q.push_back(start);
        std::size_t best = cap + 1;
        while (!q.empty()) {
            State s = q.front();
            q.pop_front();
            std::size_t d = dist[{s.pats, s.done}];
            if (d >= best) break;
            auto push = [&](State nx, std::size_t w) {
                if (d + w > cap) return false;
                if (update(task, nx)) return true;
                auto k = std::make_pair(nx.pats, nx.done);
                auto it = dist.find(k);
                if (it != dist.end() && it->second <= d + w) return false;
                dist[k] = d + w;
                if (w == 0) {
                    q.push_front(nx);
                } else {
                    q.push_back(nx);
                }
                return false;
            };
            for (std::size_t v = 0; v < m; ++v) {
                for (auto swap : {std::pair{'X', 'Z'}, std::pair{'X', 'Y'}}) {
                    State nx = s;
                    for (auto& p : nx.pats) {
                        if (p[v] == swap.first) {
                            p[v] = swap.second;
                        } else if (p[v] == swap.second) {
                            p[v] = swap.first;
                        }
                    }
                    if (push(nx, 0)) best = std::min(best, d);
                }
            }
            for (auto [u, v] : task.graph.edges()) {
                for (auto [c, t] : {std::pair{u, v}, std::pair{v, u}}) {
                    State nx = s;
                    for (auto& p : nx.pats) {
                        auto img = cx_.at(key(p[c], p[t]));
                        p[c] = img[0];
                        p[t] = img[1];
                    }
                    if (push(nx, 1)) best = std::min(best, d + 1);
                }
            }
        }
        return best;
    }

   private:
    struct State {
        std::vector<std::string> pats;
        std::vector<char> done;
    };

    static int key(char a, char b) { return a * 256 + b; }

    static std::size_t weight(const std::string& p) {
        std::size_t w = 0;
        for (char c : p) w += c != 'I';
        return w;
    }

    static bool anticommute(const std::string& a, const std::string& b) {
        int n = 0;
        for (std::size_t i = 0; i < a.size(); ++i) n += a[i] != 'I' && b[i] != 'I' && a[i] != b[i];
        return n % 2 == 1;
    }

    // Marks implemented patterns and reports whether the task is solved.
    static bool update(const pauliforge::DbTask& task, State& s) {
        using pauliforge::DbKind;
        if (task.kind == DbKind::Compress) {
            for (const auto& p : s.pats) {
                if (p[*task.removed] != 'I') return false;
            }
            return true;
        }
        if (task.kind == DbKind::SimultaneousImplement) {
            for (const auto& p : s.pats) {
                if (weight(p) != 1) return false;
            }
            return true;
        }
        bool all = true;
        for (std::size_t j = 0; j < s.pats.size(); ++j) {
            if (s.done[j]) continue;
            bool ok = weight(s.pats[j]) == 1;
            for (std::size_t i = 0; ok && i < j; ++i) {
                if (!s.done[i] && anticommute(s.pats[i], s.pats[j])) ok = false;
            }
            if (ok) {
                s.done[j] = 1;
            } else {
                all = false;
            }
        }
        return all;
    }

    std::map<int, std::array<char, 2>> cx_;
};

}  // namespace db_oracle
