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

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "pauliforge/arch.hpp"
#include "pauliforge/circuit.hpp"

namespace pauliforge {

enum class DbKind { Compress, Implement, SimultaneousImplement };

std::string to_string(DbKind kind);
DbKind db_kind_from_string(const std::string& name);

/// Largest subgraph a database task may live on.
inline constexpr std::size_t kMaxDbNodes = 5;
inline constexpr std::size_t kMaxDbPatterns = 4;

struct DatabaseMiss : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A concrete database query over a small connected graph. Patterns are
/// unsigned letter strings ("XZI") indexed by graph node.
struct DbTask {
    DbKind kind = DbKind::Compress;
    CouplingGraph graph;
    std::vector<std::string> patterns;
    /// Node to empty out; Compress only.
    std::optional<std::size_t> removed;
};

/// Canonical form of a task. Node labels follow the graph6 canonical
/// labeling; every node's letters are relabeled by first appearance.
struct DbKey {
    DbKind kind = DbKind::Compress;
    std::string graph6;
    std::vector<std::string> patterns;
    int removed = -1;

    std::size_t num_nodes() const;
    /// "compress|C^|r0|XX.YI"
    std::string str() const;
    auto operator<=>(const DbKey&) const = default;
};

/// Maps between a task and its key. canonical position i is task node
/// node_of[i]; canonical pattern c is task pattern column_of[c]. `prefix` is
/// the local Clifford layer over task nodes turning task letters into key
/// letters.
struct Canonicalization {
    DbKey key;
    std::vector<std::size_t> node_of;
    std::vector<std::size_t> column_of;
    Circuit prefix;
};

Canonicalization canonicalize(const DbTask& task);
DbTask task_from_key(const DbKey& key);

std::string graph6_encode(const CouplingGraph& g);
CouplingGraph graph6_decode(const std::string& code);

struct DbEntry {
    DbKey key;
    Circuit circuit;
    std::size_t cnot_count = 0;
    std::size_t found_at_budget = 0;
};

struct DbCheck {
    bool ok = false;
    std::string reason;
};

/// Checks a circuit against a task: legal edges, Clifford gates only, and
/// the kind-specific success condition.
DbCheck verify_task(const DbTask& task, const Circuit& circuit);
DbCheck verify_entry(const DbEntry& entry);

/// Random search: each attempt appends up to K steps of (random edge, random
/// 1-qubit Clifford on both endpoints, CNOT in a random direction) and tests
/// every prefix. Keeps the cheapest verified prefix.
std::optional<DbEntry> generate_entry(const DbKey& key, std::size_t max_cnots, std::size_t attempts,
                                      std::uint64_t seed);

/// The 24 single-qubit Cliffords modulo phase as H/S words, shortest first.
const std::vector<std::vector<GateKind>>& single_qubit_cliffords();

struct DbConfig {
    std::uint64_t seed = 2026;
    std::size_t attempts = 200000;
    bool generate_on_miss = true;
};

/// Initial K for a subgraph with `nodes` nodes.
std::size_t initial_budget(std::size_t nodes);
/// Budgets tried in order for a subgraph with `nodes` nodes.
std::vector<std::size_t> budget_schedule(std::size_t nodes);

struct LookupResult {
    Circuit circuit;  // over task nodes
    std::size_t cnots = 0;
};

class CliffordDb {
   public:
    explicit CliffordDb(DbConfig config = {}) : config_(config) {}
    CliffordDb(const CliffordDb& other);
    CliffordDb& operator=(const CliffordDb& other);

    const DbConfig& config() const { return config_; }
    void set_config(const DbConfig& config) { config_ = config; }

    std::optional<DbEntry> find(const DbKey& key) const;
    /// Keeps the cheaper entry; equal costs keep the smaller serialized circuit.
    void insert(const DbEntry& entry);
    /// Generates a missing entry when allowed. Throws DatabaseMiss otherwise,
    /// or when the search fails.
    DbEntry get_or_generate(const DbKey& key);

    LookupResult lookup(const DbTask& task);

    std::size_t size() const;
    std::size_t generated_on_demand() const;
    /// Entries sorted by key.
    std::vector<DbEntry> entries() const;

    std::string to_json() const;
    /// Parses and verifies every entry; throws std::runtime_error on a bad one.
    static CliffordDb from_json(const std::string& text, DbConfig config = {});
    void save(const std::string& path) const;
    static CliffordDb load(const std::string& path, DbConfig config = {});

   private:
    DbConfig config_;
    mutable std::shared_mutex mutex_;
    std::map<DbKey, DbEntry> entries_;
    std::unordered_map<std::string, Canonicalization> canon_cache_;
    std::size_t generated_ = 0;
};

/// Connected graphs used for database builds: path2, path3, path4, claw,
/// triangle, paw, cycle4, diamond and K4.
std::vector<CouplingGraph> standard_shapes();

/// Every canonical key of the given kind on `shape` with `num_patterns`
/// patterns. Compress enumerates every removed node; identity patterns are
/// skipped for the implementation kinds.
std::vector<DbKey> enumerate_keys(const CouplingGraph& shape, DbKind kind, std::size_t num_patterns);

/// The keys a database build enumerates: on every standard shape with at
/// most max_nodes nodes, Compress with 1..m-1 patterns, Implement with 1..3
/// and, on two nodes, SimultaneousImplement with 1..4.
std::vector<DbKey> enumerate_standard_keys(std::size_t max_nodes);

/// Generates entries for `keys` in parallel and merges them into `db`.
/// Returns the number of keys without a solution.
std::size_t build_entries(CliffordDb& db, const std::vector<DbKey>& keys);

}  // namespace pauliforge
