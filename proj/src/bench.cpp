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

#include "pauliforge/bench.hpp"

#include <algorithm>
#include <chrono>
#include <exception>
#include <map>
#include <random>
#include <sstream>

#include <json.hpp>

#include "pauliforge/clifford_synth.hpp"
#include "pauliforge/pauli_synth.hpp"
#include "pauliforge/verify.hpp"

namespace pauliforge {

namespace {

using json = nlohmann::json;

std::uint64_t splitmix(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

std::uint64_t instance_seed(std::uint64_t seed, std::size_t size, std::size_t count, MappingKind mapping) {
    std::uint64_t h = splitmix(seed);
    h = splitmix(h ^ size);
    h = splitmix(h ^ (count << 1));
    return splitmix(h ^ static_cast<std::uint64_t>(mapping));
}

std::vector<std::size_t> distinct_indices(std::mt19937_64& rng, std::size_t range, std::size_t k) {
    std::vector<std::size_t> out;
    while (out.size() < k) {
        std::size_t v = std::uniform_int_distribution<std::size_t>(0, range - 1)(rng);
        if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
    }
    return out;
}

bool is_clifford_family(GeneratorKind g) { return g == GeneratorKind::RandomClifford; }

struct Instance {
    std::size_t size, count;
    MappingKind mapping;
    std::uint64_t seed;
};

struct Outcome {
    Circuit circuit;
    bool verified = false;
    double seconds = 0.0;
};

Outcome run_pauli_method(const std::string& method, const std::vector<PauliString>& targets, const CouplingGraph& g,
                         CliffordDb& db, std::uint64_t seed) {
    SynthesisConfig cfg;
    cfg.seed = seed;
    if (method == "ss") {
        cfg.method = SynthMethod::SS;
    } else if (method == "ss-ordered") {
        cfg.method = SynthMethod::SS;
        cfg.order_for_cancellation = true;
    } else if (method == "ls") {
        cfg.method = SynthMethod::LS;
    } else if (method == "mpls") {
        cfg.method = SynthMethod::MPLS;
    } else if (method == "mpls-mincnot") {
        cfg.method = SynthMethod::MPLS;
        cfg.leaf_choice = LeafChoice::MinCnot;
    } else if (method == "mpr") {
        cfg = SynthesisConfig::mpr_preset();
        cfg.seed = seed;
    } else {
        throw std::invalid_argument("unknown Pauli method '" + method + "'");
    }
    auto r = synthesize(targets, g, cfg, db);
    Outcome out;
    out.seconds = r.report.wall_seconds;
    out.verified = pauli_network_sound(r.circuit, targets, true).pass;
    out.circuit = std::move(r.circuit);
    return out;
}

Outcome run_clifford_method(const std::string& method, const Cer& source, const CouplingGraph& g, CliffordDb& db) {
    auto start = std::chrono::steady_clock::now();
    auto r = synthesize_clifford({source, g, clifford_variant_from_string(method)}, &db);
    Outcome out;
    out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    out.verified = tableau_equal_up_to_permutation(source, Cer::from_circuit(r.circuit), r.permutation).pass;
    out.circuit = std::move(r.circuit);
    return out;
}

std::vector<SweepRow> run_instance(const ExperimentSpec& spec, const Instance& inst, const CouplingGraph* shared,
                                   CliffordDb& db) {
    CouplingGraph g = shared ? *shared : path_graph(inst.size);
    std::uint64_t iseed = instance_seed(inst.seed, inst.size, inst.count, inst.mapping);
    std::vector<PauliString> targets;
    Cer source;
    switch (spec.generator) {
        case GeneratorKind::Random4Majorana:
        case GeneratorKind::DoubleExcitation: {
            if (inst.size > g.num_nodes()) throw std::invalid_argument("more modes than architecture qubits");
            auto t = spec.generator == GeneratorKind::Random4Majorana
                         ? gen_ansatz(inst.size, inst.count, inst.mapping, iseed)
                         : gen_double_excitation(inst.size, inst.mapping, iseed);
            std::vector<std::size_t> layout;
            if (shared) {
                layout = bfs_layout(g);
                layout.resize(inst.size);
            }
            targets = embed_targets(paulis_of(t), layout, g.num_nodes());
            break;
        }
        case GeneratorKind::RandomClifford:
            if (inst.size != g.num_nodes()) throw std::invalid_argument("Clifford size must match the architecture");
            source = Cer::from_circuit(random_clifford_circuit(inst.size, inst.count, iseed));
            break;
    }
    std::vector<SweepRow> rows;
    for (const auto& method : spec.methods) {
        Outcome o = is_clifford_family(spec.generator) ? run_clifford_method(method, source, g, db)
                                                      : run_pauli_method(method, targets, g, db, inst.seed);
        if (!o.verified) {
            throw VerificationFailure("verification failed: method " + method + ", size " + std::to_string(inst.size) +
                                      ", count " + std::to_string(inst.count) + ", seed " + std::to_string(inst.seed));
        }
        SweepRow r;
        r.size = inst.size;
        r.count = inst.count;
        r.mapping = inst.mapping;
        r.method = method;
        r.seed = inst.seed;
        r.total_cnots = o.circuit.cnot_count();
        r.cnots_excluding_final_clifford = o.circuit.cnot_count_excluding_final_clifford();
        r.depth = o.circuit.depth();
        r.verified = true;
        r.wall_seconds = o.seconds;
        rows.push_back(r);
    }
    return rows;
}

MappingKind mapping_of(const json& j) { return mapping_from_string(j.get<std::string>()); }

}  // namespace

std::string to_string(GeneratorKind g) {
    switch (g) {
        case GeneratorKind::Random4Majorana:
            return "random4majorana";
        case GeneratorKind::DoubleExcitation:
            return "double_excitation";
        case GeneratorKind::RandomClifford:
            return "random_clifford";
    }
    return "?";
}

GeneratorKind generator_from_string(const std::string& name) {
    for (auto g : {GeneratorKind::Random4Majorana, GeneratorKind::DoubleExcitation, GeneratorKind::RandomClifford}) {
        if (to_string(g) == name) return g;
    }
    throw std::invalid_argument("unknown generator '" + name + "'");
}

const std::vector<std::string>& pauli_methods() {
    static const std::vector<std::string> m{"ss", "ss-ordered", "ls", "mpls", "mpls-mincnot", "mpr"};
    return m;
}

const std::vector<std::string>& clifford_methods() {
    static const std::vector<std::string> m{"paulipair", "paulipair-uo", "mpcs", "mpcs-uo"};
    return m;
}

ExperimentSpec experiment_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw FormatError(std::string("experiment: ") + e.what());
    }
    ExperimentSpec s;
    try {
        s.generator = generator_from_string(j.at("generator").get<std::string>());
        if (j.contains("arch")) s.arch = j.at("arch").get<std::string>();
        s.sizes = j.at("sizes").get<std::vector<std::size_t>>();
        if (j.contains("counts")) s.counts = j.at("counts").get<std::vector<std::size_t>>();
        if (j.contains("mappings")) {
            s.mappings.clear();
            for (const auto& m : j.at("mappings")) s.mappings.push_back(mapping_of(m));
        }
        s.methods = j.at("methods").get<std::vector<std::string>>();
        if (j.at("seeds").is_number()) {
            for (std::uint64_t i = 0; i < j.at("seeds").get<std::uint64_t>(); ++i) s.seeds.push_back(i);
        } else {
            s.seeds = j.at("seeds").get<std::vector<std::uint64_t>>();
        }
    } catch (const json::exception& e) {
        throw FormatError(std::string("experiment: ") + e.what());
    } catch (const std::invalid_argument& e) {
        throw FormatError(std::string("experiment: ") + e.what());
    }
    const auto& allowed = is_clifford_family(s.generator) ? clifford_methods() : pauli_methods();
    for (const auto& m : s.methods) {
        if (std::find(allowed.begin(), allowed.end(), m) == allowed.end())
            throw FormatError("experiment: method '" + m + "' does not fit generator " + to_string(s.generator));
    }
    if (s.sizes.empty() || s.methods.empty() || s.seeds.empty() || s.counts.empty() || s.mappings.empty())
        throw FormatError("experiment: sizes, counts, mappings, methods and seeds must be non-empty");
    return s;
}

std::string experiment_to_json(const ExperimentSpec& s) {
    json maps = json::array();
    for (auto m : s.mappings) maps.push_back(to_string(m));
    json j = {{"generator", to_string(s.generator)}, {"arch", s.arch},       {"sizes", s.sizes},
              {"counts", s.counts},                  {"mappings", maps},     {"methods", s.methods},
              {"seeds", s.seeds}};
    return j.dump(1) + "\n";
}

std::vector<Target> gen_ansatz(std::size_t n_modes, std::size_t n_paulis, MappingKind mapping, std::uint64_t seed) {
    if (n_paulis > 0 && n_modes < 2) throw std::invalid_argument("gen_ansatz: need at least 2 modes");
    std::mt19937_64 rng(seed);
    FermionMapping fm{mapping, n_modes};
    std::vector<Target> out;
    for (std::size_t l = 0; l < n_paulis; ++l) {
        auto idx = distinct_indices(rng, 2 * n_modes, 4);
        Target t;
        t.pauli = majorana_product(fm, idx).pauli;
        t.symbol = "theta_" + std::to_string(l);
        out.push_back(std::move(t));
    }
    return out;
}

std::vector<Target> gen_double_excitation(std::size_t n_modes, MappingKind mapping, std::uint64_t seed,
                                          std::vector<std::size_t>* modes) {
    if (n_modes < 4) throw std::invalid_argument("gen_double_excitation: need at least 4 modes");
    std::mt19937_64 rng(seed);
    auto m = distinct_indices(rng, n_modes, 4);
    if (modes) *modes = m;
    std::vector<Target> out;
    for (const auto& term : double_excitation_terms({mapping, n_modes}, m[0], m[1], m[2], m[3])) {
        Target t;
        t.pauli = term.coefficient < 0 ? term.pauli.negated() : term.pauli;
        t.symbol = "theta_0/8";
        out.push_back(std::move(t));
    }
    return out;
}

SweepReport run_sweep(const ExperimentSpec& spec, CliffordDb& db, bool parallel) {
    std::optional<CouplingGraph> shared;
    if (spec.arch != "path") shared = parse_arch(spec.arch);
    std::vector<Instance> jobs;
    for (auto size : spec.sizes)
        for (auto count : spec.counts)
            for (auto mapping : spec.mappings)
                for (auto seed : spec.seeds) jobs.push_back({size, count, mapping, seed});

    std::vector<std::vector<SweepRow>> results(jobs.size());
    std::vector<std::exception_ptr> errors(jobs.size());
    const CouplingGraph* g = shared ? &*shared : nullptr;
    const long n_jobs = static_cast<long>(jobs.size());
#pragma omp parallel for schedule(dynamic, 1) if (parallel)
    for (long i = 0; i < n_jobs; ++i) {
        try {
            results[i] = run_instance(spec, jobs[i], g, db);
        } catch (...) {
            errors[i] = std::current_exception();
        }
    }
    for (auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }

    SweepReport report;
    report.spec = spec;
    for (auto& r : results) report.rows.insert(report.rows.end(), r.begin(), r.end());
    for (auto size : spec.sizes) {
        for (auto count : spec.counts) {
            for (auto mapping : spec.mappings) {
                for (const auto& method : spec.methods) {
                    SweepAggregate a{size, count, mapping, method};
                    double sum = 0, sum_ex = 0;
                    for (const auto& r : report.rows) {
                        if (r.size != size || r.count != count || r.mapping != mapping || r.method != method) continue;
                        a.min_cnots = a.instances == 0 ? r.total_cnots : std::min(a.min_cnots, r.total_cnots);
                        a.max_cnots = std::max(a.max_cnots, r.total_cnots);
                        sum += static_cast<double>(r.total_cnots);
                        sum_ex += static_cast<double>(r.cnots_excluding_final_clifford);
                        ++a.instances;
                    }
                    if (a.instances) {
                        a.mean_cnots = sum / static_cast<double>(a.instances);
                        a.mean_cnots_excluding_final_clifford = sum_ex / static_cast<double>(a.instances);
                    }
                    report.aggregates.push_back(a);
                }
            }
        }
    }
    return report;
}

const SweepAggregate* find_aggregate(const SweepReport& report, std::size_t size, std::size_t count,
                                     MappingKind mapping, const std::string& method) {
    for (const auto& a : report.aggregates) {
        if (a.size == size && a.count == count && a.mapping == mapping && a.method == method) return &a;
    }
    return nullptr;
}

std::string sweep_to_json(const SweepReport& report, bool include_timing) {
    json rows = json::array(), aggs = json::array();
    for (const auto& r : report.rows) {
        json j = {{"size", r.size},
                  {"count", r.count},
                  {"mapping", to_string(r.mapping)},
                  {"method", r.method},
                  {"seed", r.seed},
                  {"total_cnots", r.total_cnots},
                  {"cnots_excluding_final_clifford", r.cnots_excluding_final_clifford},
                  {"depth", r.depth},
                  {"verified", r.verified}};
        if (include_timing) j["wall_seconds"] = r.wall_seconds;
        rows.push_back(j);
    }
    for (const auto& a : report.aggregates) {
        aggs.push_back({{"size", a.size},
                        {"count", a.count},
                        {"mapping", to_string(a.mapping)},
                        {"method", a.method},
                        {"instances", a.instances},
                        {"mean_cnots", a.mean_cnots},
                        {"min_cnots", a.min_cnots},
                        {"max_cnots", a.max_cnots},
                        {"mean_cnots_excluding_final_clifford", a.mean_cnots_excluding_final_clifford}});
    }
    json out = {{"spec", json::parse(experiment_to_json(report.spec))}, {"rows", rows}, {"aggregates", aggs}};
    return out.dump(1) + "\n";
}

std::string sweep_to_csv(const SweepReport& report, bool include_timing) {
    std::ostringstream s;
    s << "generator,size,count,mapping,method,seed,total_cnots,cnots_excluding_final_clifford,depth,verified";
    if (include_timing) s << ",wall_seconds";
    s << "\n";
    for (const auto& r : report.rows) {
        s << to_string(report.spec.generator) << ',' << r.size << ',' << r.count << ',' << to_string(r.mapping) << ','
          << r.method << ',' << r.seed << ',' << r.total_cnots << ',' << r.cnots_excluding_final_clifford << ','
          << r.depth << ',' << (r.verified ? 1 : 0);
        if (include_timing) s << ',' << r.wall_seconds;
        s << "\n";
    }
    return s.str();
}

}  // namespace pauliforge
