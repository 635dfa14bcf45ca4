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

// pauliforge command line driver.

#include <CLI11.hpp>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <json.hpp>
#include <random>

#include "pauliforge/bench.hpp"
#include "pauliforge/clifford_synth.hpp"
#include "pauliforge/io.hpp"
#include "pauliforge/pauli_synth.hpp"
#include "pauliforge/verify.hpp"

#ifndef PAULIFORGE_DEFAULT_DB
#define PAULIFORGE_DEFAULT_DB "data/clifford_db.json"
#endif

using namespace pauliforge;
using json = nlohmann::json;

namespace {

std::string resolve_db_path(const std::string& flag) {
    if (!flag.empty()) return flag;
    if (const char* env = std::getenv("PAULIFORGE_DB"); env && *env) return env;
    return PAULIFORGE_DEFAULT_DB;
}

CliffordDb open_db(const std::string& flag, bool quiet = false) {
    std::string path = resolve_db_path(flag);
    if (std::filesystem::exists(path)) return CliffordDb::load(path);
    if (!quiet) std::cerr << "note: database '" << path << "' not found, generating entries on demand\n";
    return CliffordDb();
}

std::vector<std::size_t> layout_for(const std::string& kind, const CouplingGraph& g, std::size_t n_logical) {
    if (kind == "identity") return {};
    if (kind == "bfs") {
        auto l = bfs_layout(g);
        l.resize(n_logical);
        return l;
    }
    throw CLI::ValidationError("--layout", "must be identity or bfs");
}

int cmd_db_build(const std::string& out, std::size_t max_nodes, std::size_t attempts, std::uint64_t seed,
                 const std::vector<std::string>& harvest) {
    DbConfig cfg;
    cfg.attempts = attempts;
    cfg.seed = seed;
    CliffordDb db(cfg);
    auto keys = enumerate_standard_keys(max_nodes);
    std::size_t missing = build_entries(db, keys);
    std::cerr << "enumerated " << keys.size() << " keys, " << missing << " without a solution\n";
    for (const auto& path : harvest) {
        auto spec = experiment_from_json(read_text_file(path));
        run_sweep(spec, db, true);
        std::cerr << "harvested " << path << ", database now " << db.size() << " entries\n";
    }
    db.save(out);
    std::cout << "wrote " << db.size() << " entries to " << out << "\n";
    return 0;
}

int cmd_db_verify(const std::string& flag) {
    std::string path = resolve_db_path(flag);
    auto db = CliffordDb::from_json(read_text_file(path));
    std::size_t bad = 0;
    for (const auto& e : db.entries()) {
        auto c = verify_entry(e);
        if (!c.ok) {
            std::cout << "FAIL " << e.key.str() << ": " << c.reason << "\n";
            ++bad;
        }
    }
    std::cout << db.size() << " entries, " << bad << " failing\n";
    return bad ? 1 : 0;
}

int cmd_gen(const std::string& generator, std::size_t modes, std::size_t count, const std::string& mapping,
            std::uint64_t seed, const std::string& out) {
    auto g = generator_from_string(generator);
    std::vector<Target> t;
    if (g == GeneratorKind::Random4Majorana) {
        t = gen_ansatz(modes, count, mapping_from_string(mapping), seed);
    } else if (g == GeneratorKind::DoubleExcitation) {
        t = gen_double_excitation(modes, mapping_from_string(mapping), seed);
    } else {
        throw CLI::ValidationError("--generator", "gen writes Pauli targets; use cliff-synth --random for Cliffords");
    }
    std::string text = targets_to_json(t);
    if (out.empty()) {
        std::cout << text;
    } else {
        write_text_file(out, text);
    }
    return 0;
}

struct SynthArgs {
    std::string method = "mpls", arch, db, targets, report, qasm, circuit, reset, leaf = "random", layout = "identity";
    std::uint64_t seed = 0;
    std::size_t k = 0, k_prime = 8;
    bool no_immediate = false, order = false, timing = false, no_resynth = false;
};

int cmd_synth(const SynthArgs& a) {
    auto g = parse_arch(a.arch);
    auto targets = targets_from_json(read_text_file(a.targets));
    if (targets.empty()) throw std::invalid_argument("targets file is empty");
    std::size_t n_logical = targets.front().pauli.num_qubits();
    auto embedded = embed_targets(paulis_of(targets), layout_for(a.layout, g, n_logical), g.num_nodes());
    for (std::size_t i = 0; i < targets.size(); ++i) targets[i].pauli = embedded[i];

    SynthesisConfig cfg;
    cfg.method = synth_method_from_string(a.method);
    if (cfg.method == SynthMethod::MPR) cfg = SynthesisConfig::mpr_preset();
    if (a.k) cfg.k_max = a.k;
    cfg.k_prime_max = a.k_prime;
    if (!a.reset.empty()) cfg.reset_policy = reset_policy_from_string(a.reset);
    cfg.leaf_choice = leaf_choice_from_string(a.leaf);
    cfg.immediate_implement = !a.no_immediate;
    cfg.resynthesize_reset = !a.no_resynth;
    cfg.order_for_cancellation = a.order;
    cfg.seed = a.seed;
    if (cfg.k_max == 0 || cfg.k_max > kMaxDbPatterns) throw std::invalid_argument("--k must be between 1 and 4");

    auto db = open_db(a.db, true);
    auto r = synthesize(embedded, g, cfg, db);
    bool require_reset = cfg.reset_policy != ResetPolicy::None || cfg.method == SynthMethod::SS;
    auto sound = pauli_network_sound(r.circuit, embedded, require_reset);
    if (!sound.pass) {
        std::cerr << "error: synthesized circuit failed verification: " << sound.message << "\n";
        return 2;
    }
    std::string report = report_to_json(r.report, sound.pass, a.timing);
    if (a.report.empty()) {
        std::cout << report;
    } else {
        write_text_file(a.report, report);
    }
    if (!a.circuit.empty()) write_text_file(a.circuit, circuit_to_json(r.circuit));
    if (!a.qasm.empty()) {
        auto q = circuit_to_qasm(r.circuit, targets);
        write_text_file(a.qasm, q.qasm);
        write_text_file(a.qasm + ".params.json", q.sidecar);
    }
    return 0;
}

struct CliffArgs {
    std::string tableau, arch, variant = "mpcs", db, out, report;
    std::vector<std::size_t> random;
    std::size_t k = 1;
    bool timing = false;
};

int cmd_cliff_synth(const CliffArgs& a) {
    auto g = parse_arch(a.arch);
    Cer source;
    if (!a.tableau.empty()) {
        source = tableau_from_json(read_text_file(a.tableau));
    } else if (a.random.size() == 2) {
        source = Cer::from_circuit(random_clifford_circuit(g.num_nodes(), a.random[0], a.random[1]));
    } else {
        throw CLI::ValidationError("cliff-synth", "give --tableau or --random K SEED");
    }
    auto db = open_db(a.db, true);
    auto start = std::chrono::steady_clock::now();
    auto r = synthesize_clifford({source, g, clifford_variant_from_string(a.variant), a.k}, &db);
    double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    auto check = tableau_equal_up_to_permutation(source, Cer::from_circuit(r.circuit), r.permutation);
    if (!check.pass) {
        std::cerr << "error: Clifford synthesis failed verification: " << check.message << "\n";
        return 2;
    }
    json rep = {{"variant", a.variant},
                {"cnots", r.circuit.cnot_count()},
                {"depth", r.circuit.depth()},
                {"permutation", r.permutation},
                {"removal_order", r.removal_order},
                {"verified", true}};
    if (a.timing) rep["wall_seconds"] = seconds;
    if (a.report.empty()) {
        std::cout << rep.dump(1) << "\n";
    } else {
        write_text_file(a.report, rep.dump(1) + "\n");
    }
    if (!a.out.empty()) write_text_file(a.out, circuit_to_json(r.circuit));
    return 0;
}

int cmd_verify(const std::string& circuit_path, const std::string& targets_path, bool reset, std::uint64_t seed) {
    Circuit c = circuit_path.size() > 5 && circuit_path.substr(circuit_path.size() - 5) == ".qasm"
                    ? circuit_from_qasm(read_text_file(circuit_path))
                    : circuit_from_json(read_text_file(circuit_path));
    auto targets = paulis_of(targets_from_json(read_text_file(targets_path)));
    auto sound = pauli_network_sound(c, targets, reset);
    json out = {{"pauli_network_sound", sound.pass}, {"message", sound.message}};
    bool ok = sound.pass;
    if (c.num_qubits() <= kMaxDenseQubits && !targets.empty()) {
        std::mt19937_64 rng(seed);
        std::uniform_real_distribution<double> d(-3.0, 3.0);
        std::vector<double> angles(targets.size());
        for (auto& x : angles) x = d(rng);
        auto eq = equivalent_up_to_phase(pauli_exponential_product(targets, angles), dense_unitary(c, angles));
        out["dense_equivalent"] = eq.pass;
        out["max_deviation"] = eq.max_deviation;
        ok = ok && (!reset || eq.pass);
    }
    std::cout << out.dump(1) << "\n";
    return ok ? 0 : 1;
}

int cmd_bench(const std::string& spec_path, const std::string& out, const std::string& csv, const std::string& dbflag,
              bool serial, bool timing) {
    auto spec = experiment_from_json(read_text_file(spec_path));
    auto db = open_db(dbflag, true);
    auto report = run_sweep(spec, db, !serial);
    write_text_file(out, sweep_to_json(report, timing));
    if (!csv.empty()) write_text_file(csv, sweep_to_csv(report, timing));
    for (const auto& a : report.aggregates) {
        std::cout << to_string(a.mapping) << " size=" << a.size << " count=" << a.count << " " << a.method
                  << " mean=" << a.mean_cnots << " min=" << a.min_cnots << " max=" << a.max_cnots << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"pauliforge: architecture-aware Pauli network and Clifford synthesis"};
    app.require_subcommand(1);

    auto* db = app.add_subcommand("db", "Build or check a Clifford database");
    db->require_subcommand(1);
    std::string db_out = "clifford_db.json", db_path;
    std::size_t max_nodes = 3, attempts = 200000;
    std::uint64_t db_seed = 2026;
    std::vector<std::string> harvest;
    auto* build = db->add_subcommand("build", "Enumerate small tasks and search circuits for them");
    std::string shapes = "auto";
    build->add_option("--shapes", shapes, "Shape set; 'auto' is the standard shapes up to --max-nodes")
        ->check(CLI::IsMember({"auto"}));
    build->add_option("--out", db_out, "Output JSON path");
    build->add_option("--max-nodes", max_nodes, "Largest shape to enumerate")->check(CLI::Range(2, 4));
    build->add_option("--attempts", attempts, "Random search attempts per budget");
    build->add_option("--seed", db_seed, "Search seed");
    build->add_option("--harvest", harvest, "Experiment specs whose lookups are added to the database");
    auto* dbverify = db->add_subcommand("verify", "Re-check every entry");
    dbverify->add_option("path,--db", db_path, "Database path (default: $PAULIFORGE_DB or the bundled file)");

    auto* gen = app.add_subcommand("gen", "Write a random target list");
    std::string generator = "random4majorana", mapping = "jw", gen_out;
    std::size_t modes = 8, count = 10;
    std::uint64_t gen_seed = 0;
    gen->add_option("--generator", generator, "random4majorana or double_excitation");
    gen->add_option("--modes", modes, "Fermionic modes (= qubits)");
    gen->add_option("--count", count, "Number of Paulis");
    gen->add_option("--mapping", mapping, "jw or bk");
    gen->add_option("--seed", gen_seed, "Seed");
    gen->add_option("--out", gen_out, "Output path (default: stdout)");

    SynthArgs sa;
    auto* synth = app.add_subcommand("synth", "Synthesize a Pauli network");
    synth->add_option("--method", sa.method, "ss, ls, mpls or mpr");
    synth->add_option("--arch", sa.arch, "path:<n>, heavyhex:<d>, grid:<r>x<c>, file:<path> ...")->required();
    synth->add_option("--targets", sa.targets, "Targets JSON")->required();
    synth->add_option("--db", sa.db, "Database path");
    synth->add_option("--seed", sa.seed, "Seed for leaf choices");
    synth->add_option("--report", sa.report, "Report JSON (default: stdout)");
    synth->add_option("--qasm", sa.qasm, "OpenQASM 2 output; parameters go to <path>.params.json");
    synth->add_option("--circuit", sa.circuit, "Circuit JSON output");
    synth->add_option("--k", sa.k, "Generator cap per sublist (1-4)");
    synth->add_option("--k-prime", sa.k_prime, "Sublist length cap");
    synth->add_option("--reset", sa.reset, "at-end, per-list or none");
    synth->add_option("--leaf", sa.leaf, "random or min-cnot");
    synth->add_option("--layout", sa.layout, "identity or bfs");
    synth->add_flag("--no-immediate", sa.no_immediate, "Disable immediate implementation");
    synth->add_flag("--no-resynth", sa.no_resynth, "Reset with the plain inverse only");
    synth->add_flag("--order", sa.order, "SS: reorder commuting runs for cancellation");
    synth->add_flag("--timing", sa.timing, "Include wall time in the report");

    CliffArgs ca;
    auto* cliff = app.add_subcommand("cliff-synth", "Synthesize a Clifford from its tableau");
    cliff->add_option("--tableau", ca.tableau, "Tableau JSON with z_rows and x_rows");
    cliff->add_option("--random", ca.random, "K SEED: random circuit with K CNOTs")->expected(2);
    cliff->add_option("--arch", ca.arch, "Architecture")->required();
    cliff->add_option("--variant", ca.variant, "paulipair, paulipair-uo, mpcs or mpcs-uo");
    cliff->add_option("--k", ca.k, "Logical qubits settled per round (1 or 2)");
    cliff->add_option("--db", ca.db, "Database path");
    cliff->add_option("--out", ca.out, "Circuit JSON output");
    cliff->add_option("--report", ca.report, "Report JSON (default: stdout)");
    cliff->add_flag("--timing", ca.timing, "Include wall time in the report");

    auto* verify = app.add_subcommand("verify", "Check a circuit against its targets");
    std::string v_circuit, v_targets;
    bool v_reset = false;
    std::uint64_t v_seed = 0;
    verify->add_option("--circuit", v_circuit, "Circuit JSON or .qasm")->required();
    verify->add_option("--targets", v_targets, "Targets JSON")->required();
    verify->add_flag("--reset", v_reset, "Require the Clifford part to be the identity");
    verify->add_option("--seed", v_seed, "Seed for the random angles of the dense check");

    auto* bench = app.add_subcommand("bench", "Run an experiment grid");
    std::string b_spec, b_out, b_csv, b_db;
    bool b_serial = false, b_timing = false;
    bench->add_option("--spec", b_spec, "Experiment JSON")->required();
    bench->add_option("--out", b_out, "Report JSON")->required();
    bench->add_option("--csv", b_csv, "Optional CSV output");
    bench->add_option("--db", b_db, "Database path");
    bench->add_flag("--serial", b_serial, "Run instances on one thread");
    bench->add_flag("--timing", b_timing, "Include wall times");

    CLI11_PARSE(app, argc, argv);
    try {
        if (build->parsed()) return cmd_db_build(db_out, max_nodes, attempts, db_seed, harvest);
        if (dbverify->parsed()) return cmd_db_verify(db_path);
        if (gen->parsed()) return cmd_gen(generator, modes, count, mapping, gen_seed, gen_out);
        if (synth->parsed()) return cmd_synth(sa);
        if (cliff->parsed()) return cmd_cliff_synth(ca);
        if (verify->parsed()) return cmd_verify(v_circuit, v_targets, v_reset, v_seed);
        if (bench->parsed()) return cmd_bench(b_spec, b_out, b_csv, b_db, b_serial, b_timing);
    } catch (const CLI::Error& e) {
        return app.exit(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
