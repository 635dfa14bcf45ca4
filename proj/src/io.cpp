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

#include "pauliforge/io.hpp"

#include <cstdio>
#include <fstream>
#include <regex>
#include <sstream>

#include <json.hpp>

namespace pauliforge {

namespace {

using json = nlohmann::json;

json parse(const std::string& text, const char* what) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw FormatError(std::string(what) + ": " + e.what());
    }
}

std::string fmt_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

json op_to_json(const Op& op) {
    if (op.is_rotation()) return json::array({"rot", std::string(1, op.axis), op.q0, op.sign, op.target});
    if (op.is_cnot()) return json::array({"cx", op.q0, op.q1});
    return json::array({gate_name(op.kind), op.q0});
}

Op op_from_json(const json& j) {
    if (!j.is_array() || j.empty()) throw FormatError("circuit element must be a non-empty array");
    auto name = j.at(0).get<std::string>();
    if (name == "rot") {
        if (j.size() != 5) throw FormatError("rot needs axis, qubit, sign and target");
        auto axis = j.at(1).get<std::string>();
        if (axis.size() != 1) throw FormatError("rotation axis must be one letter");
        return make_rotation(axis[0], j.at(2).get<std::size_t>(), j.at(3).get<int>(), j.at(4).get<std::size_t>());
    }
    GateKind k;
    try {
        k = gate_from_name(name);
    } catch (const std::exception& e) {
        throw FormatError(e.what());
    }
    if (k == GateKind::CX) {
        if (j.size() != 3) throw FormatError("cx needs two qubits");
        return make_gate(k, j.at(1).get<std::size_t>(), j.at(2).get<std::size_t>());
    }
    if (j.size() != 2) throw FormatError(name + " needs one qubit");
    return make_gate(k, j.at(1).get<std::size_t>());
}

}  // namespace

std::string Target::angle_name(std::size_t index) const {
    if (!symbol.empty()) return symbol;
    if (value) return fmt_double(*value);
    return "theta_" + std::to_string(index);
}

std::vector<PauliString> paulis_of(const std::vector<Target>& targets) {
    std::vector<PauliString> out;
    out.reserve(targets.size());
    for (const auto& t : targets) out.push_back(t.pauli);
    return out;
}

std::vector<Target> targets_from_json(const std::string& text) {
    json j = parse(text, "targets");
    if (j.is_object() && j.contains("targets")) j = j.at("targets");
    if (!j.is_array()) throw FormatError("targets must be a JSON array");
    std::vector<Target> out;
    std::size_t width = 0;
    for (const auto& e : j) {
        Target t;
        try {
            t.pauli = PauliString::from_str(e.at("pauli").get<std::string>());
        } catch (const json::exception& ex) {
            throw FormatError(std::string("target needs a pauli string: ") + ex.what());
        } catch (const std::invalid_argument& ex) {
            throw FormatError(ex.what());
        }
        if (!t.pauli.is_hermitian()) throw FormatError("target " + std::to_string(out.size()) + " is not Hermitian");
        if (out.empty()) width = t.pauli.num_qubits();
        if (t.pauli.num_qubits() != width) throw FormatError("targets have different widths");
        if (e.contains("angle")) {
            const auto& a = e.at("angle");
            if (a.is_number()) {
                t.value = a.get<double>();
            } else if (a.is_string()) {
                t.symbol = a.get<std::string>();
            } else {
                throw FormatError("angle must be a number or a symbol");
            }
        } else {
            t.symbol = "theta_" + std::to_string(out.size());
        }
        out.push_back(std::move(t));
    }
    return out;
}

std::string targets_to_json(const std::vector<Target>& targets) {
    json out = json::array();
    for (std::size_t i = 0; i < targets.size(); ++i) {
        const auto& t = targets[i];
        json e = {{"pauli", t.pauli.str()}};
        if (t.value && t.symbol.empty()) {
            e["angle"] = *t.value;
        } else {
            e["angle"] = t.angle_name(i);
        }
        out.push_back(e);
    }
    return out.dump(1) + "\n";
}

Cer tableau_from_json(const std::string& text) {
    json j = parse(text, "tableau");
    std::vector<PauliString> z, x;
    try {
        for (const auto& r : j.at("z_rows")) z.push_back(PauliString::from_str(r.get<std::string>()));
        for (const auto& r : j.at("x_rows")) x.push_back(PauliString::from_str(r.get<std::string>()));
        return Cer::from_rows(z, x);
    } catch (const json::exception& e) {
        throw FormatError(std::string("tableau: ") + e.what());
    } catch (const std::invalid_argument& e) {
        throw FormatError(std::string("tableau: ") + e.what());
    }
}

std::string tableau_to_json(const Cer& cer) {
    json z = json::array(), x = json::array();
    for (const auto& r : cer.z_rows()) z.push_back(r.str());
    for (const auto& r : cer.x_rows()) x.push_back(r.str());
    return json{{"z_rows", z}, {"x_rows", x}}.dump(1) + "\n";
}

std::string circuit_to_json(const Circuit& c) {
    json ops = json::array();
    for (const auto& op : c.ops()) ops.push_back(op_to_json(op));
    json out = {{"num_qubits", c.num_qubits()}, {"ops", ops}};
    return out.dump() + "\n";
}

Circuit circuit_from_json(const std::string& text) {
    json j = parse(text, "circuit");
    try {
        Circuit c(j.at("num_qubits").get<std::size_t>());
        for (const auto& e : j.at("ops")) c.append(op_from_json(e));
        return c;
    } catch (const json::exception& e) {
        throw FormatError(std::string("circuit: ") + e.what());
    } catch (const std::logic_error& e) {
        throw FormatError(std::string("circuit: ") + e.what());
    }
}

QasmExport circuit_to_qasm(const Circuit& c, const std::vector<Target>& targets) {
    std::ostringstream q;
    q << "OPENQASM 2.0;\ninclude \"qelib1.inc\";\nqreg q[" << c.num_qubits() << "];\n";
    json params = json::array(), rots = json::array();
    std::vector<char> seen(targets.size(), 0);
    for (std::size_t i = 0; i < c.size(); ++i) {
        const Op& op = c.ops()[i];
        if (op.is_cnot()) {
            q << "cx q[" << op.q0 << "],q[" << op.q1 << "];\n";
            continue;
        }
        if (!op.is_rotation()) {
            q << gate_name(op.kind) << " q[" << op.q0 << "];\n";
            continue;
        }
        if (op.target >= targets.size()) throw std::invalid_argument("rotation refers to a missing target");
        const Target& t = targets[op.target];
        std::string gate = std::string("r") + static_cast<char>(std::tolower(op.axis));
        std::string arg;
        if (t.value && t.symbol.empty()) {
            arg = fmt_double(-2.0 * op.sign * *t.value);
        } else {
            std::string name = t.angle_name(op.target);
            arg = (op.sign > 0 ? "-2*" : "2*") + name;
            if (!seen[op.target]) params.push_back({{"name", name}, {"target", op.target}});
        }
        seen[op.target] = 1;
        q << gate << "(" << arg << ") q[" << op.q0 << "]; // target=" << op.target
          << " sign=" << static_cast<int>(op.sign) << "\n";
        rots.push_back({{"op", i},
                        {"target", op.target},
                        {"axis", std::string(1, op.axis)},
                        {"qubit", op.q0},
                        {"sign", op.sign},
                        {"pauli", t.pauli.str()}});
    }
    QasmExport out;
    out.qasm = q.str();
    out.sidecar = json{{"parameters", params}, {"rotations", rots}}.dump(1) + "\n";
    return out;
}

Circuit circuit_from_qasm(const std::string& qasm) {
    static const std::regex qreg(R"(^qreg\s+q\[(\d+)\];)");
    static const std::regex one(R"(^(h|s|sdg|x|y|z)\s+q\[(\d+)\];)");
    static const std::regex two(R"(^cx\s+q\[(\d+)\],\s*q\[(\d+)\];)");
    static const std::regex rot(R"(^r([xyz])\(([^)]*)\)\s+q\[(\d+)\];\s*//\s*target=(\d+)\s+sign=(-?1))");
    std::istringstream in(qasm);
    std::string line;
    std::optional<Circuit> c;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::smatch m;
        if (line.empty() || line.rfind("OPENQASM", 0) == 0 || line.rfind("include", 0) == 0 ||
            line.rfind("//", 0) == 0)
            continue;
        if (std::regex_search(line, m, qreg)) {
            c = Circuit(std::stoul(m[1]));
            continue;
        }
        if (!c) throw FormatError("qasm line " + std::to_string(lineno) + ": gate before qreg");
        if (std::regex_search(line, m, two)) {
            c->cx(std::stoul(m[1]), std::stoul(m[2]));
        } else if (std::regex_search(line, m, one)) {
            c->append(make_gate(gate_from_name(m[1].str()), std::stoul(m[2])));
        } else if (std::regex_search(line, m, rot)) {
            char axis = static_cast<char>(std::toupper(m[1].str()[0]));
            c->rot(axis, std::stoul(m[3]), std::stoi(m[5]), std::stoul(m[4]));
        } else {
            throw FormatError("qasm line " + std::to_string(lineno) + ": unsupported statement '" + line + "'");
        }
    }
    if (!c) throw FormatError("qasm: missing qreg");
    return *c;
}

std::string report_to_json(const SynthesisReport& report, bool verified, bool include_timing) {
    json j = {{"total_cnots", report.total_cnots},
              {"cnots_excluding_final_clifford", report.cnots_excluding_final_clifford},
              {"depth", report.depth},
              {"implementation_position", report.implementation_position},
              {"verified", verified}};
    if (include_timing) j["wall_seconds"] = report.wall_seconds;
    return j.dump(1) + "\n";
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write '" + path + "'");
    out << text;
    if (!out) throw std::runtime_error("write to '" + path + "' failed");
}

}  // namespace pauliforge
