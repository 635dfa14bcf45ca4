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

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "pauliforge/cer.hpp"
#include "pauliforge/circuit.hpp"
#include "pauliforge/pauli.hpp"
#include "pauliforge/pauli_synth.hpp"

namespace pauliforge {

struct FormatError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// One exponential exp(i * angle * pauli). The angle is either a literal in
/// radians or a symbol such as "theta_3".
struct Target {
    PauliString pauli;
    std::optional<double> value;
    std::string symbol;

    std::string angle_name(std::size_t index) const;
};

std::vector<PauliString> paulis_of(const std::vector<Target>& targets);

/// [{"pauli": "+XXYIZ", "angle": 0.3 | "theta_0"}, ...]
std::vector<Target> targets_from_json(const std::string& text);
std::string targets_to_json(const std::vector<Target>& targets);

/// {"z_rows": [...], "x_rows": [...]}
Cer tableau_from_json(const std::string& text);
std::string tableau_to_json(const Cer& cer);

/// Circuits as [["h", 0], ["cx", 0, 1], ["rot", "Z", 2, -1, 5]]; the rotation
/// fields are axis, qubit, sign and target index.
std::string circuit_to_json(const Circuit& c);
Circuit circuit_from_json(const std::string& text);

struct QasmExport {
    std::string qasm;
    /// {"parameters": [...], "rotations": [{"op": i, "target": j, ...}]}
    std::string sidecar;
};

/// OpenQASM 2 with h, s, sdg, x, y, z, cx, rx, ry, rz. exp(i*s*theta*P) is
/// written as rP(-2*s*theta); symbolic angles keep their names.
QasmExport circuit_to_qasm(const Circuit& c, const std::vector<Target>& targets);
/// Inverse of circuit_to_qasm for files it produced.
Circuit circuit_from_qasm(const std::string& qasm);

std::string report_to_json(const SynthesisReport& report, bool verified, bool include_timing);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace pauliforge
