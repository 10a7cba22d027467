// Copyright 2026 The HQA Estimator Authors
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

#ifndef HQA_QASM_H
#define HQA_QASM_H

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "hqa/workload.h"

namespace hqa {

enum class GateKind : uint8_t { H, S, Sdg, T, Tdg, X, Y, Z, CX, CZ, MeasureZ };

std::string_view gate_name(GateKind kind);

struct Op {
    GateKind kind;
    std::vector<Qubit> qubits;

    bool operator==(const Op &) const = default;
};

/// A Clifford+T circuit over a single register of logical qubits.
struct Circuit {
    uint32_t n_qubits = 0;
    std::vector<Op> ops;

    /// Throws InputError on out-of-range or repeated operands.
    void validate() const;
    size_t t_count() const;
};

/// Parses the OpenQASM 2.0 subset {h, s, sdg, t, tdg, x, y, z, cx, cz,
/// measure} over a single qreg. `include`, `creg` and `barrier` are accepted
/// and ignored; whole-register operands broadcast. Errors carry
/// "<source_name>:<line>:<column>:".
Circuit parse_qasm(std::string_view source, std::string_view source_name = "<qasm>");

Circuit read_qasm_file(const std::string &path);

}  // namespace hqa

#endif
