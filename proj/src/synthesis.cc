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

#include "hqa/synthesis.h"

#include <algorithm>
#include <cassert>

#include "hqa/tableau.h"

namespace hqa {

namespace {

CliffordKind to_clifford(GateKind kind) {
    switch (kind) {
        case GateKind::H:
            return CliffordKind::H;
        case GateKind::S:
            return CliffordKind::S;
        case GateKind::Sdg:
            return CliffordKind::Sdg;
        case GateKind::X:
            return CliffordKind::X;
        case GateKind::Y:
            return CliffordKind::Y;
        case GateKind::Z:
            return CliffordKind::Z;
        case GateKind::CX:
            return CliffordKind::CX;
        case GateKind::CZ:
            return CliffordKind::CZ;
        default:
            break;
    }
    assert(false && "not a Clifford gate");
    return CliffordKind::H;
}

bool is_t_like(GateKind kind) {
    return kind == GateKind::T || kind == GateKind::Tdg;
}

}  // namespace

FTWorkload layerize_gbc(const Circuit &circuit, std::string name) {
    circuit.validate();
    FTWorkload out;
    out.scheme = Scheme::GBC;
    out.n_total = circuit.n_qubits;
    out.name = std::move(name);

    // next_free[q]: index of the first layer in which qubit q is not yet used.
    std::vector<size_t> next_free(circuit.n_qubits, 0);
    for (const auto &op : circuit.ops) {
        if (op.kind == GateKind::MeasureZ) {
            continue;
        }
        size_t layer = 0;
        for (Qubit q : op.qubits) {
            layer = std::max(layer, next_free[q]);
        }
        if (layer == out.gate_layers.size()) {
            out.gate_layers.emplace_back();
        }
        auto &gl = out.gate_layers[layer];
        if (is_t_like(op.kind)) {
            gl.t_gates.push_back({op.qubits[0], op.kind == GateKind::Tdg});
        } else {
            gl.cliffords.push_back({to_clifford(op.kind), op.qubits});
        }
        for (Qubit q : op.qubits) {
            next_free[q] = layer + 1;
        }
    }
    return out;
}

FTWorkload synthesize_pbc(const Circuit &circuit, std::string name) {
    circuit.validate();
    FTWorkload out;
    out.scheme = Scheme::PBC;
    out.n_total = circuit.n_qubits;
    out.name = std::move(name);

    // Tracks V = C^dag for the Clifford prefix C, so V Z_q V^dag = C^dag Z_q C.
    CliffordTableau frame(circuit.n_qubits);
    std::vector<Qubit> measured;
    std::vector<bool> seen(circuit.n_qubits, false);

    for (const auto &op : circuit.ops) {
        if (op.kind == GateKind::MeasureZ) {
            Qubit q = op.qubits[0];
            if (!seen[q]) {
                seen[q] = true;
                measured.push_back(q);
            }
            continue;
        }
        if (is_t_like(op.kind)) {
            PauliString z;
            z.terms[op.qubits[0]] = PauliAxis::Z;
            auto [rotation, sign] = frame.conjugate(z);
            PPMLayer layer;
            layer.rotation = std::move(rotation);
            layer.sign = op.kind == GateKind::Tdg ? -sign : sign;
            layer.consumes_magic = true;
            out.ppm_layers.push_back(std::move(layer));
            continue;
        }
        // C <- G C  implies  C^dag <- C^dag G^dag.
        frame.append_right(inverse(to_clifford(op.kind)), op.qubits);
#ifndef NDEBUG
        if (circuit.n_qubits <= 16) {
            assert(frame.is_symplectic());
        }
#endif
    }
    for (Qubit q : measured) {
        PauliString z;
        z.terms[q] = PauliAxis::Z;
        auto [rotation, sign] = frame.conjugate(z);
        out.ppm_layers.push_back({std::move(rotation), sign, false});
    }
    return out;
}

FTWorkload synthesize(const Circuit &circuit, Scheme scheme, std::string name) {
    return scheme == Scheme::GBC ? layerize_gbc(circuit, std::move(name)) : synthesize_pbc(circuit, std::move(name));
}

}  // namespace hqa
