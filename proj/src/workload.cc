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

#include "hqa/workload.h"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <sstream>

#include "hqa/error.h"

namespace hqa {

char axis_char(PauliAxis axis) {
    switch (axis) {
        case PauliAxis::X:
            return 'X';
        case PauliAxis::Y:
            return 'Y';
        case PauliAxis::Z:
            return 'Z';
    }
    return '?';
}

PauliAxis parse_axis(char c) {
    switch (std::toupper(static_cast<unsigned char>(c))) {
        case 'X':
            return PauliAxis::X;
        case 'Y':
            return PauliAxis::Y;
        case 'Z':
            return PauliAxis::Z;
        default:
            throw InputError(std::string("invalid Pauli axis '") + c + "'");
    }
}

std::set<Qubit> PauliString::support() const {
    std::set<Qubit> out;
    for (const auto &[q, axis] : terms) {
        out.insert(q);
    }
    return out;
}

std::string PauliString::str() const {
    if (terms.empty()) {
        return "I";
    }
    std::ostringstream out;
    bool first = true;
    for (const auto &[q, axis] : terms) {
        if (!first) {
            out << '*';
        }
        first = false;
        out << axis_char(axis) << q;
    }
    return out.str();
}

std::string_view clifford_name(CliffordKind kind) {
    switch (kind) {
        case CliffordKind::H:
            return "h";
        case CliffordKind::S:
            return "s";
        case CliffordKind::Sdg:
            return "sdg";
        case CliffordKind::X:
            return "x";
        case CliffordKind::Y:
            return "y";
        case CliffordKind::Z:
            return "z";
        case CliffordKind::CX:
            return "cx";
        case CliffordKind::CZ:
            return "cz";
    }
    return "?";
}

bool is_two_qubit(CliffordKind kind) {
    return kind == CliffordKind::CX || kind == CliffordKind::CZ;
}

std::set<Qubit> GateLayer::active_set() const {
    std::set<Qubit> out;
    for (const auto &g : cliffords) {
        out.insert(g.qubits.begin(), g.qubits.end());
    }
    for (const auto &t : t_gates) {
        out.insert(t.qubit);
    }
    return out;
}

std::string_view scheme_name(Scheme scheme) {
    return scheme == Scheme::GBC ? "gbc" : "pbc";
}

Scheme parse_scheme(std::string_view text) {
    std::string lower(text);
    std::transform(lower.begin(), lower.end(), lower.begin(), [](unsigned char c) { return std::tolower(c); });
    if (lower == "gbc") {
        return Scheme::GBC;
    }
    if (lower == "pbc") {
        return Scheme::PBC;
    }
    throw InputError("unknown scheme '" + std::string(text) + "' (expected gbc or pbc)");
}

void FTWorkload::validate() const {
    auto check_index = [&](Qubit q, size_t layer) {
        if (q >= n_total) {
            throw InputError(
                "layer " + std::to_string(layer) + ": qubit " + std::to_string(q) + " out of range (n_total=" +
                std::to_string(n_total) + ")");
        }
    };
    if (scheme == Scheme::GBC) {
        if (!ppm_layers.empty()) {
            throw InputError("gbc workload carries ppm layers");
        }
        for (size_t i = 0; i < gate_layers.size(); i++) {
            std::set<Qubit> seen;
            auto claim = [&](Qubit q) {
                check_index(q, i);
                if (!seen.insert(q).second) {
                    throw InputError(
                        "layer " + std::to_string(i) + ": qubit " + std::to_string(q) + " used by more than one gate");
                }
            };
            for (const auto &g : gate_layers[i].cliffords) {
                size_t arity = is_two_qubit(g.kind) ? 2 : 1;
                if (g.qubits.size() != arity) {
                    throw InputError(
                        "layer " + std::to_string(i) + ": gate " + std::string(clifford_name(g.kind)) +
                        " has wrong operand count");
                }
                for (Qubit q : g.qubits) {
                    claim(q);
                }
            }
            for (const auto &t : gate_layers[i].t_gates) {
                claim(t.qubit);
            }
        }
    } else {
        if (!gate_layers.empty()) {
            throw InputError("pbc workload carries gate layers");
        }
        for (size_t i = 0; i < ppm_layers.size(); i++) {
            const auto &layer = ppm_layers[i];
            if (layer.rotation.weight() == 0) {
                throw InputError("layer " + std::to_string(i) + ": PPM with empty Pauli string");
            }
            if (layer.sign != 1 && layer.sign != -1) {
                throw InputError("layer " + std::to_string(i) + ": sign must be +1 or -1");
            }
            for (const auto &[q, axis] : layer.rotation.terms) {
                check_index(q, i);
            }
        }
    }
}

uint64_t WorkloadProfile::total_magic() const {
    uint64_t total = 0;
    for (auto m : magic_demand) {
        total += m;
    }
    return total;
}

uint64_t symmetric_difference_size(const std::set<Qubit> &a, const std::set<Qubit> &b) {
    uint64_t common = 0;
    auto ia = a.begin();
    auto ib = b.begin();
    while (ia != a.end() && ib != b.end()) {
        if (*ia < *ib) {
            ++ia;
        } else if (*ib < *ia) {
            ++ib;
        } else {
            common++;
            ++ia;
            ++ib;
        }
    }
    return a.size() + b.size() - 2 * common;
}

WorkloadProfile profile(const FTWorkload &workload) {
    if (workload.depth() == 0) {
        throw InputError("empty workload");
    }
    workload.validate();

    WorkloadProfile out;
    out.scheme = workload.scheme;
    out.n_total = workload.n_total;
    out.d = workload.depth();

    std::vector<std::set<Qubit>> active;
    active.reserve(out.d);
    if (workload.scheme == Scheme::GBC) {
        for (const auto &layer : workload.gate_layers) {
            active.push_back(layer.active_set());
            out.magic_demand.push_back(layer.k_t());
        }
    } else {
        for (const auto &layer : workload.ppm_layers) {
            active.push_back(layer.rotation.support());
            out.w_pauli.push_back(layer.rotation.weight());
            out.magic_demand.push_back(layer.consumes_magic ? 1 : 0);
        }
    }
    for (size_t i = 0; i < out.d; i++) {
        out.q_act.push_back(active[i].size());
        if (out.magic_demand[i] > 0) {
            out.n_t++;
        }
        if (i + 1 < out.d) {
            out.delta_q_act.push_back(symmetric_difference_size(active[i], active[i + 1]));
        }
    }
    out.r_t = static_cast<double>(out.n_t) / static_cast<double>(out.d);
    return out;
}

uint64_t quantile(std::span<const uint64_t> values, double alpha) {
    if (values.empty()) {
        throw InputError("quantile of an empty sequence");
    }
    if (!(alpha >= 0.0 && alpha <= 1.0)) {
        throw InputError("quantile level must lie in [0, 1]");
    }
    std::vector<uint64_t> sorted(values.begin(), values.end());
    std::sort(sorted.begin(), sorted.end());
    // alpha*n may land a hair above an integer (0.1*30 -> 3.0000000000000004).
    double rank = std::ceil(alpha * static_cast<double>(sorted.size()) - 1e-9);
    auto index = static_cast<int64_t>(rank) - 1;
    index = std::clamp<int64_t>(index, 0, static_cast<int64_t>(sorted.size()) - 1);
    return sorted[static_cast<size_t>(index)];
}

}  // namespace hqa
