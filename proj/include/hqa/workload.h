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

#ifndef HQA_WORKLOAD_H
#define HQA_WORKLOAD_H

#include <cstdint>
#include <map>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace hqa {

using Qubit = uint32_t;

enum class PauliAxis : uint8_t { X, Y, Z };

char axis_char(PauliAxis axis);
PauliAxis parse_axis(char c);

/// Sparse Pauli product over logical qubits. Identity factors are not stored.
struct PauliString {
    std::map<Qubit, PauliAxis> terms;

    size_t weight() const {
        return terms.size();
    }
    std::set<Qubit> support() const;
    /// Human readable form such as "X0*Z3".
    std::string str() const;

    bool operator==(const PauliString &) const = default;
};

enum class CliffordKind : uint8_t { H, S, Sdg, X, Y, Z, CX, CZ };

std::string_view clifford_name(CliffordKind kind);
bool is_two_qubit(CliffordKind kind);

struct CliffordGate {
    CliffordKind kind;
    std::vector<Qubit> qubits;

    bool operator==(const CliffordGate &) const = default;
};

struct TGate {
    Qubit qubit;
    bool dagger = false;

    bool operator==(const TGate &) const = default;
};

/// A set of gates that execute concurrently (gate-based computing).
struct GateLayer {
    std::vector<CliffordGate> cliffords;
    std::vector<TGate> t_gates;

    std::set<Qubit> active_set() const;
    size_t k_t() const {
        return t_gates.size();
    }
    bool is_t_layer() const {
        return !t_gates.empty();
    }
};

/// One Pauli-product rotation (pi/8, consumes a magic state) or a terminal
/// Pauli-product measurement (no magic).
struct PPMLayer {
    PauliString rotation;
    /// +1 or -1. Only meaningful for the rotation direction; costs ignore it.
    int sign = 1;
    bool consumes_magic = true;
};

enum class Scheme : uint8_t { GBC, PBC };

std::string_view scheme_name(Scheme scheme);
Scheme parse_scheme(std::string_view text);

struct FTWorkload {
    Scheme scheme = Scheme::GBC;
    uint32_t n_total = 0;
    std::string name;
    std::vector<GateLayer> gate_layers;  // populated iff scheme == GBC
    std::vector<PPMLayer> ppm_layers;    // populated iff scheme == PBC

    size_t depth() const {
        return scheme == Scheme::GBC ? gate_layers.size() : ppm_layers.size();
    }
    /// Throws InputError when an invariant is broken: qubit out of range, a
    /// qubit used twice in one gate layer, empty PPM rotation, or layers
    /// stored under the wrong scheme.
    void validate() const;
};

/// Per-layer feature timelines of a workload.
struct WorkloadProfile {
    Scheme scheme = Scheme::GBC;
    uint32_t n_total = 0;
    size_t d = 0;
    size_t n_t = 0;
    double r_t = 0.0;
    std::vector<uint64_t> q_act;
    /// |A_{i+1} \ A_i| + |A_i \ A_{i+1}| for consecutive active sets; D-1 entries.
    std::vector<uint64_t> delta_q_act;
    /// Pauli weights per PPM layer. Empty for GBC.
    std::vector<uint64_t> w_pauli;
    std::vector<uint64_t> magic_demand;

    uint64_t total_magic() const;
    /// Swap count entering layer `i`; zero for the first layer.
    uint64_t delta_into(size_t layer_index) const {
        return layer_index == 0 ? 0 : delta_q_act[layer_index - 1];
    }
};

/// Throws InputError("empty workload") for a workload without layers.
WorkloadProfile profile(const FTWorkload &workload);

/// Nearest-rank quantile: the element at index ceil(alpha*n)-1 of the sorted
/// values, clamped to the valid range.
uint64_t quantile(std::span<const uint64_t> values, double alpha);

/// Cardinality of the symmetric difference of two sorted sets.
uint64_t symmetric_difference_size(const std::set<Qubit> &a, const std::set<Qubit> &b);

}  // namespace hqa

#endif
