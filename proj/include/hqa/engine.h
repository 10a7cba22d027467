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

#ifndef HQA_ENGINE_H
#define HQA_ENGINE_H

#include <cstdint>
#include <optional>
#include <vector>

#include "json.hpp"

#include "hqa/arch.h"
#include "hqa/magic_pipeline.h"
#include "hqa/workload.h"

namespace hqa {

/// Worst-case tweezer move time (seconds) across a ceil(sqrt(n))-per-side grid
/// of distance-d patches. Throws InputError for a non-NA modality.
double t_move(uint32_t d_surf, uint64_t n_region, const ModalityParams &na);

/// Layer time excluding magic waits and memory interchange:
///   GBC: t_move(d, n_comp) + t_gate + r_gbc * t_sm(NA)
///   PBC: r_ppm * t_sm(SC)
/// Throws InfeasibleError when `scheme` is not what the compute host runs.
double base_layer_time(Scheme scheme, const ArchConfig &config);
double base_layer_time(const GateLayer &layer, const ArchConfig &config);
double base_layer_time(const PPMLayer &layer, const ArchConfig &config);

/// Memory-compute interchange cost of one layer, in cycles.
struct StoreLoadCycles {
    /// s - 1 extra passes when the active set exceeds the compute region.
    uint64_t extra_passes = 0;
    /// extra_passes * (1 + r): gate plus SM cycles re-executed on compute.
    double reexec_cycles = 0;
    /// Store/load SM rounds on the memory side (multiples of d_qldpc).
    double memory_cycles = 0;

    double total() const {
        return reexec_cycles + memory_cycles;
    }
};

/// Closed-form interchange overhead of a layer with `active` qubits, `swapped`
/// qubits changing since the previous layer, and the given region sizes:
///   [q > N] (s-1) [(1+r) + ceil(N/Qb) d]
/// + [dq > Qb] (ceil(dq/Qb) - phi) d
/// + [0 < dq <= Qb] (1 - phi) d
/// Throws InfeasibleError("buffer required") when Qb = 0 but a swap is needed.
StoreLoadCycles storeload_cycles(uint64_t active, uint64_t swapped, uint64_t n_comp, uint64_t q_buff, uint32_t r,
                                 uint32_t d_qldpc, double phi_hide);

struct StoreLoadCost {
    StoreLoadCycles cycles;
    double seconds = 0;
};

/// Interchange overhead for layer `layer_index`. GBC uses q_act; PBC uses the
/// rotation weight and skips the compute-limit term. Re-executed passes cost
/// the compute host's per-layer unit; store/load rounds run at the memory
/// host's SM time. Requires config.mcsep.
StoreLoadCost storeload_overhead(size_t layer_index, const WorkloadProfile &prof, const ArchConfig &config);

struct LayerCost {
    double base = 0;
    double w_magic = 0;
    double storeload = 0;
    /// Logical-qubit transport plus the link-latency share of magic waits.
    double transport = 0;
    double total = 0;
};

struct Breakdown {
    double compute = 0;
    double magic = 0;
    double storeload = 0;
    double transport = 0;
};

struct RunReport {
    SchemeName scheme = SchemeName::NA_SF;
    double total_time = 0;
    std::vector<LayerCost> layer_costs;
    /// Fractions of total_time per category.
    Breakdown breakdown;
    /// Absolute seconds per category.
    Breakdown seconds;
    ResourceBreakdown resources;
    uint64_t magic_consumed = 0;
};

struct RunOptions {
    bool stochastic = false;
    uint64_t seed = 0;
};

/// Replays the workload against the architecture, one layer at a time:
/// memory interchange and logical transport, then a blocking take of the
/// layer's magic states, then the layer itself. Factories run throughout.
RunReport run(const ArchConfig &config, const FTWorkload &workload, const RunOptions &options = {});

nlohmann::json report_to_json(const RunReport &report, bool include_layers = true);

}  // namespace hqa

#endif
