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

#include "hqa/engine.h"

#include <cmath>

#include "hqa/error.h"

namespace hqa {

namespace {

uint64_t ceil_div(uint64_t a, uint64_t b) {
    return (a + b - 1) / b;
}

}  // namespace

double t_move(uint32_t d_surf, uint64_t n_region, const ModalityParams &na) {
    if (na.name != Modality::NA) {
        throw InputError("t_move is defined for neutral-atom hosts only");
    }
    if (n_region == 0) {
        throw InputError("t_move needs a region of at least one logical qubit");
    }
    auto side_patches = static_cast<double>(static_cast<uint64_t>(std::ceil(std::sqrt(static_cast<double>(n_region)))));
    // Guard against sqrt rounding just above a perfect square.
    if ((side_patches - 1) * (side_patches - 1) >= static_cast<double>(n_region)) {
        side_patches -= 1;
    }
    double side_um = na.atom_spacing * d_surf * side_patches;
    double worst_um = std::sqrt(2.0) * side_um;
    double millis = std::sqrt(2.0 * worst_um / na.move_constant);
    return millis * 1e-3;
}

double base_layer_time(Scheme scheme, const ArchConfig &config) {
    if (scheme != config.execution()) {
        throw InfeasibleError("layer scheme " + std::string(scheme_name(scheme)) + " does not match compute host " +
                              std::string(modality_name(config.compute_host)));
    }
    const ModalityParams &host = config.compute();
    if (scheme == Scheme::GBC) {
        return t_move(config.qec.d_surf, config.n_comp, host) + host.t_gate + config.qec.sm_rounds_gbc * host.t_sm;
    }
    return config.qec.ppm_rounds() * host.t_sm;
}

double base_layer_time(const GateLayer &, const ArchConfig &config) {
    return base_layer_time(Scheme::GBC, config);
}

double base_layer_time(const PPMLayer &, const ArchConfig &config) {
    return base_layer_time(Scheme::PBC, config);
}

StoreLoadCycles storeload_cycles(uint64_t active, uint64_t swapped, uint64_t n_comp, uint64_t q_buff, uint32_t r,
                                 uint32_t d_qldpc, double phi_hide) {
    if (n_comp == 0) {
        throw InfeasibleError("compute region must hold at least one logical qubit");
    }
    StoreLoadCycles out;
    double d = d_qldpc;
    if (active > n_comp) {
        if (q_buff == 0) {
            throw InfeasibleError("buffer required: active set exceeds the compute region and q_buff = 0");
        }
        out.extra_passes = ceil_div(active, n_comp) - 1;
        out.reexec_cycles = static_cast<double>(out.extra_passes) * (1.0 + r);
        out.memory_cycles += static_cast<double>(out.extra_passes * ceil_div(n_comp, q_buff)) * d;
    }
    if (swapped > 0) {
        if (q_buff == 0) {
            throw InfeasibleError("buffer required: layer swaps qubits but q_buff = 0");
        }
        if (swapped > q_buff) {
            out.memory_cycles += (static_cast<double>(ceil_div(swapped, q_buff)) - phi_hide) * d;
        } else {
            out.memory_cycles += (1.0 - phi_hide) * d;
        }
    }
    return out;
}

StoreLoadCost storeload_overhead(size_t layer_index, const WorkloadProfile &prof, const ArchConfig &config) {
    if (!config.mcsep) {
        throw InputError("store/load overhead applies to memory-compute separated configs only");
    }
    if (layer_index >= prof.d) {
        throw InputError("layer index out of range");
    }
    uint64_t swapped = prof.delta_into(layer_index);
    StoreLoadCost cost;
    const ModalityParams &compute = config.compute();
    if (prof.scheme == Scheme::GBC) {
        cost.cycles = storeload_cycles(prof.q_act[layer_index], swapped, config.n_comp, config.q_buff,
                                       config.qec.sm_rounds_gbc, config.qec.d_qldpc, config.phi_hide);
    } else {
        uint64_t w = prof.w_pauli[layer_index];
        if (w > config.n_comp) {
            throw InfeasibleError("PPM infeasible: layer " + std::to_string(layer_index) + " has Pauli weight " +
                                  std::to_string(w) + " > n_comp " + std::to_string(config.n_comp));
        }
        cost.cycles = storeload_cycles(w, swapped, config.n_comp, config.q_buff, config.qec.ppm_rounds(),
                                       config.qec.d_qldpc, config.phi_hide);
    }
    double pass_seconds = 0;
    if (config.compute_host == Modality::NA) {
        pass_seconds = t_move(config.qec.d_surf, config.n_comp, compute) + config.qec.sm_rounds_gbc * compute.t_sm;
    } else {
        pass_seconds = config.qec.ppm_rounds() * compute.t_sm;
    }
    cost.seconds = static_cast<double>(cost.cycles.extra_passes) * pass_seconds +
                   cost.cycles.memory_cycles * config.modality(config.memory_host).t_sm;
    return cost;
}

RunReport run(const ArchConfig &config, const FTWorkload &workload, const RunOptions &options) {
    config.validate();
    if (workload.scheme != config.execution()) {
        throw InfeasibleError("scheme mismatch: preset " + std::string(preset_name(config.scheme_name)) + " runs " +
                              std::string(scheme_name(config.execution())) + " workloads, got " +
                              std::string(scheme_name(workload.scheme)));
    }
    WorkloadProfile prof = profile(workload);
    if (workload.scheme == Scheme::PBC) {
        for (size_t i = 0; i < prof.d; i++) {
            if (prof.w_pauli[i] > config.n_comp) {
                throw InfeasibleError("PPM infeasible: layer " + std::to_string(i) + " has Pauli weight " +
                                      std::to_string(prof.w_pauli[i]) + " > n_comp " + std::to_string(config.n_comp));
            }
        }
    }

    RunReport report;
    report.scheme = config.scheme_name;
    report.resources = qubit_footprint(config, workload.n_total);
    report.layer_costs.reserve(prof.d);

    MagicPipeline pipeline(config, options.stochastic, options.seed);
    double base = base_layer_time(workload.scheme, config);
    double clock = 0;
    for (size_t i = 0; i < prof.d; i++) {
        LayerCost c;
        if (config.mcsep) {
            c.storeload = storeload_overhead(i, prof, config).seconds;
            if (config.cross_modality_memory()) {
                uint64_t moved = prof.delta_into(i);
                c.transport += static_cast<double>((moved + config.link.b_lq - 1) / config.link.b_lq) * config.link.t_lqt;
            }
        }
        clock += c.storeload + c.transport;

        if (prof.magic_demand[i] > 0) {
            MagicWait w = pipeline.take(prof.magic_demand[i], clock);
            c.w_magic = w.factory_wait;
            c.transport += w.link_wait;
            clock = w.ready;
        }
        c.base = base;
        clock += c.base;
        pipeline.release(clock);

        c.total = c.base + c.w_magic + c.storeload + c.transport;
        report.seconds.compute += c.base;
        report.seconds.magic += c.w_magic;
        report.seconds.storeload += c.storeload;
        report.seconds.transport += c.transport;
        report.layer_costs.push_back(c);
    }
    report.total_time = report.seconds.compute + report.seconds.magic + report.seconds.storeload + report.seconds.transport;
    report.magic_consumed = pipeline.consumed();
    if (report.total_time > 0) {
        report.breakdown = {report.seconds.compute / report.total_time, report.seconds.magic / report.total_time,
                            report.seconds.storeload / report.total_time, report.seconds.transport / report.total_time};
    }
    return report;
}

nlohmann::json report_to_json(const RunReport &report, bool include_layers) {
    const auto &r = report.resources;
    nlohmann::json doc = {
        {"scheme", std::string(preset_name(report.scheme))},
        {"total_time_s", report.total_time},
        {"n_phys", r.n_phys},
        {"resources", {{"n_compute", r.n_compute}, {"n_memory", r.n_memory}, {"n_msf", r.n_msf}, {"n_buff", r.n_buff}}},
        {"breakdown",
         {{"compute", report.breakdown.compute},
          {"magic", report.breakdown.magic},
          {"storeload", report.breakdown.storeload},
          {"transport", report.breakdown.transport}}},
        {"seconds",
         {{"compute", report.seconds.compute},
          {"magic", report.seconds.magic},
          {"storeload", report.seconds.storeload},
          {"transport", report.seconds.transport}}},
        {"magic_consumed", report.magic_consumed},
    };
    if (include_layers) {
        auto layers = nlohmann::json::array();
        for (const auto &c : report.layer_costs) {
            layers.push_back({{"base", c.base},
                              {"w_magic", c.w_magic},
                              {"storeload", c.storeload},
                              {"transport", c.transport},
                              {"total", c.total}});
        }
        doc["layers"] = std::move(layers);
    }
    return doc;
}

}  // namespace hqa
