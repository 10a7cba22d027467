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

#include "hqa/arch.h"

#include <algorithm>
#include <cctype>
#include <cmath>

#include "hqa/error.h"

namespace hqa {

std::string_view modality_name(Modality m) {
    return m == Modality::NA ? "na" : "sc";
}

Modality parse_modality(std::string_view text) {
    std::string lower(text);
    std::transform(lower.begin(), lower.end(), lower.begin(), [](unsigned char c) { return std::tolower(c); });
    if (lower == "na") {
        return Modality::NA;
    }
    if (lower == "sc") {
        return Modality::SC;
    }
    throw InputError("unknown modality '" + std::string(text) + "' (expected na or sc)");
}

ModalityParams ModalityParams::neutral_atom() {
    return {Modality::NA, 1e-3, 9e-4, 1e-6, 10.0, 2750.0};
}

ModalityParams ModalityParams::superconducting() {
    return {Modality::SC, 1e-6, 1e-6, 1e-7, 10.0, 2750.0};
}

std::string_view preset_name(SchemeName s) {
    switch (s) {
        case SchemeName::NA_SF:
            return "na-sf";
        case SchemeName::SC_SF:
            return "sc-sf";
        case SchemeName::HT_SF_MACC:
            return "ht-sf-macc";
        case SchemeName::NA_MCSEP:
            return "na-mcsep";
        case SchemeName::HT_MCSEP:
            return "ht-mcsep";
        case SchemeName::HT_MCSEP_MACC:
            return "ht-mcsep-macc";
    }
    return "?";
}

SchemeName parse_preset(std::string_view text) {
    std::string norm(text);
    std::transform(norm.begin(), norm.end(), norm.begin(), [](unsigned char c) {
        return c == '_' ? '-' : static_cast<char>(std::tolower(c));
    });
    for (SchemeName s : kAllSchemes) {
        if (norm == preset_name(s)) {
            return s;
        }
    }
    throw InputError(
        "unknown preset '" + std::string(text) + "' (expected one of na-sf, sc-sf, ht-sf-macc, na-mcsep, ht-mcsep, ht-mcsep-macc)");
}

HostRoles roles_of(SchemeName s) {
    using M = Modality;
    switch (s) {
        case SchemeName::NA_SF:
            return {M::NA, M::NA, M::NA, false};
        case SchemeName::SC_SF:
            return {M::SC, M::SC, M::SC, false};
        case SchemeName::HT_SF_MACC:
            return {M::NA, M::NA, M::SC, false};
        case SchemeName::NA_MCSEP:
            return {M::NA, M::NA, M::NA, true};
        case SchemeName::HT_MCSEP:
            return {M::SC, M::NA, M::SC, true};
        case SchemeName::HT_MCSEP_MACC:
            return {M::NA, M::NA, M::SC, true};
    }
    return {M::NA, M::NA, M::NA, false};
}

Scheme execution_scheme(Modality compute_host) {
    return compute_host == Modality::NA ? Scheme::GBC : Scheme::PBC;
}

void ArchConfig::validate() const {
    auto require = [](bool ok, const std::string &what) {
        if (!ok) {
            throw InputError("invalid config: " + what);
        }
    };
    for (const ModalityParams *m : {&na, &sc}) {
        std::string tag(modality_name(m->name));
        require(m->t_cycle > 0 && m->t_sm > 0 && m->t_gate > 0, tag + " times must be positive");
        require(m->atom_spacing > 0 && m->move_constant > 0, tag + " geometry must be positive");
    }
    require(qec.d_surf >= 3 && qec.d_surf % 2 == 1, "qec.d_surf must be an odd integer >= 3");
    require(qec.d_qldpc >= 1, "qec.d_qldpc must be >= 1");
    require(qec.qldpc_k >= 1, "qec.qldpc_k must be >= 1");
    require(msf.copies >= 1, "msf.copies must be >= 1");
    require(msf.cycles_per_attempt > 0, "msf.cycles_per_attempt must be positive");
    require(msf.success_prob > 0 && msf.success_prob <= 1, "msf.success_prob must lie in (0, 1]");
    require(link.t_mst >= 0, "link.t_mst must be >= 0");
    require(link.mu_link > 0, "link.mu_link must be positive");
    require(link.b_lq >= 1, "link.b_lq must be >= 1");
    require(link.t_lqt >= 0, "link.t_lqt must be >= 0");
    require(n_comp >= 1, "arch.n_comp must be >= 1");
    require(q_magic >= 1, "arch.q_magic must be >= 1");
    require(phi_hide >= 0 && phi_hide <= 1, "arch.phi_hide must lie in [0, 1]");
}

uint64_t buffer_size_for_quantile(const WorkloadProfile &prof, double alpha) {
    if (prof.delta_q_act.empty()) {
        return 1;
    }
    return std::max<uint64_t>(1, quantile(prof.delta_q_act, alpha));
}

ArchConfig preset(SchemeName scheme, const WorkloadProfile &prof, uint32_t n_total) {
    HostRoles roles = roles_of(scheme);
    Scheme expected = execution_scheme(roles.compute);
    if (prof.scheme != expected) {
        throw InfeasibleError(
            "preset " + std::string(preset_name(scheme)) + " computes on " + std::string(modality_name(roles.compute)) +
            " and needs a " + std::string(scheme_name(expected)) + " workload, got " +
            std::string(scheme_name(prof.scheme)));
    }
    if (prof.d == 0) {
        throw InputError("empty workload");
    }

    ArchConfig c;
    c.scheme_name = scheme;
    c.compute_host = roles.compute;
    c.memory_host = roles.memory;
    c.msf_host = roles.msf;
    c.mcsep = roles.mcsep;
    c.msf.host = roles.msf;

    if (!c.mcsep) {
        c.n_comp = std::max<uint64_t>(1, n_total);
        c.q_buff = 0;
    } else if (expected == Scheme::GBC) {
        uint64_t third = (static_cast<uint64_t>(n_total) + 2) / 3;
        c.n_comp = std::max<uint64_t>(1, std::min(quantile(prof.q_act, 0.5), third));
        c.q_buff = buffer_size_for_quantile(prof, 0.95);
    } else {
        c.n_comp = std::max<uint64_t>(1, *std::max_element(prof.w_pauli.begin(), prof.w_pauli.end()));
        c.q_buff = buffer_size_for_quantile(prof, 0.8);
    }
    uint64_t peak_magic = prof.magic_demand.empty() ? 0 : *std::max_element(prof.magic_demand.begin(), prof.magic_demand.end());
    c.q_magic = std::max<uint64_t>(1, peak_magic);
    return c;
}

uint64_t surface_code_factor(Modality host) {
    return host == Modality::NA ? 2 : 8;
}

uint64_t memory_blocks(const ArchConfig &config, uint32_t n_total) {
    if (!config.mcsep) {
        return 0;
    }
    return (static_cast<uint64_t>(n_total) + config.qec.qldpc_k - 1) / config.qec.qldpc_k;
}

ResourceBreakdown qubit_footprint(const ArchConfig &config, uint32_t n_total) {
    config.validate();
    uint64_t d2 = static_cast<uint64_t>(config.qec.d_surf) * config.qec.d_surf;
    uint64_t f = surface_code_factor(config.compute_host);
    ResourceBreakdown r;
    r.n_compute = f * d2 * config.n_comp;
    r.n_memory = (config.qec.qldpc_block_phys + config.qec.qldpc_lpu_phys) * memory_blocks(config, n_total);
    r.n_msf = static_cast<uint64_t>(config.msf.copies) * config.msf.qubits_per_factory;
    r.n_buff = f * d2 * (config.q_buff + config.q_magic);
    r.n_phys = r.n_compute + r.n_memory + r.n_msf + r.n_buff;
    return r;
}

double SurfaceCodeErrorModel::operator()(uint32_t d) const {
    return prefactor * std::pow(p_phys / p_threshold, (static_cast<double>(d) + 1.0) / 2.0);
}

uint32_t choose_distance(double target_total_success, double logical_ops,
                         const std::function<double(uint32_t)> &per_op_error) {
    if (!(target_total_success > 0 && target_total_success < 1)) {
        throw InputError("target success probability must lie in (0, 1)");
    }
    if (!(logical_ops >= 1)) {
        throw InputError("logical operation count must be >= 1");
    }
    double budget = 1.0 - target_total_success;
    for (uint32_t d = 3; d <= 99; d += 2) {
        // Relative slack absorbs rounding in budgets such as 1 - 0.9.
        if (logical_ops * per_op_error(d) <= budget * (1.0 + 1e-12)) {
            return d;
        }
    }
    throw InfeasibleError("no surface-code distance <= 99 meets the error budget");
}

}  // namespace hqa
