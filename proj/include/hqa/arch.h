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

#ifndef HQA_ARCH_H
#define HQA_ARCH_H

#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <string>
#include <string_view>

#include "hqa/workload.h"

namespace hqa {

enum class Modality : uint8_t { NA, SC };

std::string_view modality_name(Modality m);
Modality parse_modality(std::string_view text);

/// Timing and geometry of one physical platform. Times in seconds, lengths in um.
struct ModalityParams {
    Modality name = Modality::NA;
    double t_cycle = 1e-3;
    double t_sm = 9e-4;
    double t_gate = 1e-6;
    double atom_spacing = 10.0;
    double move_constant = 2750.0;

    static ModalityParams neutral_atom();
    static ModalityParams superconducting();
};

struct QECParams {
    uint32_t d_surf = 15;
    uint32_t d_qldpc = 18;
    uint32_t qldpc_k = 12;
    uint64_t qldpc_block_phys = 576;
    uint64_t qldpc_lpu_phys = 158;
    uint32_t sm_rounds_gbc = 1;
    /// Lattice-surgery rounds per PPM; follows d_surf unless set explicitly.
    std::optional<uint32_t> sm_rounds_ppm;

    uint32_t ppm_rounds() const {
        return sm_rounds_ppm.value_or(d_surf);
    }
};

/// Magic-state factory: cultivation defaults.
struct MSFParams {
    Modality host = Modality::NA;
    uint32_t copies = 1;
    uint64_t qubits_per_factory = 463;
    double cycles_per_attempt = 24.0;
    double success_prob = 0.01;

    /// Expected cycles per delivered state, C_att / p.
    double expected_cycles() const {
        return cycles_per_attempt / success_prob;
    }
};

struct LinkParams {
    double t_mst = 1e-7;
    double mu_link = std::numeric_limits<double>::infinity();
    uint32_t b_lq = 1;
    double t_lqt = 1e-6;
};

enum class SchemeName : uint8_t { NA_SF, SC_SF, HT_SF_MACC, NA_MCSEP, HT_MCSEP, HT_MCSEP_MACC };

inline constexpr SchemeName kAllSchemes[] = {SchemeName::NA_SF,    SchemeName::SC_SF,    SchemeName::HT_SF_MACC,
                                             SchemeName::NA_MCSEP, SchemeName::HT_MCSEP, SchemeName::HT_MCSEP_MACC};

/// Canonical CLI spelling, e.g. "ht-sf-macc".
std::string_view preset_name(SchemeName s);
/// Accepts "ht-sf-macc", "HT_SF_MACC", "HT-SF-MAcc", ...
SchemeName parse_preset(std::string_view text);

struct HostRoles {
    Modality compute;
    Modality memory;
    Modality msf;
    bool mcsep;
};

/// Host assignment of every baseline.
HostRoles roles_of(SchemeName s);

/// Execution style a scheme's compute host runs: GBC on NA, PBC on SC.
Scheme execution_scheme(Modality compute_host);

struct ArchConfig {
    SchemeName scheme_name = SchemeName::NA_SF;
    Modality compute_host = Modality::NA;
    Modality memory_host = Modality::NA;
    Modality msf_host = Modality::NA;
    bool mcsep = false;
    uint64_t n_comp = 1;
    uint64_t q_buff = 0;
    uint64_t q_magic = 1;
    double phi_hide = 0.5;
    ModalityParams na = ModalityParams::neutral_atom();
    ModalityParams sc = ModalityParams::superconducting();
    QECParams qec;
    MSFParams msf;
    LinkParams link;

    const ModalityParams &modality(Modality m) const {
        return m == Modality::NA ? na : sc;
    }
    ModalityParams &modality(Modality m) {
        return m == Modality::NA ? na : sc;
    }
    const ModalityParams &compute() const {
        return modality(compute_host);
    }
    Scheme execution() const {
        return execution_scheme(compute_host);
    }
    bool cross_modality_magic() const {
        return msf_host != compute_host;
    }
    bool cross_modality_memory() const {
        return mcsep && memory_host != compute_host;
    }

    /// Throws InputError on out-of-range parameters.
    void validate() const;
};

/// Baseline configuration sized for a workload profile.
///   no MCSep:     n_comp = n_total, q_buff = 0
///   MCSep + GBC:  n_comp = min(Q_0.5(q_act), ceil(n_total/3)), q_buff = Q_0.95(delta_q_act)
///   MCSep + PBC:  n_comp = max(w_pauli), q_buff = Q_0.8(delta of rotation supports)
///   q_magic = max per-layer magic demand (at least 1)
/// Throws InfeasibleError when the profile's scheme does not match the
/// compute host of `scheme`.
ArchConfig preset(SchemeName scheme, const WorkloadProfile &prof, uint32_t n_total);

/// Swap-buffer size for an MCSep config at quantile level `alpha` (minimum 1).
uint64_t buffer_size_for_quantile(const WorkloadProfile &prof, double alpha);

struct ResourceBreakdown {
    uint64_t n_compute = 0;
    uint64_t n_memory = 0;
    uint64_t n_msf = 0;
    uint64_t n_buff = 0;
    uint64_t n_phys = 0;
};

/// Physical qubits per surface-code logical qubit, in units of d^2.
uint64_t surface_code_factor(Modality host);

uint64_t memory_blocks(const ArchConfig &config, uint32_t n_total);

ResourceBreakdown qubit_footprint(const ArchConfig &config, uint32_t n_total);

/// A_ler * (p_phys / p_th)^((d+1)/2)
struct SurfaceCodeErrorModel {
    double prefactor = 0.1;
    double p_phys = 1e-3;
    double p_threshold = 1e-2;

    double operator()(uint32_t d) const;
};

/// Smallest odd d >= 3 (up to 99) with logical_ops * model(d) <= 1 - target.
/// Not used by the presets; d_surf is a configuration input.
uint32_t choose_distance(double target_total_success, double logical_ops,
                         const std::function<double(uint32_t)> &per_op_error = SurfaceCodeErrorModel{});

}  // namespace hqa

#endif
