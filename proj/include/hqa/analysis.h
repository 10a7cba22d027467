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

#ifndef HQA_ANALYSIS_H
#define HQA_ANALYSIS_H

#include <cstdint>

#include "hqa/arch.h"
#include "hqa/workload.h"

namespace hqa {

/// Drivers of the magic-acceleration speedup.
struct SpeedupInputs {
    /// T_cycle(NA) / T_cycle(SC).
    double s = 1000.0;
    /// Fraction of layers that consume magic states.
    double r_t = 1.0;
    /// C_MSF / (1 + r): MSF cycles per Clifford-layer cycles.
    double rho_ms = 1200.0;
    /// t_MST / (C_MSF * T_cycle(SC)).
    double p_trans = 0.0;
};

/// 1 + (s - 1 - p) / (1 + s / (r_t * rho) + p). Returns exactly 1 when r_t = 0.
double speedup_closed_form(const SpeedupInputs &in);

/// Cycle-level timing of the homogeneous-NA vs accelerated comparison.
struct LayerTimingParams {
    double r = 1.0;
    double c_msf = 2400.0;
    double t_cycle_na = 1e-3;
    double t_cycle_sc = 1e-6;
    double t_mst = 0.0;
};

/// Ratio of summed layer times: Clifford layers cost (1+r) T_NA, T-layers add
/// C_MSF T_NA (homogeneous) or C_MSF T_SC + t_MST (accelerated).
double speedup_from_times(uint64_t d, uint64_t n_t, const LayerTimingParams &params);

SpeedupInputs speedup_inputs(uint64_t d, uint64_t n_t, const LayerTimingParams &params);

/// Limit of the closed form as s grows without bound: 1 + rho.
double speedup_upper_bound(double rho_ms);

/// Expected per-layer store/load overhead lower bound (cycles) when the
/// compute region and buffer sit on the alpha and beta quantiles:
///   (1-alpha)(1+r) + [(1-alpha) ceil(N/Qb) + (2 - beta - phi)] d
double expected_overhead_lower_bound(double alpha, double beta, uint32_t r, uint64_t n_comp, uint64_t q_buff,
                                     double phi_hide, uint32_t d_qldpc);

struct CrosscheckOptions {
    /// Base configuration supplying modality, MSF and link parameters. Its
    /// scheme and sizing are replaced by the NA_SF / HT_SF_MACC presets.
    ArchConfig base;
    /// Drop t_gate from the engine so both models count identical terms.
    bool exact = false;
};

struct CrosscheckResult {
    double simulated_speedup = 0;
    double closed_form_speedup = 0;
    double relative_error = 0;
    double na_sf_time = 0;
    double macc_time = 0;
    SpeedupInputs inputs;
};

/// Runs NA_SF and HT_SF_MACC (one factory, q_magic = 1) on a uniform workload
/// and compares the simulated speedup with the closed form. The closed form's
/// Clifford-layer cycle count is the engine's routing plus SM time over
/// T_cycle(NA).
///
/// Throws InputError when the workload breaks the model's assumptions: not
/// GBC, unequal active-set sizes, T-layers with more than one T gate, or a
/// Clifford layer ahead of a T-layer (which would let the factory pre-fill).
CrosscheckResult crosscheck(const FTWorkload &workload, const CrosscheckOptions &options = {});

/// Uniform GBC workload for crosscheck: `n_t` single-T layers followed by
/// Clifford-only layers, every layer touching all `width` qubits.
FTWorkload uniform_workload(uint32_t layers, uint32_t n_t, uint32_t width);

}  // namespace hqa

#endif
