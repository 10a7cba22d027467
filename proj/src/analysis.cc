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

#include "hqa/analysis.h"

#include <cmath>

#include "hqa/engine.h"
#include "hqa/error.h"

namespace hqa {

double speedup_closed_form(const SpeedupInputs &in) {
    if (in.r_t == 0.0) {
        return 1.0;
    }
    return 1.0 + (in.s - 1.0 - in.p_trans) / (1.0 + (1.0 / in.r_t) * (1.0 / in.rho_ms) * in.s + in.p_trans);
}

double speedup_from_times(uint64_t d, uint64_t n_t, const LayerTimingParams &p) {
    if (d == 0 || n_t > d) {
        throw InputError("speedup_from_times needs 0 <= n_t <= d and d >= 1");
    }
    double t_clifford = (1.0 + p.r) * p.t_cycle_na;
    double t_t_homo = t_clifford + p.c_msf * p.t_cycle_na;
    double t_t_macc = t_clifford + p.c_msf * p.t_cycle_sc + p.t_mst;
    auto clifford_layers = static_cast<double>(d - n_t);
    auto t_layers = static_cast<double>(n_t);
    double homo = clifford_layers * t_clifford + t_layers * t_t_homo;
    double macc = clifford_layers * t_clifford + t_layers * t_t_macc;
    return homo / macc;
}

SpeedupInputs speedup_inputs(uint64_t d, uint64_t n_t, const LayerTimingParams &p) {
    SpeedupInputs in;
    in.s = p.t_cycle_na / p.t_cycle_sc;
    in.r_t = static_cast<double>(n_t) / static_cast<double>(d);
    in.rho_ms = p.c_msf / (1.0 + p.r);
    in.p_trans = p.t_mst / (p.c_msf * p.t_cycle_sc);
    return in;
}

double speedup_upper_bound(double rho_ms) {
    return 1.0 + rho_ms;
}

double expected_overhead_lower_bound(double alpha, double beta, uint32_t r, uint64_t n_comp, uint64_t q_buff,
                                     double phi_hide, uint32_t d_qldpc) {
    if (q_buff == 0) {
        throw InputError("expected_overhead_lower_bound needs q_buff >= 1");
    }
    double blocks = static_cast<double>((n_comp + q_buff - 1) / q_buff);
    return (1.0 - alpha) * (1.0 + r) + ((1.0 - alpha) * blocks + (2.0 - beta - phi_hide)) * d_qldpc;
}

FTWorkload uniform_workload(uint32_t layers, uint32_t n_t, uint32_t width) {
    if (width == 0 || n_t > layers) {
        throw InputError("uniform workload needs width >= 1 and n_t <= layers");
    }
    FTWorkload w;
    w.scheme = Scheme::GBC;
    w.n_total = width;
    w.name = "uniform";
    for (uint32_t i = 0; i < layers; i++) {
        GateLayer gl;
        uint32_t first = 0;
        if (i < n_t) {
            gl.t_gates.push_back({0, false});
            first = 1;
        }
        for (uint32_t q = first; q < width; q++) {
            gl.cliffords.push_back({CliffordKind::H, {q}});
        }
        w.gate_layers.push_back(std::move(gl));
    }
    return w;
}

CrosscheckResult crosscheck(const FTWorkload &workload, const CrosscheckOptions &options) {
    if (workload.scheme != Scheme::GBC) {
        throw InputError("crosscheck: workload must be gate-based");
    }
    WorkloadProfile prof = profile(workload);
    bool seen_clifford = false;
    for (size_t i = 0; i < prof.d; i++) {
        if (prof.q_act[i] != prof.q_act[0]) {
            throw InputError("crosscheck: non-uniform workload (active-set sizes differ)");
        }
        if (prof.magic_demand[i] > 1) {
            throw InputError("crosscheck: non-uniform workload (T-layer with more than one T gate)");
        }
        if (prof.magic_demand[i] == 0) {
            seen_clifford = true;
        } else if (seen_clifford) {
            throw InputError("crosscheck: non-uniform workload (Clifford layer precedes a T-layer)");
        }
    }

    auto configure = [&](SchemeName scheme) {
        ArchConfig c = preset(scheme, prof, workload.n_total);
        ArchConfig base = options.base;
        c.na = base.na;
        c.sc = base.sc;
        c.qec = base.qec;
        c.msf = base.msf;
        c.msf.host = c.msf_host;
        c.msf.copies = 1;
        c.link = base.link;
        c.phi_hide = base.phi_hide;
        c.q_magic = 1;
        if (options.exact) {
            // The closed form has no gate-time term.
            c.na.t_gate = std::numeric_limits<double>::min();
        }
        return c;
    };
    ArchConfig homo = configure(SchemeName::NA_SF);
    ArchConfig macc = configure(SchemeName::HT_SF_MACC);

    CrosscheckResult out;
    out.na_sf_time = run(homo, workload).total_time;
    out.macc_time = run(macc, workload).total_time;
    out.simulated_speedup = out.na_sf_time / out.macc_time;

    const ModalityParams &na = homo.na;
    double clifford_seconds = t_move(homo.qec.d_surf, homo.n_comp, na) + homo.qec.sm_rounds_gbc * na.t_sm;
    LayerTimingParams params;
    params.r = clifford_seconds / na.t_cycle - 1.0;
    params.c_msf = homo.msf.expected_cycles();
    params.t_cycle_na = na.t_cycle;
    params.t_cycle_sc = macc.sc.t_cycle;
    params.t_mst = macc.link.t_mst;
    out.inputs = speedup_inputs(prof.d, prof.n_t, params);
    out.closed_form_speedup = speedup_closed_form(out.inputs);
    out.relative_error = std::abs(out.simulated_speedup - out.closed_form_speedup) / out.closed_form_speedup;
    return out;
}

}  // namespace hqa
