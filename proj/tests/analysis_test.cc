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

#include <gtest/gtest.h>

#include <random>

#include "hqa/engine.h"
#include "hqa/error.h"

namespace hqa {
namespace {

// Direct evaluation of the accelerated speedup from its physical drivers,
// written independently of the library's algebraic form.
double speedup_reference(double s, double r_t, double rho, double p) {
    // Per layer, in units of (1+r) T_SC: Clifford layers cost s; T-layers add
    // rho*s (homogeneous) or rho*(1 + p) (accelerated).
    double homo = s + r_t * rho * s;
    double macc = s + r_t * rho * (1 + p);
    return homo / macc;
}

TEST(ClosedForm, ReferenceValues) {
    EXPECT_NEAR(speedup_closed_form({1000, 1, 1200, 0}), 545.909, 1e-3);
    EXPECT_DOUBLE_EQ(speedup_closed_form({1000, 0, 1200, 0}), 1.0);
    EXPECT_NEAR(speedup_closed_form({1, 0.7, 1200, 0}), 1.0, 1e-15);
}

TEST(ClosedForm, AgreesWithDirectRatio) {
    std::mt19937_64 rng(1);
    std::uniform_real_distribution<double> u(0, 1);
    for (int i = 0; i < 10000; ++i) {
        double s = std::pow(10.0, 4 * u(rng));
        double r_t = 0.01 + 0.99 * u(rng);
        double rho = std::pow(10.0, 4 * u(rng));
        double p = 0.1 * u(rng);
        double want = speedup_reference(s, r_t, rho, p);
        ASSERT_NEAR(speedup_closed_form({s, r_t, rho, p}), want, 1e-10 * want);
    }
}

TEST(ClosedForm, BoundedByOnePlusRho) {
    for (double s : {1e1, 1e3, 1e5, 1e7, 1e9, 1e12}) {
        double v = speedup_closed_form({s, 1, 1200, 0});
        EXPECT_LT(v, speedup_upper_bound(1200));
    }
    EXPECT_DOUBLE_EQ(speedup_upper_bound(1200), 1201.0);
    EXPECT_NEAR(speedup_closed_form({1e12, 1, 1200, 0}), 1201.0, 1e-3);
}

TEST(ClosedForm, MonotoneInDrivers) {
    double prev = 0;
    for (double r_t = 0.1; r_t <= 1.0; r_t += 0.1) {
        double v = speedup_closed_form({1000, r_t, 1200, 0});
        EXPECT_GT(v, prev);
        prev = v;
    }
    EXPECT_GT(speedup_closed_form({1000, 1, 1200, 0}), speedup_closed_form({1000, 1, 1200, 0.5}));
}

TEST(FromTimes, MatchesClosedForm) {
    std::mt19937_64 rng(2);
    std::uniform_real_distribution<double> u(0, 1);
    for (int i = 0; i < 10000; ++i) {
        uint64_t d = 1 + rng() % 500;
        uint64_t n_t = 1 + rng() % d;
        LayerTimingParams p;
        p.r = 1 + static_cast<double>(rng() % 20);
        p.c_msf = 100 + 5000 * u(rng);
        p.t_cycle_na = 1e-4 + 1e-2 * u(rng);
        p.t_cycle_sc = 1e-7 + 1e-5 * u(rng);
        p.t_mst = 1e-3 * u(rng);
        double a = speedup_from_times(d, n_t, p);
        double b = speedup_closed_form(speedup_inputs(d, n_t, p));
        ASSERT_NEAR(a, b, 1e-9 * b);
    }
}

TEST(FromTimes, RejectsBadCounts) {
    EXPECT_THROW(speedup_from_times(0, 0, {}), InputError);
    EXPECT_THROW(speedup_from_times(3, 4, {}), InputError);
}

TEST(OverheadBound, ReferenceValue) {
    EXPECT_DOUBLE_EQ(expected_overhead_lower_bound(0.5, 0.5, 1, 10, 5, 0.5, 18), 37.0);
    EXPECT_THROW(expected_overhead_lower_bound(0.5, 0.5, 1, 10, 0, 0.5, 18), InputError);
}

TEST(OverheadBound, BelowEmpiricalMeanOnRandomTimelines) {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 300; ++trial) {
        size_t layers = 20 + rng() % 80;
        uint64_t n = 1 + rng() % 20, b = 1 + rng() % 10;
        uint32_t r = 1 + static_cast<uint32_t>(rng() % 15), d = 1 + static_cast<uint32_t>(rng() % 20);
        double phi = static_cast<double>(rng() % 3) / 2;
        double sum = 0;
        size_t count = 0, fits = 0, small = 0;
        for (size_t i = 0; i < layers; ++i) {
            uint64_t q = 1 + rng() % 40, dq = 1 + rng() % 30;
            sum += storeload_cycles(q, dq, n, b, r, d, phi).total();
            ++count;
            fits += q <= n;
            small += dq <= b;
        }
        double alpha = static_cast<double>(fits) / count, beta = static_cast<double>(small) / count;
        EXPECT_LE(expected_overhead_lower_bound(alpha, beta, r, n, b, phi, d), sum / count + 1e-9);
    }
}

TEST(UniformWorkload, Shape) {
    FTWorkload w = uniform_workload(5, 2, 4);
    WorkloadProfile p = profile(w);
    EXPECT_EQ(p.d, 5u);
    EXPECT_EQ(p.n_t, 2u);
    for (auto q : p.q_act) EXPECT_EQ(q, 4u);
    EXPECT_EQ(p.magic_demand, (std::vector<uint64_t>{1, 1, 0, 0, 0}));
    EXPECT_THROW(uniform_workload(2, 3, 1), InputError);
}

TEST(Crosscheck, WithinOnePercent) {
    for (uint32_t n_t : {13u, 25u, 50u}) {
        CrosscheckResult r = crosscheck(uniform_workload(50, n_t, 10));
        EXPECT_LT(r.relative_error, 0.01) << n_t;
        EXPECT_GT(r.simulated_speedup, 1.0);
    }
}

TEST(Crosscheck, ExactWithoutGateTime) {
    CrosscheckOptions o;
    o.exact = true;
    o.base.link.t_mst = 3e-4;
    CrosscheckResult r = crosscheck(uniform_workload(40, 10, 6), o);
    EXPECT_LT(r.relative_error, 1e-12);
    EXPECT_GT(r.inputs.p_trans, 0.0);
}

TEST(Crosscheck, CliffordOnlyGivesUnitSpeedup) {
    CrosscheckResult r = crosscheck(uniform_workload(10, 0, 3));
    EXPECT_DOUBLE_EQ(r.simulated_speedup, 1.0);
    EXPECT_DOUBLE_EQ(r.closed_form_speedup, 1.0);
}

TEST(Crosscheck, RejectsNonUniformWorkloads) {
    FTWorkload w = uniform_workload(4, 2, 3);
    std::swap(w.gate_layers[0], w.gate_layers[3]);
    EXPECT_THROW(crosscheck(w), InputError);
    FTWorkload narrow = uniform_workload(4, 2, 3);
    narrow.gate_layers[2].cliffords.pop_back();
    EXPECT_THROW(crosscheck(narrow), InputError);
    FTWorkload doubled = uniform_workload(4, 2, 3);
    doubled.gate_layers[0].cliffords.pop_back();
    doubled.gate_layers[0].t_gates.push_back({2, false});
    EXPECT_THROW(crosscheck(doubled), InputError);
}

}  // namespace
}  // namespace hqa
