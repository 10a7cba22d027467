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

#include <gtest/gtest.h>

#include <random>

#include "hqa/error.h"

namespace hqa {
namespace {

GateLayer layer(std::vector<CliffordGate> cliffords, std::vector<TGate> ts = {}) {
    GateLayer gl;
    gl.cliffords = std::move(cliffords);
    gl.t_gates = std::move(ts);
    return gl;
}

FTWorkload two_layer_gbc() {
    FTWorkload w;
    w.scheme = Scheme::GBC;
    w.n_total = 4;
    w.gate_layers.push_back(layer({{CliffordKind::CX, {0, 1}}}, {{2, false}}));
    w.gate_layers.push_back(layer({{CliffordKind::H, {3}}}));
    return w;
}

TEST(PauliString, WeightSupportAndText) {
    PauliString p;
    p.terms[3] = PauliAxis::Z;
    p.terms[0] = PauliAxis::X;
    EXPECT_EQ(p.weight(), 2u);
    EXPECT_EQ(p.support(), (std::set<Qubit>{0, 3}));
    EXPECT_EQ(p.str(), "X0*Z3");
}

TEST(PauliAxis, ParseRoundTrip) {
    for (char c : {'X', 'Y', 'Z'}) EXPECT_EQ(axis_char(parse_axis(c)), c);
    EXPECT_THROW(parse_axis('I'), InputError);
}

TEST(Scheme, ParseNames) {
    EXPECT_EQ(parse_scheme("gbc"), Scheme::GBC);
    EXPECT_EQ(parse_scheme("pbc"), Scheme::PBC);
    EXPECT_THROW(parse_scheme("lattice"), InputError);
}

TEST(GateLayer, ActiveSetCoversCliffordsAndT) {
    GateLayer gl = layer({{CliffordKind::CX, {0, 1}}}, {{5, true}});
    EXPECT_EQ(gl.active_set(), (std::set<Qubit>{0, 1, 5}));
    EXPECT_EQ(gl.k_t(), 1u);
    EXPECT_TRUE(gl.is_t_layer());
}

TEST(FTWorkload, ValidateRejectsOutOfRangeQubit) {
    FTWorkload w = two_layer_gbc();
    w.gate_layers[1].cliffords[0].qubits = {9};
    EXPECT_THROW(w.validate(), InputError);
}

TEST(FTWorkload, ValidateRejectsQubitUsedTwiceInLayer) {
    FTWorkload w = two_layer_gbc();
    w.gate_layers[0].t_gates.push_back({0, false});
    EXPECT_THROW(w.validate(), InputError);
}

TEST(FTWorkload, ValidateRejectsEmptyRotation) {
    FTWorkload w;
    w.scheme = Scheme::PBC;
    w.n_total = 2;
    w.ppm_layers.push_back({});
    EXPECT_THROW(w.validate(), InputError);
}

TEST(FTWorkload, ValidateRejectsLayersUnderWrongScheme) {
    FTWorkload w = two_layer_gbc();
    w.ppm_layers.push_back({});
    EXPECT_THROW(w.validate(), InputError);
}

TEST(Profile, EmptyWorkloadThrows) {
    FTWorkload w;
    EXPECT_THROW(profile(w), InputError);
}

TEST(Profile, GateBasedTimelines) {
    WorkloadProfile p = profile(two_layer_gbc());
    EXPECT_EQ(p.d, 2u);
    EXPECT_EQ(p.n_t, 1u);
    EXPECT_DOUBLE_EQ(p.r_t, 0.5);
    EXPECT_EQ(p.q_act, (std::vector<uint64_t>{3, 1}));
    // {0,1,2} vs {3}: four qubits change.
    EXPECT_EQ(p.delta_q_act, (std::vector<uint64_t>{4}));
    EXPECT_TRUE(p.w_pauli.empty());
    EXPECT_EQ(p.delta_into(0), 0u);
    EXPECT_EQ(p.delta_into(1), 4u);
    EXPECT_EQ(p.total_magic(), 1u);
}

TEST(Profile, PauliBasedTimelines) {
    FTWorkload w;
    w.scheme = Scheme::PBC;
    w.n_total = 3;
    PPMLayer a, b;
    a.rotation.terms = {{0, PauliAxis::X}, {1, PauliAxis::Z}};
    b.rotation.terms = {{1, PauliAxis::Y}, {2, PauliAxis::Z}};
    b.consumes_magic = false;
    w.ppm_layers = {a, b};
    WorkloadProfile p = profile(w);
    EXPECT_EQ(p.w_pauli, (std::vector<uint64_t>{2, 2}));
    EXPECT_EQ(p.delta_q_act, (std::vector<uint64_t>{2}));
    EXPECT_EQ(p.n_t, 1u);
    EXPECT_EQ(p.magic_demand, (std::vector<uint64_t>{1, 0}));
}

TEST(Quantile, NearestRank) {
    std::vector<uint64_t> v{5, 1, 4, 2, 3};
    EXPECT_EQ(quantile(v, 0.0), 1u);
    EXPECT_EQ(quantile(v, 0.2), 1u);
    EXPECT_EQ(quantile(v, 0.5), 3u);
    EXPECT_EQ(quantile(v, 0.8), 4u);
    EXPECT_EQ(quantile(v, 1.0), 5u);
}

TEST(Quantile, ExactRankDespiteRounding) {
    // 0.1 * 30 is slightly above 3 in binary floating point.
    std::vector<uint64_t> v(30);
    for (size_t i = 0; i < v.size(); ++i) v[i] = i;
    EXPECT_EQ(quantile(v, 0.1), 2u);
}

TEST(Quantile, RejectsBadInputs) {
    std::vector<uint64_t> empty;
    EXPECT_THROW(quantile(empty, 0.5), InputError);
    std::vector<uint64_t> v{1};
    EXPECT_THROW(quantile(v, 1.5), InputError);
}

TEST(SymmetricDifference, MatchesSetAlgebraOnRandomSets) {
    std::mt19937_64 rng(7);
    std::bernoulli_distribution coin(0.4);
    for (int trial = 0; trial < 200; ++trial) {
        std::set<Qubit> a, b;
        for (Qubit q = 0; q < 40; ++q) {
            if (coin(rng)) a.insert(q);
            if (coin(rng)) b.insert(q);
        }
        std::vector<Qubit> diff;
        std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(diff));
        EXPECT_EQ(symmetric_difference_size(a, b), diff.size());
    }
}

TEST(Profile, InvariantsOnRandomWorkloads) {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 50; ++trial) {
        FTWorkload w;
        w.scheme = Scheme::GBC;
        w.n_total = 12;
        std::uniform_int_distribution<int> depth(1, 30);
        int d = depth(rng);
        for (int i = 0; i < d; ++i) {
            GateLayer gl;
            for (Qubit q = 0; q < w.n_total; ++q) {
                int roll = static_cast<int>(rng() % 4);
                if (roll == 0) gl.t_gates.push_back({q, false});
                if (roll == 1) gl.cliffords.push_back({CliffordKind::H, {q}});
            }
            w.gate_layers.push_back(gl);
        }
        WorkloadProfile p = profile(w);
        EXPECT_EQ(p.q_act.size(), p.d);
        EXPECT_EQ(p.delta_q_act.size(), p.d - 1);
        EXPECT_LE(p.n_t, p.d);
        EXPECT_GE(p.r_t, 0.0);
        EXPECT_LE(p.r_t, 1.0);
        for (size_t i = 0; i + 1 < p.d; ++i) {
            EXPECT_LE(p.delta_q_act[i], p.q_act[i] + p.q_act[i + 1]);
        }
        for (auto q : p.q_act) EXPECT_LE(q, w.n_total);
    }
}

}  // namespace
}  // namespace hqa
