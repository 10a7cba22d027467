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

#include <gtest/gtest.h>

#include "hqa/error.h"

namespace hqa {
namespace {

WorkloadProfile gbc_profile(std::vector<uint64_t> q_act, std::vector<uint64_t> delta, std::vector<uint64_t> magic) {
    WorkloadProfile p;
    p.scheme = Scheme::GBC;
    p.d = q_act.size();
    p.q_act = std::move(q_act);
    p.delta_q_act = std::move(delta);
    p.magic_demand = std::move(magic);
    return p;
}

TEST(Presets, ParseAcceptsSpellings) {
    EXPECT_EQ(parse_preset("ht-sf-macc"), SchemeName::HT_SF_MACC);
    EXPECT_EQ(parse_preset("HT_SF_MACC"), SchemeName::HT_SF_MACC);
    EXPECT_EQ(parse_preset("Na-McSep"), SchemeName::NA_MCSEP);
    EXPECT_THROW(parse_preset("na-macc"), InputError);
    for (auto s : kAllSchemes) EXPECT_EQ(parse_preset(preset_name(s)), s);
}

TEST(Presets, HostRoles) {
    EXPECT_EQ(execution_scheme(roles_of(SchemeName::SC_SF).compute), Scheme::PBC);
    EXPECT_EQ(execution_scheme(roles_of(SchemeName::HT_MCSEP).compute), Scheme::PBC);
    HostRoles macc = roles_of(SchemeName::HT_SF_MACC);
    EXPECT_EQ(macc.compute, Modality::NA);
    EXPECT_EQ(macc.msf, Modality::SC);
    EXPECT_FALSE(macc.mcsep);
    HostRoles ht = roles_of(SchemeName::HT_MCSEP);
    EXPECT_EQ(ht.memory, Modality::NA);
    EXPECT_TRUE(ht.mcsep);
}

TEST(Presets, SingleFabricUsesWholeWorkload) {
    auto p = gbc_profile({3, 5, 2}, {4, 5}, {0, 2, 1});
    ArchConfig c = preset(SchemeName::NA_SF, p, 40);
    EXPECT_EQ(c.n_comp, 40u);
    EXPECT_EQ(c.q_buff, 0u);
    EXPECT_EQ(c.q_magic, 2u);
    EXPECT_FALSE(c.cross_modality_magic());
}

TEST(Presets, SeparatedGateBasedSizing) {
    auto p = gbc_profile({10, 30, 20, 40}, {3, 9, 1}, {1, 0, 0, 1});
    ArchConfig c = preset(SchemeName::NA_MCSEP, p, 30);
    // Median of q_act is 20, capped at ceil(30/3) = 10.
    EXPECT_EQ(c.n_comp, 10u);
    EXPECT_EQ(c.q_buff, 9u);
    EXPECT_EQ(c.q_magic, 1u);
    ArchConfig wide = preset(SchemeName::HT_MCSEP_MACC, p, 300);
    EXPECT_EQ(wide.n_comp, 20u);
    EXPECT_TRUE(wide.cross_modality_magic());
    EXPECT_FALSE(wide.cross_modality_memory());
}

TEST(Presets, SeparatedPauliBasedSizing) {
    WorkloadProfile p;
    p.scheme = Scheme::PBC;
    p.d = 5;
    p.w_pauli = {1, 4, 2, 3, 2};
    p.q_act = p.w_pauli;
    p.delta_q_act = {3, 4, 1, 5};
    p.magic_demand = {1, 1, 1, 1, 0};
    ArchConfig c = preset(SchemeName::HT_MCSEP, p, 9);
    EXPECT_EQ(c.n_comp, 4u);
    EXPECT_EQ(c.q_buff, 5u);
    EXPECT_TRUE(c.cross_modality_memory());
}

TEST(Presets, SchemeMismatchIsInfeasible) {
    auto p = gbc_profile({1}, {}, {1});
    EXPECT_THROW(preset(SchemeName::SC_SF, p, 1), InfeasibleError);
}

TEST(Presets, BufferIsNeverZeroUnderSeparation) {
    auto p = gbc_profile({2, 2, 2}, {0, 0}, {0, 0, 0});
    EXPECT_EQ(preset(SchemeName::NA_MCSEP, p, 6).q_buff, 1u);
    EXPECT_EQ(buffer_size_for_quantile(p, 0.5), 1u);
}

TEST(Footprint, SingleFabricNeutralAtom) {
    auto p = gbc_profile({100}, {}, {1});
    ArchConfig c = preset(SchemeName::NA_SF, p, 100);
    ResourceBreakdown r = qubit_footprint(c, 100);
    EXPECT_EQ(r.n_compute, 2u * 225 * 100);
    EXPECT_EQ(r.n_memory, 0u);
    EXPECT_EQ(r.n_msf, 463u);
    EXPECT_EQ(r.n_buff, 2u * 225 * 1);
    EXPECT_EQ(r.n_phys, 45913u);
}

TEST(Footprint, MemoryBlocksRoundUp) {
    auto p = gbc_profile({10, 10}, {2}, {1, 0});
    ArchConfig c = preset(SchemeName::NA_MCSEP, p, 100);
    EXPECT_EQ(memory_blocks(c, 100), 9u);
    EXPECT_EQ(qubit_footprint(c, 100).n_memory, 6606u);
    EXPECT_EQ(memory_blocks(c, 96), 8u);
    EXPECT_EQ(memory_blocks(c, 97), 9u);
}

TEST(Footprint, SuperconductingComputeFactor) {
    EXPECT_EQ(surface_code_factor(Modality::SC), 8u);
    EXPECT_EQ(surface_code_factor(Modality::NA), 2u);
}

TEST(Footprint, GrowsWithCopiesAndDistance) {
    auto p = gbc_profile({5, 5}, {0}, {1, 1});
    ArchConfig c = preset(SchemeName::HT_SF_MACC, p, 5);
    uint64_t base = qubit_footprint(c, 5).n_phys;
    c.msf.copies = 3;
    EXPECT_EQ(qubit_footprint(c, 5).n_phys, base + 2 * 463);
    c.qec.d_surf = 17;
    EXPECT_GT(qubit_footprint(c, 5).n_phys, base + 2 * 463);
}

TEST(Validate, RejectsBadParameters) {
    ArchConfig c;
    c.validate();
    auto bad = [&](auto mutate) {
        ArchConfig x;
        mutate(x);
        EXPECT_THROW(x.validate(), InputError);
    };
    bad([](ArchConfig &x) { x.qec.d_surf = 4; });
    bad([](ArchConfig &x) { x.msf.copies = 0; });
    bad([](ArchConfig &x) { x.msf.success_prob = 0; });
    bad([](ArchConfig &x) { x.msf.success_prob = 1.5; });
    bad([](ArchConfig &x) { x.na.t_cycle = 0; });
    bad([](ArchConfig &x) { x.link.t_mst = -1; });
    bad([](ArchConfig &x) { x.phi_hide = 2; });
    bad([](ArchConfig &x) { x.n_comp = 0; });
}

TEST(MsfParams, ExpectedCycles) {
    EXPECT_DOUBLE_EQ(MSFParams{}.expected_cycles(), 2400.0);
}

TEST(Distance, ErrorModelDecreasesWithDistance) {
    SurfaceCodeErrorModel m;
    EXPECT_NEAR(m(3), 0.1 * 1e-2, 1e-15);
    for (uint32_t d = 3; d < 30; d += 2) EXPECT_LT(m(d + 2), m(d));
}

TEST(Distance, PicksSmallestSufficientOddDistance) {
    // 1e6 ops at 0.1 * 0.1^((d+1)/2) each needs 1e-7 per op: d = 11.
    EXPECT_EQ(choose_distance(0.9, 1e6), 11u);
    EXPECT_EQ(choose_distance(0.5, 1.0), 3u);
    EXPECT_THROW(choose_distance(0.9, 1e6, [](uint32_t) { return 1.0; }), InfeasibleError);
    EXPECT_THROW(choose_distance(1.0, 10), InputError);
}

}  // namespace
}  // namespace hqa
