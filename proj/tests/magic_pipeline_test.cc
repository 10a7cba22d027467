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

#include "hqa/magic_pipeline.h"

#include <gtest/gtest.h>

#include "hqa/error.h"

namespace hqa {
namespace {

ArchConfig with_scheme(SchemeName s) {
    ArchConfig c;
    HostRoles r = roles_of(s);
    c.scheme_name = s;
    c.compute_host = r.compute;
    c.memory_host = r.memory;
    c.msf_host = r.msf;
    c.msf.host = r.msf;
    c.mcsep = r.mcsep;
    return c;
}

TEST(MagicPipeline, StateTimePerHost) {
    MagicPipeline na(with_scheme(SchemeName::NA_SF), false, 0);
    MagicPipeline sc(with_scheme(SchemeName::SC_SF), false, 0);
    EXPECT_NEAR(na.t_ms(), 2.4, 1e-12);
    EXPECT_NEAR(sc.t_ms(), 2.4e-3, 1e-15);
    EXPECT_DOUBLE_EQ(na.t_offset(), 0.0);
}

TEST(MagicPipeline, CrossModalityRateAndOffset) {
    ArchConfig c = with_scheme(SchemeName::HT_SF_MACC);
    c.msf.copies = 4;
    c.link.mu_link = 1000.0;
    c.link.t_mst = 1e-3;
    MagicPipeline p(c, false, 0);
    EXPECT_NEAR(p.mu_msf(), 4 / 2.4e-3, 1e-9);
    EXPECT_DOUBLE_EQ(p.mu_deliv(), 1000.0);
    EXPECT_DOUBLE_EQ(p.t_offset(), 1e-3);
}

TEST(MagicPipeline, FirstStateWaitsForProductionAndLink) {
    ArchConfig c = with_scheme(SchemeName::HT_SF_MACC);
    c.link.t_mst = 5e-4;
    MagicPipeline p(c, false, 0);
    MagicWait w = p.take(1, 0.0);
    EXPECT_NEAR(w.ready, 5e-4 + 2.4e-3, 1e-15);
    EXPECT_NEAR(w.link_wait, 5e-4, 1e-15);
    EXPECT_NEAR(w.factory_wait, 2.4e-3, 1e-15);
    EXPECT_EQ(p.held(), 1u);
    EXPECT_EQ(p.consumed(), 1u);
}

TEST(MagicPipeline, BufferFillsToCapacityThenStalls) {
    ArchConfig c = with_scheme(SchemeName::SC_SF);
    c.q_magic = 3;
    MagicPipeline p(c, false, 0);
    p.advance(1.0);
    EXPECT_DOUBLE_EQ(p.level(), 3.0);
    MagicWait w = p.take(3, 1.0);
    EXPECT_DOUBLE_EQ(w.ready, 1.0);
    EXPECT_DOUBLE_EQ(w.factory_wait, 0.0);
}

TEST(MagicPipeline, HeldSlotsBlockProductionUntilRelease) {
    ArchConfig c = with_scheme(SchemeName::HT_SF_MACC);
    c.link.t_mst = 1e-4;
    MagicPipeline p(c, false, 0);
    MagicWait first = p.take(1, 0.0);
    // The single slot stays held through the layer, so production pauses.
    double end = first.ready + 1e-2;
    p.release(end);
    MagicWait second = p.take(1, end);
    EXPECT_NEAR(second.ready - end, 1e-4 + 2.4e-3, 1e-12);
}

TEST(MagicPipeline, NoDeliveriesWhileLayerConsumes) {
    ArchConfig c = with_scheme(SchemeName::SC_SF);
    c.q_magic = 4;
    MagicPipeline p(c, false, 0);
    MagicWait first = p.take(1, 0.0);
    EXPECT_NEAR(first.ready, 2.4e-3, 1e-15);
    // Three slots stay free, but the buffer is busy for the whole layer.
    p.advance(first.ready + 0.5);
    EXPECT_DOUBLE_EQ(p.level(), 0.0);
    p.release(first.ready + 0.5);
    MagicWait second = p.take(1, first.ready + 0.5);
    EXPECT_NEAR(second.ready - (first.ready + 0.5), 2.4e-3, 1e-12);
}

TEST(MagicPipeline, StochasticPausesDuringConsumingLayer) {
    ArchConfig c = with_scheme(SchemeName::SC_SF);
    c.q_magic = 4;
    c.msf.copies = 3;
    for (uint64_t seed = 0; seed < 50; ++seed) {
        MagicPipeline p(c, true, seed);
        MagicWait w = p.take(1, 0.0);
        p.release(w.ready + 10.0);
        // Nothing finished during the ten-second hold can be waiting already.
        EXPECT_LE(p.level(), 2.0);
    }
}

TEST(MagicPipeline, RejectsDemandAboveCapacity) {
    ArchConfig c = with_scheme(SchemeName::NA_SF);
    c.q_magic = 2;
    MagicPipeline p(c, false, 0);
    EXPECT_THROW(p.take(3, 0.0), InfeasibleError);
}

TEST(MagicPipeline, CopiesScaleThroughput) {
    ArchConfig c = with_scheme(SchemeName::SC_SF);
    c.q_magic = 8;
    c.msf.copies = 4;
    MagicPipeline p(c, false, 0);
    MagicWait w = p.take(8, 0.0);
    EXPECT_NEAR(w.ready, 8 * 2.4e-3 / 4, 1e-12);
}

TEST(MagicPipeline, StochasticIsReproducible) {
    ArchConfig c = with_scheme(SchemeName::SC_SF);
    c.q_magic = 4;
    c.msf.copies = 2;
    auto trace = [&](uint64_t seed) {
        MagicPipeline p(c, true, seed);
        std::vector<double> out;
        double now = 0;
        for (int i = 0; i < 20; ++i) {
            now = p.take(2, now).ready + 1e-5;
            p.release(now);
            out.push_back(now);
        }
        return out;
    };
    EXPECT_EQ(trace(42), trace(42));
    EXPECT_NE(trace(42), trace(43));
}

TEST(MagicPipeline, StochasticMeanMatchesExpectedStateTime) {
    ArchConfig c = with_scheme(SchemeName::SC_SF);
    double sum = 0;
    const int runs = 4000;
    for (int seed = 0; seed < runs; ++seed) {
        MagicPipeline p(c, true, static_cast<uint64_t>(seed));
        sum += p.take(1, 0.0).ready;
    }
    EXPECT_NEAR(sum / runs, 2.4e-3, 0.05 * 2.4e-3);
}

TEST(MagicPipeline, StochasticNeverExceedsCapacity) {
    ArchConfig c = with_scheme(SchemeName::SC_SF);
    c.q_magic = 3;
    c.msf.copies = 5;
    MagicPipeline p(c, true, 9);
    double now = 0;
    for (int i = 0; i < 50; ++i) {
        p.advance(now);
        EXPECT_LE(p.level() + static_cast<double>(p.held()), 3.0);
        now = p.take(1 + i % 3, now).ready + 1e-3;
        p.release(now);
    }
}

}  // namespace
}  // namespace hqa
