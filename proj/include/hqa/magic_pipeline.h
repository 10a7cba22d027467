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

#ifndef HQA_MAGIC_PIPELINE_H
#define HQA_MAGIC_PIPELINE_H

#include <cstdint>
#include <queue>
#include <random>
#include <vector>

#include "hqa/arch.h"

namespace hqa {

struct MagicWait {
    double ready = 0;
    /// Portion of the wait spent on factory production.
    double factory_wait = 0;
    /// Portion of the wait that would vanish with a zero-latency link.
    double link_wait = 0;
};

/// Magic-state supply seen by the compute region: k factories feeding a
/// buffer of q_magic slots, optionally through a rate-limited link with a
/// fixed one-way latency.
///
/// States taken by a layer keep their slot until the layer completes, and the
/// buffer accepts no deliveries while a layer consumes from it. Factories
/// pause during such layers and whenever every slot is filled; after they
/// restart the first arrival pays the link latency again.
///
/// Deterministic mode is a fluid at rate mu_deliv. Stochastic mode draws a
/// geometric number of attempts per state per factory.
class MagicPipeline {
   public:
    MagicPipeline(const ArchConfig &config, bool stochastic, uint64_t seed);

    /// Seconds per state of one factory: C_att * t_cycle(host) / p.
    double t_ms() const {
        return t_ms_;
    }
    double mu_msf() const {
        return mu_msf_;
    }
    double mu_deliv() const {
        return mu_deliv_;
    }
    double t_offset() const {
        return offset_;
    }
    uint64_t capacity() const {
        return capacity_;
    }
    /// States ready for consumption at the last advance.
    double level() const {
        return level_;
    }
    uint64_t held() const {
        return held_;
    }
    uint64_t consumed() const {
        return consumed_;
    }

    /// Blocks until `count` states are available at or after `now`, then
    /// moves them into the held set (MAGIC_TAKE).
    MagicWait take(uint64_t count, double now);
    /// Frees the slots held by the finishing layer.
    void release(double now);
    void advance(double t);

   private:
    void advance_fluid(double t);
    void advance_discrete(double t);
    double next_discrete_event() const;
    double next_discrete_start(size_t *factory) const;
    uint64_t reserved() const;

    bool stochastic_;
    uint64_t capacity_;
    double t_ms_;
    double mu_msf_;
    double mu_deliv_;
    double offset_;
    double clock_ = 0;
    double level_ = 0;
    uint64_t held_ = 0;
    uint64_t consumed_ = 0;

    // fluid
    bool stalled_ = false;
    double resumed_at_ = 0;

    // discrete
    double attempt_seconds_ = 0;
    double success_prob_ = 1;
    double link_interval_ = 0;
    double link_free_at_ = 0;
    double slot_free_since_ = 0;
    double hold_start_ = 0;
    std::vector<double> factory_free_at_;
    std::priority_queue<double, std::vector<double>, std::greater<>> in_flight_;
    std::mt19937_64 rng_;
};

}  // namespace hqa

#endif
