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

#include <algorithm>
#include <cmath>
#include <limits>

#include "hqa/error.h"

namespace hqa {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kEps = 1e-9;

}  // namespace

MagicPipeline::MagicPipeline(const ArchConfig &config, bool stochastic, uint64_t seed)
    : stochastic_(stochastic), capacity_(config.q_magic), rng_(seed) {
    const ModalityParams &host = config.modality(config.msf_host);
    t_ms_ = config.msf.cycles_per_attempt * host.t_cycle / config.msf.success_prob;
    mu_msf_ = static_cast<double>(config.msf.copies) / t_ms_;
    bool cross = config.cross_modality_magic();
    mu_deliv_ = cross ? std::min(mu_msf_, config.link.mu_link) : mu_msf_;
    offset_ = cross ? config.link.t_mst : 0.0;

    attempt_seconds_ = config.msf.cycles_per_attempt * host.t_cycle;
    success_prob_ = config.msf.success_prob;
    link_interval_ = (cross && std::isfinite(config.link.mu_link)) ? 1.0 / config.link.mu_link : 0.0;
    factory_free_at_.assign(config.msf.copies, 0.0);
}

uint64_t MagicPipeline::reserved() const {
    return static_cast<uint64_t>(level_) + held_ + in_flight_.size();
}

void MagicPipeline::advance(double t) {
    if (t < clock_) {
        return;
    }
    // Discrete events stamped exactly at the clock (a slot freed by a release)
    // still need processing, so equal times are not skipped.
    if (stochastic_) {
        advance_discrete(t);
    } else if (t > clock_) {
        advance_fluid(t);
    }
    clock_ = t;
}

void MagicPipeline::advance_fluid(double t) {
    if (stalled_) {
        return;
    }
    double start = std::max(clock_, resumed_at_ + offset_);
    if (t <= start) {
        return;
    }
    double room = static_cast<double>(capacity_ - held_) - level_;
    if (mu_deliv_ * (t - start) >= room - kEps) {
        level_ = static_cast<double>(capacity_ - held_);
        stalled_ = true;
    } else {
        level_ += mu_deliv_ * (t - start);
    }
}

double MagicPipeline::next_discrete_start(size_t *factory) const {
    if (held_ > 0 || reserved() >= capacity_) {
        return kInf;
    }
    auto it = std::min_element(factory_free_at_.begin(), factory_free_at_.end());
    *factory = static_cast<size_t>(it - factory_free_at_.begin());
    return std::max(*it, slot_free_since_);
}

double MagicPipeline::next_discrete_event() const {
    size_t f = 0;
    double arrival = in_flight_.empty() ? kInf : in_flight_.top();
    return std::min(arrival, next_discrete_start(&f));
}

void MagicPipeline::advance_discrete(double t) {
    std::geometric_distribution<uint64_t> failures(success_prob_);
    while (true) {
        size_t f = 0;
        double arrival = in_flight_.empty() ? kInf : in_flight_.top();
        double start = next_discrete_start(&f);
        if (std::min(arrival, start) > t) {
            break;
        }
        if (arrival <= start) {
            in_flight_.pop();
            level_ += 1;
            continue;
        }
        double done = start + static_cast<double>(failures(rng_) + 1) * attempt_seconds_;
        double send = done;
        if (link_interval_ > 0) {
            send = std::max(done, link_free_at_);
            link_free_at_ = send + link_interval_;
        }
        in_flight_.push(send + offset_);
        factory_free_at_[f] = done;
    }
}

MagicWait MagicPipeline::take(uint64_t count, double now) {
    MagicWait w{now, 0, 0};
    if (count == 0) {
        return w;
    }
    if (count > capacity_) {
        throw InfeasibleError("layer needs " + std::to_string(count) + " magic states but the magic buffer holds " +
                              std::to_string(capacity_));
    }
    advance(now);
    double need = static_cast<double>(count);
    if (level_ < need - kEps) {
        if (stochastic_) {
            while (level_ < need) {
                double next = next_discrete_event();
                if (!std::isfinite(next)) {
                    throw InfeasibleError("magic pipeline cannot supply the requested states");
                }
                advance(std::max(next, clock_));
            }
            w.ready = clock_;
            w.link_wait = std::min(w.ready - now, offset_);
        } else {
            double start = std::max(now, resumed_at_ + offset_);
            w.ready = start + (need - level_) / mu_deliv_;
            w.link_wait = std::min(w.ready - now, offset_);
            advance(w.ready);
            level_ = std::max(level_, need);
        }
        w.factory_wait = (w.ready - now) - w.link_wait;
    }
    level_ -= need;
    if (level_ < kEps) {
        level_ = 0;
    }
    held_ += count;
    consumed_ += count;
    hold_start_ = w.ready;
    stalled_ = true;
    return w;
}

void MagicPipeline::release(double now) {
    if (held_ == 0) {
        advance(now);
        return;
    }
    if (stochastic_) {
        // Factories were paused for the hold; push their pending work back.
        double pause = std::max(0.0, now - hold_start_);
        std::vector<double> pending;
        while (!in_flight_.empty()) {
            double t = in_flight_.top();
            in_flight_.pop();
            pending.push_back(t > hold_start_ ? t + pause : t);
        }
        for (double t : pending) {
            in_flight_.push(t);
        }
        for (double &t : factory_free_at_) {
            if (t > hold_start_) {
                t += pause;
            }
        }
        if (link_free_at_ > hold_start_) {
            link_free_at_ += pause;
        }
        held_ = 0;
        slot_free_since_ = std::max(slot_free_since_, now);
        advance(now);
        return;
    }
    advance(now);
    held_ = 0;
    if (stalled_ && level_ < static_cast<double>(capacity_) - kEps) {
        stalled_ = false;
        resumed_at_ = now;
    }
}

}  // namespace hqa
