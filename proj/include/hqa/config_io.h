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

#ifndef HQA_CONFIG_IO_H
#define HQA_CONFIG_IO_H

#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "hqa/arch.h"

namespace hqa {

// Config keys (all optional):
//   modalities.{na,sc}.{t_cycle,t_sm,t_gate,atom_spacing,move_constant}
//   qec.{d_surf,d_qldpc,qldpc_k,qldpc_block_phys,qldpc_lpu_phys,sm_rounds_gbc,sm_rounds_ppm}
//   msf.{host,copies,qubits_per_factory,cycles_per_attempt,success_prob}
//   link.{t_mst,mu_link,b_lq,t_lqt}
//   arch.{scheme,n_comp,q_buff,q_magic,phi_hide}

/// Ordered (dotted key, value) pairs; later entries win.
using Overrides = std::vector<std::pair<std::string, nlohmann::json>>;

/// Flattens a nested config document into dotted keys, in document order.
Overrides flatten_config(const nlohmann::json &doc);
Overrides read_config_file(const std::string &path);

/// Parses "key=value". The value is read as JSON when it parses, else as a string.
std::pair<std::string, nlohmann::json> parse_setting(const std::string &text);

/// Applies one override. Throws InputError for unknown keys or bad values.
/// "arch.scheme" re-assigns host roles but leaves sizing untouched.
void apply_setting(ArchConfig &config, const std::string &key, const nlohmann::json &value);
void apply_overrides(ArchConfig &config, const Overrides &overrides);

nlohmann::json config_to_json(const ArchConfig &config);

}  // namespace hqa

#endif
