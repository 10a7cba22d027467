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

#include "hqa/config_io.h"

#include <cmath>
#include <fstream>

#include "hqa/error.h"

namespace hqa {

namespace {

void flatten_into(const nlohmann::json &node, const std::string &prefix, Overrides &out) {
    if (node.is_object()) {
        for (const auto &[key, child] : node.items()) {
            flatten_into(child, prefix.empty() ? key : prefix + "." + key, out);
        }
    } else {
        out.emplace_back(prefix, node);
    }
}

double as_double(const std::string &key, const nlohmann::json &v) {
    if (v.is_number()) {
        return v.get<double>();
    }
    if (v.is_string()) {
        std::string s = v.get<std::string>();
        if (s == "inf" || s == "infinity" || s == "unbounded") {
            return std::numeric_limits<double>::infinity();
        }
    }
    throw InputError("config key '" + key + "' expects a number, got " + v.dump());
}

uint64_t as_count(const std::string &key, const nlohmann::json &v) {
    if (v.is_number_integer() && v.get<int64_t>() >= 0) {
        return v.get<uint64_t>();
    }
    if (v.is_number_float()) {
        double d = v.get<double>();
        if (d >= 0 && std::floor(d) == d) {
            return static_cast<uint64_t>(d);
        }
    }
    throw InputError("config key '" + key + "' expects a non-negative integer, got " + v.dump());
}

uint32_t as_u32(const std::string &key, const nlohmann::json &v) {
    uint64_t x = as_count(key, v);
    if (x > std::numeric_limits<uint32_t>::max()) {
        throw InputError("config key '" + key + "' out of range");
    }
    return static_cast<uint32_t>(x);
}

std::string as_string(const std::string &key, const nlohmann::json &v) {
    if (!v.is_string()) {
        throw InputError("config key '" + key + "' expects a string, got " + v.dump());
    }
    return v.get<std::string>();
}

bool apply_modality(ModalityParams &m, const std::string &field, const std::string &key, const nlohmann::json &v) {
    if (field == "t_cycle") {
        m.t_cycle = as_double(key, v);
    } else if (field == "t_sm") {
        m.t_sm = as_double(key, v);
    } else if (field == "t_gate") {
        m.t_gate = as_double(key, v);
    } else if (field == "atom_spacing") {
        m.atom_spacing = as_double(key, v);
    } else if (field == "move_constant") {
        m.move_constant = as_double(key, v);
    } else {
        return false;
    }
    return true;
}

nlohmann::json number_or_inf(double x) {
    if (std::isinf(x)) {
        return "inf";
    }
    return x;
}

nlohmann::json modality_json(const ModalityParams &m) {
    return {{"t_cycle", m.t_cycle},
            {"t_sm", m.t_sm},
            {"t_gate", m.t_gate},
            {"atom_spacing", m.atom_spacing},
            {"move_constant", m.move_constant}};
}

}  // namespace

Overrides flatten_config(const nlohmann::json &doc) {
    if (!doc.is_object()) {
        throw InputError("config document must be a JSON object");
    }
    Overrides out;
    flatten_into(doc, "", out);
    return out;
}

Overrides read_config_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw InputError("cannot open config file '" + path + "'");
    }
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::exception &e) {
        throw InputError(path + ": " + e.what());
    }
    return flatten_config(doc);
}

std::pair<std::string, nlohmann::json> parse_setting(const std::string &text) {
    auto eq = text.find('=');
    if (eq == std::string::npos || eq == 0) {
        throw InputError("--set expects key=value, got '" + text + "'");
    }
    std::string key = text.substr(0, eq);
    std::string raw = text.substr(eq + 1);
    nlohmann::json value = nlohmann::json::parse(raw, nullptr, false);
    if (value.is_discarded()) {
        value = raw;
    }
    return {key, value};
}

void apply_setting(ArchConfig &c, const std::string &key, const nlohmann::json &v) {
    auto dot = key.find('.');
    if (dot == std::string::npos) {
        throw InputError("unknown config key '" + key + "'");
    }
    std::string section = key.substr(0, dot);
    std::string field = key.substr(dot + 1);
    bool ok = true;

    if (section == "modalities") {
        auto dot2 = field.find('.');
        std::string which = field.substr(0, dot2);
        std::string rest = dot2 == std::string::npos ? "" : field.substr(dot2 + 1);
        if (which == "na") {
            ok = apply_modality(c.na, rest, key, v);
        } else if (which == "sc") {
            ok = apply_modality(c.sc, rest, key, v);
        } else {
            ok = false;
        }
    } else if (section == "qec") {
        if (field == "d_surf") {
            c.qec.d_surf = as_u32(key, v);
        } else if (field == "d_qldpc") {
            c.qec.d_qldpc = as_u32(key, v);
        } else if (field == "qldpc_k") {
            c.qec.qldpc_k = as_u32(key, v);
        } else if (field == "qldpc_block_phys") {
            c.qec.qldpc_block_phys = as_count(key, v);
        } else if (field == "qldpc_lpu_phys") {
            c.qec.qldpc_lpu_phys = as_count(key, v);
        } else if (field == "sm_rounds_gbc") {
            c.qec.sm_rounds_gbc = as_u32(key, v);
        } else if (field == "sm_rounds_ppm") {
            c.qec.sm_rounds_ppm = as_u32(key, v);
        } else {
            ok = false;
        }
    } else if (section == "msf") {
        if (field == "host") {
            c.msf.host = parse_modality(as_string(key, v));
            c.msf_host = c.msf.host;
        } else if (field == "copies") {
            c.msf.copies = as_u32(key, v);
        } else if (field == "qubits_per_factory") {
            c.msf.qubits_per_factory = as_count(key, v);
        } else if (field == "cycles_per_attempt") {
            c.msf.cycles_per_attempt = as_double(key, v);
        } else if (field == "success_prob") {
            c.msf.success_prob = as_double(key, v);
        } else {
            ok = false;
        }
    } else if (section == "link") {
        if (field == "t_mst") {
            c.link.t_mst = as_double(key, v);
        } else if (field == "mu_link") {
            c.link.mu_link = as_double(key, v);
        } else if (field == "b_lq") {
            c.link.b_lq = as_u32(key, v);
        } else if (field == "t_lqt") {
            c.link.t_lqt = as_double(key, v);
        } else {
            ok = false;
        }
    } else if (section == "arch") {
        if (field == "scheme") {
            c.scheme_name = parse_preset(as_string(key, v));
            HostRoles r = roles_of(c.scheme_name);
            c.compute_host = r.compute;
            c.memory_host = r.memory;
            c.msf_host = r.msf;
            c.msf.host = r.msf;
            c.mcsep = r.mcsep;
        } else if (field == "n_comp") {
            c.n_comp = as_count(key, v);
        } else if (field == "q_buff") {
            c.q_buff = as_count(key, v);
        } else if (field == "q_magic") {
            c.q_magic = as_count(key, v);
        } else if (field == "phi_hide") {
            c.phi_hide = as_double(key, v);
        } else {
            ok = false;
        }
    } else {
        ok = false;
    }
    if (!ok) {
        throw InputError("unknown config key '" + key + "'");
    }
}

void apply_overrides(ArchConfig &config, const Overrides &overrides) {
    for (const auto &[key, value] : overrides) {
        apply_setting(config, key, value);
    }
    config.validate();
}

nlohmann::json config_to_json(const ArchConfig &c) {
    nlohmann::json qec = {{"d_surf", c.qec.d_surf},
                          {"d_qldpc", c.qec.d_qldpc},
                          {"qldpc_k", c.qec.qldpc_k},
                          {"qldpc_block_phys", c.qec.qldpc_block_phys},
                          {"qldpc_lpu_phys", c.qec.qldpc_lpu_phys},
                          {"sm_rounds_gbc", c.qec.sm_rounds_gbc},
                          {"sm_rounds_ppm", c.qec.ppm_rounds()}};
    return {
        {"modalities", {{"na", modality_json(c.na)}, {"sc", modality_json(c.sc)}}},
        {"qec", qec},
        {"msf",
         {{"host", std::string(modality_name(c.msf_host))},
          {"copies", c.msf.copies},
          {"qubits_per_factory", c.msf.qubits_per_factory},
          {"cycles_per_attempt", c.msf.cycles_per_attempt},
          {"success_prob", c.msf.success_prob}}},
        {"link",
         {{"t_mst", c.link.t_mst}, {"mu_link", number_or_inf(c.link.mu_link)}, {"b_lq", c.link.b_lq}, {"t_lqt", c.link.t_lqt}}},
        {"arch",
         {{"scheme", std::string(preset_name(c.scheme_name))},
          {"n_comp", c.n_comp},
          {"q_buff", c.q_buff},
          {"q_magic", c.q_magic},
          {"phi_hide", c.phi_hide}}},
    };
}

}  // namespace hqa
