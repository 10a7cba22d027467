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

#include "hqa/trace.h"

#include <fstream>

#include "hqa/error.h"

namespace hqa {

namespace {

CliffordKind parse_clifford(const std::string &name) {
    static const std::pair<const char *, CliffordKind> table[] = {
        {"h", CliffordKind::H},  {"s", CliffordKind::S},  {"sdg", CliffordKind::Sdg}, {"x", CliffordKind::X},
        {"y", CliffordKind::Y},  {"z", CliffordKind::Z},  {"cx", CliffordKind::CX},   {"cz", CliffordKind::CZ},
    };
    for (const auto &[key, kind] : table) {
        if (name == key) {
            return kind;
        }
    }
    throw InputError("trace: unknown clifford gate '" + name + "'");
}

Qubit parse_qubit(const nlohmann::json &v) {
    if (!v.is_number_integer() || v.get<int64_t>() < 0) {
        throw InputError("trace: qubit index must be a non-negative integer, got " + v.dump());
    }
    return v.get<Qubit>();
}

}  // namespace

nlohmann::json workload_to_json(const FTWorkload &workload) {
    nlohmann::json doc;
    doc["scheme"] = std::string(scheme_name(workload.scheme));
    doc["n_total"] = workload.n_total;
    doc["name"] = workload.name;
    auto layers = nlohmann::json::array();
    if (workload.scheme == Scheme::GBC) {
        for (const auto &layer : workload.gate_layers) {
            auto cliffords = nlohmann::json::array();
            for (const auto &g : layer.cliffords) {
                auto entry = nlohmann::json::array({std::string(clifford_name(g.kind))});
                for (Qubit q : g.qubits) {
                    entry.push_back(q);
                }
                cliffords.push_back(std::move(entry));
            }
            auto ts = nlohmann::json::array();
            for (const auto &t : layer.t_gates) {
                ts.push_back(nlohmann::json::array({t.qubit, t.dagger}));
            }
            layers.push_back({{"cliffords", std::move(cliffords)}, {"t", std::move(ts)}});
        }
    } else {
        for (const auto &layer : workload.ppm_layers) {
            nlohmann::json pauli = nlohmann::json::object();
            for (const auto &[q, axis] : layer.rotation.terms) {
                pauli[std::to_string(q)] = std::string(1, axis_char(axis));
            }
            layers.push_back({{"pauli", std::move(pauli)}, {"magic", layer.consumes_magic}, {"sign", layer.sign}});
        }
    }
    doc["layers"] = std::move(layers);
    return doc;
}

FTWorkload workload_from_json(const nlohmann::json &doc) {
    try {
        FTWorkload w;
        w.scheme = parse_scheme(doc.at("scheme").get<std::string>());
        auto n = doc.at("n_total");
        if (!n.is_number_integer() || n.get<int64_t>() < 0) {
            throw InputError("trace: n_total must be a non-negative integer");
        }
        w.n_total = n.get<uint32_t>();
        w.name = doc.value("name", std::string{});
        for (const auto &layer : doc.at("layers")) {
            if (w.scheme == Scheme::GBC) {
                GateLayer gl;
                for (const auto &entry : layer.value("cliffords", nlohmann::json::array())) {
                    if (!entry.is_array() || entry.empty()) {
                        throw InputError("trace: clifford entry must be [name, qubits...]");
                    }
                    CliffordGate g{parse_clifford(entry[0].get<std::string>()), {}};
                    for (size_t k = 1; k < entry.size(); k++) {
                        g.qubits.push_back(parse_qubit(entry[k]));
                    }
                    gl.cliffords.push_back(std::move(g));
                }
                for (const auto &entry : layer.value("t", nlohmann::json::array())) {
                    if (!entry.is_array() || entry.size() != 2 || !entry[1].is_boolean()) {
                        throw InputError("trace: t entry must be [qubit, dagger]");
                    }
                    gl.t_gates.push_back({parse_qubit(entry[0]), entry[1].get<bool>()});
                }
                w.gate_layers.push_back(std::move(gl));
            } else {
                PPMLayer pl;
                for (const auto &[key, axis] : layer.at("pauli").items()) {
                    std::string a = axis.get<std::string>();
                    if (a.size() != 1) {
                        throw InputError("trace: Pauli axis must be one of X, Y, Z");
                    }
                    size_t used = 0;
                    unsigned long q = std::stoul(key, &used);
                    if (used != key.size()) {
                        throw InputError("trace: bad qubit key '" + key + "'");
                    }
                    pl.rotation.terms[static_cast<Qubit>(q)] = parse_axis(a[0]);
                }
                pl.consumes_magic = layer.value("magic", true);
                pl.sign = layer.value("sign", 1);
                w.ppm_layers.push_back(std::move(pl));
            }
        }
        w.validate();
        return w;
    } catch (const nlohmann::json::exception &e) {
        throw InputError(std::string("trace: ") + e.what());
    } catch (const std::invalid_argument &) {
        throw InputError("trace: non-numeric qubit key");
    }
}

FTWorkload read_trace_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw InputError("cannot open trace file '" + path + "'");
    }
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::exception &e) {
        throw InputError(path + ": " + e.what());
    }
    return workload_from_json(doc);
}

void write_trace_file(const FTWorkload &workload, const std::string &path) {
    std::ofstream out(path);
    if (!out) {
        throw InputError("cannot write trace file '" + path + "'");
    }
    out << workload_to_json(workload).dump() << "\n";
}

nlohmann::json profile_to_json(const WorkloadProfile &prof) {
    return {
        {"scheme", std::string(scheme_name(prof.scheme))},
        {"n_total", prof.n_total},
        {"d", prof.d},
        {"n_t", prof.n_t},
        {"r_t", prof.r_t},
        {"q_act", prof.q_act},
        {"delta_q_act", prof.delta_q_act},
        {"w_pauli", prof.w_pauli},
        {"magic_demand", prof.magic_demand},
    };
}

}  // namespace hqa
