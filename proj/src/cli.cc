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

#include "hqa/cli.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <future>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

#include "CLI11.hpp"

#include "hqa/analysis.h"
#include "hqa/error.h"
#include "hqa/qasm.h"
#include "hqa/synthesis.h"
#include "hqa/trace.h"

namespace hqa {

using nlohmann::json;

namespace {

bool ends_with(const std::string &s, const std::string &suffix) {
    return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

std::string hex64(uint64_t v) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
    return buf;
}

std::string valid_presets_for(Scheme scheme) {
    std::string out;
    for (auto s : kAllSchemes) {
        if (execution_scheme(roles_of(s).compute) != scheme) continue;
        if (!out.empty()) out += ", ";
        out += preset_name(s);
    }
    return out;
}

}  // namespace

FTWorkload load_workload(const std::string &path, Scheme scheme) {
    if (ends_with(path, ".json")) {
        FTWorkload w = read_trace_file(path);
        if (w.scheme != scheme) {
            throw UsageError("trace '" + path + "' is " + std::string(scheme_name(w.scheme)) +
                             "; compatible presets: " + valid_presets_for(w.scheme));
        }
        return w;
    }
    Circuit c = read_qasm_file(path);
    std::string name = path;
    if (auto slash = name.find_last_of('/'); slash != std::string::npos) name = name.substr(slash + 1);
    return synthesize(c, scheme, name);
}

uint64_t fnv1a64(const std::string &data) {
    uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    return h;
}

SweepAxis parse_axis_name(const std::string &text) {
    static const std::map<std::string, SweepAxis> kNames = {
        {"transport_latency", SweepAxis::TransportLatency}, {"msf_copies", SweepAxis::MsfCopies},
        {"buffer_quantile", SweepAxis::BufferQuantile},     {"msf_success_prob", SweepAxis::MsfSuccessProb},
        {"d_surf", SweepAxis::DSurf},
    };
    auto it = kNames.find(text);
    if (it == kNames.end()) throw UsageError("unknown sweep axis '" + text + "'");
    return it->second;
}

std::string axis_label(SweepAxis axis) {
    switch (axis) {
        case SweepAxis::TransportLatency: return "transport_latency";
        case SweepAxis::MsfCopies: return "msf_copies";
        case SweepAxis::BufferQuantile: return "buffer_quantile";
        case SweepAxis::MsfSuccessProb: return "msf_success_prob";
        case SweepAxis::DSurf: return "d_surf";
    }
    return "?";
}

namespace {

double parse_number(const std::string &text) {
    size_t used = 0;
    double v = 0;
    try {
        v = std::stod(text, &used);
    } catch (const std::exception &) {
        throw UsageError("bad number '" + text + "'");
    }
    if (used != text.size()) throw UsageError("bad number '" + text + "'");
    return v;
}

std::vector<std::string> split(const std::string &text, char sep) {
    std::vector<std::string> parts;
    std::string cur;
    std::istringstream in(text);
    while (std::getline(in, cur, sep)) parts.push_back(cur);
    if (!text.empty() && text.back() == sep) parts.emplace_back();
    return parts;
}

}  // namespace

std::vector<double> parse_axis_values(const std::string &text) {
    if (text.rfind("lin:", 0) == 0 || text.rfind("log:", 0) == 0) {
        auto parts = split(text, ':');
        if (parts.size() != 4) throw UsageError("range must be lin:a:b:n or log:a:b:n");
        double a = parse_number(parts[1]);
        double b = parse_number(parts[2]);
        double nf = parse_number(parts[3]);
        if (nf < 1 || nf != std::floor(nf)) throw UsageError("range point count must be a positive integer");
        auto n = static_cast<size_t>(nf);
        bool log = parts[0] == "log";
        if (log && (a <= 0 || b <= 0)) throw UsageError("log range needs positive ends");
        std::vector<double> out;
        for (size_t i = 0; i < n; ++i) {
            double t = n == 1 ? 0.0 : static_cast<double>(i) / static_cast<double>(n - 1);
            out.push_back(log ? std::exp(std::log(a) + t * (std::log(b) - std::log(a))) : a + t * (b - a));
        }
        // Pin the ends so "log:1e-7:1e-1:7" yields exact decades at the ends.
        out.front() = a;
        if (n > 1) out.back() = b;
        return out;
    }
    std::vector<double> out;
    for (const auto &p : split(text, ',')) out.push_back(parse_number(p));
    if (out.empty()) throw UsageError("empty sweep value list");
    return out;
}

void apply_axis_value(SweepAxis axis, double value, ArchConfig &config, const WorkloadProfile &prof) {
    auto need_int = [&](double lo) {
        if (!(value >= lo) || value != std::floor(value) || value > 1e9) {
            throw InputError(axis_label(axis) + " value " + format_g6(value) + " must be an integer >= " +
                             format_g6(lo));
        }
    };
    switch (axis) {
        case SweepAxis::TransportLatency:
            if (!(value >= 0) || !std::isfinite(value)) throw InputError("transport_latency must be finite and >= 0");
            config.link.t_mst = value;
            break;
        case SweepAxis::MsfCopies:
            need_int(1);
            config.msf.copies = static_cast<uint32_t>(value);
            break;
        case SweepAxis::BufferQuantile:
            if (!(value >= 0 && value <= 1)) throw InputError("buffer_quantile must lie in [0, 1]");
            if (!config.mcsep) throw InputError("buffer_quantile sweeps need an MCSep preset");
            config.q_buff = buffer_size_for_quantile(prof, value);
            break;
        case SweepAxis::MsfSuccessProb:
            if (!(value > 0 && value <= 1)) throw InputError("msf_success_prob must lie in (0, 1]");
            config.msf.success_prob = value;
            break;
        case SweepAxis::DSurf:
            need_int(1);
            config.qec.d_surf = static_cast<uint32_t>(value);
            break;
    }
    config.validate();
}

std::vector<SweepRow> run_sweep(SweepAxis axis, const std::vector<double> &values, const ArchConfig &base,
                                const FTWorkload &workload, const RunOptions &options) {
    if (values.empty()) throw InputError("sweep needs at least one value");
    WorkloadProfile prof = profile(workload);
    std::vector<ArchConfig> configs;
    for (double v : values) {
        ArchConfig c = base;
        apply_axis_value(axis, v, c, prof);
        configs.push_back(std::move(c));
    }
    std::vector<std::future<RunReport>> jobs;
    for (const auto &c : configs) {
        jobs.push_back(std::async(std::launch::async, [&c, &workload, options] { return run(c, workload, options); }));
    }
    std::vector<SweepRow> rows;
    for (size_t i = 0; i < jobs.size(); ++i) rows.push_back({values[i], jobs[i].get()});
    return rows;
}

std::string format_g6(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6g", x);
    return buf;
}

namespace {

std::string provenance_comment(const json &provenance) {
    return "# provenance: " + provenance.dump() + "\n";
}

std::string report_csv_fields(const RunReport &r) {
    return format_g6(r.total_time) + "," + std::to_string(r.resources.n_phys) + "," + format_g6(r.breakdown.compute) +
           "," + format_g6(r.breakdown.magic) + "," + format_g6(r.breakdown.storeload) + "," +
           format_g6(r.breakdown.transport);
}

}  // namespace

std::string sweep_csv(const std::vector<SweepRow> &rows, const json &provenance) {
    std::string out = provenance_comment(provenance);
    out += "axis_value,total_time_s,n_phys,frac_compute,frac_magic,frac_storeload,frac_transport\n";
    for (const auto &row : rows) out += format_g6(row.axis_value) + "," + report_csv_fields(row.report) + "\n";
    return out;
}

namespace {

struct CommonFlags {
    std::string preset;
    std::string scheme;
    std::string config_path;
    std::vector<std::string> settings;
    uint64_t seed = 1;
    bool stochastic = false;
    std::string out_path;
    std::string format;
    std::string trace;
    std::string input;
};

struct Session {
    Overrides overrides;
    std::string config_source;
    json echoed = json::array();
};

Session load_overrides(const CommonFlags &f) {
    Session s;
    std::string path = f.config_path;
    if (path.empty()) {
        if (const char *env = std::getenv("HQA_CONFIG"); env != nullptr && *env != '\0') path = env;
    }
    if (!path.empty()) {
        s.overrides = read_config_file(path);
        s.config_source = path;
    }
    for (const auto &text : f.settings) {
        auto kv = parse_setting(text);
        s.echoed.push_back(text);
        s.overrides.push_back(std::move(kv));
    }
    return s;
}

std::optional<SchemeName> scheme_from(const CommonFlags &f, const Overrides &ov) {
    if (!f.preset.empty()) {
        try {
            return parse_preset(f.preset);
        } catch (const InputError &e) {
            throw UsageError(e.what());
        }
    }
    std::optional<SchemeName> found;
    for (const auto &[k, v] : ov) {
        if (k == "arch.scheme" && v.is_string()) found = parse_preset(v.get<std::string>());
    }
    return found;
}

Overrides without_scheme(const Overrides &ov) {
    Overrides out;
    for (const auto &kv : ov) {
        if (kv.first != "arch.scheme") out.push_back(kv);
    }
    return out;
}

std::string input_path(const CommonFlags &f) {
    std::string p = !f.trace.empty() ? f.trace : f.input;
    if (p.empty()) throw UsageError("an input workload (.qasm or trace .json) is required");
    return p;
}

ArchConfig build_config(SchemeName scheme, const FTWorkload &w, const Overrides &ov) {
    ArchConfig c = preset(scheme, profile(w), w.n_total);
    apply_overrides(c, without_scheme(ov));
    return c;
}

json provenance(const CommonFlags &f, const Session &s, const std::optional<ArchConfig> &config) {
    json p = {{"tool", "hqa"}, {"version", kToolVersion}, {"seed", f.seed}, {"stochastic", f.stochastic}};
    p["overrides"] = s.echoed;
    if (!s.config_source.empty()) p["config_file"] = s.config_source;
    if (config) p["config_hash"] = hex64(fnv1a64(config_to_json(*config).dump()));
    return p;
}

void emit(const CommonFlags &f, std::ostream &out, const std::string &text) {
    if (f.out_path.empty()) {
        out << text;
        return;
    }
    std::ofstream file(f.out_path, std::ios::binary);
    if (!file) throw InputError("cannot write '" + f.out_path + "'");
    file << text;
}

void check_format(CommonFlags &f, const char *fallback = "json") {
    if (f.format.empty()) f.format = fallback;
    if (f.format != "json" && f.format != "csv") throw UsageError("--format must be json or csv");
}

int cmd_profile(CommonFlags &f, std::ostream &out) {
    check_format(f);
    Scheme scheme = Scheme::GBC;
    if (!f.scheme.empty()) {
        try {
            scheme = parse_scheme(f.scheme);
        } catch (const InputError &e) {
            throw UsageError(e.what());
        }
    }
    FTWorkload w = load_workload(input_path(f), scheme);
    WorkloadProfile prof = profile(w);
    if (!f.out_path.empty()) write_trace_file(w, f.out_path);

    json doc = {{"provenance", {{"tool", "hqa"}, {"version", kToolVersion}}}, {"workload", w.name}};
    doc["profile"] = profile_to_json(prof);
    auto qs = [](const std::vector<uint64_t> &v) {
        json q = json::object();
        if (v.empty()) return q;
        for (double a : {0.5, 0.8, 0.95, 1.0}) q[format_g6(a)] = quantile(v, a);
        return q;
    };
    doc["quantiles"] = {{"q_act", qs(prof.q_act)}, {"delta_q_act", qs(prof.delta_q_act)}, {"w_pauli", qs(prof.w_pauli)}};
    if (f.format == "json") {
        out << doc.dump(2) << "\n";
    } else {
        out << "# provenance: " << doc["provenance"].dump() << "\n";
        out << "scheme,n_total,depth,n_t,r_t\n";
        out << scheme_name(prof.scheme) << "," << prof.n_total << "," << prof.d << "," << prof.n_t << ","
            << format_g6(prof.r_t) << "\n";
    }
    return kExitOk;
}

int cmd_estimate(CommonFlags &f, std::ostream &out) {
    check_format(f);
    Session s = load_overrides(f);
    auto scheme = scheme_from(f, s.overrides);
    if (!scheme) throw UsageError("estimate needs --preset (or arch.scheme in the config)");
    FTWorkload w = load_workload(input_path(f), execution_scheme(roles_of(*scheme).compute));
    ArchConfig c = build_config(*scheme, w, s.overrides);
    RunReport r = run(c, w, {f.stochastic, f.seed});
    json prov = provenance(f, s, c);
    if (f.format == "json") {
        json doc = {{"provenance", prov}, {"config", config_to_json(c)}, {"report", report_to_json(r, false)}};
        emit(f, out, doc.dump(2) + "\n");
    } else {
        std::string text = provenance_comment(prov);
        text += "scheme,total_time_s,n_phys,frac_compute,frac_magic,frac_storeload,frac_transport\n";
        text += std::string(preset_name(r.scheme)) + "," + report_csv_fields(r) + "\n";
        emit(f, out, text);
    }
    return kExitOk;
}

int cmd_sweep(CommonFlags &f, const std::string &axis_text, const std::string &values_text, std::ostream &out) {
    check_format(f, "csv");
    SweepAxis axis = parse_axis_name(axis_text);
    std::vector<double> values = parse_axis_values(values_text);
    Session s = load_overrides(f);
    auto scheme = scheme_from(f, s.overrides);
    if (!scheme) throw UsageError("sweep needs --preset (or arch.scheme in the config)");
    FTWorkload w = load_workload(input_path(f), execution_scheme(roles_of(*scheme).compute));
    ArchConfig c = build_config(*scheme, w, s.overrides);
    auto rows = run_sweep(axis, values, c, w, {f.stochastic, f.seed});
    json prov = provenance(f, s, c);
    prov["axis"] = axis_label(axis);
    if (f.format == "csv") {
        emit(f, out, sweep_csv(rows, prov));
    } else {
        json arr = json::array();
        for (const auto &row : rows) {
            json item = report_to_json(row.report, false);
            item["axis_value"] = row.axis_value;
            arr.push_back(std::move(item));
        }
        emit(f, out, json({{"provenance", prov}, {"rows", arr}}).dump(2) + "\n");
    }
    return kExitOk;
}

int cmd_compare(CommonFlags &f, const std::vector<std::string> &names, std::ostream &out, std::ostream &err) {
    check_format(f);
    Session s = load_overrides(f);
    std::vector<SchemeName> schemes;
    for (const auto &n : names) {
        try {
            schemes.push_back(parse_preset(n));
        } catch (const InputError &e) {
            throw UsageError(e.what());
        }
    }
    if (schemes.empty()) schemes.assign(std::begin(kAllSchemes), std::end(kAllSchemes));
    std::string path = input_path(f);

    std::map<Scheme, FTWorkload> variants;
    std::vector<RunReport> reports;
    for (auto sch : schemes) {
        Scheme exec = execution_scheme(roles_of(sch).compute);
        if (!variants.count(exec)) variants.emplace(exec, load_workload(path, exec));
        const FTWorkload &w = variants.at(exec);
        ArchConfig c = build_config(sch, w, s.overrides);
        reports.push_back(run(c, w, {f.stochastic, f.seed}));
    }

    json prov = provenance(f, s, std::nullopt);
    json results = json::array();
    for (const auto &r : reports) results.push_back(report_to_json(r, false));
    json ratios = json::array();
    for (size_t i = 0; i < reports.size(); ++i) {
        for (size_t j = i + 1; j < reports.size(); ++j) {
            const auto &a = reports[i];
            const auto &b = reports[j];
            ratios.push_back({{"baseline", preset_name(a.scheme)},
                              {"candidate", preset_name(b.scheme)},
                              {"speedup", a.total_time / b.total_time},
                              {"qubit_ratio", static_cast<double>(b.resources.n_phys) /
                                                  static_cast<double>(a.resources.n_phys)}});
        }
    }
    for (const auto &r : ratios) {
        err << r["candidate"].get<std::string>() << " vs " << r["baseline"].get<std::string>()
            << ": speedup " << format_g6(r["speedup"].get<double>()) << ", qubits x"
            << format_g6(r["qubit_ratio"].get<double>()) << "\n";
    }
    if (f.format == "json") {
        emit(f, out, json({{"provenance", prov}, {"results", results}, {"ratios", ratios}}).dump(2) + "\n");
    } else {
        std::string text = provenance_comment(prov);
        text += "scheme,total_time_s,n_phys,frac_compute,frac_magic,frac_storeload,frac_transport\n";
        for (const auto &r : reports) text += std::string(preset_name(r.scheme)) + "," + report_csv_fields(r) + "\n";
        emit(f, out, text);
    }
    return kExitOk;
}

struct AnalyzeFlags {
    std::optional<double> s, r_t, rho, p_trans;
    std::optional<double> alpha, beta;
};

int cmd_analyze(CommonFlags &f, const AnalyzeFlags &a, std::ostream &out) {
    check_format(f);
    Session s = load_overrides(f);
    ArchConfig c;
    c.scheme_name = SchemeName::NA_MCSEP;
    apply_overrides(c, without_scheme(s.overrides));

    SpeedupInputs in;
    in.s = c.na.t_cycle / c.sc.t_cycle;
    in.rho_ms = c.msf.expected_cycles() / (1.0 + c.qec.sm_rounds_gbc);
    in.p_trans = c.link.t_mst / (c.msf.expected_cycles() * c.sc.t_cycle);
    std::string path = !f.trace.empty() ? f.trace : f.input;
    if (!path.empty()) in.r_t = profile(load_workload(path, Scheme::GBC)).r_t;
    if (a.s) in.s = *a.s;
    if (a.r_t) in.r_t = *a.r_t;
    if (a.rho) in.rho_ms = *a.rho;
    if (a.p_trans) in.p_trans = *a.p_trans;
    if (!(in.s > 0) || !(in.rho_ms > 0) || !(in.r_t >= 0 && in.r_t <= 1) || !(in.p_trans >= 0)) {
        throw InputError("analyze needs s > 0, rho > 0, r_t in [0,1], p_trans >= 0");
    }

    json doc = {{"provenance", provenance(f, s, std::nullopt)},
                {"inputs", {{"s", in.s}, {"r_t", in.r_t}, {"rho_ms", in.rho_ms}, {"p_trans", in.p_trans}}},
                {"speedup", speedup_closed_form(in)},
                {"speedup_upper_bound", speedup_upper_bound(in.rho_ms)}};
    std::optional<double> lb;
    if (a.alpha || a.beta) {
        if (!(a.alpha && a.beta)) throw UsageError("--alpha and --beta go together");
        if (c.q_buff == 0) throw InputError("the overhead bound needs arch.q_buff >= 1");
        lb = expected_overhead_lower_bound(*a.alpha, *a.beta, c.qec.sm_rounds_gbc, c.n_comp, c.q_buff, c.phi_hide,
                                           c.qec.d_qldpc);
        doc["overhead_lower_bound_cycles"] = *lb;
    }
    if (f.format == "json") {
        emit(f, out, doc.dump(2) + "\n");
    } else {
        std::string text = provenance_comment(doc["provenance"]);
        text += "s,r_t,rho_ms,p_trans,speedup,speedup_upper_bound,overhead_lower_bound_cycles\n";
        text += format_g6(in.s) + "," + format_g6(in.r_t) + "," + format_g6(in.rho_ms) + "," + format_g6(in.p_trans) +
                "," + format_g6(speedup_closed_form(in)) + "," + format_g6(speedup_upper_bound(in.rho_ms)) + "," +
                (lb ? format_g6(*lb) : std::string()) + "\n";
        emit(f, out, text);
    }
    return kExitOk;
}

struct CrosscheckFlags {
    uint32_t layers = 50;
    uint32_t width = 10;
    std::string r_t = "0.25,0.5,1.0";
    double tolerance = 0.01;
    bool exact = false;
};

int cmd_crosscheck(CommonFlags &f, const CrosscheckFlags &x, std::ostream &out) {
    check_format(f);
    Session s = load_overrides(f);
    CrosscheckOptions opts;
    apply_overrides(opts.base, without_scheme(s.overrides));
    opts.exact = x.exact;
    if (x.layers == 0 || x.width == 0) throw InputError("crosscheck needs layers >= 1 and width >= 1");

    bool ok = true;
    json rows = json::array();
    std::string csv = "r_t,n_t,simulated_speedup,closed_form_speedup,relative_error,pass\n";
    for (double rt : parse_axis_values(x.r_t)) {
        if (!(rt >= 0 && rt <= 1)) throw InputError("r_t values must lie in [0, 1]");
        auto n_t = static_cast<uint32_t>(std::llround(rt * x.layers));
        CrosscheckResult r = crosscheck(uniform_workload(x.layers, n_t, x.width), opts);
        bool pass = r.relative_error <= x.tolerance;
        ok = ok && pass;
        rows.push_back({{"r_t", rt},
                        {"n_t", n_t},
                        {"simulated_speedup", r.simulated_speedup},
                        {"closed_form_speedup", r.closed_form_speedup},
                        {"relative_error", r.relative_error},
                        {"pass", pass}});
        csv += format_g6(rt) + "," + std::to_string(n_t) + "," + format_g6(r.simulated_speedup) + "," +
               format_g6(r.closed_form_speedup) + "," + format_g6(r.relative_error) + "," + (pass ? "1" : "0") + "\n";
    }
    json prov = provenance(f, s, std::nullopt);
    prov["tolerance"] = x.tolerance;
    prov["exact"] = x.exact;
    if (f.format == "json") {
        emit(f, out, json({{"provenance", prov}, {"rows", rows}, {"pass", ok}}).dump(2) + "\n");
    } else {
        emit(f, out, provenance_comment(prov) + csv);
    }
    return ok ? kExitOk : kExitCheckFailed;
}

void add_common(CLI::App *cmd, CommonFlags &f, bool with_input) {
    cmd->add_option("--config", f.config_path, "JSON config file (default: $HQA_CONFIG)");
    cmd->add_option("--set", f.settings, "Override a config key, key=value (repeatable)")->allow_extra_args(false);
    cmd->add_option("--seed", f.seed, "Seed for stochastic runs");
    cmd->add_flag("--stochastic", f.stochastic, "Sample factory attempts instead of using expected rates");
    cmd->add_option("--out", f.out_path, "Write output to a file");
    cmd->add_option("--format", f.format, "json or csv (sweep defaults to csv, others to json)");
    if (with_input) {
        cmd->add_option("--trace", f.trace, "Workload trace JSON");
        cmd->add_option("input", f.input, "Workload (.qasm or trace .json)");
    }
}

}  // namespace

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Hybrid quantum architecture runtime and footprint estimator", "hqa"};
    app.require_subcommand(1);
    app.set_version_flag("--version", kToolVersion);

    CommonFlags f;
    auto *prof = app.add_subcommand("profile", "Profile a workload and optionally write its trace");
    prof->add_option("--scheme", f.scheme, "gbc or pbc");
    add_common(prof, f, true);

    auto *est = app.add_subcommand("estimate", "Estimate runtime and footprint for one preset");
    est->add_option("--preset", f.preset, "Baseline architecture, e.g. ht-sf-macc");
    add_common(est, f, true);

    std::string axis, values;
    auto *sweep = app.add_subcommand("sweep", "Sweep one parameter axis");
    sweep->add_option("--preset", f.preset, "Baseline architecture");
    sweep->add_option("--axis", axis, "transport_latency|msf_copies|buffer_quantile|msf_success_prob|d_surf")
        ->required();
    sweep->add_option("--values", values, "v1,v2,... or lin:a:b:n or log:a:b:n")->required();
    add_common(sweep, f, true);

    std::vector<std::string> presets;
    auto *cmp = app.add_subcommand("compare", "Compare presets on one workload");
    cmp->add_option("--preset", presets, "Presets to compare (repeatable; default: all)")->allow_extra_args(false);
    add_common(cmp, f, true);

    AnalyzeFlags a;
    auto *an = app.add_subcommand("analyze", "Closed-form speedup and overhead bounds");
    an->add_option("--s", a.s, "Cycle-time ratio T_NA / T_SC");
    an->add_option("--r-t", a.r_t, "Fraction of T-layers");
    an->add_option("--rho", a.rho, "MSF cycles per Clifford-layer cycles");
    an->add_option("--p-trans", a.p_trans, "Normalized transport latency");
    an->add_option("--alpha", a.alpha, "Compute-region quantile level");
    an->add_option("--beta", a.beta, "Buffer quantile level");
    add_common(an, f, true);

    CrosscheckFlags x;
    auto *cc = app.add_subcommand("crosscheck", "Compare simulated and closed-form speedups");
    cc->add_option("--layers", x.layers, "Layers per synthetic workload");
    cc->add_option("--width", x.width, "Qubits per layer");
    cc->add_option("--r-t", x.r_t, "T-layer fractions to test");
    cc->add_option("--tolerance", x.tolerance, "Allowed relative error");
    cc->add_flag("--exact", x.exact, "Drop gate time so both sides count identical terms");
    add_common(cc, f, false);

    std::vector<const char *> argv;
    for (const auto &s : args) argv.push_back(s.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*prof) return cmd_profile(f, out);
        if (*est) return cmd_estimate(f, out);
        if (*sweep) return cmd_sweep(f, axis, values, out);
        if (*cmp) return cmd_compare(f, presets, out, err);
        if (*an) return cmd_analyze(f, a, out);
        if (*cc) return cmd_crosscheck(f, x, out);
    } catch (const UsageError &e) {
        err << "hqa: usage: " << e.what() << "\n";
        return kExitUsage;
    } catch (const InputError &e) {
        err << "hqa: error: " << e.what() << "\n";
        return kExitInput;
    } catch (const InfeasibleError &e) {
        err << "hqa: infeasible: " << e.what() << "\n";
        return kExitInfeasible;
    } catch (const nlohmann::json::exception &e) {
        err << "hqa: error: " << e.what() << "\n";
        return kExitInput;
    }
    return kExitUsage;
}

}  // namespace hqa
