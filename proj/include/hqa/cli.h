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

#ifndef HQA_CLI_H
#define HQA_CLI_H

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "hqa/arch.h"
#include "hqa/config_io.h"
#include "hqa/engine.h"
#include "hqa/workload.h"

namespace hqa {

inline constexpr const char *kToolVersion = "0.1.0";

enum ExitCode : int { kExitOk = 0, kExitCheckFailed = 1, kExitUsage = 2, kExitInput = 3, kExitInfeasible = 4 };

class UsageError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Loads a workload for `scheme` from a .json trace or a .qasm source.
/// Traces must already be in `scheme`; QASM is synthesized on the fly.
FTWorkload load_workload(const std::string &path, Scheme scheme);

/// 64-bit FNV-1a, used for config fingerprints in provenance headers.
uint64_t fnv1a64(const std::string &data);

enum class SweepAxis { TransportLatency, MsfCopies, BufferQuantile, MsfSuccessProb, DSurf };

SweepAxis parse_axis_name(const std::string &text);
std::string axis_label(SweepAxis axis);

/// "1,2,3", "lin:a:b:n" or "log:a:b:n" (n points, inclusive ends).
std::vector<double> parse_axis_values(const std::string &text);

struct SweepRow {
    double axis_value = 0;
    RunReport report;
};

/// Validates every value, then runs one engine replay per value (in parallel)
/// and returns rows in the order of `values`.
std::vector<SweepRow> run_sweep(SweepAxis axis, const std::vector<double> &values, const ArchConfig &base,
                                const FTWorkload &workload, const RunOptions &options = {});

void apply_axis_value(SweepAxis axis, double value, ArchConfig &config, const WorkloadProfile &prof);

std::string sweep_csv(const std::vector<SweepRow> &rows, const nlohmann::json &provenance);

/// Formats with 6 significant digits.
std::string format_g6(double x);

/// Entry point shared by the `hqa` binary and tests. args[0] is the program name.
int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

}  // namespace hqa

#endif
