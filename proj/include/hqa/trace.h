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

#ifndef HQA_TRACE_H
#define HQA_TRACE_H

#include <string>

#include "json.hpp"

#include "hqa/workload.h"

namespace hqa {

// Workload trace interchange format:
//   {"scheme": "gbc"|"pbc", "n_total": N, "name": "...", "layers": [...]}
//   gbc layer: {"cliffords": [["cx",0,1], ["h",2]], "t": [[3,false]]}
//   pbc layer: {"pauli": {"0":"X","3":"Z"}, "magic": true, "sign": 1}
// "sign" is optional on read and defaults to +1.

nlohmann::json workload_to_json(const FTWorkload &workload);
FTWorkload workload_from_json(const nlohmann::json &doc);

FTWorkload read_trace_file(const std::string &path);
void write_trace_file(const FTWorkload &workload, const std::string &path);

nlohmann::json profile_to_json(const WorkloadProfile &prof);

}  // namespace hqa

#endif
