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

#ifndef HQA_ERROR_H
#define HQA_ERROR_H

#include <stdexcept>
#include <string>

namespace hqa {

/// Malformed or unreadable input: QASM syntax, trace/config schema, bad values.
class InputError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// The requested architecture cannot execute the workload as configured
/// (PPM wider than the compute region, missing swap buffer, scheme mismatch).
class InfeasibleError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

}  // namespace hqa

#endif
