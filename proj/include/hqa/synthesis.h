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

#ifndef HQA_SYNTHESIS_H
#define HQA_SYNTHESIS_H

#include <string>

#include "hqa/qasm.h"
#include "hqa/workload.h"

namespace hqa {

/// Greedy ASAP layering into concurrent gate layers. Measurements are dropped.
FTWorkload layerize_gbc(const Circuit &circuit, std::string name = "");

/// Pauli-based computation: Cliffords are commuted to the end of the circuit,
/// each T/Tdg becomes a pi/8 rotation about C^dag Z_q C where C is the Clifford
/// prefix preceding it, and each measured qubit yields a terminal magic-free
/// PPM layer. One rotation per layer.
///
/// With this convention the circuit unitary equals, up to global phase,
///   C_final * R_k * ... * R_1,   R_j = exp(-i pi/8 * sign_j * P_j).
FTWorkload synthesize_pbc(const Circuit &circuit, std::string name = "");

FTWorkload synthesize(const Circuit &circuit, Scheme scheme, std::string name = "");

}  // namespace hqa

#endif
