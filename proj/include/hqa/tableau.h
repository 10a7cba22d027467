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

#ifndef HQA_TABLEAU_H
#define HQA_TABLEAU_H

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "hqa/workload.h"

namespace hqa {

/// Dense Pauli product i^phase * prod_j P_j, where (x_j, z_j) = (1, 1) denotes Y.
/// Hermitian operators have phase 0 (+) or 2 (-).
struct DensePauli {
    std::vector<uint8_t> x;
    std::vector<uint8_t> z;
    uint8_t phase = 0;

    explicit DensePauli(uint32_t n = 0) : x(n, 0), z(n, 0) {
    }

    static DensePauli from_sparse(const PauliString &p, uint32_t n);
    PauliString to_sparse() const;

    /// this <- this * rhs
    void multiply_right(const DensePauli &rhs);
    bool commutes_with(const DensePauli &other) const;
};

/// Stabilizer tableau of a Clifford unitary U: the images U X_j U^dag and
/// U Z_j U^dag of every single-qubit generator, each with a sign.
class CliffordTableau {
   public:
    explicit CliffordTableau(uint32_t n = 0);

    uint32_t num_qubits() const {
        return n_;
    }

    /// U <- G U.
    void apply(CliffordKind kind, std::span<const Qubit> qubits);
    /// U <- U G.
    void append_right(CliffordKind kind, std::span<const Qubit> qubits);

    const DensePauli &x_image(Qubit q) const {
        return xs_[q];
    }
    const DensePauli &z_image(Qubit q) const {
        return zs_[q];
    }

    /// U P U^dag as a Hermitian Pauli with sign +1/-1.
    std::pair<PauliString, int> conjugate(const PauliString &p) const;
    DensePauli conjugate_dense(const PauliString &p) const;

    /// Images of X_j and Z_j anticommute; all other pairs commute.
    bool is_symplectic() const;

   private:
    uint32_t n_;
    std::vector<DensePauli> xs_;
    std::vector<DensePauli> zs_;
};

/// Returns (U p U^dag, sign). Throws InputError when p touches a qubit the
/// tableau does not cover.
std::pair<PauliString, int> conjugate_pauli(const CliffordTableau &tableau, const PauliString &p);

CliffordKind inverse(CliffordKind kind);

}  // namespace hqa

#endif
