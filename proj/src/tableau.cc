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

#include "hqa/tableau.h"

#include <cassert>

#include "hqa/error.h"

namespace hqa {

namespace {

// Exponent of i picked up by the single-qubit product (x1,z1)*(x2,z2).
int product_phase(uint8_t x1, uint8_t z1, uint8_t x2, uint8_t z2) {
    if (x1 == 0 && z1 == 0) {
        return 0;
    }
    if (x1 == 1 && z1 == 1) {
        return static_cast<int>(z2) - static_cast<int>(x2);
    }
    if (x1 == 1) {
        return static_cast<int>(z2) * (2 * static_cast<int>(x2) - 1);
    }
    return static_cast<int>(x2) * (1 - 2 * static_cast<int>(z2));
}

void flip_sign(DensePauli &p, uint8_t bit) {
    p.phase = static_cast<uint8_t>((p.phase + 2 * bit) & 3);
}

// Conjugates a single row by a gate: row <- G row G^dag.
void conjugate_row(DensePauli &p, CliffordKind kind, std::span<const Qubit> qs) {
    Qubit a = qs[0];
    switch (kind) {
        case CliffordKind::H:
            flip_sign(p, p.x[a] & p.z[a]);
            std::swap(p.x[a], p.z[a]);
            break;
        case CliffordKind::S:
            flip_sign(p, p.x[a] & p.z[a]);
            p.z[a] ^= p.x[a];
            break;
        case CliffordKind::Sdg:
            // S^dag = S Z: X -> -Y, Y -> X.
            p.z[a] ^= p.x[a];
            flip_sign(p, p.x[a] & p.z[a]);
            break;
        case CliffordKind::X:
            flip_sign(p, p.z[a]);
            break;
        case CliffordKind::Y:
            flip_sign(p, p.x[a] ^ p.z[a]);
            break;
        case CliffordKind::Z:
            flip_sign(p, p.x[a]);
            break;
        case CliffordKind::CX: {
            Qubit b = qs[1];
            flip_sign(p, p.x[a] & p.z[b] & (p.x[b] ^ p.z[a] ^ 1));
            p.x[b] ^= p.x[a];
            p.z[a] ^= p.z[b];
            break;
        }
        case CliffordKind::CZ: {
            Qubit b = qs[1];
            Qubit hb[1] = {b};
            conjugate_row(p, CliffordKind::H, hb);
            Qubit ab[2] = {a, b};
            conjugate_row(p, CliffordKind::CX, ab);
            conjugate_row(p, CliffordKind::H, hb);
            break;
        }
    }
}

size_t arity(CliffordKind kind) {
    return is_two_qubit(kind) ? 2 : 1;
}

}  // namespace

DensePauli DensePauli::from_sparse(const PauliString &p, uint32_t n) {
    DensePauli out(n);
    for (const auto &[q, axis] : p.terms) {
        if (q >= n) {
            throw InputError("Pauli term on qubit " + std::to_string(q) + " exceeds tableau size " + std::to_string(n));
        }
        out.x[q] = axis != PauliAxis::Z;
        out.z[q] = axis != PauliAxis::X;
    }
    return out;
}

PauliString DensePauli::to_sparse() const {
    PauliString out;
    for (size_t q = 0; q < x.size(); q++) {
        if (x[q] && z[q]) {
            out.terms[static_cast<Qubit>(q)] = PauliAxis::Y;
        } else if (x[q]) {
            out.terms[static_cast<Qubit>(q)] = PauliAxis::X;
        } else if (z[q]) {
            out.terms[static_cast<Qubit>(q)] = PauliAxis::Z;
        }
    }
    return out;
}

void DensePauli::multiply_right(const DensePauli &rhs) {
    assert(x.size() == rhs.x.size());
    int e = phase + rhs.phase;
    for (size_t q = 0; q < x.size(); q++) {
        e += product_phase(x[q], z[q], rhs.x[q], rhs.z[q]);
        x[q] ^= rhs.x[q];
        z[q] ^= rhs.z[q];
    }
    phase = static_cast<uint8_t>(((e % 4) + 4) % 4);
}

bool DensePauli::commutes_with(const DensePauli &other) const {
    uint8_t acc = 0;
    for (size_t q = 0; q < x.size(); q++) {
        acc ^= (x[q] & other.z[q]) ^ (z[q] & other.x[q]);
    }
    return acc == 0;
}

CliffordTableau::CliffordTableau(uint32_t n) : n_(n), xs_(n, DensePauli(n)), zs_(n, DensePauli(n)) {
    for (uint32_t q = 0; q < n; q++) {
        xs_[q].x[q] = 1;
        zs_[q].z[q] = 1;
    }
}

void CliffordTableau::apply(CliffordKind kind, std::span<const Qubit> qubits) {
    if (qubits.size() != arity(kind)) {
        throw InputError("tableau: wrong operand count for " + std::string(clifford_name(kind)));
    }
    for (Qubit q : qubits) {
        if (q >= n_) {
            throw InputError("tableau: qubit " + std::to_string(q) + " out of range");
        }
    }
    for (auto &row : xs_) {
        conjugate_row(row, kind, qubits);
    }
    for (auto &row : zs_) {
        conjugate_row(row, kind, qubits);
    }
}

void CliffordTableau::append_right(CliffordKind kind, std::span<const Qubit> qubits) {
    if (qubits.size() != arity(kind)) {
        throw InputError("tableau: wrong operand count for " + std::string(clifford_name(kind)));
    }
    for (Qubit q : qubits) {
        if (q >= n_) {
            throw InputError("tableau: qubit " + std::to_string(q) + " out of range");
        }
    }
    // New image of generator P is U (G P G^dag) U^dag. G P G^dag is computed on
    // a local tableau over the gate's own qubits, then lifted through U.
    uint32_t k = static_cast<uint32_t>(qubits.size());
    CliffordTableau local(k);
    std::vector<Qubit> local_qubits(k);
    for (uint32_t i = 0; i < k; i++) {
        local_qubits[i] = i;
    }
    local.apply(kind, local_qubits);

    auto lift = [&](const DensePauli &local_image) {
        DensePauli acc(n_);
        acc.phase = local_image.phase;
        for (uint32_t i = 0; i < k; i++) {
            Qubit q = qubits[i];
            uint8_t lx = local_image.x[i];
            uint8_t lz = local_image.z[i];
            if (lx && lz) {
                // Y = i X Z
                acc.phase = static_cast<uint8_t>((acc.phase + 1) & 3);
                acc.multiply_right(xs_[q]);
                acc.multiply_right(zs_[q]);
            } else if (lx) {
                acc.multiply_right(xs_[q]);
            } else if (lz) {
                acc.multiply_right(zs_[q]);
            }
        }
        return acc;
    };

    std::vector<DensePauli> new_x;
    std::vector<DensePauli> new_z;
    for (uint32_t i = 0; i < k; i++) {
        new_x.push_back(lift(local.xs_[i]));
        new_z.push_back(lift(local.zs_[i]));
    }
    for (uint32_t i = 0; i < k; i++) {
        xs_[qubits[i]] = std::move(new_x[i]);
        zs_[qubits[i]] = std::move(new_z[i]);
    }
}

DensePauli CliffordTableau::conjugate_dense(const PauliString &p) const {
    DensePauli acc(n_);
    for (const auto &[q, axis] : p.terms) {
        if (q >= n_) {
            throw InputError("conjugate: qubit " + std::to_string(q) + " out of range for " + std::to_string(n_) + "-qubit tableau");
        }
        switch (axis) {
            case PauliAxis::X:
                acc.multiply_right(xs_[q]);
                break;
            case PauliAxis::Z:
                acc.multiply_right(zs_[q]);
                break;
            case PauliAxis::Y:
                acc.phase = static_cast<uint8_t>((acc.phase + 1) & 3);
                acc.multiply_right(xs_[q]);
                acc.multiply_right(zs_[q]);
                break;
        }
    }
    assert(acc.phase % 2 == 0);
    return acc;
}

std::pair<PauliString, int> CliffordTableau::conjugate(const PauliString &p) const {
    DensePauli d = conjugate_dense(p);
    return {d.to_sparse(), d.phase == 0 ? 1 : -1};
}

bool CliffordTableau::is_symplectic() const {
    for (uint32_t a = 0; a < n_; a++) {
        if (xs_[a].phase % 2 || zs_[a].phase % 2) {
            return false;
        }
        for (uint32_t b = a; b < n_; b++) {
            if (xs_[a].commutes_with(zs_[b]) == (a == b)) {
                return false;
            }
            if (a != b && (!xs_[a].commutes_with(xs_[b]) || !zs_[a].commutes_with(zs_[b]) ||
                           !zs_[a].commutes_with(xs_[b]))) {
                return false;
            }
        }
    }
    return true;
}

std::pair<PauliString, int> conjugate_pauli(const CliffordTableau &tableau, const PauliString &p) {
    return tableau.conjugate(p);
}

CliffordKind inverse(CliffordKind kind) {
    switch (kind) {
        case CliffordKind::S:
            return CliffordKind::Sdg;
        case CliffordKind::Sdg:
            return CliffordKind::S;
        default:
            return kind;
    }
}

}  // namespace hqa
