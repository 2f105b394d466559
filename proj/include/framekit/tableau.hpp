// Copyright 2026 The framekit authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef FRAMEKIT_TABLEAU_HPP
#define FRAMEKIT_TABLEAU_HPP

#include <bit>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>

#include "framekit/clifford.hpp"
#include "framekit/dense.hpp"
#include "framekit/pauli.hpp"

namespace framekit {

// Two-qubit Clifford element mod global phase, stored as the conjugation
// images of X1 = X(x)I, Z1 = Z(x)I, X2 = I(x)X, Z2 = I(x)Z.
struct CliffordTableau2 {
    PauliOperator image_of_x1;
    PauliOperator image_of_z1;
    PauliOperator image_of_x2;
    PauliOperator image_of_z2;

    static CliffordTableau2 identity() {
        return {PauliOperator::from_label("XI"), PauliOperator::from_label("ZI"),
                PauliOperator::from_label("IX"), PauliOperator::from_label("IZ")};
    }

    // CNOT with qubit 0 as control, qubit 1 as target.
    static CliffordTableau2 cnot() {
        return {PauliOperator::from_label("XX"), PauliOperator::from_label("ZI"),
                PauliOperator::from_label("IX"), PauliOperator::from_label("ZZ")};
    }

    bool is_valid() const {
        const PauliOperator* imgs[4] = {&image_of_x1, &image_of_z1, &image_of_x2, &image_of_z2};
        for (const PauliOperator* p : imgs) {
            if (p->num_qubits() != 2 || !p->is_hermitian() || p->is_identity_up_to_phase()) {
                return false;
            }
        }
        // Conjugation preserves commutation relations.
        return !image_of_x1.commutes_with(image_of_z1) &&
               !image_of_x2.commutes_with(image_of_z2) &&
               image_of_x1.commutes_with(image_of_x2) &&
               image_of_x1.commutes_with(image_of_z2) &&
               image_of_z1.commutes_with(image_of_x2) &&
               image_of_z1.commutes_with(image_of_z2);
    }

    PauliOperator conjugate(const PauliOperator& p) const {
        if (p.num_qubits() != 2) {
            throw std::invalid_argument("CliffordTableau2::conjugate: need a 2-qubit Pauli");
        }
        PauliOperator out = PauliOperator(2, 0, 0, p.phase_exponent());
        if (p.x_bit(0)) out = out * image_of_x1;
        if (p.z_bit(0)) out = out * image_of_z1;
        if (p.x_bit(1)) out = out * image_of_x2;
        if (p.z_bit(1)) out = out * image_of_z2;
        return out;
    }

    bool operator==(const CliffordTableau2& o) const = default;
};

inline CliffordTableau2 compose(const CliffordTableau2& a, const CliffordTableau2& b) {
    return {a.conjugate(b.image_of_x1), a.conjugate(b.image_of_z1),
            a.conjugate(b.image_of_x2), a.conjugate(b.image_of_z2)};
}

inline CliffordTableau2 tensor(const CliffordGate1& c1, const CliffordGate1& c2) {
    auto on_first = [](const PauliOperator& p) {
        return PauliOperator(2, p.x_bits(), p.z_bits(), p.phase_exponent());
    };
    auto on_second = [](const PauliOperator& p) {
        return PauliOperator(2, p.x_bits() << 1, p.z_bits() << 1, p.phase_exponent());
    };
    return {on_first(c1.image_of_x), on_first(c1.image_of_z),
            on_second(c2.image_of_x), on_second(c2.image_of_z)};
}

// If t is a tensor product of single-qubit Cliffords (including the signs the
// tableau carries), returns the two factors; otherwise returns nothing.
inline std::optional<std::pair<CliffordGate1, CliffordGate1>> factor_tensor(
    const CliffordTableau2& t) {
    auto supported_on = [](const PauliOperator& p, int qubit) {
        uint64_t mask = 1ull << qubit;
        return (p.x_bits() | p.z_bits() | mask) == mask;
    };
    if (!supported_on(t.image_of_x1, 0) || !supported_on(t.image_of_z1, 0) ||
        !supported_on(t.image_of_x2, 1) || !supported_on(t.image_of_z2, 1)) {
        return std::nullopt;
    }
    CliffordGate1 c1{t.image_of_x1.restrict_to(0), t.image_of_z1.restrict_to(0)};
    CliffordGate1 c2{t.image_of_x2.restrict_to(1), t.image_of_z2.restrict_to(1)};
    if (!c1.is_valid() || !c2.is_valid()) {
        return std::nullopt;
    }
    return std::pair{c1, c2};
}

// Reads the conjugation action off a 4x4 unitary; nothing if not Clifford.
inline std::optional<CliffordTableau2> tableau2_from_matrix(const DenseMatrix& u,
                                                           double tol = 1e-9) {
    if (u.dim() != 4) {
        throw std::invalid_argument("tableau2_from_matrix: U must be 4x4");
    }
    DenseMatrix udag = u.dagger();
    auto image = [&](const char* label) -> std::optional<PauliOperator> {
        DenseMatrix img = u * make_pauli_matrix(PauliOperator::from_label(label)) * udag;
        auto coeffs = pauli_coefficients(img);
        for (size_t code = 0; code < coeffs.size(); ++code) {
            Complex c = coeffs[code];
            if (std::abs(c) < 1.0 - tol) {
                continue;
            }
            // The image of a Hermitian Pauli under a unitary is Hermitian, so
            // the coefficient must be +1 or -1.
            if (std::abs(c.imag()) > tol || std::abs(std::abs(c.real()) - 1.0) > tol) {
                return std::nullopt;
            }
            int sign = c.real() > 0 ? +1 : -1;
            static const char letters[4] = {'I', 'X', 'Y', 'Z'};
            uint64_t x = 0, z = 0;
            int base_phase = 0;
            for (int q = 0; q < 2; ++q) {
                char letter = letters[q == 0 ? code / 4 : code % 4];
                if (letter == 'X' || letter == 'Y') x |= 1ull << q;
                if (letter == 'Z' || letter == 'Y') z |= 1ull << q;
            }
            base_phase = static_cast<int>(std::popcount(x & z));
            int phase = ((sign < 0 ? 2 : 0) + base_phase) & 3;
            return PauliOperator(2, x, z, phase);
        }
        return std::nullopt;
    };
    auto x1 = image("XI"), z1 = image("ZI"), x2 = image("IX"), z2 = image("IZ");
    if (!x1 || !z1 || !x2 || !z2) {
        return std::nullopt;
    }
    CliffordTableau2 t{*x1, *z1, *x2, *z2};
    if (!t.is_valid()) {
        return std::nullopt;
    }
    return t;
}

}  // namespace framekit

#endif
