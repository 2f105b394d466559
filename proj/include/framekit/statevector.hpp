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

#ifndef FRAMEKIT_STATEVECTOR_HPP
#define FRAMEKIT_STATEVECTOR_HPP

// Small dense state vectors.  Indexing follows the matrix side of the
// library: qubit 0 occupies the highest bit of the basis index, so applying
// a Kronecker-built operator and applying per-qubit gates agree.

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "framekit/dense.hpp"
#include "framekit/pauli.hpp"

namespace framekit {

struct StateVector {
    int qubits = 0;
    std::vector<Complex> amp;

    StateVector() = default;
    explicit StateVector(int n) : qubits(n) {
        if (n < 1 || n > 20) throw std::invalid_argument("statevector: supports 1..20 qubits");
        amp.assign(std::size_t{1} << n, Complex{0.0, 0.0});
    }

    static StateVector basis(int n, std::uint64_t index) {
        StateVector s(n);
        if (index >= s.amp.size()) throw std::invalid_argument("statevector: basis index range");
        s.amp[index] = 1.0;
        return s;
    }

    std::size_t dim() const { return amp.size(); }

    // basis-index bit carrying qubit k
    int bit_of(int qubit) const { return qubits - 1 - qubit; }

    void check_qubit(int q) const {
        if (q < 0 || q >= qubits) throw std::invalid_argument("statevector: qubit out of range");
    }

    double norm_squared() const {
        double s = 0.0;
        for (const Complex& a : amp) s += std::norm(a);
        return s;
    }

    void scale(Complex c) {
        for (Complex& a : amp) a *= c;
    }

    void apply_single(const DenseMatrix& u, int qubit) {
        check_qubit(qubit);
        if (u.dim() != 2) throw std::invalid_argument("apply_single: needs a 2x2 matrix");
        std::size_t stride = std::size_t{1} << bit_of(qubit);
        for (std::size_t base = 0; base < amp.size(); ++base) {
            if (base & stride) continue;
            Complex a0 = amp[base];
            Complex a1 = amp[base | stride];
            amp[base] = u.at(0, 0) * a0 + u.at(0, 1) * a1;
            amp[base | stride] = u.at(1, 0) * a0 + u.at(1, 1) * a1;
        }
    }

    void apply_cnot(int control, int target) {
        check_qubit(control);
        check_qubit(target);
        if (control == target) throw std::invalid_argument("apply_cnot: distinct qubits");
        std::size_t cbit = std::size_t{1} << bit_of(control);
        std::size_t tbit = std::size_t{1} << bit_of(target);
        for (std::size_t i = 0; i < amp.size(); ++i) {
            if ((i & cbit) && !(i & tbit)) std::swap(amp[i], amp[i | tbit]);
        }
    }

    // multiplies by i^phase X^x Z^z across the register in one pass
    void apply_pauli(const PauliOperator& p) {
        if (p.num_qubits() != qubits) throw std::invalid_argument("apply_pauli: size mismatch");
        std::uint64_t xmask = 0, zmask = 0;
        for (int k = 0; k < qubits; ++k) {
            std::uint64_t bit = std::uint64_t{1} << bit_of(k);
            if ((p.x_bits() >> k) & 1) xmask |= bit;
            if ((p.z_bits() >> k) & 1) zmask |= bit;
        }
        static const Complex phases[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
        Complex front = phases[p.phase_exponent() & 3];
        std::vector<Complex> out(amp.size());
        for (std::size_t i = 0; i < amp.size(); ++i) {
            // Z acts on the pre-flip basis state: X^x Z^z |i> = (-1)^{z & i} |i ^ x>
            Complex v = amp[i] * front;
            if (std::popcount(static_cast<std::uint64_t>(i) & zmask) & 1) v = -v;
            out[i ^ xmask] = v;
        }
        amp.swap(out);
    }

    // full-dimension operator, for small registers
    void apply_matrix(const DenseMatrix& u) {
        if (static_cast<std::size_t>(u.dim()) != amp.size())
            throw std::invalid_argument("apply_matrix: dimension mismatch");
        std::vector<Complex> out(amp.size(), Complex{0.0, 0.0});
        for (int r = 0; r < u.dim(); ++r)
            for (int c = 0; c < u.dim(); ++c) out[r] += u.at(r, c) * amp[c];
        amp.swap(out);
    }
};

inline Complex inner_product(const StateVector& a, const StateVector& b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("inner_product: dimension mismatch");
    Complex s{0.0, 0.0};
    for (std::size_t i = 0; i < a.dim(); ++i) s += std::conj(a.amp[i]) * b.amp[i];
    return s;
}

// |<a|b>| = |a||b| up to tol, i.e. equal as rays
inline bool equal_up_to_global_phase(const StateVector& a, const StateVector& b, double tol = 1e-9) {
    double na = std::sqrt(a.norm_squared());
    double nb = std::sqrt(b.norm_squared());
    return std::abs(std::abs(inner_product(a, b)) - na * nb) <= tol * std::max(1.0, na * nb);
}

}  // namespace framekit

#endif  // FRAMEKIT_STATEVECTOR_HPP
