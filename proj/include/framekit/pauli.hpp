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

#ifndef FRAMEKIT_PAULI_HPP
#define FRAMEKIT_PAULI_HPP

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace framekit {

// n-qubit Pauli operator stored as i^phase * X^x * Z^z with one x bit and one
// z bit per qubit.  Qubit k lives in bit k of the masks, which caps operators
// at 64 qubits (far more than anything in this library needs).
//
// Phase bookkeeping follows from ZX = -XZ applied per qubit:
//   (i^a X^x1 Z^z1)(i^b X^x2 Z^z2) = i^(a+b) (-1)^|z1&x2| X^(x1^x2) Z^(z1^z2)
// The Hermitian letter Y is i*X*Z, so Y = (x=1, z=1, phase=1).
class PauliOperator {
  public:
    PauliOperator() = default;

    PauliOperator(int num_qubits, uint64_t x_bits, uint64_t z_bits, int phase_exponent = 0)
        : n_(num_qubits), x_(x_bits), z_(z_bits), phase_(phase_exponent & 3) {
        if (num_qubits < 1 || num_qubits > 64) {
            throw std::invalid_argument("PauliOperator: qubit count must be in [1, 64]");
        }
        uint64_t mask = qubit_mask();
        if ((x_ & ~mask) || (z_ & ~mask)) {
            throw std::invalid_argument("PauliOperator: x/z bits outside qubit range");
        }
    }

    static PauliOperator identity(int num_qubits) {
        return PauliOperator(num_qubits, 0, 0, 0);
    }

    // Single-letter Pauli acting on one qubit of an n-qubit register.
    static PauliOperator single(int num_qubits, int qubit, char axis) {
        uint64_t bit = 1ull << check_qubit(num_qubits, qubit);
        switch (axis) {
            case 'I': return PauliOperator(num_qubits, 0, 0, 0);
            case 'X': return PauliOperator(num_qubits, bit, 0, 0);
            case 'Y': return PauliOperator(num_qubits, bit, bit, 1);
            case 'Z': return PauliOperator(num_qubits, 0, bit, 0);
            default: throw std::invalid_argument("PauliOperator: axis must be one of I, X, Y, Z");
        }
    }

    // Parses labels like "XZZXI", "+XZ", "-Y", "iZ", "-iXY".  The first letter
    // acts on qubit 0.
    static PauliOperator from_label(std::string_view label) {
        int phase = 0;
        if (!label.empty() && (label[0] == '+' || label[0] == '-')) {
            phase = label[0] == '-' ? 2 : 0;
            label.remove_prefix(1);
        }
        if (!label.empty() && label[0] == 'i') {
            phase += 1;
            label.remove_prefix(1);
        }
        if (label.empty() || label.size() > 64) {
            throw std::invalid_argument("PauliOperator: bad label length");
        }
        PauliOperator result(static_cast<int>(label.size()), 0, 0, phase);
        for (size_t k = 0; k < label.size(); ++k) {
            PauliOperator letter = single(result.n_, static_cast<int>(k), label[k]);
            result.x_ |= letter.x_;
            result.z_ |= letter.z_;
            result.phase_ = (result.phase_ + letter.phase_) & 3;
        }
        return result;
    }

    int num_qubits() const { return n_; }
    uint64_t x_bits() const { return x_; }
    uint64_t z_bits() const { return z_; }
    int phase_exponent() const { return phase_; }

    bool x_bit(int qubit) const { return (x_ >> check_qubit(n_, qubit)) & 1; }
    bool z_bit(int qubit) const { return (z_ >> check_qubit(n_, qubit)) & 1; }

    char axis_at(int qubit) const {
        bool x = x_bit(qubit), z = z_bit(qubit);
        return x ? (z ? 'Y' : 'X') : (z ? 'Z' : 'I');
    }

    int weight() const { return std::popcount(x_ | z_); }

    bool is_identity() const { return x_ == 0 && z_ == 0 && phase_ == 0; }
    bool is_identity_up_to_phase() const { return x_ == 0 && z_ == 0; }

    // i^phase X^x Z^z is Hermitian iff phase == |x&z| (mod 2); the operator is
    // then sign() times a tensor product of the letters I, X, Y, Z.
    bool is_hermitian() const {
        return ((phase_ - std::popcount(x_ & z_)) & 1) == 0;
    }

    int sign() const {
        if (!is_hermitian()) {
            throw std::logic_error("PauliOperator::sign: operator is not Hermitian");
        }
        return ((phase_ - std::popcount(x_ & z_)) & 3) == 0 ? +1 : -1;
    }

    bool commutes_with(const PauliOperator& o) const {
        check_same_size(o);
        return ((std::popcount(x_ & o.z_) + std::popcount(z_ & o.x_)) & 1) == 0;
    }

    PauliOperator operator*(const PauliOperator& o) const {
        check_same_size(o);
        int phase = (phase_ + o.phase_ + 2 * (std::popcount(z_ & o.x_) & 1)) & 3;
        return PauliOperator(n_, x_ ^ o.x_, z_ ^ o.z_, phase);
    }

    PauliOperator adjoint() const {
        int phase = (4 - phase_ + 2 * (std::popcount(x_ & z_) & 1)) & 3;
        return PauliOperator(n_, x_, z_, phase);
    }

    PauliOperator with_phase(int phase_exponent) const {
        return PauliOperator(n_, x_, z_, phase_exponent);
    }

    PauliOperator times_phase(int extra_exponent) const {
        return PauliOperator(n_, x_, z_, phase_ + extra_exponent);
    }

    // Restriction to a single qubit, keeping the whole operator's phase.
    // Only meaningful when the operator acts trivially elsewhere.
    PauliOperator restrict_to(int qubit) const {
        uint64_t bit = 1ull << check_qubit(n_, qubit);
        return PauliOperator(1, (x_ & bit) ? 1 : 0, (z_ & bit) ? 1 : 0, phase_);
    }

    bool operator==(const PauliOperator& o) const = default;

    // Sign or i-factor first (as +, -, +i, -i over the Hermitian letters),
    // then one letter per qubit with qubit 0 leftmost.
    std::string to_string() const {
        static const char* prefixes[4] = {"+", "+i", "-", "-i"};
        std::string out = prefixes[(phase_ - std::popcount(x_ & z_)) & 3];
        for (int k = 0; k < n_; ++k) {
            out += axis_at(k);
        }
        return out;
    }

  private:
    static int check_qubit(int num_qubits, int qubit) {
        if (qubit < 0 || qubit >= num_qubits) {
            throw std::out_of_range("PauliOperator: qubit index out of range");
        }
        return qubit;
    }

    void check_same_size(const PauliOperator& o) const {
        if (n_ != o.n_) {
            throw std::invalid_argument("PauliOperator: size mismatch");
        }
    }

    uint64_t qubit_mask() const {
        return n_ == 64 ? ~0ull : (1ull << n_) - 1;
    }

    int n_ = 1;
    uint64_t x_ = 0;
    uint64_t z_ = 0;
    int phase_ = 0;
};

}  // namespace framekit

#endif
