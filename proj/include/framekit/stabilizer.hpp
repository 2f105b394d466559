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

#ifndef FRAMEKIT_STABILIZER_HPP
#define FRAMEKIT_STABILIZER_HPP

// Distance-3 stabilizer code machinery for the code-projection experiment:
// the five-qubit code, its pure-error table, recovery decomposition into
// logical x pure-error x stabilizer parts, and syndrome projection of an
// encoded Bell half under an arbitrary unitary error.

#include <array>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "framekit/dense.hpp"
#include "framekit/pauli.hpp"
#include "framekit/statevector.hpp"

namespace framekit {

struct StabilizerCode {
    int n = 0;                            // physical qubits, one logical qubit
    std::vector<PauliOperator> generators;
    PauliOperator logical_x;
    PauliOperator logical_z;
    std::vector<PauliOperator> pure_errors;   // indexed by syndrome bits
    StateVector codeword0;                    // +1 eigenstate of logical Z
    StateVector codeword1;

    StabilizerCode()
        : logical_x(PauliOperator::identity(1)), logical_z(PauliOperator::identity(1)) {}

    int syndrome_bits() const { return static_cast<int>(generators.size()); }
    int syndrome_count() const { return 1 << syndrome_bits(); }

    void validate() const {
        for (std::size_t i = 0; i < generators.size(); ++i)
            for (std::size_t j = i + 1; j < generators.size(); ++j)
                if (!generators[i].commutes_with(generators[j]))
                    throw std::logic_error("stabilizer code: generators must commute");
        for (const PauliOperator& g : generators) {
            if (!logical_x.commutes_with(g) || !logical_z.commutes_with(g))
                throw std::logic_error("stabilizer code: logicals must commute with generators");
        }
        if (logical_x.commutes_with(logical_z))
            throw std::logic_error("stabilizer code: logical X and Z must anticommute");
        if (static_cast<int>(pure_errors.size()) != syndrome_count())
            throw std::logic_error("stabilizer code: pure-error table incomplete");
        for (int s = 0; s < syndrome_count(); ++s) {
            const PauliOperator& t = pure_errors[s];
            for (int i = 0; i < syndrome_bits(); ++i) {
                bool anti = !t.commutes_with(generators[i]);
                if (anti != (((s >> i) & 1) != 0))
                    throw std::logic_error("stabilizer code: pure error flags the wrong syndrome");
            }
            if (!t.commutes_with(logical_x) || !t.commutes_with(logical_z))
                throw std::logic_error("stabilizer code: pure error must commute with logicals");
        }
    }
};

inline int syndrome_of(const StabilizerCode& code, const PauliOperator& p) {
    int s = 0;
    for (int i = 0; i < code.syndrome_bits(); ++i)
        if (!p.commutes_with(code.generators[i])) s |= 1 << i;
    return s;
}

namespace detail {

inline PauliOperator pauli_from_letters(const std::string& letters) {
    int n = static_cast<int>(letters.size());
    PauliOperator out = PauliOperator::identity(n);
    for (int q = 0; q < n; ++q) out = out * PauliOperator::single(n, q, letters[q]);
    return out;
}

// Solve M t = rhs over GF(2) where row i of M constrains the symplectic
// product of the unknown Pauli t against a fixed operator. Bits 0..n-1 of a
// row (and of t) hold the x part, bits n..2n-1 the z part.
inline std::uint64_t solve_symplectic(std::vector<std::uint64_t> rows, std::uint64_t rhs_bits,
                                      int n) {
    const int cols = 2 * n;
    std::vector<int> pivot_col(rows.size(), -1);
    std::size_t rank = 0;
    for (int c = 0; c < cols && rank < rows.size(); ++c) {
        std::size_t pivot = rank;
        while (pivot < rows.size() && !((rows[pivot] >> c) & 1)) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[rank], rows[pivot]);
        std::uint64_t rb = (rhs_bits >> rank) & 1, pb = (rhs_bits >> pivot) & 1;
        rhs_bits ^= (rb ^ pb) << rank;
        rhs_bits ^= (rb ^ pb) << pivot;
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r != rank && ((rows[r] >> c) & 1)) {
                rows[r] ^= rows[rank];
                rhs_bits ^= ((rhs_bits >> rank) & 1) << r;
            }
        }
        pivot_col[rank] = c;
        ++rank;
    }
    for (std::size_t r = rank; r < rows.size(); ++r)
        if ((rhs_bits >> r) & 1)
            throw std::logic_error("solve_symplectic: inconsistent system");
    std::uint64_t t = 0;
    for (std::size_t r = 0; r < rank; ++r)
        if ((rhs_bits >> r) & 1) t |= std::uint64_t{1} << pivot_col[r];
    return t;
}

}  // namespace detail

// The five-qubit distance-3 code: generators XZZXI and its first three
// cyclic shifts, logicals the transversal X and Z strings. Pure errors are
// solved per syndrome from the symplectic linear system (anticommute with
// exactly the flagged generators, commute with both logicals).
inline StabilizerCode build_five_qubit_code() {
    StabilizerCode code;
    code.n = 5;
    code.generators = {
        detail::pauli_from_letters("XZZXI"),
        detail::pauli_from_letters("IXZZX"),
        detail::pauli_from_letters("XIXZZ"),
        detail::pauli_from_letters("ZXIXZ"),
    };
    code.logical_x = detail::pauli_from_letters("XXXXX");
    code.logical_z = detail::pauli_from_letters("ZZZZZ");

    const int n = code.n;
    std::vector<std::uint64_t> base_rows;
    auto constraint_row = [n](const PauliOperator& a) {
        // <t, a> = t_x . a_z + t_z . a_x
        return a.z_bits() | (a.x_bits() << n);
    };
    for (const PauliOperator& g : code.generators) base_rows.push_back(constraint_row(g));
    base_rows.push_back(constraint_row(code.logical_x));
    base_rows.push_back(constraint_row(code.logical_z));

    for (int s = 0; s < code.syndrome_count(); ++s) {
        std::uint64_t t = detail::solve_symplectic(base_rows, static_cast<std::uint64_t>(s), n);
        std::uint64_t mask = (std::uint64_t{1} << n) - 1;
        code.pure_errors.emplace_back(n, t & mask, (t >> n) & mask, 0);
    }

    // logical basis: project |0...0> into the codespace, then flip
    code.codeword0 = StateVector::basis(n, 0);
    for (const PauliOperator& g : code.generators) {
        StateVector image = code.codeword0;
        image.apply_pauli(g);
        for (std::uint64_t k = 0; k < code.codeword0.dim(); ++k)
            code.codeword0.amp[k] = 0.5 * (code.codeword0.amp[k] + image.amp[k]);
    }
    double norm = std::sqrt(code.codeword0.norm_squared());
    if (norm < 1e-9) throw std::logic_error("build_five_qubit_code: empty codespace projection");
    for (Complex& a : code.codeword0.amp) a /= norm;
    code.codeword1 = code.codeword0;
    code.codeword1.apply_pauli(code.logical_x);

    code.validate();
    return code;
}

struct RecoveryDecomposition {
    PauliOperator logical_part;
    PauliOperator pure_error_part;
    PauliOperator stabilizer_part;
};

// Split a Pauli into logical x pure-error x stabilizer parts (phases
// dropped; the product matches the input up to phase).
inline RecoveryDecomposition decompose_recovery(const StabilizerCode& code,
                                                const PauliOperator& r) {
    if (r.num_qubits() != code.n)
        throw std::invalid_argument("decompose_recovery: operator size mismatch");
    const PauliOperator& t = code.pure_errors[syndrome_of(code, r)];
    PauliOperator rest(code.n, r.x_bits() ^ t.x_bits(), r.z_bits() ^ t.z_bits(), 0);
    // rest commutes with every generator; peel off its logical class
    PauliOperator logical = PauliOperator::identity(code.n);
    if (!rest.commutes_with(code.logical_z)) logical = logical * code.logical_x;
    if (!rest.commutes_with(code.logical_x)) logical = logical * code.logical_z;
    PauliOperator stab(code.n, rest.x_bits() ^ logical.x_bits(),
                       rest.z_bits() ^ logical.z_bits(), 0);
    return {logical.with_phase(0), t, stab};
}

// Logical qubit of the code maximally entangled with one reference qubit.
// Register layout: code qubits first, the reference qubit last.
inline StateVector encoded_bell_half(const StabilizerCode& code) {
    StateVector bell(code.n + 1);
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    for (std::uint64_t c = 0; c < code.codeword0.dim(); ++c) {
        bell.amp[2 * c] = code.codeword0.amp[c] * inv_sqrt2;
        bell.amp[2 * c + 1] = code.codeword1.amp[c] * inv_sqrt2;
    }
    return bell;
}

namespace detail {

// extend a code-qubit Pauli to the full register (reference untouched)
inline PauliOperator on_code_qubits(const PauliOperator& p, int total_qubits) {
    return PauliOperator(total_qubits, p.x_bits(), p.z_bits(), p.phase_exponent());
}

// apply a unitary on the code qubits of the code+reference register
inline void apply_code_unitary(StateVector& state, const DenseMatrix& u, int code_qubits) {
    std::uint64_t code_dim = std::uint64_t{1} << code_qubits;
    if (u.dim() != static_cast<int>(code_dim))
        throw std::invalid_argument("apply_code_unitary: dimension mismatch");
    std::vector<Complex> out(state.amp.size());
    for (std::uint64_t c = 0; c < code_dim; ++c) {
        for (std::uint64_t cc = 0; cc < code_dim; ++cc) {
            Complex e = u.at(static_cast<int>(c), static_cast<int>(cc));
            if (e == Complex{}) continue;
            out[2 * c] += e * state.amp[2 * cc];
            out[2 * c + 1] += e * state.amp[2 * cc + 1];
        }
    }
    state.amp = std::move(out);
}

}  // namespace detail

struct ProjectionResult {
    StateVector state;       // normalized post-correction state; meaningful iff valid
    double probability = 0;  // outcome probability of the syndrome
    bool valid = false;      // false when the syndrome has (near) zero probability
};

// Apply the error to the code half, project onto the syndrome-s subspace,
// then apply the pure-error correction.
inline ProjectionResult project_and_correct(const StateVector& state, const StabilizerCode& code,
                                            const DenseMatrix& error, int s) {
    if (state.qubits != code.n + 1)
        throw std::invalid_argument("project_and_correct: state size mismatch");
    if (s < 0 || s >= code.syndrome_count())
        throw std::invalid_argument("project_and_correct: syndrome out of range");
    ProjectionResult out;
    out.state = state;
    detail::apply_code_unitary(out.state, error, code.n);
    for (int i = 0; i < code.syndrome_bits(); ++i) {
        StateVector image = out.state;
        image.apply_pauli(detail::on_code_qubits(code.generators[i], code.n + 1));
        double sign = ((s >> i) & 1) ? -1.0 : 1.0;
        for (std::size_t k = 0; k < out.state.amp.size(); ++k)
            out.state.amp[k] = 0.5 * (out.state.amp[k] + sign * image.amp[k]);
    }
    out.probability = out.state.norm_squared();
    if (out.probability < 1e-13) {
        out.valid = false;
        return out;
    }
    out.state.apply_pauli(detail::on_code_qubits(code.pure_errors[s], code.n + 1));
    double norm = std::sqrt(out.state.norm_squared());
    for (Complex& a : out.state.amp) a /= norm;
    out.valid = true;
    return out;
}

}  // namespace framekit

#endif  // FRAMEKIT_STABILIZER_HPP
