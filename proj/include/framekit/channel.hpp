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

#ifndef FRAMEKIT_CHANNEL_HPP
#define FRAMEKIT_CHANNEL_HPP

// Process-matrix view of the syndrome-projection channel. The encoded Bell
// half turns the per-syndrome map into a two-qubit Choi state; converting
// that to a process matrix and matching it against the 24 single-qubit
// Clifford patterns decides whether the projected error acted as a logical
// Clifford.

#include <array>
#include <cmath>
#include <cstdint>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "framekit/clifford.hpp"
#include "framekit/dense.hpp"
#include "framekit/pauli.hpp"
#include "framekit/rng.hpp"
#include "framekit/stabilizer.hpp"
#include "framekit/statevector.hpp"

namespace framekit {

// 4x4 real process matrix in the (I, X, Y, Z) basis:
// entry (i, j) = Tr[E(P_i) P_j] / 2.
struct ProcessMatrix {
    std::array<std::array<double, 4>, 4> m{};

    double& at(int i, int j) { return m[i][j]; }
    double at(int i, int j) const { return m[i][j]; }

    double max_abs_diff(const ProcessMatrix& o) const {
        double d = 0;
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) d = std::max(d, std::abs(m[i][j] - o.m[i][j]));
        return d;
    }
};

// Exact process matrix of a single-qubit Clifford conjugation channel.
inline ProcessMatrix clifford_process_matrix(const CliffordGate1& g) {
    ProcessMatrix pm;
    pm.at(0, 0) = 1.0;
    const char axes[] = {'X', 'Y', 'Z'};
    for (int i = 1; i < 4; ++i) {
        PauliOperator img = g.conjugate(PauliOperator::single(1, 0, axes[i - 1]));
        int xz = static_cast<int>(img.x_bits() & 1) + 2 * static_cast<int>(img.z_bits() & 1);
        int j = xz == 1 ? 1 : xz == 3 ? 2 : 3;  // x -> X, xz -> Y, z -> Z
        int sign_exp = (img.phase_exponent() - (xz == 3 ? 1 : 0)) & 3;
        if (sign_exp != 0 && sign_exp != 2)
            throw std::logic_error("clifford_process_matrix: non-hermitian image");
        pm.at(i, j) = sign_exp == 0 ? 1.0 : -1.0;
    }
    return pm;
}

// If the matrix equals one of the 24 Clifford patterns within tol, return
// that Clifford. Anything else, including signed permutations that are not
// completely positive as channels, comes back empty.
inline std::optional<CliffordGate1> is_signed_permutation(const ProcessMatrix& pm, double tol) {
    const auto& tab = CliffordTable::instance();
    for (int k = 0; k < CliffordTable::kSize; ++k) {
        if (pm.max_abs_diff(clifford_process_matrix(tab.element(k))) <= tol)
            return tab.element(k);
    }
    return std::nullopt;
}

// Human-readable list of entries that sit between the tolerance bands; used
// to report why a matrix failed the signed-permutation test.
inline std::string signed_permutation_violations(const ProcessMatrix& pm, double tol) {
    std::ostringstream out;
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            double a = std::abs(pm.at(i, j));
            if (a > tol && a < 1.0 - tol) {
                if (out.tellp() > 0) out << ", ";
                out << "(" << i << "," << j << ")=" << pm.at(i, j);
            }
        }
    }
    return out.str();
}

// Process matrix of the effective logical channel for one syndrome: decode
// the projected Bell half to a two-qubit Choi state phi, then
// entry (i, j) = <phi| P_j (x) P_i^T |phi>.
inline ProcessMatrix effective_process_matrix(const StabilizerCode& code, const DenseMatrix& error,
                                              int s) {
    StateVector bell = encoded_bell_half(code);
    ProjectionResult pr = project_and_correct(bell, code, error, s);
    if (!pr.valid)
        throw std::domain_error("effective_process_matrix: zero-probability syndrome");

    // decode: overlap the code half with the two codewords
    std::array<Complex, 4> phi{};  // index = logical * 2 + reference
    for (std::uint64_t c = 0; c < code.codeword0.dim(); ++c) {
        for (int r = 0; r < 2; ++r) {
            phi[r] += std::conj(code.codeword0.amp[c]) * pr.state.amp[2 * c + r];
            phi[2 + r] += std::conj(code.codeword1.amp[c]) * pr.state.amp[2 * c + r];
        }
    }
    double norm2 = 0;
    for (const Complex& a : phi) norm2 += std::norm(a);
    if (norm2 < 1.0 - 1e-6)
        throw std::logic_error("effective_process_matrix: post-correction state left the codespace");
    double norm = std::sqrt(norm2);
    for (Complex& a : phi) a /= norm;

    const DenseMatrix paulis[4] = {mat_i(), mat_x(), mat_y(), mat_z()};
    ProcessMatrix pm;
    for (int i = 0; i < 4; ++i) {
        DenseMatrix pit = paulis[i].transpose();
        for (int j = 0; j < 4; ++j) {
            DenseMatrix op = kron(paulis[j], pit);
            Complex v = 0;
            for (int a = 0; a < 4; ++a)
                for (int b = 0; b < 4; ++b) v += std::conj(phi[a]) * op.at(a, b) * phi[b];
            pm.at(i, j) = v.real();
        }
    }
    return pm;
}

// Syndrome distribution of an error on the encoded Bell half.
inline std::vector<double> syndrome_probabilities(const StabilizerCode& code,
                                                  const DenseMatrix& error) {
    StateVector bell = encoded_bell_half(code);
    std::vector<double> probs(code.syndrome_count());
    for (int s = 0; s < code.syndrome_count(); ++s)
        probs[s] = project_and_correct(bell, code, error, s).probability;
    return probs;
}

// Tensor product of single-qubit Cliffords on the code qubits, given as
// Clifford table indices.
inline DenseMatrix transversal_error(const StabilizerCode& code, const std::vector<int>& indices) {
    if (static_cast<int>(indices.size()) != code.n)
        throw std::invalid_argument("transversal_error: one index per code qubit");
    const auto& tab = CliffordTable::instance();
    DenseMatrix out(1, {Complex{1, 0}});
    for (int idx : indices) out = kron(out, tab.matrix(idx));
    return out;
}

inline DenseMatrix random_transversal_error(const StabilizerCode& code, SplitRng& rng) {
    std::vector<int> indices(code.n);
    for (int& idx : indices) idx = static_cast<int>(rng.next_below(CliffordTable::kSize));
    return transversal_error(code, indices);
}

// Entangling Clifford error sampled as a random circuit of H, S, and CNOT
// layers over the code qubits.
inline DenseMatrix random_entangling_error(const StabilizerCode& code, SplitRng& rng,
                                           int gate_count = 30) {
    const int n = code.n;
    const std::uint64_t dim = std::uint64_t{1} << n;
    auto embed_single = [&](const DenseMatrix& u, int q) {
        DenseMatrix out(1, {Complex{1, 0}});
        for (int k = 0; k < n; ++k) out = kron(out, k == q ? u : mat_i());
        return out;
    };
    auto cnot_matrix = [&](int c, int t) {
        DenseMatrix out(static_cast<int>(dim));
        std::uint64_t cbit = std::uint64_t{1} << (n - 1 - c);
        std::uint64_t tbit = std::uint64_t{1} << (n - 1 - t);
        for (std::uint64_t b = 0; b < dim; ++b) {
            std::uint64_t img = (b & cbit) ? (b ^ tbit) : b;
            out.at(static_cast<int>(img), static_cast<int>(b)) = 1.0;
        }
        return out;
    };
    DenseMatrix u = DenseMatrix::identity(static_cast<int>(dim));
    for (int g = 0; g < gate_count; ++g) {
        switch (rng.next_below(3)) {
            case 0: u = embed_single(mat_h(), static_cast<int>(rng.next_below(n))) * u; break;
            case 1: u = embed_single(mat_s(), static_cast<int>(rng.next_below(n))) * u; break;
            default: {
                int c = static_cast<int>(rng.next_below(n));
                int t = static_cast<int>(rng.next_below(n - 1));
                if (t >= c) ++t;
                u = cnot_matrix(c, t) * u;
            }
        }
    }
    return u;
}

struct SyndromeChannelReport {
    int syndrome = 0;
    double probability = 0;
    bool clifford = false;            // passed the signed-permutation test
    int logical_index = -1;           // Clifford table index when it passed
    std::string violations;           // offending entries when it failed
};

struct ErrorChannelReport {
    std::vector<SyndromeChannelReport> syndromes;
    double probability_sum = 0;
    bool all_clifford = true;         // over nonzero-probability syndromes
};

// Full per-syndrome analysis of one error: probabilities, process matrices,
// and the signed-permutation verdicts.
inline ErrorChannelReport analyze_error_channel(const StabilizerCode& code,
                                                const DenseMatrix& error, double tol) {
    const auto& tab = CliffordTable::instance();
    ErrorChannelReport report;
    StateVector bell = encoded_bell_half(code);
    for (int s = 0; s < code.syndrome_count(); ++s) {
        SyndromeChannelReport sc;
        sc.syndrome = s;
        ProjectionResult pr = project_and_correct(bell, code, error, s);
        sc.probability = pr.probability;
        report.probability_sum += pr.probability;
        if (pr.valid) {
            ProcessMatrix pm = effective_process_matrix(code, error, s);
            auto g = is_signed_permutation(pm, tol);
            sc.clifford = g.has_value();
            if (g) {
                sc.logical_index = tab.index_of(*g);
            } else {
                sc.violations = signed_permutation_violations(pm, tol);
                report.all_clifford = false;
            }
        }
        report.syndromes.push_back(sc);
    }
    return report;
}

}  // namespace framekit

#endif  // FRAMEKIT_CHANNEL_HPP
