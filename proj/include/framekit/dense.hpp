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

#ifndef FRAMEKIT_DENSE_HPP
#define FRAMEKIT_DENSE_HPP

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "framekit/pauli.hpp"

namespace framekit {

using Complex = std::complex<double>;

// Small dense complex matrix.  This is the ground-truth backend: everything
// the symplectic representations claim is cross-checked against products of
// these.  Dimensions stay tiny (2, 4, at most 64), so no effort is spent on
// performance.
class DenseMatrix {
  public:
    DenseMatrix() : dim_(0) {}

    explicit DenseMatrix(int dim) : dim_(dim), a_(static_cast<size_t>(dim) * dim) {
        if (dim < 1 || dim > 1024) {
            throw std::invalid_argument("DenseMatrix: bad dimension");
        }
    }

    DenseMatrix(int dim, std::initializer_list<Complex> entries) : DenseMatrix(dim) {
        if (entries.size() != a_.size()) {
            throw std::invalid_argument("DenseMatrix: entry count does not match dimension");
        }
        size_t k = 0;
        for (const Complex& c : entries) {
            a_[k++] = c;
        }
    }

    static DenseMatrix identity(int dim) {
        DenseMatrix m(dim);
        for (int i = 0; i < dim; ++i) {
            m.at(i, i) = 1.0;
        }
        return m;
    }

    int dim() const { return dim_; }

    Complex& at(int r, int c) { return a_[static_cast<size_t>(r) * dim_ + c]; }
    const Complex& at(int r, int c) const { return a_[static_cast<size_t>(r) * dim_ + c]; }

    DenseMatrix operator*(const DenseMatrix& o) const {
        check_same_dim(o);
        DenseMatrix out(dim_);
        for (int i = 0; i < dim_; ++i) {
            for (int k = 0; k < dim_; ++k) {
                Complex aik = at(i, k);
                if (aik == Complex{}) {
                    continue;
                }
                for (int j = 0; j < dim_; ++j) {
                    out.at(i, j) += aik * o.at(k, j);
                }
            }
        }
        return out;
    }

    DenseMatrix operator+(const DenseMatrix& o) const {
        check_same_dim(o);
        DenseMatrix out(dim_);
        for (size_t k = 0; k < a_.size(); ++k) {
            out.a_[k] = a_[k] + o.a_[k];
        }
        return out;
    }

    DenseMatrix operator-(const DenseMatrix& o) const {
        check_same_dim(o);
        DenseMatrix out(dim_);
        for (size_t k = 0; k < a_.size(); ++k) {
            out.a_[k] = a_[k] - o.a_[k];
        }
        return out;
    }

    DenseMatrix scaled(Complex s) const {
        DenseMatrix out(dim_);
        for (size_t k = 0; k < a_.size(); ++k) {
            out.a_[k] = s * a_[k];
        }
        return out;
    }

    DenseMatrix dagger() const {
        DenseMatrix out(dim_);
        for (int i = 0; i < dim_; ++i) {
            for (int j = 0; j < dim_; ++j) {
                out.at(j, i) = std::conj(at(i, j));
            }
        }
        return out;
    }

    DenseMatrix transpose() const {
        DenseMatrix out(dim_);
        for (int i = 0; i < dim_; ++i) {
            for (int j = 0; j < dim_; ++j) {
                out.at(j, i) = at(i, j);
            }
        }
        return out;
    }

    Complex trace() const {
        Complex t = 0;
        for (int i = 0; i < dim_; ++i) {
            t += at(i, i);
        }
        return t;
    }

    double max_abs() const {
        double m = 0;
        for (const Complex& c : a_) {
            m = std::max(m, std::abs(c));
        }
        return m;
    }

    double max_abs_diff(const DenseMatrix& o) const {
        check_same_dim(o);
        double m = 0;
        for (size_t k = 0; k < a_.size(); ++k) {
            m = std::max(m, std::abs(a_[k] - o.a_[k]));
        }
        return m;
    }

    bool approx_equal(const DenseMatrix& o, double tol) const {
        return dim_ == o.dim_ && max_abs_diff(o) <= tol;
    }

  private:
    void check_same_dim(const DenseMatrix& o) const {
        if (dim_ != o.dim_) {
            throw std::invalid_argument("DenseMatrix: dimension mismatch");
        }
    }

    int dim_;
    std::vector<Complex> a_;
};

// Kronecker product; the first factor owns the high-order index bits, so
// kron(A, B) matches the A (x) B notation with qubit 0 in A.
inline DenseMatrix kron(const DenseMatrix& a, const DenseMatrix& b) {
    DenseMatrix out(a.dim() * b.dim());
    for (int ia = 0; ia < a.dim(); ++ia) {
        for (int ja = 0; ja < a.dim(); ++ja) {
            for (int ib = 0; ib < b.dim(); ++ib) {
                for (int jb = 0; jb < b.dim(); ++jb) {
                    out.at(ia * b.dim() + ib, ja * b.dim() + jb) = a.at(ia, ja) * b.at(ib, jb);
                }
            }
        }
    }
    return out;
}

inline DenseMatrix mat_i() { return DenseMatrix(2, {1, 0, 0, 1}); }
inline DenseMatrix mat_x() { return DenseMatrix(2, {0, 1, 1, 0}); }
inline DenseMatrix mat_y() { return DenseMatrix(2, {0, Complex(0, -1), Complex(0, 1), 0}); }
inline DenseMatrix mat_z() { return DenseMatrix(2, {1, 0, 0, -1}); }

inline DenseMatrix mat_h() {
    double s = 1.0 / std::numbers::sqrt2;
    return DenseMatrix(2, {s, s, s, -s});
}

// S carries no normalization factor: diag(1, i).
inline DenseMatrix mat_s() { return DenseMatrix(2, {1, 0, 0, Complex(0, 1)}); }
inline DenseMatrix mat_sdg() { return DenseMatrix(2, {1, 0, 0, Complex(0, -1)}); }

inline DenseMatrix mat_t() {
    return DenseMatrix(2, {1, 0, 0, std::polar(1.0, std::numbers::pi / 4)});
}

inline DenseMatrix mat_tdg() {
    return DenseMatrix(2, {1, 0, 0, std::polar(1.0, -std::numbers::pi / 4)});
}

// Controlled-U with the control on the first (high-bit) qubit:
// (1/2)(I+Z) (x) I + (1/2)(I-Z) (x) U.
inline DenseMatrix controlled_u_matrix(const DenseMatrix& u) {
    if (u.dim() != 2) {
        throw std::invalid_argument("controlled_u_matrix: U must be 2x2");
    }
    DenseMatrix p0 = (mat_i() + mat_z()).scaled(0.5);
    DenseMatrix p1 = (mat_i() - mat_z()).scaled(0.5);
    return kron(p0, mat_i()) + kron(p1, u);
}

inline DenseMatrix mat_cnot() { return controlled_u_matrix(mat_x()); }
inline DenseMatrix mat_cy() { return controlled_u_matrix(mat_y()); }
inline DenseMatrix mat_cz() { return controlled_u_matrix(mat_z()); }

// Dense form of a Pauli operator, qubit 0 in the highest index bits.
inline DenseMatrix make_pauli_matrix(const PauliOperator& p) {
    DenseMatrix out(1);
    out.at(0, 0) = 1.0;
    for (int k = 0; k < p.num_qubits(); ++k) {
        switch (p.axis_at(k)) {
            case 'I': out = kron(out, mat_i()); break;
            case 'X': out = kron(out, mat_x()); break;
            case 'Y': out = kron(out, mat_y()); break;
            case 'Z': out = kron(out, mat_z()); break;
        }
    }
    // to_string's prefix is the scalar relative to the Hermitian letters.
    static const Complex factors[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    int prefix = (p.phase_exponent() - std::popcount(p.x_bits() & p.z_bits())) & 3;
    return out.scaled(factors[prefix]);
}

// True iff a = e^{i theta} b for some real theta, entrywise within tol.
inline bool equal_up_to_phase(const DenseMatrix& a, const DenseMatrix& b, double tol) {
    if (a.dim() != b.dim()) {
        return false;
    }
    int best_r = 0, best_c = 0;
    double best = -1;
    for (int r = 0; r < b.dim(); ++r) {
        for (int c = 0; c < b.dim(); ++c) {
            if (std::abs(b.at(r, c)) > best) {
                best = std::abs(b.at(r, c));
                best_r = r;
                best_c = c;
            }
        }
    }
    if (best < tol) {
        return a.max_abs() <= tol;
    }
    Complex phase = a.at(best_r, best_c) / b.at(best_r, best_c);
    double mag = std::abs(phase);
    if (mag < tol) {
        return false;
    }
    phase /= mag;
    return a.max_abs_diff(b.scaled(phase)) <= tol;
}

// Coefficient of each n-qubit Pauli in M = sum_Q c_Q Q; index encodes the
// per-qubit letter base-4 as I=0, X=1, Y=2, Z=3 with qubit 0 the high digit.
inline std::vector<Complex> pauli_coefficients(const DenseMatrix& m) {
    int n = 0;
    while ((1 << n) < m.dim()) {
        ++n;
    }
    if ((1 << n) != m.dim()) {
        throw std::invalid_argument("pauli_coefficients: dimension is not a power of two");
    }
    static const char letters[4] = {'I', 'X', 'Y', 'Z'};
    std::vector<Complex> coeffs;
    coeffs.reserve(1u << (2 * n));
    for (int code = 0; code < (1 << (2 * n)); ++code) {
        std::string label;
        for (int k = n - 1; k >= 0; --k) {
            label += letters[(code >> (2 * k)) & 3];
        }
        DenseMatrix q = make_pauli_matrix(PauliOperator::from_label(label));
        coeffs.push_back((q.dagger() * m).trace() / static_cast<double>(m.dim()));
    }
    return coeffs;
}

// True iff U maps every Pauli generator to a single Pauli (up to phase) under
// conjugation.  Supports one- and two-qubit matrices.
inline bool is_clifford(const DenseMatrix& u, double tol = 1e-9) {
    int n;
    if (u.dim() == 2) {
        n = 1;
    } else if (u.dim() == 4) {
        n = 2;
    } else {
        throw std::invalid_argument("is_clifford: only 2x2 and 4x4 matrices are supported");
    }
    DenseMatrix udag = u.dagger();
    for (int k = 0; k < n; ++k) {
        for (char axis : {'X', 'Z'}) {
            DenseMatrix g = make_pauli_matrix(PauliOperator::single(n, k, axis));
            DenseMatrix img = u * g * udag;
            double best = 0;
            for (const Complex& c : pauli_coefficients(img)) {
                best = std::max(best, std::abs(c));
            }
            // Unitarity pins sum |c|^2 = 1, so one near-unit coefficient
            // means all others are near zero.
            if (best < 1.0 - tol) {
                return false;
            }
        }
    }
    return true;
}

}  // namespace framekit

#endif
