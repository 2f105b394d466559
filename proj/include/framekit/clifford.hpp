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

#ifndef FRAMEKIT_CLIFFORD_HPP
#define FRAMEKIT_CLIFFORD_HPP

#include <algorithm>
#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "framekit/dense.hpp"
#include "framekit/pauli.hpp"

namespace framekit {

// Single-qubit Clifford element, stored by its conjugation action on X and Z.
// Global phase is quotiented out, which leaves the 24-element group.
struct CliffordGate1 {
    PauliOperator image_of_x;  // U X U^dag, a signed single-qubit Pauli
    PauliOperator image_of_z;  // U Z U^dag

    static CliffordGate1 identity() {
        return {PauliOperator::from_label("X"), PauliOperator::from_label("Z")};
    }
    static CliffordGate1 h() {
        return {PauliOperator::from_label("Z"), PauliOperator::from_label("X")};
    }
    static CliffordGate1 s() {
        return {PauliOperator::from_label("Y"), PauliOperator::from_label("Z")};
    }
    static CliffordGate1 x() {
        return {PauliOperator::from_label("X"), PauliOperator::from_label("-Z")};
    }
    static CliffordGate1 y() {
        return {PauliOperator::from_label("-X"), PauliOperator::from_label("-Z")};
    }
    static CliffordGate1 z() {
        return {PauliOperator::from_label("-X"), PauliOperator::from_label("Z")};
    }
    static CliffordGate1 sdg() {
        return {PauliOperator::from_label("-Y"), PauliOperator::from_label("Z")};
    }

    bool is_valid() const {
        return image_of_x.num_qubits() == 1 && image_of_z.num_qubits() == 1 &&
               image_of_x.is_hermitian() && image_of_z.is_hermitian() &&
               !image_of_x.is_identity_up_to_phase() && !image_of_z.is_identity_up_to_phase() &&
               !image_of_x.commutes_with(image_of_z);
    }

    // U p U^dag for an arbitrary single-qubit Pauli p = i^a X^x Z^z:
    // conjugation is an algebra map, so the image is i^a (UXU^dag)^x (UZU^dag)^z.
    PauliOperator conjugate(const PauliOperator& p) const {
        PauliOperator out = PauliOperator(1, 0, 0, p.phase_exponent());
        if (p.x_bits() & 1) {
            out = out * image_of_x;
        }
        if (p.z_bits() & 1) {
            out = out * image_of_z;
        }
        return out;
    }

    bool operator==(const CliffordGate1& o) const = default;

    // 0..35; exactly 24 values occur for valid elements.  Sort key for the
    // canonical ordering and index for O(1) lookups.
    int encoding() const {
        auto code = [](const PauliOperator& p) {
            int axis = p.axis_at(0) == 'X' ? 0 : (p.axis_at(0) == 'Y' ? 1 : 2);
            return axis * 2 + (p.sign() < 0 ? 1 : 0);
        };
        return code(image_of_x) * 6 + code(image_of_z);
    }
};

// a after b (matrix product a*b): conjugation by the product is conj_a after
// conj_b applied to the generators.
inline CliffordGate1 compose(const CliffordGate1& a, const CliffordGate1& b) {
    return {a.conjugate(b.image_of_x), a.conjugate(b.image_of_z)};
}

inline CliffordGate1 inverse(const CliffordGate1& g) {
    // The inverse maps the images back onto the generators; search the six
    // signed letters for the preimages of X and Z.
    CliffordGate1 out = g;
    bool found_x = false, found_z = false;
    for (const char* label : {"X", "-X", "Y", "-Y", "Z", "-Z"}) {
        PauliOperator p = PauliOperator::from_label(label);
        if (g.conjugate(p) == PauliOperator::from_label("X")) {
            out.image_of_x = p;
            found_x = true;
        }
        if (g.conjugate(p) == PauliOperator::from_label("Z")) {
            out.image_of_z = p;
            found_z = true;
        }
    }
    if (!found_x || !found_z) {
        throw std::logic_error("inverse: element is not a valid Clifford");
    }
    return out;
}

// Reads the conjugation action off a 2x2 unitary.  Returns nothing when the
// matrix is not Clifford (some generator image is not a single signed Pauli).
inline std::optional<CliffordGate1> gate1_from_matrix(const DenseMatrix& u, double tol = 1e-9) {
    if (u.dim() != 2) {
        throw std::invalid_argument("gate1_from_matrix: U must be 2x2");
    }
    DenseMatrix udag = u.dagger();
    auto image = [&](char axis) -> std::optional<PauliOperator> {
        DenseMatrix img = u * make_pauli_matrix(PauliOperator::single(1, 0, axis)) * udag;
        static const char letters[3] = {'X', 'Y', 'Z'};
        for (char letter : letters) {
            DenseMatrix base = make_pauli_matrix(PauliOperator::single(1, 0, letter));
            for (int sign : {+1, -1}) {
                if (img.approx_equal(base.scaled(sign), tol)) {
                    PauliOperator p = PauliOperator::single(1, 0, letter);
                    return sign > 0 ? p : p.times_phase(2);
                }
            }
        }
        return std::nullopt;
    };
    auto ix = image('X');
    auto iz = image('Z');
    if (!ix || !iz) {
        return std::nullopt;
    }
    return CliffordGate1{*ix, *iz};
}

// The 24 single-qubit Cliffords in a canonical order: breadth-first closure
// of {identity} under left-multiplication by H and S, ties within a level
// broken by encoding().  Index 0 is the identity.  Words read as matrix
// products, e.g. "HS" applies S first.
class CliffordTable {
  public:
    static const CliffordTable& instance() {
        static const CliffordTable table;
        return table;
    }

    static constexpr int kSize = 24;

    const CliffordGate1& element(int index) const { return elements_[check(index)]; }
    const std::string& word(int index) const { return words_[check(index)]; }
    const DenseMatrix& matrix(int index) const { return matrices_[check(index)]; }

    int index_of(const CliffordGate1& g) const {
        int idx = by_encoding_[g.encoding()];
        if (idx < 0 || !(elements_[idx] == g)) {
            throw std::invalid_argument("CliffordTable: not a valid Clifford element");
        }
        return idx;
    }

    int compose_index(int a, int b) const { return product_[check(a)][check(b)]; }
    int inverse_index(int a) const { return inverse_[check(a)]; }

    // Indices of the elements whose conjugation action equals I, X, Y, Z.
    const std::array<int, 4>& pauli_indices() const { return pauli_indices_; }
    bool is_pauli_index(int index) const { return is_pauli_[check(index)]; }

  private:
    CliffordTable() {
        std::vector<CliffordGate1> frontier{CliffordGate1::identity()};
        std::vector<std::string> frontier_words{"I"};
        by_encoding_.fill(-1);
        auto try_add = [&](const CliffordGate1& g, const std::string& w,
                           std::vector<CliffordGate1>& next, std::vector<std::string>& next_words) {
            for (const auto& seen : elements_) {
                if (seen == g) {
                    return;
                }
            }
            for (const auto& pending : next) {
                if (pending == g) {
                    return;
                }
            }
            next.push_back(g);
            next_words.push_back(w);
        };
        while (!frontier.empty()) {
            // Sort the level by encoding, then append it.
            std::vector<int> order(frontier.size());
            for (size_t i = 0; i < order.size(); ++i) {
                order[i] = static_cast<int>(i);
            }
            std::sort(order.begin(), order.end(), [&](int a, int b) {
                return frontier[a].encoding() < frontier[b].encoding();
            });
            size_t level_start = elements_.size();
            for (int i : order) {
                elements_.push_back(frontier[i]);
                words_.push_back(frontier_words[i]);
            }
            std::vector<CliffordGate1> next;
            std::vector<std::string> next_words;
            for (size_t i = level_start; i < elements_.size(); ++i) {
                for (const auto& [gen, letter] :
                     {std::pair{CliffordGate1::h(), 'H'}, std::pair{CliffordGate1::s(), 'S'}}) {
                    std::string w = words_[i] == "I" ? std::string(1, letter)
                                                     : letter + words_[i];
                    try_add(compose(gen, elements_[i]), w, next, next_words);
                }
            }
            frontier = std::move(next);
            frontier_words = std::move(next_words);
        }
        if (elements_.size() != kSize) {
            throw std::logic_error("CliffordTable: closure does not have 24 elements");
        }
        for (int i = 0; i < kSize; ++i) {
            by_encoding_[elements_[i].encoding()] = i;
        }
        for (int i = 0; i < kSize; ++i) {
            matrices_.push_back(matrix_from_word(words_[i]));
            for (int j = 0; j < kSize; ++j) {
                product_[i][j] = index_of(compose(elements_[i], elements_[j]));
            }
            inverse_[i] = index_of(inverse(elements_[i]));
        }
        pauli_indices_ = {index_of(CliffordGate1::identity()), index_of(CliffordGate1::x()),
                          index_of(CliffordGate1::y()), index_of(CliffordGate1::z())};
        is_pauli_.fill(false);
        for (int idx : pauli_indices_) {
            is_pauli_[idx] = true;
        }
    }

    static DenseMatrix matrix_from_word(const std::string& word) {
        DenseMatrix m = DenseMatrix::identity(2);
        if (word == "I") {
            return m;
        }
        for (char c : word) {
            m = m * (c == 'H' ? mat_h() : mat_s());
        }
        return m;
    }

    static int check(int index) {
        if (index < 0 || index >= kSize) {
            throw std::out_of_range("CliffordTable: index out of range");
        }
        return index;
    }

    std::vector<CliffordGate1> elements_;
    std::vector<std::string> words_;
    std::vector<DenseMatrix> matrices_;
    std::array<int, 36> by_encoding_{};
    std::array<std::array<int, kSize>, kSize> product_{};
    std::array<int, kSize> inverse_{};
    std::array<int, 4> pauli_indices_{};
    std::array<bool, kSize> is_pauli_{};
};

inline std::vector<CliffordGate1> enumerate_cliffords1() {
    const CliffordTable& t = CliffordTable::instance();
    std::vector<CliffordGate1> out;
    out.reserve(CliffordTable::kSize);
    for (int i = 0; i < CliffordTable::kSize; ++i) {
        out.push_back(t.element(i));
    }
    return out;
}

}  // namespace framekit

#endif
