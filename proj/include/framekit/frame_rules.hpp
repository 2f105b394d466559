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
//
// Rules for pushing frame corrections through the gates that do not simply
// permute Pauli operators: CNOT (for Clifford frames) and T.

#ifndef FRAMEKIT_FRAME_RULES_HPP
#define FRAMEKIT_FRAME_RULES_HPP

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "framekit/clifford.hpp"
#include "framekit/dense.hpp"
#include "framekit/pauli.hpp"
#include "framekit/tableau.hpp"

namespace framekit {

struct RelationCheck {
    std::string name;
    bool ok = false;
    double deviation = 0.0;  // max entrywise difference after phase alignment
};

struct RelationReport {
    std::vector<RelationCheck> checks;
    bool all_ok = true;
};

namespace detail {
inline double phase_aligned_deviation(const DenseMatrix& a, const DenseMatrix& b) {
    // Align b's phase to a at a's largest entry, then take the max difference.
    int best_r = 0, best_c = 0;
    double best = -1;
    for (int r = 0; r < a.dim(); ++r) {
        for (int c = 0; c < a.dim(); ++c) {
            if (std::abs(a.at(r, c)) > best) {
                best = std::abs(a.at(r, c));
                best_r = r;
                best_c = c;
            }
        }
    }
    Complex ratio = a.at(best_r, best_c) / b.at(best_r, best_c);
    ratio /= std::abs(ratio);
    return a.max_abs_diff(b.scaled(ratio));
}
}  // namespace detail

// How single-qubit Cliffords move through a CNOT.  Each identity is checked
// numerically, up to global phase:
//   (S(x)I)  CX = CX (S(x)I)          control phase commutes
//   (I(x)S)  CX = CY (I(x)S)          target phase turns CX into CY
//   (I(x)H)  CX = CZ (I(x)H)          target H turns CX into CZ
//   (H(x)I)  CX = UX (H(x)I)          control H flips the control basis:
//                                     UX = (1/2)(I+X)(x)I + (1/2)(I-X)(x)X
//   CX (H(x)I) = UF (H(x)I) CX        pulling a control H leftward costs an
//                                     entangled fixup:
//                                     UF = (1/2)(I+iY)(x)I + (1/2)(I-iY)(x)X
inline RelationReport verify_relations(double tol = 1e-10) {
    DenseMatrix cx = mat_cnot();
    DenseMatrix si = kron(mat_s(), mat_i());
    DenseMatrix is = kron(mat_i(), mat_s());
    DenseMatrix ih = kron(mat_i(), mat_h());
    DenseMatrix hi = kron(mat_h(), mat_i());

    DenseMatrix half_plus_x = (mat_i() + mat_x()).scaled(0.5);
    DenseMatrix half_minus_x = (mat_i() - mat_x()).scaled(0.5);
    DenseMatrix ux = kron(half_plus_x, mat_i()) + kron(half_minus_x, mat_x());

    DenseMatrix half_plus_iy = (mat_i() + mat_y().scaled(Complex(0, 1))).scaled(0.5);
    DenseMatrix half_minus_iy = (mat_i() - mat_y().scaled(Complex(0, 1))).scaled(0.5);
    DenseMatrix uf = kron(half_plus_iy, mat_i()) + kron(half_minus_iy, mat_x());

    struct Item {
        const char* name;
        DenseMatrix lhs, rhs;
    };
    std::vector<Item> items;
    items.push_back({"control phase commutes with cnot", si * cx, cx * si});
    items.push_back({"target phase converts cnot to cy", is * cx, mat_cy() * is});
    items.push_back({"target hadamard converts cnot to cz", ih * cx, mat_cz() * ih});
    items.push_back({"control hadamard flips the control basis", hi * cx, ux * hi});
    items.push_back({"control hadamard pulled left of cnot needs an entangled fixup",
                     cx * hi, uf * hi * cx});

    RelationReport report;
    for (const Item& item : items) {
        RelationCheck check;
        check.name = item.name;
        check.deviation = detail::phase_aligned_deviation(item.lhs, item.rhs);
        check.ok = equal_up_to_phase(item.lhs, item.rhs, tol);
        report.all_ok = report.all_ok && check.ok;
        report.checks.push_back(std::move(check));
    }
    return report;
}

enum class CnotPairClass { Good, Bad };

struct CnotPairResult {
    CnotPairClass cls;
    // For Good pairs: the tensor factors of CX (C1(x)C2) CX.
    std::optional<std::pair<CliffordGate1, CliffordGate1>> factors;
};

// A pending pair (C1, C2) is Good when conjugating it through the CNOT lands
// back in the tensor subgroup, i.e. CX (C1(x)C2) CX = D1(x)D2.
inline CnotPairResult classify_cnot_pair(const CliffordGate1& c1, const CliffordGate1& c2) {
    CliffordTableau2 cx = CliffordTableau2::cnot();
    CliffordTableau2 moved = compose(cx, compose(tensor(c1, c2), cx));
    auto factors = factor_tensor(moved);
    if (factors) {
        return {CnotPairClass::Good, factors};
    }
    return {CnotPairClass::Bad, std::nullopt};
}

inline int count_good_cnot_pairs() {
    const auto& t = CliffordTable::instance();
    int count = 0;
    for (int i = 0; i < CliffordTable::kSize; ++i) {
        for (int j = 0; j < CliffordTable::kSize; ++j) {
            if (classify_cnot_pair(t.element(i), t.element(j)).cls == CnotPairClass::Good) {
                ++count;
            }
        }
    }
    return count;
}

inline std::vector<std::pair<int, int>> good_cnot_pairs() {
    const auto& t = CliffordTable::instance();
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i < CliffordTable::kSize; ++i) {
        for (int j = 0; j < CliffordTable::kSize; ++j) {
            if (classify_cnot_pair(t.element(i), t.element(j)).cls == CnotPairClass::Good) {
                out.emplace_back(i, j);
            }
        }
    }
    return out;
}

enum class TInputClass { Commuting, NonCommuting };

// Classification of single-qubit Cliffords by whether they move through a T
// gate: C is Commuting when T C Tdag is still Clifford (the 8 elements
// generated by S and X), NonCommuting otherwise (the remaining 16).
// Membership is computed two independent ways and cross-checked once at
// startup: group closure of {S, X} in the tableau table, and the dense test
// on T M(C) Tdag.
class TClassification {
  public:
    static const TClassification& instance() {
        static const TClassification c;
        return c;
    }

    TInputClass classify(int index) const {
        if (index < 0 || index >= CliffordTable::kSize) {
            throw std::out_of_range("TClassification: index out of range");
        }
        return commuting_[index] ? TInputClass::Commuting : TInputClass::NonCommuting;
    }

    bool is_commuting(int index) const { return classify(index) == TInputClass::Commuting; }

    const std::vector<int>& commuting_indices() const { return commuting_indices_; }
    const std::vector<int>& non_commuting_indices() const { return non_commuting_indices_; }

    // For C in the commuting class: the Clifford C' with T C = C' T up to
    // global phase.  Throws for the non-commuting class.
    int conjugate_through_t(int index) const {
        const auto& t = CliffordTable::instance();
        if (!commuting_[index]) {
            throw std::domain_error(
                "conjugate_through_t: T " + t.word(index) + " Tdag is not Clifford");
        }
        return through_t_[index];
    }

  private:
    TClassification() {
        const auto& t = CliffordTable::instance();
        // Route 1: closure of {S, X} under the group product.
        std::array<bool, CliffordTable::kSize> in_group{};
        std::vector<int> frontier{t.index_of(CliffordGate1::identity())};
        in_group[frontier[0]] = true;
        int s = t.index_of(CliffordGate1::s());
        int x = t.index_of(CliffordGate1::x());
        while (!frontier.empty()) {
            std::vector<int> next;
            for (int g : frontier) {
                for (int gen : {s, x}) {
                    int h = t.compose_index(gen, g);
                    if (!in_group[h]) {
                        in_group[h] = true;
                        next.push_back(h);
                    }
                }
            }
            frontier = std::move(next);
        }
        // Route 2: dense conjugation through T, plus the through-T images.
        DenseMatrix tm = mat_t();
        DenseMatrix tdg = mat_tdg();
        for (int i = 0; i < CliffordTable::kSize; ++i) {
            DenseMatrix moved = tm * t.matrix(i) * tdg;
            bool dense_commuting = is_clifford(moved, 1e-9);
            if (dense_commuting != in_group[i]) {
                throw std::logic_error(
                    "TClassification: group closure and dense check disagree on " + t.word(i));
            }
            commuting_[i] = in_group[i];
            if (in_group[i]) {
                auto g = gate1_from_matrix(moved, 1e-9);
                if (!g) {
                    throw std::logic_error("TClassification: commuting image is not Clifford");
                }
                through_t_[i] = t.index_of(*g);
                commuting_indices_.push_back(i);
            } else {
                through_t_[i] = -1;
                non_commuting_indices_.push_back(i);
            }
        }
    }

    std::array<bool, CliffordTable::kSize> commuting_{};
    std::array<int, CliffordTable::kSize> through_t_{};
    std::vector<int> commuting_indices_;
    std::vector<int> non_commuting_indices_;
};

struct TFrameUpdate {
    CliffordGate1 correction;  // C with T P = C P' T up to global phase
    PauliOperator new_pauli;   // P', same letters as P here
};

// Pushing a Pauli frame P through a T gate: Z and I commute with T, while X
// and Y pick up an S correction, T X = e^{-i pi/4} S X T.  The Pauli part is
// unchanged in all four cases.
inline TFrameUpdate pauli_through_t(const PauliOperator& p) {
    if (p.num_qubits() != 1) {
        throw std::invalid_argument("pauli_through_t: need a single-qubit Pauli");
    }
    CliffordGate1 c = p.x_bit(0) ? CliffordGate1::s() : CliffordGate1::identity();
    return {c, p};
}

// Same rule for Tdag: T^-1 X = e^{i pi/4} (S X)^-1-style correction, which is
// Sdag on the X component.
inline TFrameUpdate pauli_through_tdg(const PauliOperator& p) {
    if (p.num_qubits() != 1) {
        throw std::invalid_argument("pauli_through_tdg: need a single-qubit Pauli");
    }
    CliffordGate1 c = p.x_bit(0) ? CliffordGate1::sdg() : CliffordGate1::identity();
    return {c, p};
}

}  // namespace framekit

#endif
