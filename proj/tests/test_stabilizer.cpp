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

#include "framekit/channel.hpp"
#include "framekit/stabilizer.hpp"

#include <catch2/catch_amalgamated.hpp>

#include "framekit/clifford.hpp"
#include "framekit/rng.hpp"

using framekit::CliffordGate1;
using framekit::CliffordTable;
using framekit::Complex;
using framekit::DenseMatrix;
using framekit::PauliOperator;
using framekit::ProcessMatrix;
using framekit::SplitRng;
using framekit::StabilizerCode;
using framekit::StateVector;

namespace {

const StabilizerCode& code() {
    static const StabilizerCode c = framekit::build_five_qubit_code();
    return c;
}

double pauli_expectation(const StateVector& psi, const PauliOperator& p) {
    StateVector image = psi;
    image.apply_pauli(p);
    return framekit::inner_product(psi, image).real();
}

DenseMatrix embed_on_code(const DenseMatrix& u, int q, int n) {
    DenseMatrix out(1, {Complex{1, 0}});
    for (int k = 0; k < n; ++k) out = framekit::kron(out, k == q ? u : framekit::mat_i());
    return out;
}

}  // namespace

TEST_CASE("five-qubit code construction satisfies every invariant") {
    const StabilizerCode& c = code();
    REQUIRE(c.n == 5);
    REQUIRE(c.generators.size() == 4);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = i + 1; j < 4; ++j)
            REQUIRE(c.generators[i].commutes_with(c.generators[j]));
    REQUIRE_FALSE(c.logical_x.commutes_with(c.logical_z));
    REQUIRE_NOTHROW(c.validate());

    // trivial syndrome needs no correction
    REQUIRE(c.pure_errors[0].x_bits() == 0);
    REQUIRE(c.pure_errors[0].z_bits() == 0);

    // X on qubit 1 anticommutes with the first generator only
    PauliOperator x1 = PauliOperator::single(5, 1, 'X');
    REQUIRE(framekit::syndrome_of(c, x1) == 1);

    // the sixteen pure errors occupy distinct syndromes by construction and
    // commute with both logicals
    for (int s = 0; s < 16; ++s) {
        REQUIRE(framekit::syndrome_of(c, c.pure_errors[s]) == s);
        REQUIRE(c.pure_errors[s].commutes_with(c.logical_x));
        REQUIRE(c.pure_errors[s].commutes_with(c.logical_z));
    }
}

TEST_CASE("recovery decomposition splits and recomposes") {
    const StabilizerCode& c = code();

    auto d = framekit::decompose_recovery(c, PauliOperator::identity(5));
    REQUIRE(d.logical_part.x_bits() == 0);
    REQUIRE(d.logical_part.z_bits() == 0);
    REQUIRE(d.pure_error_part.x_bits() == 0);
    REQUIRE(d.stabilizer_part.x_bits() == 0);
    REQUIRE(d.stabilizer_part.z_bits() == 0);

    for (const PauliOperator& g : c.generators) {
        auto dg = framekit::decompose_recovery(c, g);
        REQUIRE(dg.logical_part.x_bits() == 0);
        REQUIRE(dg.logical_part.z_bits() == 0);
        REQUIRE(dg.pure_error_part.x_bits() == 0);
        REQUIRE(dg.pure_error_part.z_bits() == 0);
        REQUIRE(dg.stabilizer_part.x_bits() == g.x_bits());
        REQUIRE(dg.stabilizer_part.z_bits() == g.z_bits());
    }

    SplitRng rng(31, 0, 0);
    for (int rep = 0; rep < 1000; ++rep) {
        PauliOperator r(5, rng.next_u64() & 31, rng.next_u64() & 31, 0);
        auto dr = framekit::decompose_recovery(c, r);
        PauliOperator back = dr.logical_part * dr.pure_error_part * dr.stabilizer_part;
        REQUIRE(back.x_bits() == r.x_bits());
        REQUIRE(back.z_bits() == r.z_bits());
        // stabilizer part has trivial syndrome and trivial logical class
        REQUIRE(framekit::syndrome_of(c, dr.stabilizer_part) == 0);
        REQUIRE(dr.stabilizer_part.commutes_with(c.logical_x));
        REQUIRE(dr.stabilizer_part.commutes_with(c.logical_z));
    }
}

TEST_CASE("encoded bell half lives in the codespace and entangles the reference") {
    const StabilizerCode& c = code();
    StateVector bell = framekit::encoded_bell_half(c);
    REQUIRE(std::abs(bell.norm_squared() - 1.0) < 1e-12);

    for (const PauliOperator& g : c.generators) {
        double ev = pauli_expectation(bell, framekit::detail::on_code_qubits(g, 6));
        REQUIRE(std::abs(ev - 1.0) < 1e-10);
    }

    // reference-logical correlators of a Bell pair
    PauliOperator xx(6, c.logical_x.x_bits() | (1u << 5), c.logical_x.z_bits(), 0);
    PauliOperator zz(6, c.logical_z.x_bits(), c.logical_z.z_bits() | (1u << 5), 0);
    REQUIRE(std::abs(pauli_expectation(bell, xx) - 1.0) < 1e-10);
    REQUIRE(std::abs(pauli_expectation(bell, zz) - 1.0) < 1e-10);

    // the reference qubit alone is maximally mixed
    Complex diag0 = 0, diag1 = 0, off = 0;
    for (std::uint64_t cidx = 0; cidx < 32; ++cidx) {
        diag0 += bell.amp[2 * cidx] * std::conj(bell.amp[2 * cidx]);
        diag1 += bell.amp[2 * cidx + 1] * std::conj(bell.amp[2 * cidx + 1]);
        off += bell.amp[2 * cidx] * std::conj(bell.amp[2 * cidx + 1]);
    }
    REQUIRE(std::abs(diag0 - 0.5) < 1e-10);
    REQUIRE(std::abs(diag1 - 0.5) < 1e-10);
    REQUIRE(std::abs(off) < 1e-10);
}

TEST_CASE("projection resolves errors onto their syndromes") {
    const StabilizerCode& c = code();
    StateVector bell = framekit::encoded_bell_half(c);

    DenseMatrix id32 = DenseMatrix::identity(32);
    auto r0 = framekit::project_and_correct(bell, c, id32, 0);
    REQUIRE(r0.valid);
    REQUIRE(std::abs(r0.probability - 1.0) < 1e-12);
    REQUIRE(framekit::equal_up_to_global_phase(r0.state, bell, 1e-10));
    for (int s = 1; s < 16; ++s)
        REQUIRE(framekit::project_and_correct(bell, c, id32, s).probability < 1e-12);

    // a definite Pauli error occupies exactly its own syndrome
    DenseMatrix x1 = embed_on_code(framekit::mat_x(), 1, 5);
    for (int s = 0; s < 16; ++s) {
        double p = framekit::project_and_correct(bell, c, x1, s).probability;
        REQUIRE(std::abs(p - (s == 1 ? 1.0 : 0.0)) < 1e-12);
    }

    // a coherent rotation splits between the identity and Pauli branches
    double theta = 0.3;
    DenseMatrix rot = DenseMatrix::identity(32).scaled(std::cos(theta)) +
                      x1.scaled(Complex{0, 1} * std::sin(theta));
    double c2 = std::cos(theta) * std::cos(theta), s2 = std::sin(theta) * std::sin(theta);
    for (int s = 0; s < 16; ++s) {
        double p = framekit::project_and_correct(bell, c, rot, s).probability;
        double expected = s == 0 ? c2 : s == 1 ? s2 : 0.0;
        REQUIRE(std::abs(p - expected) < 1e-12);
    }

    SplitRng rng(77, 0, 0);
    DenseMatrix err = framekit::random_transversal_error(c, rng);
    std::vector<double> probs = framekit::syndrome_probabilities(c, err);
    double total = 0;
    for (double p : probs) total += p;
    REQUIRE(std::abs(total - 1.0) < 1e-10);
}

TEST_CASE("clifford process matrices are the expected exact patterns") {
    ProcessMatrix id = framekit::clifford_process_matrix(CliffordGate1::identity());
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) REQUIRE(id.at(i, j) == (i == j ? 1.0 : 0.0));

    // H swaps X and Z and flips Y
    ProcessMatrix h = framekit::clifford_process_matrix(CliffordGate1::h());
    REQUIRE(h.at(1, 3) == 1.0);
    REQUIRE(h.at(2, 2) == -1.0);
    REQUIRE(h.at(3, 1) == 1.0);
    REQUIRE(h.at(1, 1) == 0.0);

    ProcessMatrix x = framekit::clifford_process_matrix(CliffordGate1::x());
    REQUIRE(x.at(1, 1) == 1.0);
    REQUIRE(x.at(2, 2) == -1.0);
    REQUIRE(x.at(3, 3) == -1.0);
}

TEST_CASE("signed permutation matching identifies cliffords and rejects the rest") {
    ProcessMatrix id;
    for (int i = 0; i < 4; ++i) id.at(i, i) = 1.0;
    auto g = framekit::is_signed_permutation(id, 1e-9);
    REQUIRE(g.has_value());
    REQUIRE(*g == CliffordGate1::identity());

    // X<->Y with Z negated is a proper rotation, hence some Clifford
    ProcessMatrix swap;
    swap.at(0, 0) = 1.0;
    swap.at(1, 2) = 1.0;
    swap.at(2, 1) = 1.0;
    swap.at(3, 3) = -1.0;
    REQUIRE(framekit::is_signed_permutation(swap, 1e-9).has_value());

    // flipping one axis alone is improper and not a channel
    ProcessMatrix improper;
    improper.at(0, 0) = 1.0;
    improper.at(1, 1) = 1.0;
    improper.at(2, 2) = 1.0;
    improper.at(3, 3) = -1.0;
    REQUIRE_FALSE(framekit::is_signed_permutation(improper, 1e-9).has_value());
    REQUIRE(framekit::signed_permutation_violations(improper, 1e-9).empty());

    ProcessMatrix partial = id;
    partial.at(1, 1) = 0.7;
    REQUIRE_FALSE(framekit::is_signed_permutation(partial, 1e-9).has_value());
    REQUIRE_FALSE(framekit::signed_permutation_violations(partial, 1e-9).empty());
}

TEST_CASE("transversal logical strings reproduce their logical process matrices") {
    const StabilizerCode& c = code();
    const auto& tab = CliffordTable::instance();
    int xi = tab.index_of(CliffordGate1::x());
    int zi = tab.index_of(CliffordGate1::z());

    DenseMatrix id32 = DenseMatrix::identity(32);
    ProcessMatrix pid = framekit::effective_process_matrix(c, id32, 0);
    REQUIRE(pid.max_abs_diff(framekit::clifford_process_matrix(CliffordGate1::identity())) < 1e-10);

    DenseMatrix xbar = framekit::transversal_error(c, {xi, xi, xi, xi, xi});
    ProcessMatrix px = framekit::effective_process_matrix(c, xbar, 0);
    REQUIRE(px.max_abs_diff(framekit::clifford_process_matrix(CliffordGate1::x())) < 1e-10);

    DenseMatrix zbar = framekit::transversal_error(c, {zi, zi, zi, zi, zi});
    ProcessMatrix pz = framekit::effective_process_matrix(c, zbar, 0);
    REQUIRE(pz.max_abs_diff(framekit::clifford_process_matrix(CliffordGate1::z())) < 1e-10);
}

TEST_CASE("two hundred random transversal errors all project to logical cliffords") {
    const StabilizerCode& c = code();
    SplitRng rng(2026, 0, 0);
    for (int rep = 0; rep < 200; ++rep) {
        DenseMatrix err = framekit::random_transversal_error(c, rng);
        auto report = framekit::analyze_error_channel(c, err, 1e-9);
        REQUIRE(std::abs(report.probability_sum - 1.0) < 1e-10);
        REQUIRE(report.all_clifford);
        for (const auto& sc : report.syndromes) {
            if (sc.probability > 1e-13) {
                REQUIRE(sc.clifford);
                REQUIRE(sc.logical_index >= 0);
            }
        }
    }
}

TEST_CASE("pauli errors project to the logical class of the corrected operator") {
    const StabilizerCode& c = code();
    const auto& tab = CliffordTable::instance();
    SplitRng rng(55, 0, 0);
    for (int rep = 0; rep < 40; ++rep) {
        PauliOperator p(5, rng.next_u64() & 31, rng.next_u64() & 31, 0);
        DenseMatrix err = framekit::make_pauli_matrix(p);
        int s = framekit::syndrome_of(c, p);
        StateVector bell = framekit::encoded_bell_half(c);
        auto pr = framekit::project_and_correct(bell, c, err, s);
        REQUIRE(pr.valid);
        REQUIRE(std::abs(pr.probability - 1.0) < 1e-10);

        ProcessMatrix pm = framekit::effective_process_matrix(c, err, s);
        auto g = framekit::is_signed_permutation(pm, 1e-9);
        REQUIRE(g.has_value());
        int gi = tab.index_of(*g);
        REQUIRE(tab.is_pauli_index(gi));

        // the corrected operator T_s * p acts as a definite logical Pauli
        PauliOperator corrected = c.pure_errors[s] * p;
        auto dec = framekit::decompose_recovery(c, corrected);
        bool has_x = dec.logical_part.x_bits() != 0;
        bool has_z = dec.logical_part.z_bits() != 0;
        CliffordGate1 expected = has_x && has_z ? CliffordGate1::y()
                                 : has_x       ? CliffordGate1::x()
                                 : has_z       ? CliffordGate1::z()
                                               : CliffordGate1::identity();
        REQUIRE(*g == expected);
    }
}

TEST_CASE("entangling clifford errors give consistent per-syndrome reports") {
    // Entangling errors can rotate a logical operator into the stabilizer
    // group, in which case the syndrome measurement collapses the logical
    // qubit and that syndrome's channel is a measurement, not a unitary.
    // Transversal products cannot do this (their logical images have weight
    // five while nontrivial stabilizer elements have weight four), which is
    // why the signed-permutation guarantee is claimed only for them. Here we
    // check the analysis stays sound either way.
    const StabilizerCode& c = code();
    SplitRng rng(81, 0, 0);
    int clifford_syndromes = 0, other_syndromes = 0;
    for (int rep = 0; rep < 10; ++rep) {
        DenseMatrix err = framekit::random_entangling_error(c, rng);
        if (rep == 0) {
            DenseMatrix gram = err.dagger() * err;
            REQUIRE(gram.max_abs_diff(DenseMatrix::identity(32)) < 1e-9);
        }
        auto report = framekit::analyze_error_channel(c, err, 1e-9);
        REQUIRE(std::abs(report.probability_sum - 1.0) < 1e-10);
        for (const auto& sc : report.syndromes) {
            if (sc.probability <= 1e-13) continue;
            if (sc.clifford) {
                REQUIRE(sc.logical_index >= 0);
                ++clifford_syndromes;
            } else {
                REQUIRE(sc.logical_index == -1);
                ++other_syndromes;
            }
        }
    }
    REQUIRE(clifford_syndromes + other_syndromes > 0);
}
