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

#ifndef FRAMEKIT_PROTOCOL_HPP
#define FRAMEKIT_PROTOCOL_HPP

// Monte Carlo simulations of the buffered frame protocols: the Pauli-frame
// scheme that pushes frames through T gates, the CNOT retry protocol for
// Clifford frames, and the T-correction random walk in both its abstract
// (level counter) and symbolic (explicit operator word) forms.
//
// Every trial draws from its own RNG substream keyed by the trial index, so
// results are bit-identical no matter how trials are partitioned across
// workers. Worker count comes from FRAMEKIT_THREADS (0 or unset: hardware
// concurrency).

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <exception>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "framekit/circuit.hpp"
#include "framekit/clifford.hpp"
#include "framekit/dense.hpp"
#include "framekit/frame_rules.hpp"
#include "framekit/rng.hpp"
#include "framekit/statevector.hpp"

namespace framekit {

enum class BufferDistribution { Uniform, Biased, PauliBiased };

inline const char* buffer_distribution_name(BufferDistribution d) {
    switch (d) {
        case BufferDistribution::Uniform: return "uniform";
        case BufferDistribution::Biased: return "biased";
        case BufferDistribution::PauliBiased: return "pauli";
    }
    return "?";
}

struct BufferModel {
    BufferDistribution distribution = BufferDistribution::Uniform;
    double epsilon = 0.0;           // weight of the non-trivial branch
    int latency_rounds = 1;         // EC rounds spent per buffer
    // Reset the pending pair with its own inverse before each retry round of
    // the CNOT protocol.  Defaults on for the Pauli-biased model, where a
    // clean slate lets the frequent Pauli buffers terminate the retry.
    std::optional<bool> pre_correction;

    bool pre_correction_effective() const {
        return pre_correction.value_or(distribution == BufferDistribution::PauliBiased);
    }

    void validate() const {
        if (!(epsilon >= 0.0 && epsilon <= 1.0))
            throw std::domain_error("buffer model: epsilon outside [0,1]");
        if (latency_rounds < 1) throw std::domain_error("buffer model: latency_rounds >= 1");
    }
};

struct SimStats {
    std::uint64_t trials = 0;
    std::uint64_t successes = 0;
    std::uint64_t capped = 0;       // hit the round/step cap; never folded into successes

    std::uint64_t cnot_corrections = 0;
    std::uint64_t t_corrections = 0;
    std::uint64_t clifford_corrections = 0;
    std::uint64_t buffer_rounds = 0;

    // CNOT retry protocol bookkeeping.  A terminating round lands the
    // composed pair in the good set; the landing is "clifford" when at least
    // one factor is beyond Pauli, "pauli" when both factors are Pauli.
    std::uint64_t initially_good = 0;
    std::uint64_t initial_bad_trials = 0;
    std::uint64_t clifford_landings = 0;
    std::uint64_t pauli_landings = 0;
    std::uint64_t total_cnots = 0;
    std::uint64_t rounds_on_initial_bad = 0;
    std::uint64_t clifford_landings_on_initial_bad = 0;
    std::vector<std::uint64_t> round_attempts;
    std::vector<std::uint64_t> round_clifford_landings;
    std::vector<std::uint64_t> round_terminations;

    // per-trial steps: walk segments for the walks, retry rounds for the
    // CNOT protocol, buffers for the Pauli-frame protocol
    std::vector<std::uint64_t> step_histogram;

    void merge(const SimStats& o) {
        trials += o.trials;
        successes += o.successes;
        capped += o.capped;
        cnot_corrections += o.cnot_corrections;
        t_corrections += o.t_corrections;
        clifford_corrections += o.clifford_corrections;
        buffer_rounds += o.buffer_rounds;
        initially_good += o.initially_good;
        initial_bad_trials += o.initial_bad_trials;
        clifford_landings += o.clifford_landings;
        pauli_landings += o.pauli_landings;
        total_cnots += o.total_cnots;
        rounds_on_initial_bad += o.rounds_on_initial_bad;
        clifford_landings_on_initial_bad += o.clifford_landings_on_initial_bad;
        merge_vec(round_attempts, o.round_attempts);
        merge_vec(round_clifford_landings, o.round_clifford_landings);
        merge_vec(round_terminations, o.round_terminations);
        merge_vec(step_histogram, o.step_histogram);
    }

    // Frequency of retry rounds whose landing carries a genuine Clifford
    // correction, aggregated over all round indices.
    double transition_frequency() const {
        std::uint64_t att = 0, hits = 0;
        for (std::uint64_t a : round_attempts) att += a;
        for (std::uint64_t h : round_clifford_landings) hits += h;
        return att ? static_cast<double>(hits) / static_cast<double>(att) : 0.0;
    }

    double per_round_transition_frequency(std::size_t r) const {
        if (r >= round_attempts.size() || round_attempts[r] == 0) return 0.0;
        std::uint64_t h = r < round_clifford_landings.size() ? round_clifford_landings[r] : 0;
        return static_cast<double>(h) / static_cast<double>(round_attempts[r]);
    }

    // Expected CNOT price of one logical CNOT whose input frame needed the
    // retry loop: the algorithm's own gate plus the corrective CNOTs spent
    // per Clifford landing.
    double mean_cnots_per_clifford_landing() const {
        if (clifford_landings_on_initial_bad == 0) return 0.0;
        return 1.0 + static_cast<double>(rounds_on_initial_bad) /
                         static_cast<double>(clifford_landings_on_initial_bad);
    }

    double mean_total_cnots() const {
        return trials ? static_cast<double>(total_cnots) / static_cast<double>(trials) : 0.0;
    }

    double mean_total_cnots_given_initial_bad() const {
        if (initial_bad_trials == 0) return 0.0;
        return static_cast<double>(initial_bad_trials + rounds_on_initial_bad) /
               static_cast<double>(initial_bad_trials);
    }

private:
    static void merge_vec(std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b) {
        if (b.size() > a.size()) a.resize(b.size(), 0);
        for (std::size_t i = 0; i < b.size(); ++i) a[i] += b[i];
    }
};

namespace detail {

inline unsigned worker_count() {
    const char* env = std::getenv("FRAMEKIT_THREADS");
    if (env && *env) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end && *end == '\0' && v > 0) return static_cast<unsigned>(std::min(v, 64L));
        // 0 or malformed falls through to hardware concurrency
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? std::min(hw, 64u) : 1u;
}

// Runs fn(trial_index, local_stats) for every trial, partitioned into
// contiguous chunks. Sums are integers, so any partition merges to the same
// totals; merging in worker order keeps it reproducible by construction.
template <typename Fn>
SimStats run_trials(std::uint64_t trials, Fn&& fn) {
    unsigned workers = worker_count();
    if (workers <= 1 || trials < 2 * workers) {
        SimStats stats;
        for (std::uint64_t i = 0; i < trials; ++i) fn(i, stats);
        return stats;
    }
    std::vector<SimStats> locals(workers);
    std::vector<std::exception_ptr> errors(workers);
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        std::uint64_t lo = trials * w / workers;
        std::uint64_t hi = trials * (w + 1) / workers;
        pool.emplace_back([&, w, lo, hi] {
            try {
                for (std::uint64_t i = lo; i < hi; ++i) fn(i, locals[w]);
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    }
    for (std::thread& t : pool) t.join();
    for (std::exception_ptr& e : errors)
        if (e) std::rethrow_exception(e);
    SimStats stats;
    for (SimStats& l : locals) stats.merge(l);
    return stats;
}

// Composed-pair classification tables for the CNOT protocol.
struct PairTables {
    std::array<std::array<bool, 24>, 24> good{};
    std::array<bool, 24> pauli{};
    std::array<int, 4> pauli_idx{};
    std::vector<std::pair<int, int>> non_pauli_pairs;   // the 560 with a non-Pauli member

    static const PairTables& instance() {
        static const PairTables t;
        return t;
    }

private:
    PairTables() {
        const auto& tab = CliffordTable::instance();
        for (int i = 0; i < CliffordTable::kSize; ++i) {
            pauli[i] = tab.is_pauli_index(i);
            for (int j = 0; j < CliffordTable::kSize; ++j) {
                good[i][j] = classify_cnot_pair(tab.element(i), tab.element(j)).cls ==
                             CnotPairClass::Good;
            }
        }
        pauli_idx = tab.pauli_indices();
        for (int i = 0; i < CliffordTable::kSize; ++i)
            for (int j = 0; j < CliffordTable::kSize; ++j)
                if (!pauli[i] || !pauli[j]) non_pauli_pairs.emplace_back(i, j);
    }
};

// One buffer's worth of Clifford pair noise, by model.
inline std::pair<int, int> sample_pair(const BufferModel& m, SplitRng& rng) {
    const PairTables& t = PairTables::instance();
    switch (m.distribution) {
        case BufferDistribution::Uniform: {
            int a = static_cast<int>(rng.next_below(24));
            int b = static_cast<int>(rng.next_below(24));
            return {a, b};
        }
        case BufferDistribution::Biased: {
            if (rng.next_double() < m.epsilon) {
                int id = static_cast<int>(rng.next_below(575)) + 1;  // skip (I, I)
                return {id / 24, id % 24};
            }
            return {0, 0};
        }
        case BufferDistribution::PauliBiased: {
            if (rng.next_double() < m.epsilon) {
                const auto& pr = t.non_pauli_pairs[rng.next_below(t.non_pauli_pairs.size())];
                return pr;
            }
            int a = t.pauli_idx[rng.next_below(4)];
            int b = t.pauli_idx[rng.next_below(4)];
            return {a, b};
        }
    }
    return {0, 0};
}

// One EC round's worth of Pauli noise on a single qubit, as a code 0..3
// (I, X, Y, Z).
inline int sample_ec_pauli(const BufferModel& m, SplitRng& rng) {
    if (m.distribution == BufferDistribution::Uniform)
        return static_cast<int>(rng.next_below(4));
    if (rng.next_double() < m.epsilon) return 1 + static_cast<int>(rng.next_below(3));
    return 0;
}

}  // namespace detail

// CNOT retry protocol. Each trial holds a pending single-qubit Clifford
// pair when its logical CNOT arrives. A good pair conjugates through the
// CNOT into another tensor pair, so the gate just runs. A bad pair triggers
// the retry loop: one corrective CNOT per round, the buffer's Clifford pair
// composes onto the pending pair, and the loop ends when the composed pair
// is good. Landings split into "clifford" (some factor beyond Pauli) and
// "pauli" (both factors Pauli); the transition frequency counts Clifford
// landings per round, which is also what prices a logical CNOT at
// 1 + rounds-per-Clifford-landing.
inline SimStats run_cnot_protocol(const BufferModel& model, std::uint64_t trials,
                                  std::uint64_t seed, int max_rounds) {
    model.validate();
    if (max_rounds < 1) throw std::domain_error("run_cnot_protocol: max_rounds >= 1");
    const auto& t = detail::PairTables::instance();
    const auto& tab = CliffordTable::instance();
    const bool pre_correct = model.pre_correction_effective();

    return detail::run_trials(trials, [&](std::uint64_t trial, SimStats& s) {
        SplitRng rng(seed, trial, 0);
        ++s.trials;
        auto [c1, c2] = detail::sample_pair(model, rng);
        s.total_cnots += 1;  // the algorithm's own CNOT
        if (t.good[c1][c2]) {
            ++s.initially_good;
            ++s.successes;
            if (s.step_histogram.empty()) s.step_histogram.resize(1, 0);
            ++s.step_histogram[0];
            return;
        }
        ++s.initial_bad_trials;
        if (s.round_attempts.size() < static_cast<std::size_t>(max_rounds)) {
            s.round_attempts.resize(max_rounds, 0);
            s.round_clifford_landings.resize(max_rounds, 0);
            s.round_terminations.resize(max_rounds, 0);
        }
        bool done = false;
        for (int r = 1; r <= max_rounds && !done; ++r) {
            ++s.round_attempts[r - 1];
            s.buffer_rounds += model.latency_rounds;
            ++s.cnot_corrections;
            ++s.total_cnots;
            ++s.rounds_on_initial_bad;
            if (pre_correct) {
                // the decoder undoes the known pending pair with single-qubit
                // gates before waiting out the buffer
                if (c1 != 0 || c2 != 0) s.clifford_corrections += 2;
                c1 = 0;
                c2 = 0;
            }
            auto [b1, b2] = detail::sample_pair(model, rng);
            c1 = tab.compose_index(b1, c1);
            c2 = tab.compose_index(b2, c2);
            if (t.good[c1][c2]) {
                done = true;
                ++s.successes;
                ++s.round_terminations[r - 1];
                bool pauli_landing = t.pauli[c1] && t.pauli[c2];
                if (pauli_landing) {
                    ++s.pauli_landings;
                } else {
                    ++s.clifford_landings;
                    ++s.round_clifford_landings[r - 1];
                    ++s.clifford_landings_on_initial_bad;
                }
                if (s.step_histogram.size() <= static_cast<std::size_t>(r))
                    s.step_histogram.resize(r + 1, 0);
                ++s.step_histogram[r];
            }
        }
        if (!done) ++s.capped;
    });
}

// Abstract T-correction walk: start one level deep, move down with
// probability 1-p and up with probability p, absorb at level zero. Each
// step spends one T gate and one buffer.
inline SimStats run_t_walk(double p, std::uint64_t trials, std::uint64_t seed,
                           std::uint64_t max_steps) {
    if (!(p >= 0.0 && p <= 1.0)) throw std::domain_error("run_t_walk: p outside [0,1]");
    if (max_steps < 1) throw std::domain_error("run_t_walk: max_steps >= 1");
    return detail::run_trials(trials, [&](std::uint64_t trial, SimStats& s) {
        SplitRng rng(seed, trial, 0);
        ++s.trials;
        long level = 1;
        for (std::uint64_t step = 1; step <= max_steps; ++step) {
            bool up = rng.next_double() < p;
            ++s.t_corrections;
            ++s.buffer_rounds;
            level += up ? 1 : -1;
            if (level == 0) {
                ++s.successes;
                std::uint64_t j = (step - 1) / 2;   // segments: step = 2j+1
                if (s.step_histogram.size() <= j) s.step_histogram.resize(j + 1, 0);
                ++s.step_histogram[j];
                return;
            }
        }
        ++s.capped;
    });
}

// Symbolic T-correction walk. Runs the same level process off the same
// class-decision stream as run_t_walk (lane 0), but additionally samples a
// concrete Clifford for every buffer (lane 1) and maintains the full
// operator word W of everything applied. Bookkeeping: W = D * V where D is
// a known Clifford and V = T C_s ... T C_1 is the stack of unresolved
// layers, each C_j in the non-commuting class. A commuting effective noise
// M rewrites T M = M~ T and pops a layer through T T = S; a non-commuting M
// pushes one. The word is checked against the level process at every step:
// absorbed states must be Clifford x T, live states must not be.
inline SimStats run_t_walk_symbolic(double p, std::uint64_t trials, std::uint64_t seed,
                                    std::uint64_t max_steps) {
    if (!(p >= 0.0 && p <= 1.0)) throw std::domain_error("run_t_walk_symbolic: p outside [0,1]");
    if (max_steps < 1) throw std::domain_error("run_t_walk_symbolic: max_steps >= 1");
    const auto& tab = CliffordTable::instance();
    const auto& tc = TClassification::instance();
    const int s_idx = tab.index_of(CliffordGate1::s());
    const DenseMatrix tmat = mat_t();
    const DenseMatrix tdag = mat_tdg();

    return detail::run_trials(trials, [&, s_idx](std::uint64_t trial, SimStats& s) {
        SplitRng lane0(seed, trial, 0);
        SplitRng lane1(seed, trial, 1);
        ++s.trials;
        int frame = 0;                       // D, a Clifford table index
        std::vector<int> stack;              // unresolved non-commuting layers
        DenseMatrix word = mat_i();          // everything applied so far
        for (std::uint64_t step = 1; step <= max_steps; ++step) {
            bool up = lane0.next_double() < p;
            int m = up ? tc.non_commuting_indices()[lane1.next_below(16)]
                       : tc.commuting_indices()[lane1.next_below(8)];
            // the physical buffer noise C with C * D = M
            int noise = tab.compose_index(m, tab.inverse_index(frame));
            word = tmat * tab.matrix(noise) * word;
            ++s.t_corrections;
            ++s.buffer_rounds;
            if (up) {
                stack.push_back(m);
                frame = 0;
            } else if (!stack.empty()) {
                int top = stack.back();
                stack.pop_back();
                frame = tab.compose_index(tc.conjugate_through_t(m),
                                          tab.compose_index(s_idx, top));
            } else {
                // absorbed: the word must be Clifford x T, specifically M~ T
                int mt = tc.conjugate_through_t(m);
                if (!is_clifford(word * tdag, 1e-8) || is_clifford(word, 1e-8) ||
                    !equal_up_to_phase(word, tab.matrix(mt) * tmat, 1e-8)) {
                    throw std::logic_error(
                        "symbolic T walk: absorbed word is not Clifford x T");
                }
                ++s.successes;
                std::uint64_t j = (step - 1) / 2;
                if (s.step_histogram.size() <= j) s.step_histogram.resize(j + 1, 0);
                ++s.step_histogram[j];
                return;
            }
            if (is_clifford(word * tdag, 1e-8)) {
                throw std::logic_error("symbolic T walk: live word is already Clifford x T");
            }
        }
        ++s.capped;
    });
}

struct FrameState {
    std::uint64_t x_mask = 0;            // Pauli frame, phase dropped
    std::uint64_t z_mask = 0;
    std::vector<int> pending;            // per-qubit Clifford correction index, 0 = none

    explicit FrameState(int qubits) : pending(qubits, 0) {}

    bool any_pending() const {
        for (int c : pending)
            if (c != 0) return true;
        return false;
    }
};

struct PauliFrameTrialResult {
    bool verified = true;                // every checkpoint matched the state vector
    std::uint64_t buffers = 0;
    std::uint64_t ec_rounds = 0;
    std::uint64_t restores = 0;          // non-identity pending corrections applied
    std::uint64_t pending_created = 0;   // S-type corrections picked up at T gates
};

namespace detail {

// conjugation action of each single-qubit Clifford on the four Pauli codes
// (x + 2z), signs dropped
struct PauliActionTable {
    std::array<std::array<int, 4>, CliffordTable::kSize> code{};

    static const PauliActionTable& instance() {
        static const PauliActionTable t;
        return t;
    }

private:
    PauliActionTable() {
        const auto& tab = CliffordTable::instance();
        for (int g = 0; g < CliffordTable::kSize; ++g) {
            for (int c = 0; c < 4; ++c) {
                PauliOperator p(1, c & 1, (c >> 1) & 1, 0);
                PauliOperator img = tab.element(g).conjugate(p);
                code[g][c] = static_cast<int>(img.x_bits() & 1) |
                             (static_cast<int>(img.z_bits() & 1) << 1);
            }
        }
    }
};

inline DenseMatrix gate_matrix(GateKind k) {
    switch (k) {
        case GateKind::I: return mat_i();
        case GateKind::X: return mat_x();
        case GateKind::Y: return mat_y();
        case GateKind::Z: return mat_z();
        case GateKind::H: return mat_h();
        case GateKind::S: return mat_s();
        case GateKind::Sdg: return mat_sdg();
        case GateKind::T: return mat_t();
        case GateKind::Tdg: return mat_tdg();
        case GateKind::Cnot: break;
    }
    throw std::logic_error("gate_matrix: not a single-qubit gate");
}

inline int clifford_index_of_gate(GateKind k) {
    const auto& tab = CliffordTable::instance();
    switch (k) {
        case GateKind::I: return tab.index_of(CliffordGate1::identity());
        case GateKind::X: return tab.index_of(CliffordGate1::x());
        case GateKind::Y: return tab.index_of(CliffordGate1::y());
        case GateKind::Z: return tab.index_of(CliffordGate1::z());
        case GateKind::H: return tab.index_of(CliffordGate1::h());
        case GateKind::S: return tab.index_of(CliffordGate1::s());
        case GateKind::Sdg: return tab.index_of(CliffordGate1::sdg());
        default: break;
    }
    throw std::logic_error("clifford_index_of_gate: not a Clifford gate");
}

}  // namespace detail

// One trial of the buffered Pauli-frame protocol over a logical circuit.
//
// The physical state is modeled as C_pending * P_frame * U_ideal |psi>. The
// algorithm's Clifford gates run immediately and conjugate both frame parts.
// A T gate pushes the frame Pauli through, picking up an S-type pending
// correction on its qubit when the frame has an X component. Whenever a T
// or a CNOT would touch a qubit with an outstanding pending correction, the
// protocol first waits out a buffer (latency_rounds EC rounds, each landing
// fresh Pauli noise into the frame) and then applies every pending inverse,
// restoring a pure Pauli frame. A final flush closes the last segment.
//
// With verify set, the trial also simulates the physical state vector on a
// reference input and checks, at every restore checkpoint and at the end,
// that it equals the frame-adjusted ideal state up to global phase.
inline PauliFrameTrialResult simulate_pauli_frame_trial(
    const LogicalCircuit& circuit, const BufferModel& model, FrameState& frame,
    SplitRng& noise_rng, bool verify, const StateVector* reference_input = nullptr) {
    circuit.validate();
    model.validate();
    if (circuit.qubits > 64)
        throw std::invalid_argument("simulate_pauli_frame_trial: at most 64 qubits");
    if (static_cast<int>(frame.pending.size()) != circuit.qubits)
        throw std::invalid_argument("simulate_pauli_frame_trial: frame size mismatch");
    if (verify && circuit.qubits > 12)
        throw std::invalid_argument("simulate_pauli_frame_trial: verification supports <= 12 qubits");

    const auto& tab = CliffordTable::instance();
    const auto& act = detail::PauliActionTable::instance();
    const int n = circuit.qubits;
    PauliFrameTrialResult result;

    StateVector physical(1), ideal(1);
    if (verify) {
        if (reference_input) {
            if (reference_input->qubits != n)
                throw std::invalid_argument("simulate_pauli_frame_trial: reference size mismatch");
            ideal = *reference_input;
        } else {
            ideal = StateVector::basis(n, 0);
        }
        physical = ideal;
        // the run starts inside the frame
        physical.apply_pauli(PauliOperator(n, frame.x_mask, frame.z_mask, 0));
    }

    auto frame_code = [&](int q) -> int {
        return static_cast<int>((frame.x_mask >> q) & 1) |
               (static_cast<int>((frame.z_mask >> q) & 1) << 1);
    };
    auto set_frame_code = [&](int q, int c) {
        std::uint64_t bit = std::uint64_t{1} << q;
        frame.x_mask = (frame.x_mask & ~bit) | ((c & 1) ? bit : 0);
        frame.z_mask = (frame.z_mask & ~bit) | ((c >> 1) ? bit : 0);
    };

    auto checkpoint = [&]() {
        if (!verify) return;
        StateVector adjusted = ideal;
        adjusted.apply_pauli(PauliOperator(n, frame.x_mask, frame.z_mask, 0));
        if (!equal_up_to_global_phase(physical, adjusted, 1e-7)) result.verified = false;
    };

    auto buffer_and_restore = [&]() {
        ++result.buffers;
        for (int round = 0; round < model.latency_rounds; ++round) {
            ++result.ec_rounds;
            for (int q = 0; q < n; ++q) {
                int code = detail::sample_ec_pauli(model, noise_rng);
                if (code == 0) continue;
                // noise lands on top of the pending correction; fold it into
                // the frame conjugated by the pending inverse
                int inv = tab.inverse_index(frame.pending[q]);
                int folded = act.code[inv][code];
                set_frame_code(q, frame_code(q) ^ folded);
                if (verify) {
                    PauliOperator noise(1, code & 1, (code >> 1) & 1, 0);
                    physical.apply_single(make_pauli_matrix(noise), q);
                }
            }
        }
        for (int q = 0; q < n; ++q) {
            if (frame.pending[q] == 0) continue;
            int inv = tab.inverse_index(frame.pending[q]);
            if (verify) physical.apply_single(tab.matrix(inv), q);
            frame.pending[q] = 0;
            ++result.restores;
        }
        checkpoint();
    };

    for (const Gate& g : circuit.gates) {
        if (g.kind == GateKind::Cnot) {
            if (frame.pending[g.q1] != 0 || frame.pending[g.q2] != 0) buffer_and_restore();
            // frame through CNOT: X on control copies to target, Z on target
            // copies to control
            if ((frame.x_mask >> g.q1) & 1) frame.x_mask ^= std::uint64_t{1} << g.q2;
            if ((frame.z_mask >> g.q2) & 1) frame.z_mask ^= std::uint64_t{1} << g.q1;
            if (verify) {
                physical.apply_cnot(g.q1, g.q2);
                ideal.apply_cnot(g.q1, g.q2);
            }
        } else if (g.kind == GateKind::T || g.kind == GateKind::Tdg) {
            if (frame.pending[g.q1] != 0) buffer_and_restore();
            PauliOperator p(1, (frame.x_mask >> g.q1) & 1, (frame.z_mask >> g.q1) & 1, 0);
            TFrameUpdate update =
                g.kind == GateKind::T ? pauli_through_t(p) : pauli_through_tdg(p);
            if (!(update.correction == CliffordGate1::identity())) {
                frame.pending[g.q1] = tab.index_of(update.correction);
                ++result.pending_created;
            }
            if (verify) {
                DenseMatrix u = detail::gate_matrix(g.kind);
                physical.apply_single(u, g.q1);
                ideal.apply_single(u, g.q1);
            }
        } else if (g.kind == GateKind::I) {
            continue;
        } else {
            int gi = detail::clifford_index_of_gate(g.kind);
            // pending Cliffords conjugate: G C G^-1 stays a known single-qubit gate
            if (frame.pending[g.q1] != 0) {
                frame.pending[g.q1] = tab.compose_index(
                    tab.compose_index(gi, frame.pending[g.q1]), tab.inverse_index(gi));
            }
            set_frame_code(g.q1, act.code[gi][frame_code(g.q1)]);
            if (verify) {
                DenseMatrix u = detail::gate_matrix(g.kind);
                physical.apply_single(u, g.q1);
                ideal.apply_single(u, g.q1);
            }
        }
    }
    if (frame.any_pending()) buffer_and_restore();
    checkpoint();
    return result;
}

// Monte Carlo wrapper: uniform random initial Pauli frame per trial, frame
// verified against the state vector when the register is small enough.
inline SimStats run_pauli_frame_protocol(const LogicalCircuit& circuit, const BufferModel& model,
                                         std::uint64_t trials, std::uint64_t seed,
                                         bool verify = true) {
    circuit.validate();
    model.validate();
    const bool do_verify = verify && circuit.qubits <= 12;

    // fixed generic reference input shared by all trials
    StateVector reference(circuit.qubits);
    {
        SplitRng ref_rng(seed, 0x5eedfacedecafull, 7);
        for (Complex& a : reference.amp)
            a = Complex{ref_rng.next_double() - 0.5, ref_rng.next_double() - 0.5};
        double norm = std::sqrt(reference.norm_squared());
        for (Complex& a : reference.amp) a /= norm;
    }

    return detail::run_trials(trials, [&](std::uint64_t trial, SimStats& s) {
        SplitRng noise(seed, trial, 0);
        SplitRng init(seed, trial, 1);
        FrameState frame(circuit.qubits);
        for (int q = 0; q < circuit.qubits; ++q) {
            int code = static_cast<int>(init.next_below(4));
            if (code & 1) frame.x_mask |= std::uint64_t{1} << q;
            if (code >> 1) frame.z_mask |= std::uint64_t{1} << q;
        }
        PauliFrameTrialResult r = simulate_pauli_frame_trial(
            circuit, model, frame, noise, do_verify, do_verify ? &reference : nullptr);
        ++s.trials;
        if (r.verified && !frame.any_pending()) ++s.successes;
        s.buffer_rounds += r.ec_rounds;
        s.clifford_corrections += r.restores;
        s.t_corrections += r.pending_created;
        if (s.step_histogram.size() <= r.buffers) s.step_histogram.resize(r.buffers + 1, 0);
        ++s.step_histogram[r.buffers];
    });
}

}  // namespace framekit

#endif  // FRAMEKIT_PROTOCOL_HPP
