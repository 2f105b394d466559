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

// Acceptance gate. Each numbered check prints one pass/fail line with its
// wall time; the binary exits nonzero if any check fails. Tolerances are
// pinned here, next to the quantity they bound. Check 11 re-runs the CLI
// (path in argv[1]) under different worker counts and byte-compares output.

#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "framekit/channel.hpp"
#include "framekit/circuit.hpp"
#include "framekit/clifford.hpp"
#include "framekit/dense.hpp"
#include "framekit/frame_rules.hpp"
#include "framekit/protocol.hpp"
#include "framekit/rng.hpp"
#include "framekit/stabilizer.hpp"
#include "framekit/walk.hpp"

namespace {

int failures = 0;

void run_check(int number, const char* title, const std::function<bool(std::string&)>& body) {
    std::string detail;
    auto t0 = std::chrono::steady_clock::now();
    bool ok = false;
    try {
        ok = body(detail);
    } catch (const std::exception& e) {
        detail = std::string("exception: ") + e.what();
    }
    auto t1 = std::chrono::steady_clock::now();
    double secs = std::chrono::duration<double>(t1 - t0).count();
    std::printf("[%s] %2d %-58s %7.2fs%s%s\n", ok ? "PASS" : "FAIL", number, title, secs,
                detail.empty() ? "" : "  ", detail.c_str());
    std::fflush(stdout);
    if (!ok) ++failures;
}

bool check_close(std::string& detail, const char* what, double got, double want, double tol) {
    if (std::abs(got - want) <= tol) return true;
    std::ostringstream s;
    s << what << " = " << got << ", want " << want << " +- " << tol;
    detail = s.str();
    return false;
}

// 1: classify all ordered Clifford pairs through the CNOT, expect exactly 64
// pairs whose pushed-through factors stay local Clifford.
bool check1(std::string& detail) {
    const auto& table = framekit::CliffordTable::instance();
    int good = 0;
    for (int a = 0; a < framekit::CliffordTable::kSize; ++a)
        for (int b = 0; b < framekit::CliffordTable::kSize; ++b)
            if (framekit::classify_cnot_pair(table.element(a), table.element(b)).cls ==
                framekit::CnotPairClass::Good)
                ++good;
    if (good != 64) {
        detail = "good pairs = " + std::to_string(good);
        return false;
    }
    if (framekit::count_good_cnot_pairs() != 64) {
        detail = "count_good_cnot_pairs disagrees";
        return false;
    }
    return true;
}

// 2: class sizes under T conjugation, established independently by the group
// route (closure of the pushed-through word over {S, X}) and the matrix route
// (T M T^dagger unitarity test on the dense representation).
bool check2(std::string& detail) {
    const auto& table = framekit::CliffordTable::instance();
    int commuting_matrix = 0;
    const framekit::DenseMatrix t = framekit::mat_t();
    const framekit::DenseMatrix tdg = framekit::mat_tdg();
    for (int i = 0; i < framekit::CliffordTable::kSize; ++i)
        if (framekit::is_clifford(t * table.matrix(i) * tdg, 1e-9)) ++commuting_matrix;
    // group route: the classifier constructor cross-checks both derivations
    // and throws if they ever disagree, so instantiating it is the test
    const auto& tc = framekit::TClassification::instance();
    int commuting_group = static_cast<int>(tc.commuting_indices().size());
    int non_commuting = static_cast<int>(tc.non_commuting_indices().size());
    if (commuting_matrix != 8 || commuting_group != 8 || non_commuting != 16) {
        std::ostringstream s;
        s << "matrix route " << commuting_matrix << ", group route " << commuting_group
          << ", complement " << non_commuting;
        detail = s.str();
        return false;
    }
    return true;
}

// 3: the frame push-through identities, including the entangled fixup for a
// control-side Hadamard, hold up to global phase at 1e-10.
bool check3(std::string& detail) {
    framekit::RelationReport report = framekit::verify_relations(1e-10);
    if (report.all_ok) return true;
    for (const auto& c : report.checks)
        if (!c.ok) detail += std::string(detail.empty() ? "" : "; ") + c.name;
    return false;
}

// 4: uniform-noise CNOT Monte Carlo at 5e5 trials reproduces the analytic
// per-round transition frequency 1/12 and mean 13 CNOTs per Clifford landing.
bool check4(std::string& detail) {
    framekit::BufferModel model;
    framekit::SimStats s = framekit::run_cnot_protocol(model, 500000, 20260101, 1000);
    if (s.capped != 0) {
        detail = "capped trials = " + std::to_string(s.capped);
        return false;
    }
    if (!check_close(detail, "transition frequency", s.transition_frequency(), 1.0 / 12.0, 0.002))
        return false;
    return check_close(detail, "mean cnots per clifford landing",
                       s.mean_cnots_per_clifford_landing(), 13.0, 0.15);
}

// 5: walk Monte Carlo matches the closed form within 3 sigma for every cutoff
// n in 0..20 at p = 0.1 and p = 1/3; at p = 2/3 half the walks hit the cap.
bool check5(std::string& detail) {
    const std::uint64_t trials = 100000;
    const double ps[] = {0.1, 1.0 / 3.0};
    for (double p : ps) {
        framekit::SimStats s = framekit::run_t_walk(p, trials, 77, 10000);
        std::uint64_t within = 0;
        for (long n = 0; n <= 20; ++n) {
            if (static_cast<std::size_t>(n) < s.step_histogram.size())
                within += s.step_histogram[n];
            double expect = framekit::cutoff_probability(p, n);
            double sigma = std::sqrt(expect * (1.0 - expect) / static_cast<double>(trials));
            double got = static_cast<double>(within) / static_cast<double>(trials);
            if (std::abs(got - expect) > 3.0 * sigma + 1e-12) {
                std::ostringstream msg;
                msg << "p=" << p << " n=" << n << ": " << got << " vs " << expect << " (3 sigma "
                    << 3.0 * sigma << ")";
                detail = msg.str();
                return false;
            }
        }
    }
    framekit::SimStats s = framekit::run_t_walk(2.0 / 3.0, trials, 78, 10000);
    double capped = static_cast<double>(s.capped) / static_cast<double>(trials);
    return check_close(detail, "capped fraction at p=2/3", capped, 0.5, 0.01);
}

// 6: the hypergeometric cutoff expression agrees with the direct partial sum
// over a dense (p, n) grid, and with brute-force path enumeration for n <= 8.
bool check6(std::string& detail) {
    for (int pi = 1; pi <= 19; ++pi) {
        double p = 0.05 * pi;
        for (long n = 0; n <= 100; ++n) {
            double closed = framekit::cutoff_probability(p, n);
            double partial = framekit::cutoff_probability_partial_sum(p, n);
            if (std::abs(closed - partial) > 1e-9) {
                std::ostringstream msg;
                msg << "p=" << p << " n=" << n << ": closed " << closed << " vs partial "
                    << partial;
                detail = msg.str();
                return false;
            }
        }
    }
    // enumerate every +-1 path of length <= 2n+1 from 1 that first hits 0 at
    // an odd step; sum q^(downs) p^(ups) per absorbing step
    for (int pi = 1; pi <= 4; ++pi) {
        double p = 0.2 * pi;
        if (p >= 1.0) p = 0.9;
        for (long n = 0; n <= 8; ++n) {
            double total = 0.0;
            long max_len = 2 * n + 1;
            for (long len = 1; len <= max_len; len += 2) {
                for (std::uint64_t bits = 0; bits < (1ull << len); ++bits) {
                    long pos = 1;
                    bool absorbed = false;
                    int ups = 0;
                    for (long step = 0; step < len; ++step) {
                        bool up = (bits >> step) & 1;
                        pos += up ? 1 : -1;
                        if (up) ++ups;
                        if (pos == 0) {
                            absorbed = step == len - 1;
                            break;
                        }
                    }
                    if (absorbed)
                        total += std::pow(p, ups) * std::pow(1.0 - p, static_cast<double>(len - ups));
                }
            }
            double closed = framekit::cutoff_probability(p, n);
            if (std::abs(closed - total) > 1e-12) {
                std::ostringstream msg;
                msg << "brute force p=" << p << " n=" << n << ": closed " << closed << " vs "
                    << total;
                detail = msg.str();
                return false;
            }
        }
    }
    return true;
}

// 7: the closed-form tail upper bound and the central-binomial lower bound
// hold across the full analytic grid.
bool check7(std::string& detail) {
    for (int pi = 1; pi <= 19; ++pi) {
        double p = 0.05 * pi;
        for (long n = 1; n <= 100; ++n) {
            if (!framekit::upper_bound_check(p, n)) {
                std::ostringstream msg;
                msg << "bound violated at p=" << p << " n=" << n;
                detail = msg.str();
                return false;
            }
        }
    }
    return true;
}

// 8: segment counts demanded for target success rates are exact threshold
// crossings, monotone in the target, and scale like |log(1-q)| at fixed p.
bool check8(std::string& detail) {
    const double qs[] = {0.9, 0.99, 0.999};
    for (int pi = 1; pi <= 9; ++pi) {
        double p = 0.05 * pi;
        long prev = -1;
        double ratio0 = 0.0;
        for (int qi = 0; qi < 3; ++qi) {
            double q = qs[qi];
            auto n = framekit::min_steps_for_target(p, q);
            if (!n) {
                detail = "unattainable target in sub-half grid";
                return false;
            }
            if (framekit::cutoff_probability(p, *n) <= q ||
                (*n > 0 && framekit::cutoff_probability(p, *n - 1) > q)) {
                std::ostringstream msg;
                msg << "threshold not exact at p=" << p << " q=" << q;
                detail = msg.str();
                return false;
            }
            if (*n < prev) {
                detail = "n decreased with q";
                return false;
            }
            prev = *n;
            double ratio = static_cast<double>(*n) / -std::log(1.0 - q);
            if (qi == 0)
                ratio0 = ratio;
            else if (ratio > 40.0 * (ratio0 + 1.0)) {
                std::ostringstream msg;
                msg << "n grows faster than log(1/(1-q)) at p=" << p;
                detail = msg.str();
                return false;
            }
        }
    }
    return true;
}

// 9: 200 random transversal Clifford errors on the five-qubit code; every
// reachable syndrome sector must act as one of the 24 logical Cliffords
// (signed permutation of the Pauli basis at 1e-9) with probabilities
// closing to 1.
bool check9(std::string& detail) {
    const framekit::StabilizerCode code = framekit::build_five_qubit_code();
    framekit::SplitRng rng(424242, 0, 0);
    for (int e = 0; e < 200; ++e) {
        framekit::DenseMatrix err = framekit::random_transversal_error(code, rng);
        auto report = framekit::analyze_error_channel(code, err, 1e-9);
        if (!report.all_clifford) {
            detail = "non-Clifford syndrome channel at error " + std::to_string(e);
            return false;
        }
        if (std::abs(report.probability_sum - 1.0) > 1e-10) {
            std::ostringstream msg;
            msg << "probability sum " << report.probability_sum << " at error " << e;
            detail = msg.str();
            return false;
        }
        for (const auto& sc : report.syndromes)
            if (sc.probability > 1e-13 && (sc.logical_index < 0 || sc.logical_index >= 24)) {
                detail = "missing logical index at error " + std::to_string(e);
                return false;
            }
    }
    return true;
}

// 10: the buffered Pauli-frame protocol over a fixed 20-gate circuit with T
// gates passes the state-vector cross-check at every restore point in all
// 1e4 trials.
bool check10(std::string& detail) {
    const char* text =
        "qubits 4\n"
        "H 0\nT 0\nCNOT 0 1\nS 1\nT 1\nH 2\nCNOT 1 2\nT 2\nZ 3\nCNOT 2 3\n"
        "T 3\nH 1\nCNOT 3 0\nS 2\nT 0\nX 3\nCNOT 1 3\nT 1\nH 3\nCNOT 0 2\n";
    framekit::LogicalCircuit circuit = framekit::parse_circuit(text);
    if (circuit.gates.size() != 20) {
        detail = "circuit is not 20 gates";
        return false;
    }
    framekit::BufferModel model;
    framekit::SimStats s = framekit::run_pauli_frame_protocol(circuit, model, 10000, 6021, true);
    if (s.successes != s.trials) {
        std::ostringstream msg;
        msg << s.trials - s.successes << " of " << s.trials << " trials failed verification";
        detail = msg.str();
        return false;
    }
    return true;
}

// 11: every Monte Carlo subcommand emits byte-identical output for a fixed
// config and seed whether it runs on 1 worker or 8.
bool check11(std::string& detail, const std::string& cli) {
    if (cli.empty()) {
        detail = "CLI path not supplied as argv[1]";
        return false;
    }
    std::string circ = "acceptance_circuit.txt";
    {
        std::ofstream f(circ);
        f << "qubits 3\nH 0\nT 0\nCNOT 0 1\nT 1\nCNOT 1 2\nH 2\nS 0\nT 2\nCNOT 2 0\n";
    }
    struct Case {
        const char* name;
        std::string args;
    };
    const Case cases[] = {
        {"cnot-mc", "cnot-mc --trials 60000 --seed 31 --model biased:0.2"},
        {"t-walk", "t-walk --p 0.3 --trials 40000 --seed 31"},
        {"t-walk-csv", "t-walk --p 0.25 --trials 40000 --seed 32 --format csv"},
        {"simulate", "simulate " + circ + " --trials 3000 --seed 31 --model uniform"},
    };
    for (const Case& c : cases) {
        std::string out1 = std::string("acceptance_") + c.name + "_w1.out";
        std::string out8 = std::string("acceptance_") + c.name + "_w8.out";
        std::string cmd1 = "FRAMEKIT_THREADS=1 '" + cli + "' " + c.args + " --out " + out1;
        std::string cmd8 = "FRAMEKIT_THREADS=8 '" + cli + "' " + c.args + " --out " + out8;
        if (std::system(cmd1.c_str()) != 0 || std::system(cmd8.c_str()) != 0) {
            detail = std::string(c.name) + ": CLI run failed";
            return false;
        }
        std::ifstream f1(out1, std::ios::binary), f8(out8, std::ios::binary);
        std::stringstream s1, s8;
        s1 << f1.rdbuf();
        s8 << f8.rdbuf();
        if (s1.str().empty() || s1.str() != s8.str()) {
            detail = std::string(c.name) + ": output differs between 1 and 8 workers";
            return false;
        }
        std::remove(out1.c_str());
        std::remove(out8.c_str());
    }
    std::remove(circ.c_str());
    return true;
}

}  // namespace

int main(int argc, char** argv) {
    std::string cli = argc > 1 ? argv[1] : "";
    run_check(1, "64 of 576 Clifford pairs push through the CNOT", check1);
    run_check(2, "T conjugation splits the Cliffords 8 / 16 (both routes)", check2);
    run_check(3, "frame push-through identities hold at 1e-10", check3);
    run_check(4, "CNOT retry Monte Carlo matches 1/12 and 13", check4);
    run_check(5, "walk Monte Carlo matches closed form within 3 sigma", check5);
    run_check(6, "cutoff closed form = partial sum = path enumeration", check6);
    run_check(7, "tail and central-binomial bounds hold on the grid", check7);
    run_check(8, "segment thresholds are exact, monotone, log-bounded", check8);
    run_check(9, "200 transversal errors project to logical Cliffords", check9);
    run_check(10, "Pauli-frame protocol verifies 1e4 noisy trials", check10);
    run_check(11, "Monte Carlo output byte-identical across workers",
              [&cli](std::string& d) { return check11(d, cli); });
    if (failures == 0) {
        std::printf("all acceptance checks passed\n");
        return 0;
    }
    std::printf("%d acceptance check(s) failed\n", failures);
    return 1;
}
