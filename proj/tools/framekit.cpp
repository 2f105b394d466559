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

// Command line front end. Verification commands (counts, relations,
// appendix-a) exit 0 only when every check passes; Monte Carlo commands
// (cnot-mc, t-walk, simulate) and analytics (walk-analytic, fig6) report
// JSON or CSV. Output is byte-identical for a fixed config and seed
// regardless of worker count (FRAMEKIT_THREADS).

#include <charconv>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "framekit/channel.hpp"
#include "framekit/circuit.hpp"
#include "framekit/clifford.hpp"
#include "framekit/frame_rules.hpp"
#include "framekit/protocol.hpp"
#include "framekit/stabilizer.hpp"
#include "framekit/walk.hpp"

namespace {

using json = nlohmann::ordered_json;

constexpr int kFormatVersion = 1;

struct OutputOptions {
    std::string format = "json";
    std::string path;  // empty = stdout
};

void add_output_options(CLI::App* sub, OutputOptions* out, const std::string& default_format) {
    out->format = default_format;
    sub->add_option("--format", out->format, "output format")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();
    sub->add_option("--out", out->path, "output file (default: stdout)");
}

int write_output(const OutputOptions& out, const std::string& text) {
    if (out.path.empty()) {
        std::cout << text;
        return 0;
    }
    std::ofstream f(out.path, std::ios::binary);
    if (!f) {
        std::cerr << "cannot open output file: " << out.path << "\n";
        return 2;
    }
    f << text;
    if (!f) {
        std::cerr << "failed writing output file: " << out.path << "\n";
        return 2;
    }
    return 0;
}

std::string json_report(const json& config, const json& results) {
    json doc;
    doc["config"] = config;
    doc["results"] = results;
    doc["version"] = kFormatVersion;
    return doc.dump(2) + "\n";
}

// shortest round-trip decimal for CSV cells
std::string csv_number(double v) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

std::string csv_number(std::uint64_t v) {
    char buf[32];
    auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

framekit::BufferModel parse_model(const std::string& text, int latency,
                                  const std::string& pre_correction) {
    framekit::BufferModel model;
    model.latency_rounds = latency;
    std::string name = text;
    std::string arg;
    auto colon = text.find(':');
    if (colon != std::string::npos) {
        name = text.substr(0, colon);
        arg = text.substr(colon + 1);
    }
    if (name == "uniform") {
        if (!arg.empty()) throw CLI::ValidationError("--model", "uniform takes no parameter");
        model.distribution = framekit::BufferDistribution::Uniform;
    } else if (name == "biased" || name == "pauli") {
        model.distribution = name == "biased" ? framekit::BufferDistribution::Biased
                                              : framekit::BufferDistribution::PauliBiased;
        try {
            model.epsilon = std::stod(arg);
        } catch (const std::exception&) {
            throw CLI::ValidationError("--model", "expected " + name + ":EPS with numeric EPS");
        }
        if (!(model.epsilon >= 0.0 && model.epsilon <= 1.0))
            throw CLI::ValidationError("--model", "EPS must be in [0,1]");
    } else {
        throw CLI::ValidationError("--model", "expected uniform, biased:EPS, or pauli:EPS");
    }
    if (pre_correction == "on") model.pre_correction = true;
    if (pre_correction == "off") model.pre_correction = false;
    return model;
}

json model_config(const framekit::BufferModel& model) {
    json m;
    m["distribution"] = framekit::buffer_distribution_name(model.distribution);
    m["epsilon"] = model.epsilon;
    m["latency_rounds"] = model.latency_rounds;
    m["pre_correction"] = model.pre_correction_effective();
    return m;
}

std::vector<std::uint64_t> trimmed(const std::vector<std::uint64_t>& v, std::size_t keep_at_least) {
    std::size_t n = v.size();
    while (n > keep_at_least && v[n - 1] == 0) --n;
    return std::vector<std::uint64_t>(v.begin(), v.begin() + n);
}

int run_counts(const OutputOptions& out) {
    const auto& tc = framekit::TClassification::instance();
    int good = framekit::count_good_cnot_pairs();
    int c_minus = static_cast<int>(tc.commuting_indices().size());
    int c_plus = static_cast<int>(tc.non_commuting_indices().size());
    json results;
    results["good_pairs"] = good;
    results["total_pairs"] = framekit::CliffordTable::kSize * framekit::CliffordTable::kSize;
    results["c_minus"] = c_minus;
    results["c_plus"] = c_plus;
    json config;
    config["subcommand"] = "counts";
    int rc = write_output(out, json_report(config, results));
    if (rc != 0) return rc;
    return (good == 64 && c_minus == 8 && c_plus == 16) ? 0 : 1;
}

int run_relations(const OutputOptions& out, double tol) {
    framekit::RelationReport report = framekit::verify_relations(tol);
    json checks = json::array();
    for (const auto& c : report.checks) {
        json item;
        item["name"] = c.name;
        item["ok"] = c.ok;
        item["deviation"] = c.deviation;
        checks.push_back(item);
    }
    json results;
    results["checks"] = checks;
    results["all_ok"] = report.all_ok;
    json config;
    config["subcommand"] = "relations";
    config["tol"] = tol;
    int rc = write_output(out, json_report(config, results));
    if (rc != 0) return rc;
    return report.all_ok ? 0 : 1;
}

int run_walk_analytic(const OutputOptions& out, double p, long n) {
    json results;
    results["cutoff_probability"] = framekit::cutoff_probability(p, n);
    results["tail_probability"] = framekit::tail_probability(p, n);
    results["termination_probability"] = framekit::termination_probability(p);
    json config;
    config["subcommand"] = "walk-analytic";
    config["p"] = p;
    config["n"] = n;
    return write_output(out, json_report(config, results));
}

int run_fig6(const OutputOptions& out, double p_min, double p_max, double p_step) {
    const double qs[] = {0.9, 0.99, 0.999};
    struct Row {
        double q, p;
        long n;
    };
    // step on a scaled-integer grid so p prints without accumulated float fuzz
    const long long num_min = std::llround(p_min * 1e9);
    const long long num_step = std::llround(p_step * 1e9);
    const long long num_max = std::llround(p_max * 1e9);
    std::vector<Row> rows;
    for (double q : qs) {
        for (long long i = 0;; ++i) {
            long long num = num_min + i * num_step;
            if (num > num_max) break;
            double p = static_cast<double>(num) / 1e9;
            auto n = framekit::min_steps_for_target(p, q);
            if (!n) {
                std::cerr << "fig6: target q=" << q << " unattainable at p=" << p
                          << ", row skipped\n";
                continue;
            }
            rows.push_back({q, p, *n});
        }
    }
    if (out.format == "csv") {
        std::ostringstream text;
        text << "q,p,n\n";
        for (const Row& r : rows)
            text << csv_number(r.q) << "," << csv_number(r.p) << "," << r.n << "\n";
        return write_output(out, text.str());
    }
    json results;
    json arr = json::array();
    for (const Row& r : rows) {
        json item;
        item["q"] = r.q;
        item["p"] = r.p;
        item["n"] = r.n;
        arr.push_back(item);
    }
    results["rows"] = arr;
    json config;
    config["subcommand"] = "fig6";
    config["p_min"] = p_min;
    config["p_max"] = p_max;
    config["p_step"] = p_step;
    return write_output(out, json_report(config, results));
}

int run_t_walk(const OutputOptions& out, double p, std::uint64_t trials, std::uint64_t seed,
               std::uint64_t max_steps, bool symbolic) {
    framekit::SimStats s = symbolic ? framekit::run_t_walk_symbolic(p, trials, seed, max_steps)
                                    : framekit::run_t_walk(p, trials, seed, max_steps);
    if (out.format == "csv") {
        std::ostringstream text;
        text << "segments,count\n";
        auto hist = trimmed(s.step_histogram, 0);
        for (std::size_t j = 0; j < hist.size(); ++j)
            text << j << "," << csv_number(hist[j]) << "\n";
        return write_output(out, text.str());
    }
    json results;
    results["trials"] = s.trials;
    results["successes"] = s.successes;
    results["capped"] = s.capped;
    results["success_fraction"] = static_cast<double>(s.successes) / static_cast<double>(s.trials);
    results["t_gates"] = s.t_corrections;
    results["buffer_rounds"] = s.buffer_rounds;
    results["segment_histogram"] = trimmed(s.step_histogram, 0);
    json config;
    config["subcommand"] = "t-walk";
    config["p"] = p;
    config["trials"] = trials;
    config["seed"] = seed;
    config["max_steps"] = max_steps;
    config["symbolic"] = symbolic;
    return write_output(out, json_report(config, results));
}

int run_cnot_mc(const OutputOptions& out, const framekit::BufferModel& model,
                std::uint64_t trials, std::uint64_t seed, int max_rounds) {
    framekit::SimStats s = framekit::run_cnot_protocol(model, trials, seed, max_rounds);
    auto attempts = trimmed(s.round_attempts, 0);
    auto landings = trimmed(s.round_clifford_landings, attempts.size());
    auto terminations = trimmed(s.round_terminations, attempts.size());
    landings.resize(attempts.size());
    terminations.resize(attempts.size());
    if (out.format == "csv") {
        std::ostringstream text;
        text << "round,attempts,clifford_landings,terminations\n";
        for (std::size_t r = 0; r < attempts.size(); ++r)
            text << (r + 1) << "," << csv_number(attempts[r]) << "," << csv_number(landings[r])
                 << "," << csv_number(terminations[r]) << "\n";
        return write_output(out, text.str());
    }
    json results;
    results["trials"] = s.trials;
    results["successes"] = s.successes;
    results["capped"] = s.capped;
    results["initially_good"] = s.initially_good;
    results["initial_bad_trials"] = s.initial_bad_trials;
    results["clifford_landings"] = s.clifford_landings;
    results["pauli_landings"] = s.pauli_landings;
    results["cnot_corrections"] = s.cnot_corrections;
    results["clifford_corrections"] = s.clifford_corrections;
    results["buffer_rounds"] = s.buffer_rounds;
    results["transition_frequency"] = s.transition_frequency();
    results["mean_cnots_per_clifford_landing"] = s.mean_cnots_per_clifford_landing();
    results["mean_total_cnots"] = s.mean_total_cnots();
    results["mean_total_cnots_given_initial_bad"] = s.mean_total_cnots_given_initial_bad();
    results["round_attempts"] = attempts;
    results["round_clifford_landings"] = landings;
    results["round_terminations"] = terminations;
    results["retry_histogram"] = trimmed(s.step_histogram, 0);
    json config;
    config["subcommand"] = "cnot-mc";
    config["model"] = model_config(model);
    config["trials"] = trials;
    config["seed"] = seed;
    config["max_rounds"] = max_rounds;
    return write_output(out, json_report(config, results));
}

int run_simulate(const OutputOptions& out, const std::string& file,
                 const framekit::BufferModel& model, std::uint64_t trials, std::uint64_t seed,
                 bool verify) {
    std::ifstream in(file);
    if (!in) {
        std::cerr << "cannot open circuit file: " << file << "\n";
        return 2;
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    framekit::LogicalCircuit circuit;
    try {
        circuit = framekit::parse_circuit(buffer.str());
    } catch (const framekit::CircuitParseError& e) {
        std::cerr << file << ":" << e.line() << ":" << e.column() << ": " << e.what() << "\n";
        return 2;
    }
    bool do_verify = verify && circuit.qubits <= 12;
    framekit::SimStats s =
        framekit::run_pauli_frame_protocol(circuit, model, trials, seed, do_verify);
    if (out.format == "csv") {
        std::ostringstream text;
        text << "buffers,count\n";
        auto hist = trimmed(s.step_histogram, 0);
        for (std::size_t b = 0; b < hist.size(); ++b)
            text << b << "," << csv_number(hist[b]) << "\n";
        int rc = write_output(out, text.str());
        if (rc != 0) return rc;
        return (!do_verify || s.successes == s.trials) ? 0 : 1;
    }
    json results;
    results["qubits"] = circuit.qubits;
    results["gates"] = circuit.gates.size();
    results["trials"] = s.trials;
    results["verified"] = do_verify;
    results["successes"] = s.successes;
    results["ec_rounds"] = s.buffer_rounds;
    results["pending_corrections_created"] = s.t_corrections;
    results["corrections_applied"] = s.clifford_corrections;
    results["buffer_histogram"] = trimmed(s.step_histogram, 0);
    json config;
    config["subcommand"] = "simulate";
    config["circuit"] = file;
    config["model"] = model_config(model);
    config["trials"] = trials;
    config["seed"] = seed;
    config["verify"] = do_verify;
    int rc = write_output(out, json_report(config, results));
    if (rc != 0) return rc;
    return (!do_verify || s.successes == s.trials) ? 0 : 1;
}

int run_appendix_a(const OutputOptions& out, const std::string& code_name, int errors,
                   std::uint64_t seed, double tol, bool entangling) {
    if (code_name != "five-qubit") {
        std::cerr << "appendix-a: unknown code " << code_name << "\n";
        return 2;
    }
    const framekit::StabilizerCode code = framekit::build_five_qubit_code();
    const auto& tab = framekit::CliffordTable::instance();
    framekit::SplitRng rng(seed, 0, 0);

    bool all_pass = true;
    bool probabilities_ok = true;
    json error_reports = json::array();
    for (int e = 0; e < errors; ++e) {
        json entry;
        entry["error"] = e;
        framekit::DenseMatrix err;
        if (entangling) {
            err = framekit::random_entangling_error(code, rng);
        } else {
            std::vector<int> indices(code.n);
            for (int& idx : indices)
                idx = static_cast<int>(rng.next_below(framekit::CliffordTable::kSize));
            entry["clifford_indices"] = indices;
            err = framekit::transversal_error(code, indices);
        }
        auto report = framekit::analyze_error_channel(code, err, tol);
        bool sum_ok = std::abs(report.probability_sum - 1.0) < 1e-10;
        probabilities_ok = probabilities_ok && sum_ok;
        json syndromes = json::array();
        std::vector<double> probs;
        for (const auto& sc : report.syndromes) {
            probs.push_back(sc.probability);
            if (sc.probability <= 1e-13) continue;
            json srow;
            srow["syndrome"] = sc.syndrome;
            srow["probability"] = sc.probability;
            srow["clifford"] = sc.clifford;
            if (sc.clifford) {
                srow["logical_index"] = sc.logical_index;
                srow["logical_word"] = tab.word(sc.logical_index);
            } else if (!sc.violations.empty()) {
                srow["violations"] = sc.violations;
            }
            syndromes.push_back(srow);
        }
        entry["syndrome_probabilities"] = probs;
        entry["probability_sum"] = report.probability_sum;
        entry["syndromes"] = syndromes;
        entry["pass"] = report.all_clifford && sum_ok;
        all_pass = all_pass && report.all_clifford;
        error_reports.push_back(entry);
    }
    json results;
    results["logical_x"] = "XXXXX";
    results["logical_z"] = "ZZZZZ";
    results["errors"] = error_reports;
    results["all_pass"] = all_pass && probabilities_ok;
    json config;
    config["subcommand"] = "appendix-a";
    config["code"] = code_name;
    config["errors"] = errors;
    config["seed"] = seed;
    config["tol"] = tol;
    config["entangling"] = entangling;
    int rc = write_output(out, json_report(config, results));
    if (rc != 0) return rc;
    // entangling runs are exploratory; non-Clifford syndromes are reported,
    // not failed, but probability bookkeeping must still close
    if (!probabilities_ok) return 1;
    if (!entangling && !all_pass) return 1;
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"frame-tracking toolkit: Clifford frame algebra, buffered frame protocols, "
                 "random-walk analytics, and stabilizer-code projection checks"};
    app.require_subcommand(1);

    OutputOptions counts_out;
    auto* counts = app.add_subcommand(
        "counts", "tensor-pair and T-conjugation class sizes (verification, exit 1 on mismatch)");
    add_output_options(counts, &counts_out, "json");

    OutputOptions relations_out;
    double relations_tol = 1e-10;
    auto* relations = app.add_subcommand(
        "relations", "check the frame push-through identities up to global phase");
    relations->add_option("--tol", relations_tol, "comparison tolerance")->capture_default_str();
    add_output_options(relations, &relations_out, "json");

    OutputOptions wa_out;
    double wa_p = 0;
    long wa_n = 0;
    auto* walk_analytic = app.add_subcommand(
        "walk-analytic", "closed-form absorption probabilities of the T-correction walk");
    walk_analytic->add_option("--p", wa_p, "upward step probability")
        ->required()
        ->check(CLI::Range(0.0, 1.0));
    walk_analytic->add_option("--n", wa_n, "segment cutoff")
        ->required()
        ->check(CLI::NonNegativeNumber);
    add_output_options(walk_analytic, &wa_out, "json");

    OutputOptions fig6_out;
    double f6_min = 0.05, f6_max = 0.45, f6_step = 0.05;
    auto* fig6 = app.add_subcommand(
        "fig6", "sweep: segments needed to reach target success probabilities (CSV q,p,n)");
    fig6->add_option("--p-min", f6_min, "grid start")->capture_default_str()
        ->check(CLI::Range(0.0, 1.0));
    fig6->add_option("--p-max", f6_max, "grid end")->capture_default_str()
        ->check(CLI::Range(0.0, 1.0));
    fig6->add_option("--p-step", f6_step, "grid step")->capture_default_str()
        ->check(CLI::PositiveNumber);
    add_output_options(fig6, &fig6_out, "csv");

    OutputOptions tw_out;
    double tw_p = 0;
    std::uint64_t tw_trials = 100000, tw_seed = 0, tw_steps = 10000;
    bool tw_symbolic = false;
    auto* t_walk = app.add_subcommand("t-walk", "Monte Carlo T-correction walk");
    t_walk->add_option("--p", tw_p, "upward step probability")
        ->required()
        ->check(CLI::Range(0.0, 1.0));
    t_walk->add_option("--trials", tw_trials, "number of walks")->capture_default_str();
    t_walk->add_option("--seed", tw_seed, "RNG seed")->capture_default_str();
    t_walk->add_option("--max-steps", tw_steps, "cap per walk")->capture_default_str();
    t_walk->add_flag("--symbolic", tw_symbolic,
                     "track the full operator word and cross-check it every step (slower)");
    add_output_options(t_walk, &tw_out, "json");

    OutputOptions cm_out;
    std::string cm_model = "uniform", cm_pre = "auto";
    std::uint64_t cm_trials = 500000, cm_seed = 0;
    int cm_rounds = 1000, cm_latency = 1;
    auto* cnot_mc = app.add_subcommand("cnot-mc", "Monte Carlo CNOT retry protocol");
    cnot_mc->add_option("--trials", cm_trials, "number of trials")->capture_default_str();
    cnot_mc->add_option("--seed", cm_seed, "RNG seed")->capture_default_str();
    cnot_mc->add_option("--model", cm_model, "noise model: uniform, biased:EPS, pauli:EPS")
        ->capture_default_str();
    cnot_mc->add_option("--max-rounds", cm_rounds, "retry cap per trial")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    cnot_mc->add_option("--latency", cm_latency, "EC rounds per buffer")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    cnot_mc->add_option("--pre-correction", cm_pre, "reset the pending pair each retry round")
        ->check(CLI::IsMember({"auto", "on", "off"}))
        ->capture_default_str();
    add_output_options(cnot_mc, &cm_out, "json");

    OutputOptions sim_out;
    std::string sim_file, sim_model = "uniform", sim_pre = "auto";
    std::uint64_t sim_trials = 1000, sim_seed = 0;
    int sim_latency = 1;
    bool sim_no_verify = false;
    auto* simulate = app.add_subcommand(
        "simulate", "buffered Pauli-frame protocol over a logical circuit file");
    simulate->add_option("file", sim_file, "circuit file (GATE idx [idx2] per line)")
        ->required()
        ->check(CLI::ExistingFile);
    simulate->add_option("--model", sim_model, "noise model: uniform, biased:EPS, pauli:EPS")
        ->capture_default_str();
    simulate->add_option("--trials", sim_trials, "number of trials")->capture_default_str();
    simulate->add_option("--seed", sim_seed, "RNG seed")->capture_default_str();
    simulate->add_option("--latency", sim_latency, "EC rounds per buffer")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    simulate->add_flag("--no-verify", sim_no_verify,
                       "skip the state-vector cross-check (forced off above 12 qubits)");
    add_output_options(simulate, &sim_out, "json");

    OutputOptions aa_out;
    std::string aa_code = "five-qubit";
    int aa_errors = 200;
    std::uint64_t aa_seed = 0;
    double aa_tol = 1e-9;
    bool aa_entangling = false;
    auto* appendix_a = app.add_subcommand(
        "appendix-a", "project random Clifford errors through the code and check the "
                      "effective logical channels");
    appendix_a->add_option("--code", aa_code, "stabilizer code")->capture_default_str();
    appendix_a->add_option("--errors", aa_errors, "number of random errors")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    appendix_a->add_option("--seed", aa_seed, "RNG seed")->capture_default_str();
    appendix_a->add_option("--tol", aa_tol, "signed-permutation tolerance")->capture_default_str();
    appendix_a->add_flag("--entangling", aa_entangling,
                         "sample entangling Clifford circuits instead of transversal products "
                         "(exploratory: non-Clifford syndrome channels are reported, not failed)");
    add_output_options(appendix_a, &aa_out, "json");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (counts->parsed()) return run_counts(counts_out);
        if (relations->parsed()) return run_relations(relations_out, relations_tol);
        if (walk_analytic->parsed()) return run_walk_analytic(wa_out, wa_p, wa_n);
        if (fig6->parsed()) return run_fig6(fig6_out, f6_min, f6_max, f6_step);
        if (t_walk->parsed())
            return run_t_walk(tw_out, tw_p, tw_trials, tw_seed, tw_steps, tw_symbolic);
        if (cnot_mc->parsed())
            return run_cnot_mc(cm_out, parse_model(cm_model, cm_latency, cm_pre), cm_trials,
                               cm_seed, cm_rounds);
        if (simulate->parsed())
            return run_simulate(sim_out, sim_file, parse_model(sim_model, sim_latency, sim_pre),
                                sim_trials, sim_seed, !sim_no_verify);
        if (appendix_a->parsed())
            return run_appendix_a(aa_out, aa_code, aa_errors, aa_seed, aa_tol, aa_entangling);
    } catch (const CLI::ValidationError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
