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

#ifndef FRAMEKIT_CIRCUIT_HPP
#define FRAMEKIT_CIRCUIT_HPP

// Logical circuit description and its text format.  One gate per line:
//
//   # prepare then entangle
//   qubits 3
//   H 0
//   T 1
//   CNOT 0 2
//
// '#' starts a comment, blank lines are skipped, and the optional
// `qubits N` header pins the register size (otherwise max index + 1).

#include <cctype>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace framekit {

enum class GateKind { I, X, Y, Z, H, S, Sdg, T, Tdg, Cnot };

inline bool is_two_qubit(GateKind k) { return k == GateKind::Cnot; }

inline const char* gate_name(GateKind k) {
    switch (k) {
        case GateKind::I: return "I";
        case GateKind::X: return "X";
        case GateKind::Y: return "Y";
        case GateKind::Z: return "Z";
        case GateKind::H: return "H";
        case GateKind::S: return "S";
        case GateKind::Sdg: return "SDG";
        case GateKind::T: return "T";
        case GateKind::Tdg: return "TDG";
        case GateKind::Cnot: return "CNOT";
    }
    return "?";
}

struct Gate {
    GateKind kind;
    int q1 = 0;
    int q2 = -1;    // CNOT target; unused otherwise
};

struct LogicalCircuit {
    int qubits = 0;
    std::vector<Gate> gates;

    void validate() const {
        if (qubits < 1) throw std::invalid_argument("circuit: needs at least one qubit");
        for (const Gate& g : gates) {
            if (g.q1 < 0 || g.q1 >= qubits) throw std::invalid_argument("circuit: index out of range");
            if (is_two_qubit(g.kind)) {
                if (g.q2 < 0 || g.q2 >= qubits) throw std::invalid_argument("circuit: index out of range");
                if (g.q1 == g.q2) throw std::invalid_argument("circuit: CNOT needs distinct qubits");
            }
        }
    }
};

class CircuitParseError : public std::runtime_error {
public:
    CircuitParseError(int line, int column, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ", column " +
                             std::to_string(column) + ": " + what),
          line_(line), column_(column) {}
    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_, column_;
};

namespace detail {

struct Token {
    std::string text;
    int column;     // 1-based
};

inline std::vector<Token> split_tokens(std::string_view line) {
    std::vector<Token> out;
    size_t i = 0;
    while (i < line.size()) {
        if (line[i] == '#') break;
        if (std::isspace(static_cast<unsigned char>(line[i]))) { ++i; continue; }
        size_t start = i;
        while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i])) &&
               line[i] != '#')
            ++i;
        out.push_back({std::string(line.substr(start, i - start)), static_cast<int>(start + 1)});
    }
    return out;
}

inline std::optional<GateKind> lookup_gate(std::string name) {
    for (char& c : name) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    if (name == "I") return GateKind::I;
    if (name == "X") return GateKind::X;
    if (name == "Y") return GateKind::Y;
    if (name == "Z") return GateKind::Z;
    if (name == "H") return GateKind::H;
    if (name == "S") return GateKind::S;
    if (name == "SDG") return GateKind::Sdg;
    if (name == "T") return GateKind::T;
    if (name == "TDG") return GateKind::Tdg;
    if (name == "CNOT") return GateKind::Cnot;
    return std::nullopt;
}

inline int parse_index(const Token& tok, int line_no) {
    for (char c : tok.text)
        if (!std::isdigit(static_cast<unsigned char>(c)))
            throw CircuitParseError(line_no, tok.column,
                                    "expected a qubit index, got '" + tok.text + "'");
    if (tok.text.size() > 6)
        throw CircuitParseError(line_no, tok.column, "qubit index too large");
    return std::stoi(tok.text);
}

}  // namespace detail

inline LogicalCircuit parse_circuit(const std::string& text) {
    LogicalCircuit circuit;
    std::optional<int> declared;
    int max_index = -1;
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    bool saw_gate = false;
    while (std::getline(in, line)) {
        ++line_no;
        auto toks = detail::split_tokens(line);
        if (toks.empty()) continue;

        std::string upper = toks[0].text;
        for (char& c : upper) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
        if (upper == "QUBITS") {
            if (saw_gate || declared)
                throw CircuitParseError(line_no, toks[0].column,
                                        "qubits header must appear once, before any gate");
            if (toks.size() != 2)
                throw CircuitParseError(line_no, toks[0].column, "usage: qubits N");
            int n = detail::parse_index(toks[1], line_no);
            if (n < 1) throw CircuitParseError(line_no, toks[1].column, "qubit count must be positive");
            declared = n;
            continue;
        }

        auto kind = detail::lookup_gate(toks[0].text);
        if (!kind)
            throw CircuitParseError(line_no, toks[0].column,
                                    "unknown gate '" + toks[0].text + "'");
        size_t want = is_two_qubit(*kind) ? 3 : 2;
        if (toks.size() != want)
            throw CircuitParseError(line_no, toks[0].column,
                                    std::string(gate_name(*kind)) + " takes " +
                                        std::to_string(want - 1) + " qubit index" +
                                        (want == 3 ? "es" : ""));
        Gate g;
        g.kind = *kind;
        g.q1 = detail::parse_index(toks[1], line_no);
        max_index = std::max(max_index, g.q1);
        if (is_two_qubit(*kind)) {
            g.q2 = detail::parse_index(toks[2], line_no);
            max_index = std::max(max_index, g.q2);
            if (g.q1 == g.q2)
                throw CircuitParseError(line_no, toks[2].column,
                                        "CNOT control and target must differ");
        }
        if (declared && max_index >= *declared)
            throw CircuitParseError(line_no, toks.back().column,
                                    "index " + std::to_string(max_index) +
                                        " outside declared register of " +
                                        std::to_string(*declared));
        circuit.gates.push_back(g);
        saw_gate = true;
    }
    circuit.qubits = declared ? *declared : max_index + 1;
    if (circuit.qubits < 1)
        throw CircuitParseError(line_no ? line_no : 1, 1, "empty circuit with no qubits header");
    circuit.validate();
    return circuit;
}

}  // namespace framekit

#endif  // FRAMEKIT_CIRCUIT_HPP
