// Copyright 2026 The qinfo Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qinfo/circuit.hpp"

#include <charconv>
#include <cstdlib>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include <fmt/format.h>

namespace qinfo {

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) {
            ++i;
        }
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') {
            ++j;
        }
        if (j > i) {
            out.push_back(line.substr(i, j - i));
        }
        i = j;
    }
    return out;
}

std::size_t parse_index(std::string_view tok, std::size_t line_no) {
    std::size_t v = 0;
    const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || ptr != tok.data() + tok.size()) {
        throw std::invalid_argument(fmt::format("circuit line {}: bad qubit index '{}'", line_no, tok));
    }
    return v;
}

double parse_angle(std::string_view tok, std::size_t line_no) {
    // from_chars for double is missing on older toolchains; strtod on a copy.
    const std::string s(tok);
    char *end = nullptr;
    const double v = std::strtod(s.c_str(), &end);
    if (end != s.c_str() + s.size()) {
        throw std::invalid_argument(fmt::format("circuit line {}: bad angle '{}'", line_no, tok));
    }
    return v;
}

}  // namespace

void Circuit::check(std::size_t q) const {
    if (q >= n_qubits_) {
        throw std::out_of_range(fmt::format("Circuit: qubit {} out of range for {} qubits", q, n_qubits_));
    }
}

Circuit &Circuit::gate(const Gate1Q &g, std::size_t target, std::string name) {
    check(target);
    ops_.push_back({GateOp::Kind::Single, g, {target, 0, 0}, std::move(name)});
    return *this;
}

Circuit &Circuit::controlled(const Gate1Q &g, std::size_t control, std::size_t target, std::string name) {
    check(control);
    check(target);
    if (control == target) {
        throw std::invalid_argument("Circuit: control and target must differ");
    }
    ops_.push_back({GateOp::Kind::Controlled, g, {control, target, 0}, std::move(name)});
    return *this;
}

Circuit &Circuit::cnot(std::size_t control, std::size_t target) { return controlled(gates::X(), control, target, "CNOT"); }

Circuit &Circuit::toffoli(std::size_t c1, std::size_t c2, std::size_t target) {
    check(c1);
    check(c2);
    check(target);
    if (c1 == c2 || c1 == target || c2 == target) {
        throw std::invalid_argument("Circuit: toffoli indices must be distinct");
    }
    ops_.push_back({GateOp::Kind::Toffoli, gates::X(), {c1, c2, target}, "CCNOT"});
    return *this;
}

Circuit &Circuit::measure(std::size_t target) {
    check(target);
    ops_.push_back({GateOp::Kind::Measure, gates::I(), {target, 0, 0}, "M"});
    return *this;
}

Circuit &Circuit::append(const Circuit &other) {
    if (other.n_qubits_ != n_qubits_) {
        throw std::invalid_argument("Circuit::append: register sizes differ");
    }
    ops_.insert(ops_.end(), other.ops_.begin(), other.ops_.end());
    return *this;
}

bool Circuit::has_measurements() const {
    for (const auto &op : ops_) {
        if (op.kind == GateOp::Kind::Measure) {
            return true;
        }
    }
    return false;
}

Circuit Circuit::inverse() const {
    if (has_measurements()) {
        throw std::invalid_argument("Circuit::inverse: measurements are not invertible");
    }
    Circuit inv(n_qubits_);
    for (auto it = ops_.rbegin(); it != ops_.rend(); ++it) {
        GateOp op = *it;
        op.gate = op.gate.adjoint();
        inv.ops_.push_back(std::move(op));
    }
    return inv;
}

std::string Circuit::to_text() const {
    std::ostringstream os;
    for (const auto &op : ops_) {
        switch (op.kind) {
        case GateOp::Kind::Single:
            if (op.name == "P") {
                os << fmt::format("P {} {}\n", std::arg(op.gate.m[3]), op.qubits[0]);
                break;
            }
            [[fallthrough]];
        case GateOp::Kind::Measure: os << op.name << ' ' << op.qubits[0] << '\n'; break;
        case GateOp::Kind::Controlled: os << op.name << ' ' << op.qubits[0] << ' ' << op.qubits[1] << '\n'; break;
        case GateOp::Kind::Toffoli:
            os << op.name << ' ' << op.qubits[0] << ' ' << op.qubits[1] << ' ' << op.qubits[2] << '\n';
            break;
        }
    }
    return os.str();
}

Circuit Circuit::parse(std::size_t n_qubits, std::string_view text) {
    Circuit c(n_qubits);
    std::size_t line_no = 0;
    while (!text.empty()) {
        const std::size_t nl = text.find('\n');
        const std::string_view line = text.substr(0, nl);
        text = nl == std::string_view::npos ? std::string_view() : text.substr(nl + 1);
        ++line_no;
        const auto tok = split_ws(line);
        if (tok.empty() || tok[0].front() == '#') {
            continue;
        }
        const std::string_view op = tok[0];
        auto need = [&](std::size_t count) {
            if (tok.size() != count + 1) {
                throw std::invalid_argument(
                    fmt::format("circuit line {}: '{}' takes {} operands, got {}", line_no, op, count, tok.size() - 1));
            }
        };
        if (op == "I" || op == "X" || op == "Y" || op == "Z" || op == "H") {
            need(1);
            c.gate(standard_gate(op), parse_index(tok[1], line_no), std::string(op));
        } else if (op == "P") {
            need(2);
            c.gate(gates::P(parse_angle(tok[1], line_no)), parse_index(tok[2], line_no), "P");
        } else if (op == "CNOT") {
            need(2);
            c.cnot(parse_index(tok[1], line_no), parse_index(tok[2], line_no));
        } else if (op == "CZ") {
            need(2);
            c.controlled(gates::Z(), parse_index(tok[1], line_no), parse_index(tok[2], line_no), "CZ");
        } else if (op == "SWAP") {
            need(2);
            const std::size_t a = parse_index(tok[1], line_no);
            const std::size_t b = parse_index(tok[2], line_no);
            c.cnot(a, b).cnot(b, a).cnot(a, b);
        } else if (op == "CCNOT") {
            need(3);
            c.toffoli(parse_index(tok[1], line_no), parse_index(tok[2], line_no), parse_index(tok[3], line_no));
        } else if (op == "M") {
            need(1);
            c.measure(parse_index(tok[1], line_no));
        } else {
            throw std::invalid_argument(fmt::format("circuit line {}: unknown op '{}'", line_no, op));
        }
    }
    return c;
}

RunResult run(const Circuit &c, StateVector s, Rng &rng) {
    if (s.num_qubits() != c.num_qubits()) {
        throw std::invalid_argument("run: state and circuit register sizes differ");
    }
    RunResult out{std::move(s), {}};
    for (const auto &op : c.ops()) {
        switch (op.kind) {
        case GateOp::Kind::Single: apply_1q(out.state, op.gate, op.qubits[0]); break;
        case GateOp::Kind::Controlled: apply_controlled(out.state, op.qubits[0], op.qubits[1], op.gate); break;
        case GateOp::Kind::Toffoli: apply_toffoli(out.state, op.qubits[0], op.qubits[1], op.qubits[2]); break;
        case GateOp::Kind::Measure: out.record.push_back(measure_qubit(out.state, op.qubits[0], rng).outcome); break;
        }
    }
    return out;
}

StateVector run(const Circuit &c, StateVector s) {
    if (c.has_measurements()) {
        throw std::invalid_argument("run: circuit contains measurements; pass an rng");
    }
    Rng unused(0);
    return run(c, std::move(s), unused).state;
}

Circuit three_qubit_example() {
    Circuit c(3);
    c.cnot(0, 2).gate(gates::H(), 1, "H").gate(gates::X(), 0, "X");
    return c;
}

Circuit qft_circuit(std::size_t n_qubits, std::size_t lo, std::size_t hi) {
    if (lo > hi || hi >= n_qubits) {
        throw std::invalid_argument("qft: require lo <= hi < n");
    }
    Circuit c(n_qubits);
    // The most significant qubit collects the phase e^{2 pi i x / w}, which
    // belongs to the least significant output bit; the swaps fix the order.
    for (std::size_t j = hi + 1; j-- > lo;) {
        c.gate(gates::H(), j, "H");
        for (std::size_t m = j; m-- > lo;) {
            const double angle = std::numbers::pi / static_cast<double>(std::size_t{1} << (j - m));
            c.controlled(gates::P(angle), m, j, "CP");
        }
    }
    for (std::size_t a = lo, b = hi; a < b; ++a, --b) {
        c.cnot(a, b).cnot(b, a).cnot(a, b);
    }
    return c;
}

void qft(StateVector &s, std::size_t lo, std::size_t hi) {
    if (lo > hi || hi >= s.num_qubits()) {
        throw std::invalid_argument("qft: require lo <= hi < n");
    }
    for (std::size_t j = hi + 1; j-- > lo;) {
        apply_1q(s, gates::H(), j);
        for (std::size_t m = j; m-- > lo;) {
            const double angle = std::numbers::pi / static_cast<double>(std::size_t{1} << (j - m));
            apply_controlled(s, m, j, gates::P(angle));
        }
    }
    for (std::size_t a = lo, b = hi; a < b; ++a, --b) {
        apply_swap(s, a, b);
    }
}

void inverse_qft(StateVector &s, std::size_t lo, std::size_t hi) {
    if (lo > hi || hi >= s.num_qubits()) {
        throw std::invalid_argument("inverse_qft: require lo <= hi < n");
    }
    for (std::size_t a = lo, b = hi; a < b; ++a, --b) {
        apply_swap(s, a, b);
    }
    for (std::size_t j = lo; j <= hi; ++j) {
        for (std::size_t m = lo; m < j; ++m) {
            const double angle = -std::numbers::pi / static_cast<double>(std::size_t{1} << (j - m));
            apply_controlled(s, m, j, gates::P(angle));
        }
        apply_1q(s, gates::H(), j);
    }
}

void hadamard_all(StateVector &s) {
    const Gate1Q h = gates::H();
    for (std::size_t q = 0; q < s.num_qubits(); ++q) {
        apply_1q(s, h, q);
    }
}

}  // namespace qinfo
