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

#include "qinfo/state.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace qinfo {

namespace {

void check_qubit(const StateVector &s, std::size_t q, const char *what) {
    if (q >= s.num_qubits()) {
        throw std::out_of_range(std::string(what) + ": qubit index out of range");
    }
}

std::size_t qubits_for_dim(std::size_t dim) {
    if (dim == 0 || (dim & (dim - 1)) != 0) {
        throw std::invalid_argument("StateVector: amplitude count must be a power of two");
    }
    std::size_t n = 0;
    while ((std::size_t{1} << n) < dim) {
        ++n;
    }
    return n;
}

}  // namespace

StateVector::StateVector(std::size_t n_qubits, uint64_t basis, std::size_t max_qubits) : n_qubits_(n_qubits) {
    if (n_qubits > max_qubits || n_qubits > 30) {
        throw std::invalid_argument("StateVector: register exceeds the configured maximum qubit count");
    }
    amps_.assign(std::size_t{1} << n_qubits, cplx{0.0, 0.0});
    if (basis >= amps_.size()) {
        throw std::out_of_range("StateVector: basis index out of range");
    }
    amps_[basis] = 1.0;
}

StateVector::StateVector(std::size_t n_qubits, std::vector<cplx> amps) : n_qubits_(n_qubits), amps_(std::move(amps)) {}

StateVector StateVector::from_amplitudes(std::vector<cplx> amps, std::size_t max_qubits) {
    const std::size_t n = qubits_for_dim(amps.size());
    if (n > max_qubits) {
        throw std::invalid_argument("StateVector: register exceeds the configured maximum qubit count");
    }
    StateVector s(n, std::move(amps));
    if (std::abs(s.norm_squared() - 1.0) > kNormTolerance) {
        throw std::invalid_argument("StateVector::from_amplitudes: amplitudes are not normalized");
    }
    return s;
}

StateVector StateVector::normalized(std::vector<cplx> amps, std::size_t max_qubits) {
    const std::size_t n = qubits_for_dim(amps.size());
    if (n > max_qubits) {
        throw std::invalid_argument("StateVector: register exceeds the configured maximum qubit count");
    }
    StateVector s(n, std::move(amps));
    s.normalize();
    return s;
}

double StateVector::norm_squared() const {
    double acc = 0.0;
    for (const auto &a : amps_) {
        acc += std::norm(a);
    }
    return acc;
}

void StateVector::normalize() {
    const double n2 = norm_squared();
    if (!(n2 > 0.0)) {
        throw std::invalid_argument("StateVector::normalize: zero vector");
    }
    const double inv = 1.0 / std::sqrt(n2);
    for (auto &a : amps_) {
        a *= inv;
    }
}

std::string StateVector::basis_label(uint64_t index) const {
    std::string s(n_qubits_, '0');
    for (std::size_t q = 0; q < n_qubits_; ++q) {
        if ((index >> q) & 1U) {
            s[q] = '1';
        }
    }
    return s;
}

uint64_t StateVector::index_of(std::string_view label) {
    uint64_t idx = 0;
    for (std::size_t q = 0; q < label.size(); ++q) {
        if (label[q] == '1') {
            idx |= uint64_t{1} << q;
        } else if (label[q] != '0') {
            throw std::invalid_argument("StateVector::index_of: label must be binary");
        }
    }
    return idx;
}

Gate1Q Gate1Q::operator*(const Gate1Q &rhs) const {
    Gate1Q r;
    for (std::size_t i = 0; i < 2; ++i) {
        for (std::size_t j = 0; j < 2; ++j) {
            r.m[2 * i + j] = (*this)(i, 0) * rhs(0, j) + (*this)(i, 1) * rhs(1, j);
        }
    }
    return r;
}

Gate1Q Gate1Q::operator*(cplx s) const {
    Gate1Q r = *this;
    for (auto &v : r.m) {
        v *= s;
    }
    return r;
}

Gate1Q Gate1Q::adjoint() const { return {{std::conj(m[0]), std::conj(m[2]), std::conj(m[1]), std::conj(m[3])}}; }

bool Gate1Q::is_unitary(double tol) const { return (*this * adjoint()).approx_equal(gates::I(), tol); }

bool Gate1Q::approx_equal(const Gate1Q &other, double tol) const {
    for (std::size_t i = 0; i < 4; ++i) {
        if (std::abs(m[i] - other.m[i]) > tol) {
            return false;
        }
    }
    return true;
}

namespace gates {
Gate1Q I() { return {{1.0, 0.0, 0.0, 1.0}}; }
Gate1Q X() { return {{0.0, 1.0, 1.0, 0.0}}; }
Gate1Q Y() { return {{0.0, -1.0, 1.0, 0.0}}; }
Gate1Q Z() { return {{1.0, 0.0, 0.0, -1.0}}; }
Gate1Q H() {
    const double r = std::numbers::sqrt2 / 2.0;
    return {{r, r, r, -r}};
}
Gate1Q P(double theta) { return {{1.0, 0.0, 0.0, std::polar(1.0, theta)}}; }
Gate1Q sigma_y() { return {{0.0, cplx{0.0, -1.0}, cplx{0.0, 1.0}, 0.0}}; }
}  // namespace gates

Gate1Q standard_gate(std::string_view name, double theta) {
    if (name == "I") return gates::I();
    if (name == "X") return gates::X();
    if (name == "Y") return gates::Y();
    if (name == "Z") return gates::Z();
    if (name == "H") return gates::H();
    if (name == "P") return gates::P(theta);
    throw std::invalid_argument("standard_gate: unknown gate '" + std::string(name) + "'");
}

Gate1Q v_gate(double theta, double phi) {
    const double c = std::cos(theta / 2.0);
    const double s = std::sin(theta / 2.0);
    const cplx minus_i{0.0, -1.0};
    return {{c, minus_i * std::polar(1.0, -phi) * s, minus_i * std::polar(1.0, phi) * s, c}};
}

void apply_1q(StateVector &s, const Gate1Q &g, std::size_t target) {
    check_qubit(s, target, "apply_1q");
    const std::size_t stride = std::size_t{1} << target;
    auto amps = s.amplitudes();
    const std::size_t dim = amps.size();
    for (std::size_t base = 0; base < dim; base += 2 * stride) {
        for (std::size_t j = base; j < base + stride; ++j) {
            const cplx a0 = amps[j];
            const cplx a1 = amps[j + stride];
            amps[j] = g.m[0] * a0 + g.m[1] * a1;
            amps[j + stride] = g.m[2] * a0 + g.m[3] * a1;
        }
    }
}

void apply_controlled(StateVector &s, std::size_t control, std::size_t target, const Gate1Q &g) {
    check_qubit(s, control, "apply_controlled");
    check_qubit(s, target, "apply_controlled");
    if (control == target) {
        throw std::invalid_argument("apply_controlled: control and target must differ");
    }
    const std::size_t cmask = std::size_t{1} << control;
    const std::size_t stride = std::size_t{1} << target;
    auto amps = s.amplitudes();
    const std::size_t dim = amps.size();
    for (std::size_t base = 0; base < dim; base += 2 * stride) {
        for (std::size_t j = base; j < base + stride; ++j) {
            if (!(j & cmask)) {
                continue;
            }
            const cplx a0 = amps[j];
            const cplx a1 = amps[j + stride];
            amps[j] = g.m[0] * a0 + g.m[1] * a1;
            amps[j + stride] = g.m[2] * a0 + g.m[3] * a1;
        }
    }
}

void apply_toffoli(StateVector &s, std::size_t c1, std::size_t c2, std::size_t target) {
    check_qubit(s, c1, "apply_toffoli");
    check_qubit(s, c2, "apply_toffoli");
    check_qubit(s, target, "apply_toffoli");
    if (c1 == c2 || c1 == target || c2 == target) {
        throw std::invalid_argument("apply_toffoli: indices must be distinct");
    }
    const std::size_t cmask = (std::size_t{1} << c1) | (std::size_t{1} << c2);
    const std::size_t tmask = std::size_t{1} << target;
    auto amps = s.amplitudes();
    for (std::size_t j = 0; j < amps.size(); ++j) {
        if ((j & cmask) == cmask && !(j & tmask)) {
            std::swap(amps[j], amps[j | tmask]);
        }
    }
}

void apply_swap(StateVector &s, std::size_t a, std::size_t b) {
    check_qubit(s, a, "apply_swap");
    check_qubit(s, b, "apply_swap");
    if (a == b) {
        return;
    }
    const std::size_t ma = std::size_t{1} << a;
    const std::size_t mb = std::size_t{1} << b;
    auto amps = s.amplitudes();
    for (std::size_t j = 0; j < amps.size(); ++j) {
        if ((j & ma) && !(j & mb)) {
            std::swap(amps[j], amps[(j & ~ma) | mb]);
        }
    }
}

double probability_one(const StateVector &s, std::size_t target) {
    check_qubit(s, target, "probability_one");
    const std::size_t mask = std::size_t{1} << target;
    double p1 = 0.0;
    for (std::size_t j = 0; j < s.dim(); ++j) {
        if (j & mask) {
            p1 += std::norm(s[j]);
        }
    }
    return p1;
}

namespace {

// Zeroes the other branch and rescales the kept one; returns its weight.
double collapse(StateVector &s, std::size_t target, int outcome, double weight) {
    const std::size_t mask = std::size_t{1} << target;
    const double scale = 1.0 / std::sqrt(weight);
    auto amps = s.amplitudes();
    for (std::size_t j = 0; j < amps.size(); ++j) {
        const bool bit = (j & mask) != 0;
        if (bit == (outcome == 1)) {
            amps[j] *= scale;
        } else {
            amps[j] = 0.0;
        }
    }
    return weight;
}

constexpr double kImpossibleBranch = 1e-12;

}  // namespace

Measurement measure_qubit(StateVector &s, std::size_t target, Rng &rng) {
    const double total = s.norm_squared();
    const double p1 = probability_one(s, target) / total;
    const double p0 = 1.0 - p1;
    int outcome = uniform01(rng) < p1 ? 1 : 0;
    if (outcome == 1 && p1 < kImpossibleBranch) {
        outcome = 0;
    } else if (outcome == 0 && p0 < kImpossibleBranch) {
        outcome = 1;
    }
    const double p = outcome == 1 ? p1 : p0;
    if (p < kImpossibleBranch) {
        throw std::runtime_error("measure_qubit: state has vanishing norm");
    }
    collapse(s, target, outcome, p * total);
    return {outcome, p};
}

double project_qubit(StateVector &s, std::size_t target, int outcome) {
    if (outcome != 0 && outcome != 1) {
        throw std::invalid_argument("project_qubit: outcome must be 0 or 1");
    }
    const double total = s.norm_squared();
    const double p1 = probability_one(s, target) / total;
    const double p = outcome == 1 ? p1 : 1.0 - p1;
    if (p < kImpossibleBranch) {
        throw std::runtime_error("project_qubit: requested branch has zero probability");
    }
    collapse(s, target, outcome, p * total);
    return p;
}

PauliString PauliString::parse(std::string_view text) {
    std::vector<Pauli> labels;
    labels.reserve(text.size());
    for (char c : text) {
        switch (c) {
        case 'I': labels.push_back(Pauli::I); break;
        case 'X': labels.push_back(Pauli::X); break;
        case 'Y': labels.push_back(Pauli::Y); break;
        case 'Z': labels.push_back(Pauli::Z); break;
        default: throw std::invalid_argument(std::string("PauliString::parse: bad label '") + c + "'");
        }
    }
    return PauliString(std::move(labels));
}

void PauliString::set(std::size_t i, Pauli p) {
    if (i >= labels_.size()) {
        throw std::out_of_range("PauliString::set: index out of range");
    }
    labels_[i] = p;
}

std::size_t PauliString::weight() const {
    std::size_t w = 0;
    for (Pauli p : labels_) {
        w += (p != Pauli::I);
    }
    return w;
}

std::string PauliString::to_string() const {
    static constexpr char kNames[] = {'I', 'X', 'Y', 'Z'};
    std::string s;
    s.reserve(labels_.size());
    for (Pauli p : labels_) {
        s.push_back(kNames[static_cast<int>(p)]);
    }
    return s;
}

SignedPauli multiply(const PauliString &a, const PauliString &b) {
    if (a.size() != b.size()) {
        throw std::invalid_argument("multiply: Pauli strings differ in length");
    }
    // Each label is X^x Z^z with Y = XZ. (X^a Z^b)(X^c Z^d) = (-1)^{bc} X^{a+c} Z^{b+d}.
    auto xz = [](Pauli p) -> std::pair<int, int> {
        switch (p) {
        case Pauli::I: return {0, 0};
        case Pauli::X: return {1, 0};
        case Pauli::Y: return {1, 1};
        case Pauli::Z: return {0, 1};
        }
        return {0, 0};
    };
    SignedPauli out{1, PauliString(a.size())};
    for (std::size_t i = 0; i < a.size(); ++i) {
        const auto [ax, az] = xz(a[i]);
        const auto [bx, bz] = xz(b[i]);
        if (az & bx) {
            out.sign = -out.sign;
        }
        const int x = ax ^ bx;
        const int z = az ^ bz;
        out.pauli.set(i, x ? (z ? Pauli::Y : Pauli::X) : (z ? Pauli::Z : Pauli::I));
    }
    return out;
}

Gate1Q pauli_matrix(Pauli p, bool hermitian_y) {
    switch (p) {
    case Pauli::I: return gates::I();
    case Pauli::X: return gates::X();
    case Pauli::Y: return hermitian_y ? gates::sigma_y() : gates::Y();
    case Pauli::Z: return gates::Z();
    }
    return gates::I();
}

void apply_pauli_string(StateVector &s, const PauliString &p) {
    if (p.size() != s.num_qubits()) {
        throw std::invalid_argument("apply_pauli_string: length does not match register");
    }
    for (std::size_t q = 0; q < p.size(); ++q) {
        if (p[q] != Pauli::I) {
            apply_1q(s, pauli_matrix(p[q], false), q);
        }
    }
}

double pauli_expectation(const StateVector &s, const PauliString &p) {
    if (p.size() != s.num_qubits()) {
        throw std::invalid_argument("pauli_expectation: length does not match register");
    }
    StateVector applied = s;
    for (std::size_t q = 0; q < p.size(); ++q) {
        if (p[q] != Pauli::I) {
            apply_1q(applied, pauli_matrix(p[q], true), q);
        }
    }
    return inner(s, applied).real();
}

StateVector tensor(const StateVector &s1, const StateVector &s2) {
    const std::size_t n = s1.num_qubits() + s2.num_qubits();
    std::vector<cplx> amps(std::size_t{1} << n);
    for (std::size_t j = 0; j < s2.dim(); ++j) {
        for (std::size_t i = 0; i < s1.dim(); ++i) {
            amps[i | (j << s1.num_qubits())] = s1[i] * s2[j];
        }
    }
    return StateVector::normalized(std::move(amps), std::max(n, kDefaultMaxQubits));
}

cplx inner(const StateVector &s1, const StateVector &s2) {
    if (s1.num_qubits() != s2.num_qubits()) {
        throw std::invalid_argument("inner: registers differ in size");
    }
    cplx acc{0.0, 0.0};
    for (std::size_t i = 0; i < s1.dim(); ++i) {
        acc += std::conj(s1[i]) * s2[i];
    }
    return acc;
}

double overlap(const StateVector &s1, const StateVector &s2) { return std::norm(inner(s1, s2)); }

std::string dump_state_json(const StateVector &s) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto &a : s.amplitudes()) {
        arr.push_back({a.real(), a.imag()});
    }
    return arr.dump();
}

}  // namespace qinfo
