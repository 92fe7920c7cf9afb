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

#include "qinfo/protocols.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <ostream>
#include <stdexcept>

#include <fmt/format.h>

#include "qinfo/density.hpp"

namespace qinfo::protocols {

namespace {

constexpr double kInvSqrt2 = std::numbers::sqrt2 / 2.0;

// Prepares a one-qubit BB84 state: basis 0 is {|0>,|1>}, basis 1 {|+>,|->}.
StateVector prepare(int bit, int basis) {
    StateVector q(1, static_cast<uint64_t>(bit));
    if (basis == 1) {
        apply_1q(q, gates::H(), 0);
    }
    return q;
}

int measure_in_basis(StateVector &q, int basis, Rng &rng) {
    if (basis == 1) {
        apply_1q(q, gates::H(), 0);
    }
    return measure_qubit(q, 0, rng).outcome;
}

}  // namespace

StateVector epr_pair() { return StateVector::from_amplitudes({kInvSqrt2, 0.0, 0.0, kInvSqrt2}); }

StateVector singlet() {
    // Index 2 is |01> (qubit 1 set), index 1 is |10>.
    return StateVector::from_amplitudes({0.0, -kInvSqrt2, kInvSqrt2, 0.0});
}

StateVector ghz_state() {
    std::vector<cplx> amps(8, 0.0);
    amps[0] = kInvSqrt2;
    amps[7] = kInvSqrt2;
    return StateVector::from_amplitudes(std::move(amps));
}

Gate1Q axis_basis_change(double phi) {
    const double c = std::cos(phi / 2.0);
    const double s = std::sin(phi / 2.0);
    return {{c, s, -s, c}};
}

double bell_correlation(double phi_a, double phi_b) {
    StateVector s = singlet();
    apply_1q(s, axis_basis_change(phi_a), 0);
    apply_1q(s, axis_basis_change(phi_b), 1);
    return std::norm(s[0]) + std::norm(s[3]);
}

std::vector<BellRow> bell_sweep(std::size_t steps) {
    if (steps == 0) {
        throw std::invalid_argument("bell_sweep: steps must be positive");
    }
    std::vector<BellRow> rows;
    rows.reserve(steps);
    for (std::size_t i = 0; i < steps; ++i) {
        const double deg = 180.0 * static_cast<double>(i) / static_cast<double>(steps);
        rows.push_back({deg, 0.0, bell_correlation(deg * std::numbers::pi / 180.0, 0.0)});
    }
    return rows;
}

void write_csv(std::ostream &os, const std::vector<BellRow> &rows) {
    os << "phi_a,phi_b,p_same\n";
    for (const auto &r : rows) {
        os << fmt::format("{},{},{}\n", r.phi_a_deg, r.phi_b_deg, r.p_same);
    }
}

double lhv_max_same_probability(const std::vector<double> &angles) {
    const std::size_t m = angles.size();
    if (m == 0 || m > 4) {
        throw std::invalid_argument("lhv_max_same_probability: need between 1 and 4 angles");
    }
    if (m == 1) {
        return 0.0;
    }
    double best = 0.0;
    const uint32_t total = uint32_t{1} << (2 * m);
    for (uint32_t strategy = 0; strategy < total; ++strategy) {
        const uint32_t a = strategy & ((1U << m) - 1);
        const uint32_t b = strategy >> m;
        // Same axis must always give opposite answers.
        if ((a ^ b) != (1U << m) - 1) {
            continue;
        }
        int same = 0;
        int pairs = 0;
        for (std::size_t i = 0; i < m; ++i) {
            for (std::size_t j = 0; j < m; ++j) {
                if (i == j) {
                    continue;
                }
                ++pairs;
                same += (((a >> i) ^ (b >> j)) & 1U) == 0;
            }
        }
        best = std::max(best, static_cast<double>(same) / pairs);
    }
    return best;
}

double quantum_average_same_probability(const std::vector<double> &angles) {
    const std::size_t m = angles.size();
    if (m < 2) {
        return 0.0;
    }
    double acc = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
            if (i != j) {
                acc += bell_correlation(angles[i], angles[j]);
            }
        }
    }
    return acc / static_cast<double>(m * (m - 1));
}

GhzReport ghz_check() {
    const StateVector ghz = ghz_state();
    GhzReport r;
    const char *observables[4] = {"XXX", "XYY", "YXY", "YYX"};
    r.product = 1.0;
    for (int i = 0; i < 4; ++i) {
        r.expectations[i] = pauli_expectation(ghz, PauliString::parse(observables[i]));
        r.product *= r.expectations[i];
    }
    // Local values: bit i of `xs` is x_i = -1, bit i of `ys` is y_i = -1.
    r.lhv_product_constant = true;
    r.lhv_product = 0;
    for (int xs = 0; xs < 8; ++xs) {
        for (int ys = 0; ys < 8; ++ys) {
            auto val = [](int bits, int q) { return ((bits >> q) & 1) ? -1 : 1; };
            const int xxx = val(xs, 0) * val(xs, 1) * val(xs, 2);
            const int xyy = val(xs, 0) * val(ys, 1) * val(ys, 2);
            const int yxy = val(ys, 0) * val(xs, 1) * val(ys, 2);
            const int yyx = val(ys, 0) * val(ys, 1) * val(xs, 2);
            const int prod = xxx * xyy * yxy * yyx;
            if (r.lhv_assignments == 0) {
                r.lhv_product = prod;
            } else if (prod != r.lhv_product) {
                r.lhv_product_constant = false;
            }
            ++r.lhv_assignments;
        }
    }
    return r;
}

double attempt_clone_via_xor(const StateVector &s) {
    if (s.num_qubits() != 1) {
        throw std::invalid_argument("attempt_clone_via_xor: expected a one-qubit state");
    }
    StateVector pair = tensor(s, StateVector(1));
    apply_controlled(pair, 0, 1, gates::X());
    const std::size_t keep[] = {1};
    return fidelity(reduced_density_matrix(pair, keep), DensityMatrix::pure(s));
}

int dense_code_roundtrip(int two_bits, Rng &rng) {
    if (two_bits < 0 || two_bits > 3) {
        throw std::invalid_argument("dense_code_roundtrip: input must be in 0..3");
    }
    static const Gate1Q kAliceOps[4] = {gates::I(), gates::X(), gates::Y(), gates::Z()};
    StateVector pair = epr_pair();
    apply_1q(pair, kAliceOps[two_bits], 0);

    apply_controlled(pair, 0, 1, gates::X());
    const int flip = measure_qubit(pair, 1, rng).outcome;
    apply_1q(pair, gates::H(), 0);
    const int sign = measure_qubit(pair, 0, rng).outcome;

    // (flip, sign): I -> (0,0), X -> (1,0), Y = XZ -> (1,1), Z -> (0,1).
    static constexpr int kDecode[2][2] = {{0, 3}, {1, 2}};
    return kDecode[flip][sign];
}

int dense_code_roundtrip(int two_bits) {
    Rng rng(0);
    return dense_code_roundtrip(two_bits, rng);
}

TeleportResult teleport(const StateVector &s, Rng &rng) {
    if (s.num_qubits() != 1) {
        throw std::invalid_argument("teleport: expected a one-qubit state");
    }
    StateVector state = tensor(s, epr_pair());
    apply_controlled(state, 0, 1, gates::X());
    apply_1q(state, gates::H(), 0);

    TeleportResult out;
    out.pre_measurement = state;
    const int b0 = measure_qubit(state, 0, rng).outcome;
    const int b1 = measure_qubit(state, 1, rng).outcome;
    out.classical_bits = {b0, b1};

    const std::size_t offset = static_cast<std::size_t>(b0) | (static_cast<std::size_t>(b1) << 1);
    StateVector bob = StateVector::normalized({state[offset], state[offset | 4]});
    static const Gate1Q kCorrections[4] = {gates::I(), gates::X(), gates::Z(), gates::Y()};
    apply_1q(bob, kCorrections[2 * b0 + b1], 0);
    out.bob_state = bob;
    return out;
}

double detection_miss_probability(uint64_t m) { return std::pow(0.75, static_cast<double>(m)); }

double log10_detection_miss_probability(uint64_t m) { return static_cast<double>(m) * std::log10(0.75); }

Bb84Report bb84(uint64_t n, bool eve, double disclose_fraction, Rng &rng) {
    if (n < 4) {
        throw std::invalid_argument("bb84: need at least 4 qubits");
    }
    if (!(disclose_fraction >= 0.0 && disclose_fraction <= 1.0)) {
        throw std::invalid_argument("bb84: disclose_fraction must be in [0,1]");
    }
    Bb84Report r;
    r.n_sent = n;
    r.eve_present = eve;

    std::vector<int> alice_sifted;
    std::vector<int> bob_sifted;
    for (uint64_t i = 0; i < n; ++i) {
        const int bit = random_bit(rng);
        const int basis = random_bit(rng);
        StateVector q = prepare(bit, basis);
        if (eve) {
            const int eve_basis = random_bit(rng);
            const int seen = measure_in_basis(q, eve_basis, rng);
            q = prepare(seen, eve_basis);
        }
        const int bob_basis = random_bit(rng);
        const int got = measure_in_basis(q, bob_basis, rng);
        if (bob_basis == basis) {
            alice_sifted.push_back(bit);
            bob_sifted.push_back(got);
        }
    }
    r.sifted_len = alice_sifted.size();
    for (std::size_t i = 0; i < alice_sifted.size(); ++i) {
        r.sifted_errors += alice_sifted[i] != bob_sifted[i];
    }
    r.qber = r.sifted_len ? static_cast<double>(r.sifted_errors) / static_cast<double>(r.sifted_len) : 0.0;

    // Partial Fisher-Yates picks the disclosed positions.
    r.disclosed = static_cast<uint64_t>(std::llround(disclose_fraction * static_cast<double>(r.sifted_len)));
    std::vector<std::size_t> order(r.sifted_len);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::vector<char> disclosed(r.sifted_len, 0);
    for (uint64_t i = 0; i < r.disclosed; ++i) {
        const std::size_t j = i + uniform_below(rng, r.sifted_len - i);
        std::swap(order[i], order[j]);
        disclosed[order[i]] = 1;
        r.disclosed_errors += alice_sifted[order[i]] != bob_sifted[order[i]];
    }
    r.detected = r.disclosed_errors > 0;
    for (std::size_t i = 0; i < r.sifted_len; ++i) {
        if (!disclosed[i]) {
            r.final_key_bits.push_back(alice_sifted[i] ? '1' : '0');
            r.bob_final_key_bits.push_back(bob_sifted[i] ? '1' : '0');
        }
    }
    r.detection_miss_probability = detection_miss_probability(r.disclosed);
    return r;
}

nlohmann::json to_json(const Bb84Report &r) {
    return {
        {"n_sent", r.n_sent},
        {"sifted_len", r.sifted_len},
        {"sifted_errors", r.sifted_errors},
        {"qber", r.qber},
        {"eve_present", r.eve_present},
        {"disclosed", r.disclosed},
        {"disclosed_errors", r.disclosed_errors},
        {"detected", r.detected},
        {"detection_miss_probability", r.detection_miss_probability},
        {"log10_detection_miss_probability", log10_detection_miss_probability(r.disclosed)},
        {"final_key_bits", r.final_key_bits},
        {"bob_final_key_bits", r.bob_final_key_bits},
        {"keys_match", r.final_key_bits == r.bob_final_key_bits},
    };
}

}  // namespace qinfo::protocols
