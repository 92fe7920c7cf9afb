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

#include "qinfo/qec.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <ostream>
#include <stdexcept>

#include <fmt/format.h>

#include "qinfo/circuit.hpp"

namespace qinfo::qec {

namespace {

constexpr double kDeterministic = 1e-12;

StateVector uniform_over(const std::vector<gf2::BitWord> &words, std::size_t n) {
    std::vector<cplx> amps(std::size_t{1} << n, 0.0);
    const double amp = 1.0 / std::sqrt(static_cast<double>(words.size()));
    for (const auto &w : words) {
        // Bit i of the word is qubit i, which is bit i of the basis index.
        amps[w.bits()] = amp;
    }
    return StateVector::from_amplitudes(std::move(amps), n);
}

PauliString check_operator(const gf2::BitWord &support, Pauli kind) {
    PauliString p(support.size());
    for (std::size_t i = 0; i < support.size(); ++i) {
        if (support[i]) {
            p.set(i, kind);
        }
    }
    return p;
}

// Measures a Hermitian Pauli product with eigenvalues +-1; returns 1 for
// the -1 outcome.
bool measure_observable(StateVector &s, const PauliString &p, Rng &rng) {
    StateVector flipped = s;
    apply_pauli_string(flipped, p);
    const double expectation = inner(s, flipped).real();
    const double p_plus = std::clamp((1.0 + expectation) / 2.0, 0.0, 1.0);
    bool minus;
    if (p_plus > 1.0 - kDeterministic) {
        minus = false;
    } else if (p_plus < kDeterministic) {
        minus = true;
    } else {
        minus = uniform01(rng) >= p_plus;
    }
    const double sign = minus ? -1.0 : 1.0;
    const double prob = minus ? 1.0 - p_plus : p_plus;
    const double scale = 1.0 / (2.0 * std::sqrt(prob));
    auto amps = s.amplitudes();
    for (std::size_t j = 0; j < amps.size(); ++j) {
        amps[j] = (amps[j] + sign * flipped[j]) * scale;
    }
    return minus;
}

std::pair<cplx, cplx> random_logical(Rng &rng) {
    // Four Box-Muller normals give a Haar-random qubit.
    double g[4];
    for (int i = 0; i < 4; i += 2) {
        const double u1 = 1.0 - uniform01(rng);
        const double u2 = uniform01(rng);
        const double r = std::sqrt(-2.0 * std::log(u1));
        g[i] = r * std::cos(2.0 * std::numbers::pi * u2);
        g[i + 1] = r * std::sin(2.0 * std::numbers::pi * u2);
    }
    const double norm = std::sqrt(g[0] * g[0] + g[1] * g[1] + g[2] * g[2] + g[3] * g[3]);
    return {cplx{g[0], g[1]} / norm, cplx{g[2], g[3]} / norm};
}

}  // namespace

SteaneCode::SteaneCode() : hamming_(gf2::hamming_7_4()), checks_(hamming_.parity_checks()) {
    std::vector<gf2::BitWord> even;
    std::vector<gf2::BitWord> odd;
    for (const auto &w : hamming_.codewords()) {
        (w.weight() % 2 == 0 ? even : odd).push_back(w);
    }
    zero_ = uniform_over(even, 7);
    one_ = uniform_over(odd, 7);

    for (uint64_t xs = 0; xs < 8; ++xs) {
        for (uint64_t zs = 0; zs < 8; ++zs) {
            Syndrome syn{gf2::BitWord(3, xs), gf2::BitWord(3, zs)};
            const gf2::BitWord &x_part = hamming_.coset_leader(syn.z_bits);
            const gf2::BitWord &z_part = hamming_.coset_leader(syn.x_bits);
            PauliString fix(7);
            for (std::size_t q = 0; q < 7; ++q) {
                if (x_part[q] && z_part[q]) {
                    fix.set(q, Pauli::Y);
                } else if (x_part[q]) {
                    fix.set(q, Pauli::X);
                } else if (z_part[q]) {
                    fix.set(q, Pauli::Z);
                }
            }
            map_.emplace(syn.key(), fix);
        }
    }
}

const PauliString &SteaneCode::correction(const Syndrome &s) const {
    if (s.x_bits.size() != 3 || s.z_bits.size() != 3) {
        throw std::invalid_argument("SteaneCode::correction: syndrome halves must have 3 bits");
    }
    const auto it = map_.find(s.key());
    if (it == map_.end()) {
        throw std::invalid_argument("SteaneCode::correction: unknown syndrome");
    }
    return it->second;
}

const SteaneCode &steane() {
    static const SteaneCode code;
    return code;
}

StateVector encode_logical(cplx a, cplx b) {
    if (std::abs(std::norm(a) + std::norm(b) - 1.0) > kNormTolerance) {
        throw std::invalid_argument("encode_logical: |a|^2 + |b|^2 must be 1");
    }
    const SteaneCode &code = steane();
    std::vector<cplx> amps(128);
    for (std::size_t j = 0; j < 128; ++j) {
        amps[j] = a * code.logical_zero()[j] + b * code.logical_one()[j];
    }
    return StateVector::from_amplitudes(std::move(amps));
}

Syndrome extract_syndrome(StateVector &s, Rng &rng) {
    if (s.num_qubits() != 7) {
        throw std::invalid_argument("extract_syndrome: expected a 7-qubit register");
    }
    const SteaneCode &code = steane();
    Syndrome syn;
    for (std::size_t i = 0; i < 3; ++i) {
        syn.z_bits.set(i, measure_observable(s, check_operator(code.z_checks()[i], Pauli::Z), rng));
    }
    for (std::size_t i = 0; i < 3; ++i) {
        syn.x_bits.set(i, measure_observable(s, check_operator(code.x_checks()[i], Pauli::X), rng));
    }
    return syn;
}

Syndrome extract_syndrome(StateVector &s) {
    Rng rng(0);
    return extract_syndrome(s, rng);
}

void recover(StateVector &s, const Syndrome &syn) { apply_pauli_string(s, steane().correction(syn)); }

std::vector<gf2::BitWord> dual_code(const std::vector<gf2::BitWord> &words) {
    if (words.empty()) {
        throw std::invalid_argument("dual_code: empty code");
    }
    const std::size_t n = words.front().size();
    if (n > 20) {
        throw std::invalid_argument("dual_code: block length too large");
    }
    std::vector<gf2::BitWord> dual;
    for (uint64_t v = 0; v < (uint64_t{1} << n); ++v) {
        const gf2::BitWord candidate(n, v);
        bool orthogonal = true;
        for (const auto &w : words) {
            if (candidate.dot(w)) {
                orthogonal = false;
                break;
            }
        }
        if (orthogonal) {
            dual.push_back(candidate);
        }
    }
    return dual;
}

CssDualityResult css_duality_check(const std::vector<gf2::BitWord> &code_words) {
    if (code_words.empty()) {
        throw std::invalid_argument("css_duality_check: empty input");
    }
    const std::size_t n = code_words.front().size();
    if (n == 0 || n > 16) {
        throw std::invalid_argument("css_duality_check: block length must be in [1,16]");
    }
    std::vector<char> member(std::size_t{1} << n, 0);
    for (const auto &w : code_words) {
        if (w.size() != n) {
            throw std::invalid_argument("css_duality_check: words differ in length");
        }
        if (member[w.bits()]) {
            throw std::invalid_argument("css_duality_check: duplicate word " + w.to_string());
        }
        member[w.bits()] = 1;
    }
    for (const auto &u : code_words) {
        for (const auto &v : code_words) {
            if (!member[(u ^ v).bits()]) {
                throw std::invalid_argument("css_duality_check: input is not closed under addition");
            }
        }
    }

    CssDualityResult out;
    out.dual = dual_code(code_words);
    StateVector s = uniform_over(code_words, n);
    hadamard_all(s);
    const StateVector expected = uniform_over(out.dual, n);
    for (std::size_t j = 0; j < s.dim(); ++j) {
        out.max_deviation = std::max(out.max_deviation, std::abs(s[j] - expected[j]));
    }
    out.holds = out.max_deviation <= 1e-9;
    return out;
}

HammingBound quantum_hamming_bound(std::size_t n, std::size_t k) {
    if (n <= k) {
        throw std::invalid_argument("quantum_hamming_bound: require n > k");
    }
    if (n - k >= 64) {
        throw std::invalid_argument("quantum_hamming_bound: n - k too large");
    }
    HammingBound b;
    b.lhs = uint64_t{1} << (n - k);
    b.rhs = 3 * static_cast<uint64_t>(n) + 1;
    b.satisfied = b.lhs >= b.rhs;
    return b;
}

double uncorrectable_estimate(std::size_t n, std::size_t t, double eps) {
    if (!(eps >= 0.0 && eps <= 1.0)) {
        throw std::invalid_argument("uncorrectable_estimate: eps must be a probability");
    }
    return std::pow(static_cast<double>(n) * eps, static_cast<double>(t + 1));
}

PauliString random_pauli_noise(std::size_t n, double eps, Rng &rng) {
    static constexpr Pauli kErrors[3] = {Pauli::X, Pauli::Y, Pauli::Z};
    PauliString e(n);
    for (std::size_t q = 0; q < n; ++q) {
        if (uniform01(rng) < eps) {
            e.set(q, kErrors[uniform_below(rng, 3)]);
        }
    }
    return e;
}

std::vector<SyndromeRow> syndrome_table() {
    std::vector<PauliString> errors{PauliString(7)};
    for (std::size_t q = 0; q < 7; ++q) {
        for (Pauli p : {Pauli::X, Pauli::Y, Pauli::Z}) {
            PauliString e(7);
            e.set(q, p);
            errors.push_back(e);
        }
    }
    // Any code state gives the same table; use an asymmetric one.
    const StateVector encoded = encode_logical(0.6, cplx{0.0, 0.8});
    std::vector<SyndromeRow> rows;
    for (const auto &e : errors) {
        StateVector s = encoded;
        apply_pauli_string(s, e);
        const Syndrome syn = extract_syndrome(s);
        rows.push_back({e.to_string(), syn.x_bits.to_string(), syn.z_bits.to_string()});
    }
    return rows;
}

void write_csv(std::ostream &os, const std::vector<SyndromeRow> &rows) {
    os << "error,syndrome_x,syndrome_z\n";
    for (const auto &r : rows) {
        os << r.error << ',' << r.syndrome_x << ',' << r.syndrome_z << '\n';
    }
}

NoiseScalingResult noise_scaling_mc(const std::vector<double> &eps_list, uint64_t trials, uint64_t seed) {
    if (trials < 1000) {
        throw std::invalid_argument("noise_scaling_mc: at least 1000 trials per point required");
    }
    NoiseScalingResult out;
    for (std::size_t p = 0; p < eps_list.size(); ++p) {
        const double eps = eps_list[p];
        if (!(eps >= 0.0 && eps <= 1.0)) {
            throw std::invalid_argument("noise_scaling_mc: eps must be a probability");
        }
        NoiseScalingRow row{eps, 0, trials, 0.0};
        for (uint64_t i = 0; i < trials; ++i) {
            Rng rng = derive_rng(seed, p * trials + i);
            const auto [a, b] = random_logical(rng);
            const StateVector original = encode_logical(a, b);
            const PauliString error = random_pauli_noise(7, eps, rng);
            if (error.is_identity()) {
                continue;
            }
            StateVector s = original;
            apply_pauli_string(s, error);
            const Syndrome syn = extract_syndrome(s, rng);
            recover(s, syn);
            if (overlap(original, s) < 1.0 - 1e-6) {
                ++row.failures;
            }
        }
        row.rate = static_cast<double>(row.failures) / static_cast<double>(trials);
        out.rows.push_back(row);
    }

    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    int m = 0;
    for (const auto &r : out.rows) {
        if (r.rate > 0.0 && r.eps > 0.0) {
            const double x = std::log(r.eps);
            const double y = std::log(r.rate);
            sx += x;
            sy += y;
            sxx += x * x;
            sxy += x * y;
            ++m;
        }
    }
    out.slope = m >= 2 ? (m * sxy - sx * sy) / (m * sxx - sx * sx) : std::numeric_limits<double>::quiet_NaN();
    return out;
}

void write_csv(std::ostream &os, const NoiseScalingResult &r) {
    os << "eps,failures,trials,rate\n";
    for (const auto &row : r.rows) {
        os << fmt::format("{},{},{},{}\n", row.eps, row.failures, row.trials, row.rate);
    }
}

}  // namespace qinfo::qec
