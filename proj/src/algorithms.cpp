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

#include "qinfo/algorithms.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "qinfo/circuit.hpp"

namespace qinfo::algorithms {

namespace {

constexpr double kSupportFloor = 1e-12;

__extension__ typedef unsigned __int128 u128;

uint64_t mulmod(uint64_t a, uint64_t b, uint64_t m) {
    return static_cast<uint64_t>(static_cast<u128>(a) * b % m);
}

// Smallest n with 2^n >= N^2, i.e. ceil(2 log2 N) without floating point.
std::size_t register_width(uint64_t N) {
    const u128 sq = static_cast<u128>(N) * N;
    std::size_t n = 0;
    while ((static_cast<u128>(1) << n) < sq) {
        ++n;
    }
    return n;
}

// Draws an index with probability proportional to `weights`.
uint64_t sample_index(const std::vector<double> &weights, Rng &rng) {
    double total = 0.0;
    for (double w : weights) {
        total += w;
    }
    const double target = uniform01(rng) * total;
    double acc = 0.0;
    uint64_t last = 0;
    for (uint64_t i = 0; i < weights.size(); ++i) {
        if (weights[i] <= 0.0) {
            continue;
        }
        acc += weights[i];
        last = i;
        if (target < acc) {
            return i;
        }
    }
    return last;
}

}  // namespace

uint64_t modexp(uint64_t a, uint64_t x, uint64_t N) {
    if (N < 2) {
        throw std::invalid_argument("modexp: modulus must be >= 2");
    }
    uint64_t result = 1 % N;
    uint64_t base = a % N;
    while (x > 0) {
        if (x & 1U) {
            result = mulmod(result, base, N);
        }
        base = mulmod(base, base, N);
        x >>= 1;
    }
    return result;
}

uint64_t euclid_gcd(uint64_t u, uint64_t v) {
    if (u == 0 && v == 0) {
        throw std::invalid_argument("euclid_gcd: gcd(0, 0) is undefined");
    }
    while (v != 0) {
        const uint64_t t = u % v;
        u = v;
        v = t;
    }
    return u;
}

uint64_t classical_period(uint64_t a, uint64_t N) {
    if (N < 2 || euclid_gcd(a, N) != 1) {
        throw std::invalid_argument("classical_period: require N >= 2 and gcd(a, N) = 1");
    }
    uint64_t v = a % N;
    uint64_t r = 1;
    while (v != 1 % N) {
        v = mulmod(v, a, N);
        ++r;
    }
    return r;
}

PeriodInstance PeriodInstance::make(uint64_t a, uint64_t N) {
    if (!(a > 1 && a < N)) {
        throw std::invalid_argument("PeriodInstance: require 1 < a < N");
    }
    if (euclid_gcd(a, N) != 1) {
        throw std::invalid_argument("PeriodInstance: a and N must be coprime");
    }
    PeriodInstance inst;
    inst.a = a;
    inst.N = N;
    inst.n = register_width(N);
    if (inst.n > 31) {
        throw std::invalid_argument("PeriodInstance: modulus too large");
    }
    inst.w = uint64_t{1} << inst.n;
    return inst;
}

std::vector<double> shor_k_distribution(const PeriodInstance &inst, uint64_t u) {
    std::vector<cplx> amps(inst.w, 0.0);
    for (uint64_t x = 0; x < inst.w; ++x) {
        if (modexp(inst.a, x, inst.N) == u) {
            amps[x] = 1.0;
        }
    }
    StateVector xs = StateVector::normalized(std::move(amps), inst.n);
    qft(xs, 0, inst.n - 1);
    std::vector<double> p(inst.w);
    for (uint64_t k = 0; k < inst.w; ++k) {
        p[k] = std::norm(xs[k]);
    }
    return p;
}

ShorTranscript shor_period(const PeriodInstance &inst, Rng &rng, std::size_t max_qubits) {
    if (2 * inst.n > max_qubits) {
        throw std::invalid_argument("shor_period: register of 2n qubits exceeds the simulator limit");
    }
    ShorTranscript t;
    t.a = inst.a;
    t.N = inst.N;
    t.n = inst.n;
    t.w = inst.w;
    const std::size_t n = inst.n;

    // H on every x qubit of |0>|0>, written out: 1/sqrt(w) on each |x>|0>.
    StateVector s(2 * n, 0, max_qubits);
    {
        auto amps = s.amplitudes();
        const cplx amp(1.0 / std::sqrt(static_cast<double>(inst.w)), 0.0);
        for (uint64_t x = 0; x < inst.w; ++x) {
            amps[x] = amp;
        }
    }

    // U_f: |x>|y> -> |x>|y xor f(x)>, a permutation of basis states.
    {
        std::vector<uint64_t> f(inst.w);
        for (uint64_t x = 0; x < inst.w; ++x) {
            f[x] = modexp(inst.a, x, inst.N);
        }
        auto amps = s.amplitudes();
        std::vector<cplx> next(amps.size(), 0.0);
        const uint64_t xmask = inst.w - 1;
        for (std::size_t j = 0; j < amps.size(); ++j) {
            if (amps[j] == cplx{0.0, 0.0}) {
                continue;
            }
            const uint64_t x = j & xmask;
            const uint64_t y = j >> n;
            next[x | ((y ^ f[x]) << n)] = amps[j];
        }
        std::copy(next.begin(), next.end(), amps.begin());
    }
    for (const auto &a : s.amplitudes()) {
        t.step2_support += std::norm(a) > kSupportFloor;
    }

    // Measure the whole y register at once.
    {
        std::vector<double> py(inst.w, 0.0);
        for (std::size_t j = 0; j < s.dim(); ++j) {
            py[j >> n] += std::norm(s[j]);
        }
        t.measured_y = sample_index(py, rng);
    }

    // The state is now |psi_x>|u>; carry on with the x register alone.
    std::vector<cplx> xamps(inst.w);
    const uint64_t yoffset = t.measured_y << n;
    for (uint64_t x = 0; x < inst.w; ++x) {
        xamps[x] = s[x | yoffset];
        if (std::norm(xamps[x]) > kSupportFloor) {
            t.post_measurement_support.push_back(x);
        }
    }
    StateVector xs = StateVector::normalized(std::move(xamps), max_qubits);
    qft(xs, 0, n - 1);
    std::vector<double> pk(inst.w);
    for (uint64_t k = 0; k < inst.w; ++k) {
        pk[k] = std::norm(xs[k]);
        if (pk[k] > kSupportFloor) {
            t.post_qft_support.push_back(k);
            t.post_qft_probabilities.push_back(pk[k]);
        }
    }
    t.measured_k = sample_index(pk, rng);

    if (t.measured_k == 0) {
        t.failure = "measured k = 0 carries no period information";
        return t;
    }
    const uint64_t g = euclid_gcd(t.measured_k, inst.w);
    t.fraction_num = t.measured_k / g;
    t.fraction_den = inst.w / g;
    if (t.fraction_den < inst.N && modexp(inst.a, t.fraction_den, inst.N) == 1) {
        t.r = t.fraction_den;
        t.verified = true;
        return t;
    }

    // Convergents h/q of k/w with denominator below N, checked against f.
    uint64_t h_prev = 0, h = 1;
    uint64_t q_prev = 1, q_cur = 0;
    uint64_t num = t.measured_k, den = inst.w;
    while (den != 0) {
        const uint64_t c = num / den;
        const uint64_t h_next = c * h + h_prev;
        const uint64_t q_next = c * q_cur + q_prev;
        if (q_next >= inst.N) {
            break;
        }
        h_prev = h;
        h = h_next;
        q_prev = q_cur;
        q_cur = q_next;
        if (q_cur > 0 && modexp(inst.a, q_cur, inst.N) == 1) {
            t.r = q_cur;
            t.verified = true;
            t.used_continued_fraction = true;
            return t;
        }
        const uint64_t rem = num % den;
        num = den;
        den = rem;
    }
    t.failure = "no denominator below N satisfies a^r = 1 (multiple shares a factor with the period)";
    return t;
}

std::optional<uint64_t> factor_from_period(uint64_t a, uint64_t r, uint64_t N) {
    if (r == 0 || r % 2 != 0) {
        return std::nullopt;
    }
    const uint64_t half = modexp(a, r / 2, N);
    for (uint64_t candidate : {euclid_gcd((half + N - 1) % N, N), euclid_gcd((half + 1) % N, N)}) {
        if (candidate > 1 && candidate < N) {
            return candidate;
        }
    }
    return std::nullopt;
}

bool is_prime(uint64_t N) {
    if (N < 2) {
        return false;
    }
    for (uint64_t d = 2; d * d <= N; ++d) {
        if (N % d == 0) {
            return false;
        }
    }
    return true;
}

std::optional<uint64_t> prime_power_base(uint64_t N) {
    for (uint64_t p = 2; p * p <= N; ++p) {
        if (N % p != 0) {
            continue;
        }
        uint64_t m = N;
        while (m % p == 0) {
            m /= p;
        }
        if (m == 1) {
            return p;
        }
        return std::nullopt;
    }
    return std::nullopt;
}

FactorResult shor_factor(uint64_t N, Rng &rng, std::size_t max_rounds, std::optional<uint64_t> base) {
    if (N < 4) {
        throw std::invalid_argument("shor_factor: N must be composite and >= 4");
    }
    if (is_prime(N)) {
        throw std::invalid_argument("shor_factor: N is prime");
    }
    FactorResult out;
    if (N % 2 == 0) {
        out.factor = 2;
        out.classical_reason = "even";
        return out;
    }
    if (const auto p = prime_power_base(N)) {
        out.factor = *p;
        out.classical_reason = "prime power";
        return out;
    }
    if (base && !(*base > 1 && *base < N)) {
        throw std::invalid_argument("shor_factor: base must satisfy 1 < a < N");
    }
    while (out.rounds < max_rounds) {
        ++out.rounds;
        const uint64_t a = base ? *base : 2 + uniform_below(rng, N - 2);
        out.bases.push_back(a);
        const uint64_t g = euclid_gcd(a, N);
        if (g > 1) {
            out.factor = g;
            out.classical_reason = "lucky gcd";
            return out;
        }
        ShorTranscript t = shor_period(PeriodInstance::make(a, N), rng);
        const std::optional<uint64_t> r = t.r;
        out.transcripts.push_back(std::move(t));
        if (!r) {
            continue;
        }
        if (const auto f = factor_from_period(a, *r, N)) {
            out.factor = f;
            return out;
        }
    }
    return out;
}

GroverInstance GroverInstance::make(std::size_t n_qubits, uint64_t marked) {
    if (n_qubits == 0 || n_qubits > 30) {
        throw std::invalid_argument("GroverInstance: qubit count out of range");
    }
    GroverInstance g{n_qubits, uint64_t{1} << n_qubits, marked};
    if (marked >= g.N) {
        throw std::invalid_argument("GroverInstance: marked index out of range");
    }
    return g;
}

std::size_t grover_iterations(uint64_t N) {
    if (N == 0) {
        throw std::invalid_argument("grover_iterations: N must be positive");
    }
    // About (pi/4) sqrt(N) for large N, and exact for N = 4.
    const double theta0 = std::asin(1.0 / std::sqrt(static_cast<double>(N)));
    return static_cast<std::size_t>(std::floor(std::numbers::pi / (4.0 * theta0) + 1e-12));
}

void grover_iterate(StateVector &s, uint64_t marked) {
    if (marked >= s.dim()) {
        throw std::out_of_range("grover_iterate: marked index out of range");
    }
    s[marked] = -s[marked];
    hadamard_all(s);
    auto amps = s.amplitudes();
    for (std::size_t j = 1; j < amps.size(); ++j) {
        amps[j] = -amps[j];
    }
    hadamard_all(s);
}

GroverResult grover_search(const GroverInstance &inst, Rng &rng, std::optional<std::size_t> iterations) {
    StateVector s(inst.n_qubits, 0, std::max(inst.n_qubits, kDefaultMaxQubits));
    hadamard_all(s);
    GroverResult out;
    out.iterations = iterations.value_or(grover_iterations(inst.N));
    for (std::size_t t = 0; t < out.iterations; ++t) {
        grover_iterate(s, inst.marked);
    }
    out.success_probability = std::norm(s[inst.marked]);
    out.final_state = s;
    for (std::size_t q = 0; q < inst.n_qubits; ++q) {
        out.found |= static_cast<uint64_t>(measure_qubit(s, q, rng).outcome) << q;
    }
    return out;
}

std::vector<double> grover_marked_amplitudes(const GroverInstance &inst, std::size_t t_max) {
    StateVector s(inst.n_qubits, 0, std::max(inst.n_qubits, kDefaultMaxQubits));
    hadamard_all(s);
    std::vector<double> out{s[inst.marked].real()};
    for (std::size_t t = 0; t < t_max; ++t) {
        grover_iterate(s, inst.marked);
        out.push_back(s[inst.marked].real());
    }
    return out;
}

nlohmann::json to_json(const ShorTranscript &t) {
    return {
        {"a", t.a},
        {"N", t.N},
        {"n", t.n},
        {"w", t.w},
        {"measured_y", t.measured_y},
        {"measured_k", t.measured_k},
        {"fraction", std::to_string(t.fraction_num) + "/" + std::to_string(t.fraction_den)},
        {"r", t.r ? nlohmann::json(*t.r) : nlohmann::json(nullptr)},
        {"verified", t.verified},
        {"continued_fraction", t.used_continued_fraction},
        {"step2_support", t.step2_support},
        {"post_qft_support", t.post_qft_support},
        {"failure", t.failure},
    };
}

}  // namespace qinfo::algorithms
