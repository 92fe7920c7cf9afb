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

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "qinfo/rng.hpp"
#include "qinfo/state.hpp"

namespace qinfo::algorithms {

/// a^x mod N by repeated squaring. Throws for N < 2.
uint64_t modexp(uint64_t a, uint64_t x, uint64_t N);

/// Least r >= 1 with a^r = 1 mod N, by direct iteration. Throws unless
/// gcd(a, N) = 1.
uint64_t classical_period(uint64_t a, uint64_t N);

/// Euclid's algorithm. Throws for (0, 0).
uint64_t euclid_gcd(uint64_t u, uint64_t v);

/// Period-finding problem for f(x) = a^x mod N on registers of n qubits,
/// n = ceil(2 log2 N), w = 2^n.
struct PeriodInstance {
    uint64_t a = 0;
    uint64_t N = 0;
    std::size_t n = 0;
    uint64_t w = 0;

    /// Validates 1 < a < N and gcd(a, N) = 1.
    static PeriodInstance make(uint64_t a, uint64_t N);
};

struct ShorTranscript {
    uint64_t a = 0;
    uint64_t N = 0;
    std::size_t n = 0;
    uint64_t w = 0;
    /// Nonzero amplitudes of sum_x |x>|f(x)>.
    std::size_t step2_support = 0;
    uint64_t measured_y = 0;
    /// x values left in superposition after the y measurement.
    std::vector<uint64_t> post_measurement_support;
    /// k values with nonzero probability after the Fourier transform, and
    /// their probabilities.
    std::vector<uint64_t> post_qft_support;
    std::vector<double> post_qft_probabilities;
    uint64_t measured_k = 0;
    /// k/w in lowest terms.
    uint64_t fraction_num = 0;
    uint64_t fraction_den = 1;
    /// True when the denominator came from a continued-fraction convergent
    /// rather than the reduced fraction itself.
    bool used_continued_fraction = false;
    std::optional<uint64_t> r;
    bool verified = false;
    std::string failure;
};

/// One run of quantum period finding. Register layout: x on qubits 0..n-1,
/// y on qubits n..2n-1. Failure (k = 0, or a common factor between the
/// multiple and the period) is reported in the transcript, not thrown.
/// Throws if 2n exceeds max_qubits.
ShorTranscript shor_period(const PeriodInstance &inst, Rng &rng, std::size_t max_qubits = kDefaultMaxQubits);

/// Exact distribution of k after the Fourier transform, given that the y
/// register collapsed onto u. Index k holds P(k).
std::vector<double> shor_k_distribution(const PeriodInstance &inst, uint64_t u);

/// Classical post-processing: gcd(a^{r/2} +- 1, N) when r is even and the
/// result is a nontrivial factor.
std::optional<uint64_t> factor_from_period(uint64_t a, uint64_t r, uint64_t N);

bool is_prime(uint64_t N);

/// Returns p if N = p^e with e >= 2 and p prime.
std::optional<uint64_t> prime_power_base(uint64_t N);

struct FactorResult {
    std::optional<uint64_t> factor;
    std::size_t rounds = 0;
    /// Set when no quantum step was needed: "even", "prime power", or
    /// "lucky gcd".
    std::string classical_reason;
    std::vector<uint64_t> bases;
    std::vector<ShorTranscript> transcripts;
};

/// Factors an odd composite N. Even N and prime powers are resolved
/// classically and flagged. Each round draws a in [2, N-1] (or uses `base`
/// when given). factor stays empty if every round fails. Throws for N < 4
/// or prime N.
FactorResult shor_factor(uint64_t N, Rng &rng, std::size_t max_rounds, std::optional<uint64_t> base = std::nullopt);

struct GroverInstance {
    std::size_t n_qubits = 0;
    uint64_t N = 0;
    uint64_t marked = 0;

    static GroverInstance make(std::size_t n_qubits, uint64_t marked);
};

/// floor(pi / (4 theta0)) with sin(theta0) = 1/sqrt(N): the integer nearest
/// pi/(4 theta0) - 1/2, where sin((2t+1) theta0) peaks.
std::size_t grover_iterations(uint64_t N);

/// One Grover step: sign flip on the marked state, H on all qubits, sign
/// flip on every basis state except |0...0>, H on all qubits.
void grover_iterate(StateVector &s, uint64_t marked);

struct GroverResult {
    uint64_t found = 0;
    double success_probability = 0.0;
    std::size_t iterations = 0;
    StateVector final_state{1};
};

/// Uniform superposition, `iterations` Grover steps (default
/// grover_iterations(N)), then a measurement of every qubit.
GroverResult grover_search(const GroverInstance &inst, Rng &rng, std::optional<std::size_t> iterations = std::nullopt);

/// Marked-state amplitude after t = 0..t_max steps.
std::vector<double> grover_marked_amplitudes(const GroverInstance &inst, std::size_t t_max);

nlohmann::json to_json(const ShorTranscript &t);

}  // namespace qinfo::algorithms
