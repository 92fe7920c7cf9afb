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

#include <array>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "qinfo/gf2_codes.hpp"
#include "qinfo/rng.hpp"
#include "qinfo/state.hpp"

namespace qinfo::qec {

using qinfo::apply_pauli_string;

/// Outcome of the six stabilizer measurements. x_bits come from the X-type
/// checks and flag Z components of an error; z_bits come from the Z-type
/// checks and flag X components.
struct Syndrome {
    gf2::BitWord x_bits{3};
    gf2::BitWord z_bits{3};

    bool is_zero() const { return x_bits.is_zero() && z_bits.is_zero(); }
    /// x_bits in the low three bits, z_bits in the high three.
    unsigned key() const { return static_cast<unsigned>(x_bits.bits() | (z_bits.bits() << 3)); }
    bool operator==(const Syndrome &) const = default;
};

/// The seven-qubit CSS code built on the [7,4,3] Hamming code.
class SteaneCode {
  public:
    SteaneCode();

    /// Uniform superposition over the even-weight Hamming codewords.
    const StateVector &logical_zero() const { return zero_; }
    /// Uniform superposition over the odd-weight Hamming codewords.
    const StateVector &logical_one() const { return one_; }

    const std::vector<gf2::BitWord> &x_checks() const { return checks_; }
    const std::vector<gf2::BitWord> &z_checks() const { return checks_; }

    /// Correction for every one of the 64 syndromes: X on the position named
    /// by z_bits, Z on the position named by x_bits, Y where they coincide.
    const PauliString &correction(const Syndrome &s) const;
    const std::map<unsigned, PauliString> &syndrome_map() const { return map_; }

    const gf2::LinearCode &classical_code() const { return hamming_; }

  private:
    gf2::LinearCode hamming_;
    std::vector<gf2::BitWord> checks_;
    StateVector zero_{7};
    StateVector one_{7};
    std::map<unsigned, PauliString> map_;
};

const SteaneCode &steane();

/// a|0_E> + b|1_E>. Throws unless |a|^2 + |b|^2 = 1 within 1e-9.
StateVector encode_logical(cplx a, cplx b);

/// Projective measurement of the three Z-type and three X-type check
/// observables, collapsing s in place. For a code state hit by a single
/// Pauli the outcome is deterministic and the rng is not consulted.
Syndrome extract_syndrome(StateVector &s, Rng &rng);
Syndrome extract_syndrome(StateVector &s);

/// Applies the correction stored for `syn`.
void recover(StateVector &s, const Syndrome &syn);

/// Words orthogonal to every member of `words` (length n <= 20).
std::vector<gf2::BitWord> dual_code(const std::vector<gf2::BitWord> &words);

struct CssDualityResult {
    bool holds = false;
    std::vector<gf2::BitWord> dual;
    double max_deviation = 0.0;
};

/// Checks that H on every qubit maps the uniform superposition over a
/// linear code to the uniform superposition over its dual within 1e-9.
/// Throws if the input is empty, ragged, or not closed under XOR.
CssDualityResult css_duality_check(const std::vector<gf2::BitWord> &code_words);

struct HammingBound {
    bool satisfied = false;
    uint64_t lhs = 0;  // 2^{n-k}
    uint64_t rhs = 0;  // 3n + 1
};

/// Counting bound 2^{n-k} >= 3n + 1 for codes correcting any single-qubit
/// error. Requires n > k and n - k < 64.
HammingBound quantum_hamming_bound(std::size_t n, std::size_t k);

/// (n eps)^{t+1}.
double uncorrectable_estimate(std::size_t n, std::size_t t, double eps);

/// Draws an error: each qubit independently gets a uniformly random X, Y
/// or Z with probability eps.
PauliString random_pauli_noise(std::size_t n, double eps, Rng &rng);

struct SyndromeRow {
    std::string error;
    std::string syndrome_x;
    std::string syndrome_z;
};

/// Syndromes of the identity and the 21 single-qubit Paulis, measured on
/// an encoded state.
std::vector<SyndromeRow> syndrome_table();

/// CSV `error,syndrome_x,syndrome_z`.
void write_csv(std::ostream &os, const std::vector<SyndromeRow> &rows);

struct NoiseScalingRow {
    double eps = 0.0;
    uint64_t failures = 0;
    uint64_t trials = 0;
    double rate = 0.0;
};

struct NoiseScalingResult {
    std::vector<NoiseScalingRow> rows;
    /// Least-squares slope of log(rate) against log(eps) over rows with a
    /// nonzero rate; NaN when fewer than two such rows exist.
    double slope = 0.0;
};

/// Monte Carlo of encode -> noise -> syndrome -> recover. A trial fails when
/// the fidelity with the encoded input drops below 1 - 1e-6. Trial i of
/// point p uses the stream derive_rng(seed, p * trials + i).
NoiseScalingResult noise_scaling_mc(const std::vector<double> &eps_list, uint64_t trials, uint64_t seed);

/// CSV `eps,failures,trials,rate`.
void write_csv(std::ostream &os, const NoiseScalingResult &r);

}  // namespace qinfo::qec
