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
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "qinfo/rng.hpp"
#include "qinfo/state.hpp"

namespace qinfo::protocols {

/// (|00> + |11>)/sqrt2.
StateVector epr_pair();

/// (|01> - |10>)/sqrt2.
StateVector singlet();

/// (|000> + |111>)/sqrt2.
StateVector ghz_state();

/// Unitary whose rows are the +1/-1 eigenvectors of cos(phi) Z + sin(phi) X,
/// so measuring in the computational basis after it measures along that
/// axis of the x-z plane.
Gate1Q axis_basis_change(double phi);

/// Probability that spin measurements of the singlet along axes at angles
/// phi_a and phi_b (radians from z, in the x-z plane) give equal results,
/// from the joint Born probabilities of the simulated state.
double bell_correlation(double phi_a, double phi_b);

struct BellRow {
    double phi_a_deg;
    double phi_b_deg;
    double p_same;
};

/// `steps` rows with phi_b = 0 and phi_a = i * 180/steps degrees.
std::vector<BellRow> bell_sweep(std::size_t steps);

/// CSV `phi_a,phi_b,p_same` with angles in degrees.
void write_csv(std::ostream &os, const std::vector<BellRow> &rows);

/// Largest average P(same) over all pairs of distinct angles that a
/// deterministic local assignment can give, subject to perfect
/// anticorrelation when both sides use the same angle. Exhaustive over the
/// 2^(2m) assignments; m <= 4.
double lhv_max_same_probability(const std::vector<double> &angles);

/// Quantum value of the same average for the singlet.
double quantum_average_same_probability(const std::vector<double> &angles);

struct GhzReport {
    /// <XXX>, <XYY>, <YXY>, <YYX> with Hermitian sigma_y.
    std::array<double, 4> expectations{};
    double product = 0.0;
    /// Number of local +-1 assignments to (x_i, y_i), i = 0..2.
    int lhv_assignments = 0;
    /// Product of the four LHV predictions, the same for every assignment.
    int lhv_product = 0;
    bool lhv_product_constant = false;
};

GhzReport ghz_check();

/// CNOT from s onto a fresh |0>, then the fidelity of the target's reduced
/// state with s.
double attempt_clone_via_xor(const StateVector &s);

/// Two bits sent through one EPR qubit. Alice applies {I,X,Y,Z}[two_bits]
/// to her half; Bob applies CNOT, measures the target, applies H to the
/// other qubit and measures it.
int dense_code_roundtrip(int two_bits, Rng &rng);
int dense_code_roundtrip(int two_bits);

struct TeleportResult {
    StateVector bob_state{1};
    /// Alice's outcomes for qubit 0 (sign bit) and qubit 1 (flip bit).
    std::array<int, 2> classical_bits{};
    /// Three-qubit state after Alice's XOR and H, before she measures.
    StateVector pre_measurement{3};
};

/// Teleports a one-qubit state through qubits (0: input, 1: Alice's EPR half,
/// 2: Bob). Bob applies {I,X,Z,Y}[2*b0 + b1] with Y = XZ.
TeleportResult teleport(const StateVector &s, Rng &rng);

struct Bb84Report {
    uint64_t n_sent = 0;
    uint64_t sifted_len = 0;
    uint64_t sifted_errors = 0;
    double qber = 0.0;
    bool eve_present = false;
    uint64_t disclosed = 0;
    uint64_t disclosed_errors = 0;
    bool detected = false;
    /// Undisclosed sifted bits on each side, as '0'/'1' strings.
    std::string final_key_bits;
    std::string bob_final_key_bits;
    /// Probability that Eve would go unnoticed given `disclosed` checks.
    double detection_miss_probability = 0.0;
};

/// Qubit-by-qubit BB84: n qubits prepared in {|0>,|1>,|+>,|->}, optional
/// intercept-resend eavesdropper in a uniformly random basis, basis sifting,
/// then a random disclosed subset of round(disclose_fraction * sifted) bits.
Bb84Report bb84(uint64_t n, bool eve, double disclose_fraction, Rng &rng);

/// (3/4)^m, exact power.
double detection_miss_probability(uint64_t m);
double log10_detection_miss_probability(uint64_t m);

nlohmann::json to_json(const Bb84Report &r);

}  // namespace qinfo::protocols
