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
#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qinfo/rng.hpp"

namespace qinfo {

using cplx = std::complex<double>;

inline constexpr std::size_t kDefaultMaxQubits = 20;
inline constexpr double kNormTolerance = 1e-9;

/// Dense state of an n-qubit register. Qubit i is bit i (least significant
/// first) of the basis-state index; labels are printed with qubit 0 leftmost.
class StateVector {
  public:
    /// Basis state |basis> of n qubits.
    explicit StateVector(std::size_t n_qubits, uint64_t basis = 0, std::size_t max_qubits = kDefaultMaxQubits);

    /// Takes ownership of 2^n amplitudes; throws unless they have unit norm
    /// within kNormTolerance.
    static StateVector from_amplitudes(std::vector<cplx> amps, std::size_t max_qubits = kDefaultMaxQubits);

    /// Normalizes `amps` first. Throws on a zero vector.
    static StateVector normalized(std::vector<cplx> amps, std::size_t max_qubits = kDefaultMaxQubits);

    std::size_t num_qubits() const { return n_qubits_; }
    std::size_t dim() const { return amps_.size(); }

    const cplx &operator[](std::size_t i) const { return amps_[i]; }
    cplx &operator[](std::size_t i) { return amps_[i]; }
    std::span<const cplx> amplitudes() const { return amps_; }
    std::span<cplx> amplitudes() { return amps_; }

    double norm_squared() const;
    void normalize();

    /// Basis label of `index`, qubit 0 first, e.g. index 1 of 3 qubits is "100".
    std::string basis_label(uint64_t index) const;

    /// Index for a label written qubit 0 first.
    static uint64_t index_of(std::string_view label);

  private:
    StateVector(std::size_t n_qubits, std::vector<cplx> amps);

    std::size_t n_qubits_;
    std::vector<cplx> amps_;
};

/// 2x2 single-qubit operator, row major: {m00, m01, m10, m11}.
struct Gate1Q {
    std::array<cplx, 4> m{};

    cplx operator()(std::size_t r, std::size_t c) const { return m[2 * r + c]; }

    Gate1Q operator*(const Gate1Q &rhs) const;
    Gate1Q operator*(cplx s) const;
    Gate1Q adjoint() const;
    bool is_unitary(double tol = kNormTolerance) const;
    bool approx_equal(const Gate1Q &other, double tol = kNormTolerance) const;
};

namespace gates {
Gate1Q I();
Gate1Q X();
/// Y = XZ = [[0,-1],[1,0]], the real convention used for error operators.
Gate1Q Y();
Gate1Q Z();
Gate1Q H();
/// diag(1, e^{i theta}).
Gate1Q P(double theta);
/// Hermitian Pauli sigma_y = iXZ, used for observables.
Gate1Q sigma_y();
}  // namespace gates

/// Looks up "I", "X", "Y", "Z", "H" or "P" (which uses theta). Throws on an
/// unknown name.
Gate1Q standard_gate(std::string_view name, double theta = 0.0);

/// General rotation [[cos(t/2), -i e^{-i phi} sin(t/2)], [-i e^{i phi} sin(t/2), cos(t/2)]].
Gate1Q v_gate(double theta, double phi);

void apply_1q(StateVector &s, const Gate1Q &g, std::size_t target);

/// Applies g to `target` on the subspace where `control` is 1.
void apply_controlled(StateVector &s, std::size_t control, std::size_t target, const Gate1Q &g);

void apply_toffoli(StateVector &s, std::size_t c1, std::size_t c2, std::size_t target);

void apply_swap(StateVector &s, std::size_t a, std::size_t b);

/// Probability that measuring `target` yields 1.
double probability_one(const StateVector &s, std::size_t target);

struct Measurement {
    int outcome = 0;
    double probability = 0.0;
};

/// Born-rule measurement in the computational basis. Collapses and
/// renormalizes s in place. A branch whose projected norm is below 1e-12 is
/// treated as impossible and the other outcome is taken.
Measurement measure_qubit(StateVector &s, std::size_t target, Rng &rng);

/// Projects `target` onto `outcome` and renormalizes; returns the branch
/// probability. Throws if that branch has (numerically) zero weight.
double project_qubit(StateVector &s, std::size_t target, int outcome);

enum class Pauli : uint8_t { I, X, Y, Z };

/// Tensor product of single-qubit Paulis, one label per qubit, written qubit
/// 0 first.
class PauliString {
  public:
    PauliString() = default;
    explicit PauliString(std::size_t n) : labels_(n, Pauli::I) {}
    explicit PauliString(std::vector<Pauli> labels) : labels_(std::move(labels)) {}

    /// Parses a string over {I,X,Y,Z}.
    static PauliString parse(std::string_view text);

    std::size_t size() const { return labels_.size(); }
    Pauli operator[](std::size_t i) const { return labels_[i]; }
    void set(std::size_t i, Pauli p);
    std::size_t weight() const;
    bool is_identity() const { return weight() == 0; }

    std::string to_string() const;
    bool operator==(const PauliString &) const = default;

  private:
    std::vector<Pauli> labels_;
};

/// Product a*b under the Y = XZ convention, where every product of real
/// Paulis is +-1 times another Pauli string.
struct SignedPauli {
    int sign = 1;
    PauliString pauli;
};
SignedPauli multiply(const PauliString &a, const PauliString &b);

/// Single-qubit matrix for a label. `hermitian_y` selects sigma_y over XZ.
Gate1Q pauli_matrix(Pauli p, bool hermitian_y);

/// Applies every factor of the string; Y acts as XZ.
void apply_pauli_string(StateVector &s, const PauliString &p);

/// <psi|P|psi> with Hermitian sigma_y for Y labels.
double pauli_expectation(const StateVector &s, const PauliString &p);

/// s1 is the low block of qubits: tensor(|0>, |1>) = |01>.
StateVector tensor(const StateVector &s1, const StateVector &s2);

/// <s1|s2>.
cplx inner(const StateVector &s1, const StateVector &s2);

/// |<s1|s2>|^2, the global-phase-insensitive overlap.
double overlap(const StateVector &s1, const StateVector &s2);

/// Amplitudes as a JSON array of [re, im] pairs in basis order.
std::string dump_state_json(const StateVector &s);

}  // namespace qinfo
