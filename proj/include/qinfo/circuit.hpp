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
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "qinfo/rng.hpp"
#include "qinfo/state.hpp"

namespace qinfo {

/// One step of a circuit.
struct GateOp {
    enum class Kind { Single, Controlled, Toffoli, Measure };

    Kind kind = Kind::Single;
    Gate1Q gate = gates::I();
    /// Single/Measure: {target}; Controlled: {control, target};
    /// Toffoli: {c1, c2, target}.
    std::array<std::size_t, 3> qubits{};
    /// Mnemonic for printing, e.g. "H" or "CNOT".
    std::string name;
};

/// Ordered gate program over a fixed register. Indices are checked when an
/// op is added, so a Circuit is always well formed.
class Circuit {
  public:
    explicit Circuit(std::size_t n_qubits) : n_qubits_(n_qubits) {}

    /// Text form, one op per line: `H 2`, `X 1`, `CNOT 1 3`, `CCNOT 0 1 2`,
    /// `P 0.785 3`, `M 0`. Also accepts I, Y, Z, CZ and SWAP. Blank lines
    /// and lines starting with '#' are skipped. Qubit indices are 0-based.
    static Circuit parse(std::size_t n_qubits, std::string_view text);

    Circuit &gate(const Gate1Q &g, std::size_t target, std::string name = "U");
    Circuit &controlled(const Gate1Q &g, std::size_t control, std::size_t target, std::string name = "CU");
    Circuit &cnot(std::size_t control, std::size_t target);
    Circuit &toffoli(std::size_t c1, std::size_t c2, std::size_t target);
    Circuit &measure(std::size_t target);
    /// Appends every op of `other`.
    Circuit &append(const Circuit &other);

    std::size_t num_qubits() const { return n_qubits_; }
    const std::vector<GateOp> &ops() const { return ops_; }
    bool has_measurements() const;

    /// Reversed sequence of adjoint ops. Throws if the circuit measures.
    Circuit inverse() const;

    std::string to_text() const;

  private:
    void check(std::size_t q) const;

    std::size_t n_qubits_;
    std::vector<GateOp> ops_;
};

struct RunResult {
    StateVector state;
    std::vector<int> record;
};

/// Applies ops left to right; a measurement collapses immediately and its
/// outcome is appended to the record.
RunResult run(const Circuit &c, StateVector s, Rng &rng);

/// Measurement-free variant; throws if the circuit measures.
StateVector run(const Circuit &c, StateVector s);

/// The network X_1 H_2 XOR_{1,3} on three qubits (qubits 0, 1, 2 here): the
/// XOR acts first, then H, then X.
Circuit three_qubit_example();

/// Exact quantum Fourier transform on qubits lo..hi (lo is the least
/// significant bit of the sub-register value x): |x> -> w^{-1/2} sum_k
/// e^{2 pi i k x / w} |k>, w = 2^{hi-lo+1}. H + controlled-phase network
/// followed by the bit-reversal swaps.
void qft(StateVector &s, std::size_t lo, std::size_t hi);
void inverse_qft(StateVector &s, std::size_t lo, std::size_t hi);

/// The same QFT network as a circuit.
Circuit qft_circuit(std::size_t n_qubits, std::size_t lo, std::size_t hi);

/// H on every qubit.
void hadamard_all(StateVector &s);

}  // namespace qinfo
