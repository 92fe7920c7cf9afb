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
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qinfo/rng.hpp"

namespace qinfo::gf2 {

/// Fixed-length word over GF(2), at most 64 bits. Bit 0 is the leftmost
/// character of the written form, matching the order codewords are printed
/// in tables.
class BitWord {
  public:
    static constexpr std::size_t kMaxBits = 64;

    BitWord() = default;
    explicit BitWord(std::size_t length, uint64_t bits = 0);

    /// Parses a string of '0'/'1' characters.
    static BitWord parse(std::string_view text);

    std::size_t size() const { return length_; }
    uint64_t bits() const { return bits_; }

    bool operator[](std::size_t i) const { return (bits_ >> i) & 1U; }
    void set(std::size_t i, bool value);
    void flip(std::size_t i);

    int weight() const;
    bool is_zero() const { return bits_ == 0; }

    /// GF(2) dot product.
    bool dot(const BitWord &other) const;

    BitWord operator^(const BitWord &other) const;
    BitWord &operator^=(const BitWord &other);
    bool operator==(const BitWord &other) const = default;

    std::string to_string() const;

  private:
    std::size_t length_ = 0;
    uint64_t bits_ = 0;
};

std::ostream &operator<<(std::ostream &os, const BitWord &w);

/// Rank over GF(2) of a set of equal-length words.
std::size_t rank(const std::vector<BitWord> &rows);

/// Basis of the null space {v : row . v = 0 for every row}.
std::vector<BitWord> null_space(std::size_t n, const std::vector<BitWord> &rows);

/// Span of `rows`, in the order of the binary counter over the rows (row 0
/// toggled by the least significant counter bit).
std::vector<BitWord> span(std::size_t n, const std::vector<BitWord> &rows);

/// Binary linear [n, k, d] code given by generator rows and parity checks.
/// Immutable after construction.
class LinearCode {
  public:
    /// Validates lengths, linear independence of the generators, and that
    /// every generator satisfies every parity check. Builds the coset-leader
    /// syndrome table.
    LinearCode(std::size_t n, std::vector<BitWord> generators, std::vector<BitWord> parity_checks);

    /// Code from generators only; parity checks are a null-space basis.
    static LinearCode from_generators(std::size_t n, std::vector<BitWord> generators);

    std::size_t n() const { return n_; }
    std::size_t k() const { return generators_.size(); }
    const std::vector<BitWord> &generators() const { return generators_; }
    const std::vector<BitWord> &parity_checks() const { return parity_checks_; }

    /// Number of errors that are guaranteed correctable, floor((d-1)/2).
    int correctable_weight() const { return t_; }

    /// Coset leader for a syndrome, if that leader has weight <= t.
    std::optional<BitWord> correctable_leader(const BitWord &syndrome) const;

    /// Minimum-weight error with the given syndrome. Ties go to the pattern
    /// whose set bit positions come first lexicographically.
    const BitWord &coset_leader(const BitWord &syndrome) const;

    bool is_codeword(const BitWord &word) const;

    /// Recovers the message whose encoding is `codeword`.
    BitWord message_of(const BitWord &codeword) const;

    std::vector<BitWord> codewords() const;

  private:
    std::size_t n_;
    std::vector<BitWord> generators_;
    std::vector<BitWord> parity_checks_;
    std::vector<BitWord> leaders_;  // indexed by syndrome bits
    int t_ = 0;
    // Row-reduced generator data for message recovery.
    std::vector<std::size_t> pivots_;
    std::vector<BitWord> reduced_;
    std::vector<BitWord> reduced_to_message_;
};

/// The [7,4,3] Hamming code. Generator rows are ordered so that message bit
/// j (leftmost first) selects 1111111, 0001111, 0110011, 1010101 in turn,
/// reproducing the usual message-to-codeword table.
LinearCode hamming_7_4();

/// r-fold repetition code [r, 1, r].
LinearCode repetition_code(std::size_t r);

BitWord encode(const LinearCode &c, const BitWord &message);

/// H . received, one bit per parity check.
BitWord syndrome(const LinearCode &c, const BitWord &received);

struct DecodeResult {
    BitWord message;
    BitWord codeword;
    /// False when the syndrome had no leader within the correctable radius;
    /// the minimum-weight leader is still applied.
    bool corrected = true;
};

DecodeResult decode(const LinearCode &c, const BitWord &received);

/// Minimum Hamming weight over nonzero codewords. Throws for k > 16.
int min_distance(const LinearCode &c);

/// Flips each bit independently with probability p.
BitWord bsc_transmit(const BitWord &word, double p, Rng &rng);

struct ShannonDemoRow {
    std::string scheme;
    double rate = 0.0;
    double success_prob = 0.0;
    uint64_t trials = 0;
    uint64_t seed = 0;
};

/// Monte Carlo over a binary symmetric channel: r-fold repetition for every
/// odd r <= n_rep (success = one bit decoded correctly by majority vote) and
/// the Hamming [7,4] code (success = whole 4-bit block decoded correctly).
std::vector<ShannonDemoRow> shannon_demo(std::size_t n_rep, double p, uint64_t trials, uint64_t seed);

/// CSV with header `scheme,rate,success_prob,trials,seed`.
void write_csv(std::ostream &os, const std::vector<ShannonDemoRow> &rows);

}  // namespace qinfo::gf2
