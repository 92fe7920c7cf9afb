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
#include <span>
#include <string>
#include <vector>

namespace qinfo::info {

/// Tolerance used when validating that probabilities sum to one.
inline constexpr double kProbTolerance = 1e-9;

/// A finite probability distribution p(x) over symbols 0..size()-1.
class ProbDist {
  public:
    /// Throws std::invalid_argument on negative entries, an empty list, or a
    /// total differing from 1 by more than kProbTolerance.
    explicit ProbDist(std::vector<double> probs);

    static ProbDist uniform(std::size_t n);

    std::size_t size() const { return probs_.size(); }
    double operator[](std::size_t i) const { return probs_[i]; }
    std::span<const double> probs() const { return probs_; }

  private:
    std::vector<double> probs_;
};

/// Joint distribution p(x, y), rows indexed by x and columns by y.
class JointDist {
  public:
    JointDist(std::size_t nx, std::size_t ny, std::vector<double> row_major);

    /// p(x, y) = p(x) p(y|x). Each row of `channel` must itself be a
    /// distribution over y.
    static JointDist from_channel(const ProbDist &px, const std::vector<std::vector<double>> &channel);

    static JointDist independent(const ProbDist &px, const ProbDist &py);

    std::size_t nx() const { return nx_; }
    std::size_t ny() const { return ny_; }
    double operator()(std::size_t x, std::size_t y) const { return p_[x * ny_ + y]; }

    ProbDist marginal_x() const;
    ProbDist marginal_y() const;

    /// Swaps the roles of X and Y.
    JointDist transposed() const;

  private:
    std::size_t nx_;
    std::size_t ny_;
    std::vector<double> p_;
};

/// -sum p log2 p, with 0 log 0 taken as 0.
double shannon_entropy(const ProbDist &d);

/// H(p) = -p log2 p - (1-p) log2 (1-p).
double binary_entropy(double p);

double joint_entropy(const JointDist &j);

/// S(Y|X) = S(X,Y) - S(X).
double conditional_entropy(const JointDist &j);

/// I(X:Y) = S(X) + S(Y) - S(X,Y), clamped at zero against rounding.
double mutual_information(const JointDist &j);

/// Joint distribution of input and output of a binary symmetric channel with
/// flip probability `flip` fed with P(X=1) = p_one.
JointDist bsc_joint(double flip, double p_one = 0.5);

double bsc_capacity(double flip);

struct TypicalSetStats {
    /// Number of typical sequences (may be +inf for very large n).
    double size = 0.0;
    double log2_size = 0.0;
    /// Total probability of the typical set.
    double mass = 0.0;
    /// True when produced by enumerating every sequence.
    bool exact_enumeration = false;
};

/// Statistics of the eps-typical set of n i.i.d. bits with P(1) = p: the
/// sequences whose probability lies in [2^{-n(H+eps)}, 2^{-n(H-eps)}].
/// Enumerates all 2^n sequences for n <= 24 and sums over weight classes
/// in log space beyond that.
TypicalSetStats typical_set_stats(int n, double p, double eps);

/// C(n, m) p^m (1-p)^{n-m}, evaluated through lgamma so it stays finite for
/// large n.
double binomial_pmf(int n, int m, double p);

/// Distribution over the 2^bits messages of a block of i.i.d. bits with
/// P(1) = p_one; message index i has its bits read from the string form with
/// the leftmost character as the most significant bit.
ProbDist block_source(int bits, double p_one);

struct HuffmanCode {
    std::vector<std::string> codewords;
    double average_length = 0.0;

    std::vector<int> lengths() const;
    double kraft_sum() const;
    bool is_prefix_free() const;
};

/// Binary Huffman code. Ties between equal weights are broken by the lowest
/// symbol index contained in each subtree, so the output is deterministic.
HuffmanCode huffman_build(const ProbDist &d);

}  // namespace qinfo::info
