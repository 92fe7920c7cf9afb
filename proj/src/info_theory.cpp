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

#include "qinfo/info_theory.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numeric>
#include <queue>
#include <stdexcept>

namespace qinfo::info {

namespace {

double plogp(double p) { return p > 0.0 ? -p * std::log2(p) : 0.0; }

void check_probability(double p, const char *what) {
    if (!(p >= 0.0 && p <= 1.0)) {
        throw std::invalid_argument(std::string(what) + ": probability out of [0,1]");
    }
}

void validate(std::span<const double> probs, const char *what) {
    if (probs.empty()) {
        throw std::invalid_argument(std::string(what) + ": empty distribution");
    }
    double total = 0.0;
    for (double p : probs) {
        if (!(p >= 0.0) || !std::isfinite(p)) {
            throw std::invalid_argument(std::string(what) + ": negative or non-finite probability");
        }
        total += p;
    }
    if (std::abs(total - 1.0) > kProbTolerance) {
        throw std::invalid_argument(std::string(what) + ": probabilities do not sum to 1");
    }
}

double log_choose(int n, int m) {
    return std::lgamma(n + 1.0) - std::lgamma(m + 1.0) - std::lgamma(n - m + 1.0);
}

}  // namespace

ProbDist::ProbDist(std::vector<double> probs) : probs_(std::move(probs)) {
    validate(probs_, "ProbDist");
}

ProbDist ProbDist::uniform(std::size_t n) {
    if (n == 0) {
        throw std::invalid_argument("ProbDist::uniform: n must be positive");
    }
    return ProbDist(std::vector<double>(n, 1.0 / static_cast<double>(n)));
}

JointDist::JointDist(std::size_t nx, std::size_t ny, std::vector<double> row_major)
    : nx_(nx), ny_(ny), p_(std::move(row_major)) {
    if (nx_ == 0 || ny_ == 0 || p_.size() != nx_ * ny_) {
        throw std::invalid_argument("JointDist: shape does not match data");
    }
    validate(p_, "JointDist");
}

JointDist JointDist::from_channel(const ProbDist &px, const std::vector<std::vector<double>> &channel) {
    if (channel.size() != px.size() || channel.empty()) {
        throw std::invalid_argument("JointDist::from_channel: one channel row per input symbol required");
    }
    const std::size_t ny = channel.front().size();
    std::vector<double> p;
    p.reserve(px.size() * ny);
    for (std::size_t x = 0; x < px.size(); ++x) {
        if (channel[x].size() != ny) {
            throw std::invalid_argument("JointDist::from_channel: ragged channel matrix");
        }
        validate(channel[x], "JointDist::from_channel row");
        for (double pyx : channel[x]) {
            p.push_back(px[x] * pyx);
        }
    }
    return JointDist(px.size(), ny, std::move(p));
}

JointDist JointDist::independent(const ProbDist &px, const ProbDist &py) {
    std::vector<double> p;
    p.reserve(px.size() * py.size());
    for (double a : px.probs()) {
        for (double b : py.probs()) {
            p.push_back(a * b);
        }
    }
    return JointDist(px.size(), py.size(), std::move(p));
}

ProbDist JointDist::marginal_x() const {
    std::vector<double> m(nx_, 0.0);
    for (std::size_t x = 0; x < nx_; ++x) {
        for (std::size_t y = 0; y < ny_; ++y) {
            m[x] += (*this)(x, y);
        }
    }
    return ProbDist(std::move(m));
}

ProbDist JointDist::marginal_y() const {
    std::vector<double> m(ny_, 0.0);
    for (std::size_t x = 0; x < nx_; ++x) {
        for (std::size_t y = 0; y < ny_; ++y) {
            m[y] += (*this)(x, y);
        }
    }
    return ProbDist(std::move(m));
}

JointDist JointDist::transposed() const {
    std::vector<double> t(p_.size());
    for (std::size_t x = 0; x < nx_; ++x) {
        for (std::size_t y = 0; y < ny_; ++y) {
            t[y * nx_ + x] = (*this)(x, y);
        }
    }
    return JointDist(ny_, nx_, std::move(t));
}

double shannon_entropy(const ProbDist &d) {
    double s = 0.0;
    for (double p : d.probs()) {
        s += plogp(p);
    }
    return s;
}

double binary_entropy(double p) {
    check_probability(p, "binary_entropy");
    return plogp(p) + plogp(1.0 - p);
}

double joint_entropy(const JointDist &j) {
    double s = 0.0;
    for (std::size_t x = 0; x < j.nx(); ++x) {
        for (std::size_t y = 0; y < j.ny(); ++y) {
            s += plogp(j(x, y));
        }
    }
    return s;
}

double conditional_entropy(const JointDist &j) {
    return std::max(0.0, joint_entropy(j) - shannon_entropy(j.marginal_x()));
}

double mutual_information(const JointDist &j) {
    const double i = shannon_entropy(j.marginal_x()) + shannon_entropy(j.marginal_y()) - joint_entropy(j);
    return std::max(0.0, i);
}

JointDist bsc_joint(double flip, double p_one) {
    check_probability(flip, "bsc_joint");
    check_probability(p_one, "bsc_joint");
    return JointDist::from_channel(ProbDist({1.0 - p_one, p_one}), {{1.0 - flip, flip}, {flip, 1.0 - flip}});
}

double bsc_capacity(double flip) {
    check_probability(flip, "bsc_capacity");
    return 1.0 - binary_entropy(flip);
}

double binomial_pmf(int n, int m, double p) {
    if (n < 0 || m < 0 || m > n) {
        throw std::invalid_argument("binomial_pmf: require 0 <= m <= n");
    }
    check_probability(p, "binomial_pmf");
    if (p == 0.0) {
        return m == 0 ? 1.0 : 0.0;
    }
    if (p == 1.0) {
        return m == n ? 1.0 : 0.0;
    }
    return std::exp(log_choose(n, m) + m * std::log(p) + (n - m) * std::log1p(-p));
}

TypicalSetStats typical_set_stats(int n, double p, double eps) {
    if (n < 1) {
        throw std::invalid_argument("typical_set_stats: n must be >= 1");
    }
    if (!(p > 0.0 && p < 1.0)) {
        throw std::invalid_argument("typical_set_stats: p must lie in (0,1)");
    }
    if (!(eps > 0.0)) {
        throw std::invalid_argument("typical_set_stats: eps must be positive");
    }
    const double h = binary_entropy(p);
    const double lp1 = -std::log2(p);
    const double lp0 = -std::log2(1.0 - p);
    // Per-symbol information of a sequence with m ones; tiny slack absorbs
    // rounding exactly at the interval edges.
    auto typical = [&](int m) {
        const double rate = (m * lp1 + (n - m) * lp0) / n;
        return rate >= h - eps - 1e-12 && rate <= h + eps + 1e-12;
    };

    TypicalSetStats out;
    if (n <= 24) {
        out.exact_enumeration = true;
        std::vector<char> is_typical(static_cast<std::size_t>(n) + 1);
        std::vector<double> seq_prob(static_cast<std::size_t>(n) + 1);
        for (int m = 0; m <= n; ++m) {
            is_typical[m] = typical(m);
            seq_prob[m] = std::pow(p, m) * std::pow(1.0 - p, n - m);
        }
        uint64_t count = 0;
        const uint64_t total = uint64_t{1} << n;
        for (uint64_t s = 0; s < total; ++s) {
            const int m = std::popcount(s);
            if (is_typical[m]) {
                ++count;
                out.mass += seq_prob[m];
            }
        }
        out.size = static_cast<double>(count);
        out.log2_size = count > 0 ? std::log2(out.size) : -std::numeric_limits<double>::infinity();
        return out;
    }

    // Weight-class summation with a log-sum-exp for the set size.
    double max_log = -std::numeric_limits<double>::infinity();
    std::vector<double> logs;
    for (int m = 0; m <= n; ++m) {
        if (!typical(m)) {
            continue;
        }
        out.mass += binomial_pmf(n, m, p);
        const double lc = log_choose(n, m);
        logs.push_back(lc);
        max_log = std::max(max_log, lc);
    }
    if (logs.empty()) {
        out.log2_size = -std::numeric_limits<double>::infinity();
        return out;
    }
    double acc = 0.0;
    for (double l : logs) {
        acc += std::exp(l - max_log);
    }
    const double ln_size = max_log + std::log(acc);
    out.log2_size = ln_size / std::log(2.0);
    out.size = std::exp(ln_size);
    return out;
}

ProbDist block_source(int bits, double p_one) {
    if (bits < 1 || bits > 20) {
        throw std::invalid_argument("block_source: bits must be in [1,20]");
    }
    check_probability(p_one, "block_source");
    const std::size_t count = std::size_t{1} << bits;
    std::vector<double> probs(count);
    for (std::size_t i = 0; i < count; ++i) {
        const int ones = std::popcount(i);
        probs[i] = std::pow(p_one, ones) * std::pow(1.0 - p_one, bits - ones);
    }
    return ProbDist(std::move(probs));
}

std::vector<int> HuffmanCode::lengths() const {
    std::vector<int> out;
    out.reserve(codewords.size());
    for (const auto &c : codewords) {
        out.push_back(static_cast<int>(c.size()));
    }
    return out;
}

double HuffmanCode::kraft_sum() const {
    double s = 0.0;
    for (const auto &c : codewords) {
        s += std::ldexp(1.0, -static_cast<int>(c.size()));
    }
    return s;
}

bool HuffmanCode::is_prefix_free() const {
    for (std::size_t i = 0; i < codewords.size(); ++i) {
        for (std::size_t j = 0; j < codewords.size(); ++j) {
            if (i != j && codewords[j].size() >= codewords[i].size() &&
                codewords[j].compare(0, codewords[i].size(), codewords[i]) == 0) {
                return false;
            }
        }
    }
    return true;
}

HuffmanCode huffman_build(const ProbDist &d) {
    const std::size_t n = d.size();
    if (n < 2) {
        throw std::invalid_argument("huffman_build: need at least 2 symbols");
    }

    struct Node {
        double weight;
        std::size_t min_symbol;
        int left;
        int right;
    };
    std::vector<Node> nodes;
    nodes.reserve(2 * n - 1);
    for (std::size_t i = 0; i < n; ++i) {
        nodes.push_back({d[i], i, -1, -1});
    }

    auto heavier = [&nodes](int a, int b) {
        if (nodes[a].weight != nodes[b].weight) {
            return nodes[a].weight > nodes[b].weight;
        }
        return nodes[a].min_symbol > nodes[b].min_symbol;
    };
    std::priority_queue<int, std::vector<int>, decltype(heavier)> queue(heavier);
    for (std::size_t i = 0; i < n; ++i) {
        queue.push(static_cast<int>(i));
    }
    while (queue.size() > 1) {
        const int a = queue.top();
        queue.pop();
        const int b = queue.top();
        queue.pop();
        nodes.push_back({nodes[a].weight + nodes[b].weight, std::min(nodes[a].min_symbol, nodes[b].min_symbol), a, b});
        queue.push(static_cast<int>(nodes.size() - 1));
    }

    HuffmanCode code;
    code.codewords.resize(n);
    // Iterative walk from the root; left edges emit '0', right edges '1'.
    std::vector<std::pair<int, std::string>> stack{{queue.top(), std::string()}};
    while (!stack.empty()) {
        auto [idx, prefix] = std::move(stack.back());
        stack.pop_back();
        const Node &node = nodes[idx];
        if (node.left < 0) {
            code.codewords[node.min_symbol] = prefix;
            continue;
        }
        stack.emplace_back(node.right, prefix + '1');
        stack.emplace_back(node.left, prefix + '0');
    }
    for (std::size_t i = 0; i < n; ++i) {
        code.average_length += d[i] * static_cast<double>(code.codewords[i].size());
    }
    return code;
}

}  // namespace qinfo::info
