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

#include "qinfo/gf2_codes.hpp"

#include <algorithm>
#include <bit>
#include <ostream>
#include <stdexcept>

#include <fmt/format.h>

namespace qinfo::gf2 {

namespace {

uint64_t low_mask(std::size_t n) { return n >= 64 ? ~uint64_t{0} : (uint64_t{1} << n) - 1; }

void require_length(const BitWord &w, std::size_t n, const char *what) {
    if (w.size() != n) {
        throw std::invalid_argument(fmt::format("{}: expected length {}, got {}", what, n, w.size()));
    }
}

// Calls visit(word) for every weight-w word of length n, position sets in
// lexicographic order. Stops early when visit returns true.
template <typename Visit>
bool for_each_weight(std::size_t n, std::size_t w, Visit &&visit) {
    if (w > n) {
        return false;
    }
    std::vector<std::size_t> pos(w);
    for (std::size_t i = 0; i < w; ++i) {
        pos[i] = i;
    }
    while (true) {
        BitWord word(n);
        for (std::size_t p : pos) {
            word.set(p, true);
        }
        if (visit(word)) {
            return true;
        }
        std::size_t i = w;
        while (i > 0 && pos[i - 1] == n - w + (i - 1)) {
            --i;
        }
        if (i == 0) {
            return false;
        }
        ++pos[i - 1];
        for (std::size_t j = i; j < w; ++j) {
            pos[j] = pos[j - 1] + 1;
        }
    }
}

}  // namespace

BitWord::BitWord(std::size_t length, uint64_t bits) : length_(length), bits_(bits) {
    if (length > kMaxBits) {
        throw std::invalid_argument("BitWord: at most 64 bits supported");
    }
    if ((bits & ~low_mask(length)) != 0) {
        throw std::invalid_argument("BitWord: bits set beyond length");
    }
}

BitWord BitWord::parse(std::string_view text) {
    BitWord w(text.size());
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (text[i] == '1') {
            w.set(i, true);
        } else if (text[i] != '0') {
            throw std::invalid_argument(fmt::format("BitWord::parse: bad character '{}'", text[i]));
        }
    }
    return w;
}

void BitWord::set(std::size_t i, bool value) {
    if (i >= length_) {
        throw std::out_of_range("BitWord::set: index out of range");
    }
    const uint64_t m = uint64_t{1} << i;
    bits_ = value ? (bits_ | m) : (bits_ & ~m);
}

void BitWord::flip(std::size_t i) {
    if (i >= length_) {
        throw std::out_of_range("BitWord::flip: index out of range");
    }
    bits_ ^= uint64_t{1} << i;
}

int BitWord::weight() const { return std::popcount(bits_); }

bool BitWord::dot(const BitWord &other) const {
    require_length(other, length_, "BitWord::dot");
    return (std::popcount(bits_ & other.bits_) & 1) != 0;
}

BitWord BitWord::operator^(const BitWord &other) const {
    BitWord r = *this;
    r ^= other;
    return r;
}

BitWord &BitWord::operator^=(const BitWord &other) {
    require_length(other, length_, "BitWord::operator^");
    bits_ ^= other.bits_;
    return *this;
}

std::string BitWord::to_string() const {
    std::string s(length_, '0');
    for (std::size_t i = 0; i < length_; ++i) {
        if ((*this)[i]) {
            s[i] = '1';
        }
    }
    return s;
}

std::ostream &operator<<(std::ostream &os, const BitWord &w) { return os << w.to_string(); }

std::size_t rank(const std::vector<BitWord> &rows) {
    std::vector<uint64_t> m;
    for (const auto &r : rows) {
        m.push_back(r.bits());
    }
    std::size_t r = 0;
    for (std::size_t col = 0; col < 64 && r < m.size(); ++col) {
        const uint64_t bit = uint64_t{1} << col;
        std::size_t piv = r;
        while (piv < m.size() && !(m[piv] & bit)) {
            ++piv;
        }
        if (piv == m.size()) {
            continue;
        }
        std::swap(m[r], m[piv]);
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i != r && (m[i] & bit)) {
                m[i] ^= m[r];
            }
        }
        ++r;
    }
    return r;
}

std::vector<BitWord> null_space(std::size_t n, const std::vector<BitWord> &rows) {
    // Reduced row echelon form, then one basis vector per free column.
    std::vector<uint64_t> m;
    for (const auto &row : rows) {
        require_length(row, n, "null_space");
        m.push_back(row.bits());
    }
    std::vector<std::size_t> pivot_cols;
    std::size_t r = 0;
    for (std::size_t col = 0; col < n && r < m.size(); ++col) {
        const uint64_t bit = uint64_t{1} << col;
        std::size_t piv = r;
        while (piv < m.size() && !(m[piv] & bit)) {
            ++piv;
        }
        if (piv == m.size()) {
            continue;
        }
        std::swap(m[r], m[piv]);
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i != r && (m[i] & bit)) {
                m[i] ^= m[r];
            }
        }
        pivot_cols.push_back(col);
        ++r;
    }
    std::vector<BitWord> basis;
    std::size_t next_pivot = 0;
    for (std::size_t col = 0; col < n; ++col) {
        if (next_pivot < pivot_cols.size() && pivot_cols[next_pivot] == col) {
            ++next_pivot;
            continue;
        }
        BitWord v(n);
        v.set(col, true);
        for (std::size_t i = 0; i < pivot_cols.size(); ++i) {
            if ((m[i] >> col) & 1U) {
                v.set(pivot_cols[i], true);
            }
        }
        basis.push_back(v);
    }
    return basis;
}

std::vector<BitWord> span(std::size_t n, const std::vector<BitWord> &rows) {
    if (rows.size() > 24) {
        throw std::invalid_argument("span: too many rows to enumerate");
    }
    std::vector<BitWord> out;
    const uint64_t count = uint64_t{1} << rows.size();
    out.reserve(count);
    for (uint64_t c = 0; c < count; ++c) {
        BitWord w(n);
        for (std::size_t j = 0; j < rows.size(); ++j) {
            if ((c >> j) & 1U) {
                w ^= rows[j];
            }
        }
        out.push_back(w);
    }
    return out;
}

LinearCode::LinearCode(std::size_t n, std::vector<BitWord> generators, std::vector<BitWord> parity_checks)
    : n_(n), generators_(std::move(generators)), parity_checks_(std::move(parity_checks)) {
    if (n_ == 0 || n_ > 32) {
        throw std::invalid_argument("LinearCode: block length must be in [1,32]");
    }
    for (const auto &g : generators_) {
        require_length(g, n_, "LinearCode generator");
    }
    for (const auto &h : parity_checks_) {
        require_length(h, n_, "LinearCode parity check");
    }
    if (rank(generators_) != generators_.size()) {
        throw std::invalid_argument("LinearCode: generators are linearly dependent");
    }
    if (rank(parity_checks_) != parity_checks_.size() || parity_checks_.size() + generators_.size() != n_) {
        throw std::invalid_argument("LinearCode: parity checks must be n-k independent rows");
    }
    for (const auto &g : generators_) {
        for (const auto &h : parity_checks_) {
            if (g.dot(h)) {
                throw std::invalid_argument("LinearCode: generator " + g.to_string() + " violates parity check " +
                                            h.to_string());
            }
        }
    }

    // Minimum distance via the lightest nonzero word with zero syndrome.
    int d = static_cast<int>(n_) + 1;
    for (std::size_t w = 1; w <= n_ && d > static_cast<int>(n_); ++w) {
        if (for_each_weight(n_, w, [&](const BitWord &e) { return syndrome(*this, e).is_zero(); })) {
            d = static_cast<int>(w);
        }
    }
    t_ = (d - 1) / 2;

    // Coset leaders by increasing weight; the first hit per syndrome wins.
    const std::size_t n_syndromes = std::size_t{1} << parity_checks_.size();
    leaders_.assign(n_syndromes, BitWord());
    std::vector<char> filled(n_syndromes, 0);
    std::size_t remaining = n_syndromes;
    for (std::size_t w = 0; w <= n_ && remaining > 0; ++w) {
        for_each_weight(n_, w, [&](const BitWord &e) {
            const uint64_t s = syndrome(*this, e).bits();
            if (!filled[s]) {
                filled[s] = 1;
                leaders_[s] = e;
                --remaining;
            }
            return remaining == 0;
        });
    }

    // Row-reduce the generators, tracking which originals make each row.
    reduced_ = generators_;
    for (std::size_t i = 0; i < reduced_.size(); ++i) {
        BitWord m(k());
        m.set(i, true);
        reduced_to_message_.push_back(m);
    }
    std::size_t r = 0;
    for (std::size_t col = 0; col < n_ && r < reduced_.size(); ++col) {
        std::size_t piv = r;
        while (piv < reduced_.size() && !reduced_[piv][col]) {
            ++piv;
        }
        if (piv == reduced_.size()) {
            continue;
        }
        std::swap(reduced_[r], reduced_[piv]);
        std::swap(reduced_to_message_[r], reduced_to_message_[piv]);
        for (std::size_t i = 0; i < reduced_.size(); ++i) {
            if (i != r && reduced_[i][col]) {
                reduced_[i] ^= reduced_[r];
                reduced_to_message_[i] ^= reduced_to_message_[r];
            }
        }
        pivots_.push_back(col);
        ++r;
    }
}

LinearCode LinearCode::from_generators(std::size_t n, std::vector<BitWord> generators) {
    auto checks = null_space(n, generators);
    return LinearCode(n, std::move(generators), std::move(checks));
}

std::optional<BitWord> LinearCode::correctable_leader(const BitWord &syn) const {
    const BitWord &leader = coset_leader(syn);
    if (leader.weight() <= t_) {
        return leader;
    }
    return std::nullopt;
}

const BitWord &LinearCode::coset_leader(const BitWord &syn) const {
    require_length(syn, parity_checks_.size(), "LinearCode::coset_leader");
    return leaders_[syn.bits()];
}

bool LinearCode::is_codeword(const BitWord &word) const { return syndrome(*this, word).is_zero(); }

BitWord LinearCode::message_of(const BitWord &codeword) const {
    require_length(codeword, n_, "LinearCode::message_of");
    BitWord msg(k());
    BitWord rebuilt(n_);
    for (std::size_t i = 0; i < pivots_.size(); ++i) {
        if (codeword[pivots_[i]]) {
            msg ^= reduced_to_message_[i];
            rebuilt ^= reduced_[i];
        }
    }
    if (rebuilt != codeword) {
        throw std::invalid_argument("LinearCode::message_of: " + codeword.to_string() + " is not a codeword");
    }
    return msg;
}

std::vector<BitWord> LinearCode::codewords() const { return span(n_, generators_); }

LinearCode hamming_7_4() {
    return LinearCode(7,
                      {BitWord::parse("1111111"), BitWord::parse("0001111"), BitWord::parse("0110011"),
                       BitWord::parse("1010101")},
                      {BitWord::parse("1010101"), BitWord::parse("0110011"), BitWord::parse("0001111")});
}

LinearCode repetition_code(std::size_t r) {
    if (r == 0) {
        throw std::invalid_argument("repetition_code: r must be positive");
    }
    return LinearCode::from_generators(r, {BitWord(r, low_mask(r))});
}

BitWord encode(const LinearCode &c, const BitWord &message) {
    require_length(message, c.k(), "encode");
    BitWord out(c.n());
    for (std::size_t j = 0; j < c.k(); ++j) {
        if (message[j]) {
            out ^= c.generators()[j];
        }
    }
    return out;
}

BitWord syndrome(const LinearCode &c, const BitWord &received) {
    require_length(received, c.n(), "syndrome");
    BitWord s(c.parity_checks().size());
    for (std::size_t i = 0; i < c.parity_checks().size(); ++i) {
        s.set(i, c.parity_checks()[i].dot(received));
    }
    return s;
}

DecodeResult decode(const LinearCode &c, const BitWord &received) {
    require_length(received, c.n(), "decode");
    const BitWord s = syndrome(c, received);
    const BitWord &leader = c.coset_leader(s);
    DecodeResult out;
    out.corrected = leader.weight() <= c.correctable_weight();
    out.codeword = received ^ leader;
    out.message = c.message_of(out.codeword);
    return out;
}

int min_distance(const LinearCode &c) {
    if (c.k() > 16) {
        throw std::invalid_argument("min_distance: k > 16 is too large for exhaustive search");
    }
    if (c.k() == 0) {
        throw std::invalid_argument("min_distance: code has no nonzero codewords");
    }
    int best = static_cast<int>(c.n());
    for (const auto &w : c.codewords()) {
        if (!w.is_zero()) {
            best = std::min(best, w.weight());
        }
    }
    return best;
}

BitWord bsc_transmit(const BitWord &word, double p, Rng &rng) {
    BitWord out = word;
    for (std::size_t i = 0; i < word.size(); ++i) {
        if (uniform01(rng) < p) {
            out.flip(i);
        }
    }
    return out;
}

std::vector<ShannonDemoRow> shannon_demo(std::size_t n_rep, double p, uint64_t trials, uint64_t seed) {
    if (trials == 0) {
        throw std::invalid_argument("shannon_demo: trials must be >= 1");
    }
    if (n_rep == 0 || n_rep > 31) {
        throw std::invalid_argument("shannon_demo: n_rep must be in [1,31]");
    }
    if (!(p >= 0.0 && p <= 1.0)) {
        throw std::invalid_argument("shannon_demo: p out of [0,1]");
    }
    std::vector<ShannonDemoRow> rows;
    uint64_t stream = 0;
    for (std::size_t r = 1; r <= n_rep; r += 2) {
        const LinearCode code = repetition_code(r);
        Rng rng = derive_rng(seed, stream++);
        uint64_t ok = 0;
        for (uint64_t t = 0; t < trials; ++t) {
            BitWord msg(1, random_bit(rng) ? 1 : 0);
            const BitWord received = bsc_transmit(encode(code, msg), p, rng);
            // Majority vote; r is odd so there are no ties.
            const bool bit = 2 * received.weight() > static_cast<int>(r);
            ok += (bit == msg[0]);
        }
        rows.push_back({fmt::format("repetition-{}", r), 1.0 / static_cast<double>(r),
                        static_cast<double>(ok) / static_cast<double>(trials), trials, seed});
    }

    const LinearCode hamming = hamming_7_4();
    Rng rng = derive_rng(seed, stream++);
    uint64_t ok = 0;
    for (uint64_t t = 0; t < trials; ++t) {
        const BitWord msg(4, uniform_below(rng, 16));
        const BitWord received = bsc_transmit(encode(hamming, msg), p, rng);
        ok += (decode(hamming, received).message == msg);
    }
    rows.push_back({"hamming-7-4", 4.0 / 7.0, static_cast<double>(ok) / static_cast<double>(trials), trials, seed});
    return rows;
}

void write_csv(std::ostream &os, const std::vector<ShannonDemoRow> &rows) {
    os << "scheme,rate,success_prob,trials,seed\n";
    for (const auto &r : rows) {
        os << fmt::format("{},{},{},{},{}\n", r.scheme, r.rate, r.success_prob, r.trials, r.seed);
    }
}

}  // namespace qinfo::gf2
