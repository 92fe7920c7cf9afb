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

#include <cmath>
#include <map>
#include <set>
#include <sstream>

#include <gtest/gtest.h>

#include "qinfo/info_theory.hpp"

using namespace qinfo::gf2;

namespace {

// Message -> codeword, as printed in the reference table.
const std::vector<std::pair<std::string, std::string>> kTable = {
    {"0000", "0000000"}, {"0001", "1010101"}, {"0010", "0110011"}, {"0011", "1100110"},
    {"0100", "0001111"}, {"0101", "1011010"}, {"0110", "0111100"}, {"0111", "1101001"},
    {"1000", "1111111"}, {"1001", "0101010"}, {"1010", "1001100"}, {"1011", "0011001"},
    {"1100", "1110000"}, {"1101", "0100101"}, {"1110", "1000011"}, {"1111", "0010110"},
};

// Independent encoder: XOR of generator rows chosen by message bits.
BitWord row_sum(const std::vector<BitWord> &rows, const BitWord &msg) {
    BitWord out(rows.front().size());
    for (std::size_t i = 0; i < msg.size(); ++i) {
        if (msg[i]) {
            out ^= rows[i];
        }
    }
    return out;
}

}  // namespace

TEST(BitWord, ParseAndPrint) {
    const BitWord w = BitWord::parse("1000000");
    EXPECT_TRUE(w[0]);
    EXPECT_FALSE(w[1]);
    EXPECT_EQ(w.to_string(), "1000000");
    EXPECT_EQ(w.weight(), 1);
    EXPECT_TRUE((w ^ w).is_zero());
    EXPECT_THROW(BitWord::parse("10a"), std::invalid_argument);
    EXPECT_THROW(BitWord(65), std::invalid_argument);
    EXPECT_THROW(BitWord::parse("101") ^ BitWord::parse("10"), std::invalid_argument);
}

TEST(BitWord, DotProduct) {
    EXPECT_TRUE(BitWord::parse("1100").dot(BitWord::parse("0100")));
    EXPECT_FALSE(BitWord::parse("1100").dot(BitWord::parse("1100")));
}

TEST(Gf2, RankAndNullSpace) {
    const LinearCode h = hamming_7_4();
    EXPECT_EQ(rank(h.generators()), 4U);
    EXPECT_EQ(rank({BitWord::parse("110"), BitWord::parse("011"), BitWord::parse("101")}), 2U);
    const auto ns = null_space(7, h.parity_checks());
    EXPECT_EQ(ns.size(), 4U);
    for (const auto &v : ns) {
        EXPECT_TRUE(h.is_codeword(v));
    }
    EXPECT_EQ(span(7, h.generators()).size(), 16U);
}

TEST(Hamming, GeneratorsAndChecks) {
    const LinearCode h = hamming_7_4();
    EXPECT_EQ(h.n(), 7U);
    EXPECT_EQ(h.k(), 4U);
    std::set<std::string> gens;
    for (const auto &g : h.generators()) {
        gens.insert(g.to_string());
    }
    EXPECT_EQ(gens, (std::set<std::string>{"1010101", "0110011", "0001111", "1111111"}));
    ASSERT_EQ(h.parity_checks().size(), 3U);
    EXPECT_EQ(h.parity_checks()[0].to_string(), "1010101");
    EXPECT_EQ(h.parity_checks()[1].to_string(), "0110011");
    EXPECT_EQ(h.parity_checks()[2].to_string(), "0001111");
    EXPECT_EQ(h.correctable_weight(), 1);
}

TEST(Hamming, CodewordSetMatchesTable) {
    const LinearCode h = hamming_7_4();
    std::set<std::string> words;
    for (const auto &w : h.codewords()) {
        words.insert(w.to_string());
    }
    std::set<std::string> expected;
    for (const auto &[m, c] : kTable) {
        expected.insert(c);
    }
    EXPECT_EQ(words, expected);
    EXPECT_TRUE(words.count("0000000"));
    EXPECT_TRUE(words.count("1010101"));
    EXPECT_TRUE(words.count("1101001"));
}

TEST(Hamming, EncodeMatchesTableRowByRow) {
    const LinearCode h = hamming_7_4();
    for (const auto &[m, c] : kTable) {
        EXPECT_EQ(encode(h, BitWord::parse(m)).to_string(), c) << m;
    }
}

TEST(Encode, AllOnesIsRowSum) {
    const LinearCode h = hamming_7_4();
    const BitWord ones = BitWord::parse("1111");
    EXPECT_EQ(encode(h, ones), row_sum(h.generators(), ones));
    EXPECT_TRUE(h.is_codeword(encode(h, ones)));
    EXPECT_THROW(encode(h, BitWord::parse("111")), std::invalid_argument);
}

TEST(Encode, Injective) {
    const LinearCode h = hamming_7_4();
    std::set<uint64_t> seen;
    for (uint64_t m = 0; m < 16; ++m) {
        seen.insert(encode(h, BitWord(4, m)).bits());
    }
    EXPECT_EQ(seen.size(), 16U);
}

TEST(Syndrome, CodewordsAreZeroAndSingleErrorsDistinct) {
    const LinearCode h = hamming_7_4();
    for (const auto &w : h.codewords()) {
        EXPECT_TRUE(syndrome(h, w).is_zero());
    }
    std::set<uint64_t> syndromes{0};
    for (std::size_t i = 0; i < 7; ++i) {
        BitWord e(7);
        e.flip(i);
        const BitWord s = syndrome(h, e);
        EXPECT_FALSE(s.is_zero());
        syndromes.insert(s.bits());
    }
    EXPECT_EQ(syndromes.size(), 8U);
    BitWord r = BitWord::parse("1010101");
    r.flip(0);
    BitWord e0(7);
    e0.flip(0);
    EXPECT_EQ(syndrome(h, r), syndrome(h, e0));
    EXPECT_EQ(h.coset_leader(syndrome(h, r)), e0);
    EXPECT_THROW(syndrome(h, BitWord(6)), std::invalid_argument);
}

TEST(Syndrome, DependsOnlyOnError) {
    const LinearCode h = hamming_7_4();
    const auto words = h.codewords();
    for (uint64_t e = 0; e < 128; ++e) {
        const BitWord err(7, e);
        const BitWord s = syndrome(h, words[0] ^ err);
        for (const auto &w : words) {
            EXPECT_EQ(syndrome(h, w ^ err), s);
        }
    }
}

TEST(Decode, CleanCodeword) {
    const auto r = decode(hamming_7_4(), BitWord::parse("0110011"));
    EXPECT_EQ(r.message.to_string(), "0010");
    EXPECT_TRUE(r.corrected);
    EXPECT_THROW(decode(hamming_7_4(), BitWord(8)), std::invalid_argument);
}

TEST(Decode, ExhaustiveSingleErrors) {
    const LinearCode h = hamming_7_4();
    for (uint64_t m = 0; m < 16; ++m) {
        const BitWord msg(4, m);
        const BitWord cw = encode(h, msg);
        for (std::size_t i = 0; i < 7; ++i) {
            BitWord r = cw;
            r.flip(i);
            const auto d = decode(h, r);
            EXPECT_EQ(d.message, msg);
            EXPECT_EQ(d.codeword, cw);
            EXPECT_TRUE(d.corrected);
        }
    }
}

TEST(Decode, WeightTwoMiscorrects) {
    const LinearCode h = hamming_7_4();
    const auto d = decode(h, BitWord::parse("1100000"));
    EXPECT_FALSE(d.codeword.is_zero());
    EXPECT_TRUE(h.is_codeword(d.codeword));
    EXPECT_NE(d.message.bits(), 0U);
}

TEST(Decode, RepetitionCodeMajority) {
    const LinearCode rep5 = repetition_code(5);
    EXPECT_EQ(decode(rep5, BitWord::parse("11010")).message.to_string(), "1");
    EXPECT_EQ(decode(rep5, BitWord::parse("10010")).message.to_string(), "0");
    // Weight-3 pattern on rep-5 is beyond t=2 relative to the sent zero word,
    // but it is still corrected towards the other codeword.
    EXPECT_TRUE(decode(rep5, BitWord::parse("11100")).corrected);
}

TEST(Decode, UncorrectableFlag) {
    // [4,1] repetition code: d = 4, t = 1; weight-2 syndromes have no leader
    // within the radius.
    const LinearCode rep4 = repetition_code(4);
    EXPECT_EQ(rep4.correctable_weight(), 1);
    const auto d = decode(rep4, BitWord::parse("1100"));
    EXPECT_FALSE(d.corrected);
    EXPECT_TRUE(decode(rep4, BitWord::parse("1000")).corrected);
}

TEST(MinDistance, Values) {
    EXPECT_EQ(min_distance(hamming_7_4()), 3);
    EXPECT_EQ(min_distance(repetition_code(3)), 3);
    const LinearCode full(3, {BitWord::parse("100"), BitWord::parse("010"), BitWord::parse("001")}, {});
    EXPECT_EQ(min_distance(full), 1);
}

TEST(MinDistance, TooLarge) {
    std::vector<BitWord> gens;
    for (std::size_t i = 0; i < 17; ++i) {
        BitWord g(17);
        g.set(i, true);
        gens.push_back(g);
    }
    const LinearCode big(17, gens, {});
    EXPECT_THROW(min_distance(big), std::invalid_argument);
}

TEST(LinearCode, Validation) {
    EXPECT_THROW(LinearCode(3, {BitWord::parse("110"), BitWord::parse("110")}, {}), std::invalid_argument);
    EXPECT_THROW(LinearCode(3, {BitWord::parse("110")}, {BitWord::parse("100")}), std::invalid_argument);
    EXPECT_THROW(LinearCode(3, {BitWord::parse("1100")}, {}), std::invalid_argument);
}

TEST(LinearCode, ClosureAndCosetLeaders) {
    const LinearCode h = hamming_7_4();
    const auto words = h.codewords();
    for (const auto &u : words) {
        for (const auto &v : words) {
            EXPECT_TRUE(h.is_codeword(u ^ v));
        }
    }
    // Every syndrome's leader has the minimum weight in its coset.
    for (uint64_t e = 0; e < 128; ++e) {
        const BitWord err(7, e);
        EXPECT_LE(h.coset_leader(syndrome(h, err)).weight(), err.weight());
    }
}

TEST(LinearCode, MessageOfInvertsEncode) {
    const LinearCode c = LinearCode::from_generators(
        6, {BitWord::parse("110100"), BitWord::parse("011010"), BitWord::parse("101001")});
    EXPECT_EQ(c.parity_checks().size(), 3U);
    for (uint64_t m = 0; m < 8; ++m) {
        const BitWord msg(3, m);
        EXPECT_EQ(c.message_of(encode(c, msg)), msg);
    }
    EXPECT_THROW(c.message_of(BitWord::parse("100000")), std::invalid_argument);
}

TEST(ShannonDemo, MatchesBinomialWithin3Sigma) {
    const uint64_t trials = 100000;
    const auto rows = shannon_demo(5, 0.25, trials, 7);
    ASSERT_EQ(rows.size(), 4U);
    const double p = 0.25, q = 0.75;
    const std::map<std::string, double> expected = {
        {"repetition-1", q},
        {"repetition-3", q * q * q + 3 * p * q * q},
        {"repetition-5", qinfo::info::binomial_pmf(5, 0, p) + qinfo::info::binomial_pmf(5, 1, p) +
                             qinfo::info::binomial_pmf(5, 2, p)},
        {"hamming-7-4", std::pow(q, 7) + 7 * p * std::pow(q, 6)},
    };
    for (const auto &r : rows) {
        ASSERT_TRUE(expected.count(r.scheme)) << r.scheme;
        const double e = expected.at(r.scheme);
        const double sigma = std::sqrt(e * (1 - e) / static_cast<double>(trials));
        EXPECT_NEAR(r.success_prob, e, 3 * sigma) << r.scheme;
        EXPECT_NEAR(r.success_prob, e, 0.01) << r.scheme;
        EXPECT_EQ(r.trials, trials);
        EXPECT_EQ(r.seed, 7U);
    }
    EXPECT_DOUBLE_EQ(rows[1].rate, 1.0 / 3.0);
    EXPECT_DOUBLE_EQ(rows[3].rate, 4.0 / 7.0);
    EXPECT_NEAR(expected.at("repetition-3"), 0.84375, 1e-12);
    EXPECT_NEAR(expected.at("hamming-7-4"), 0.445, 1e-3);
}

TEST(ShannonDemo, ReproducibleAndCsv) {
    const auto a = shannon_demo(3, 0.1, 2000, 42);
    const auto b = shannon_demo(3, 0.1, 2000, 42);
    std::ostringstream sa, sb;
    write_csv(sa, a);
    write_csv(sb, b);
    EXPECT_EQ(sa.str(), sb.str());
    EXPECT_EQ(sa.str().substr(0, sa.str().find('\n')), "scheme,rate,success_prob,trials,seed");
    EXPECT_THROW(shannon_demo(3, 0.1, 0, 1), std::invalid_argument);
}

TEST(ShannonDemo, NoiselessChannel) {
    for (const auto &r : shannon_demo(3, 0.0, 500, 3)) {
        EXPECT_DOUBLE_EQ(r.success_prob, 1.0);
    }
}
