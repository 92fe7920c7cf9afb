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

// Acceptance checks: one line per criterion, non-zero exit if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <numbers>
#include <set>
#include <string>
#include <vector>

#include <fmt/format.h>

#include "oracles.hpp"
#include "qinfo/algorithms.hpp"
#include "qinfo/circuit.hpp"
#include "qinfo/density.hpp"
#include "qinfo/gf2_codes.hpp"
#include "qinfo/info_theory.hpp"
#include "qinfo/protocols.hpp"
#include "qinfo/qec.hpp"

using namespace qinfo;

namespace {

constexpr double kDeg = std::numbers::pi / 180.0;

struct Check {
    bool ok = true;
    std::string detail;

    void require(bool cond, const std::string &what) {
        if (!cond) {
            ok = false;
            detail += (detail.empty() ? "" : "; ") + what;
        }
    }
    void note(const std::string &what) {
        if (ok) {
            detail += (detail.empty() ? "" : "; ") + what;
        }
    }
};

struct Criterion {
    int id;
    const char *name;
    double budget_ms;
    std::function<void(Check &)> body;
};

bool near(double a, double b, double tol) { return std::abs(a - b) <= tol; }

// ---------------------------------------------------------------------------

void entropy_numbers(Check &c) {
    const double fair = info::shannon_entropy(info::ProbDist::uniform(6));
    const double loaded = info::shannon_entropy(info::ProbDist({0.1, 0.1, 0.1, 0.1, 0.1, 0.5}));
    const double cap = info::bsc_capacity(0.25);
    c.require(near(fair, 2.585, 1e-3), fmt::format("fair die {}", fair));
    c.require(near(loaded, 2.161, 1e-3), fmt::format("loaded die {}", loaded));
    c.require(near(cap, 0.189, 1e-3), fmt::format("capacity {}", cap));
    c.note(fmt::format("fair={:.4f} loaded={:.4f} C(0.25)={:.4f}", fair, loaded, cap));
}

void huffman_table(Check &c) {
    const auto code = info::huffman_build(info::block_source(4, 0.25));
    c.require(near(code.average_length, 3.273, 1e-3), fmt::format("average {}", code.average_length));
    c.require(code.average_length >= 3.245, "below the entropy bound");
    c.require(code.is_prefix_free(), "not prefix free");
    c.note(fmt::format("L={:.6f} >= 4H(1/4)={:.4f}", code.average_length, 4 * info::binary_entropy(0.25)));
}

void hamming_code(Check &c) {
    const std::set<std::string> table = {"0000000", "1010101", "0110011", "1100110", "0001111", "1011010",
                                         "0111100", "1101001", "1111111", "0101010", "1001100", "0011001",
                                         "1110000", "0100101", "1000011", "0010110"};
    const auto h = gf2::hamming_7_4();
    std::set<std::string> words;
    for (uint64_t m = 0; m < 16; ++m) {
        words.insert(gf2::encode(h, gf2::BitWord(4, m)).to_string());
    }
    c.require(words == table, "codeword set differs from the table");
    int ok = 0;
    for (uint64_t m = 0; m < 16; ++m) {
        const gf2::BitWord msg(4, m);
        const gf2::BitWord cw = gf2::encode(h, msg);
        for (std::size_t i = 0; i < 7; ++i) {
            gf2::BitWord r = cw;
            r.flip(i);
            ok += gf2::decode(h, r).message == msg;
        }
    }
    c.require(ok == 112, fmt::format("{} of 112 single-error decodes", ok));
    c.note(fmt::format("16 words match, {}/112 decodes", ok));
}

void shannon_demo(Check &c) {
    const uint64_t trials = 100000;
    const auto rows = gf2::shannon_demo(3, 0.25, trials, 0);
    const std::map<std::string, double> expected = {
        {"repetition-1", 0.75},
        {"repetition-3", std::pow(0.75, 3) + 3 * 0.25 * 0.75 * 0.75},
        {"hamming-7-4", std::pow(0.75, 7) + 7 * 0.25 * std::pow(0.75, 6)},
    };
    for (const auto &r : rows) {
        const double e = expected.at(r.scheme);
        const double sigma = std::sqrt(e * (1 - e) / static_cast<double>(trials));
        c.require(near(r.success_prob, e, 3 * sigma), fmt::format("{} {} vs {}", r.scheme, r.success_prob, e));
        c.note(fmt::format("{}={:.4f} ({:+.1f} sigma)", r.scheme, r.success_prob, (r.success_prob - e) / sigma));
    }
    c.require(rows.size() == 3, "unexpected rows");
}

void bell_curve(Check &c) {
    const auto rows = protocols::bell_sweep(36);
    double worst = 0.0;
    double at120 = -1.0;
    for (const auto &r : rows) {
        const double s = std::sin((r.phi_a_deg - r.phi_b_deg) * kDeg / 2);
        worst = std::max(worst, std::abs(r.p_same - s * s));
        if (r.phi_a_deg == 120.0) {
            at120 = r.p_same;
        }
    }
    const double lhv = protocols::lhv_max_same_probability({0.0, 120 * kDeg, 240 * kDeg});
    c.require(rows.size() == 36, "sweep size");
    c.require(worst <= 1e-9, fmt::format("max deviation {}", worst));
    c.require(near(at120, 0.75, 1e-9), fmt::format("P(120) = {}", at120));
    c.require(near(lhv, 2.0 / 3.0, 1e-12), fmt::format("LHV max {}", lhv));
    c.note(fmt::format("max dev {:.1e}, P(120)={:.6f} vs LHV {:.6f}", worst, at120, lhv));
}

void protocol_suite(Check &c) {
    Rng srng(2024);
    double worst = 0.0;
    for (uint64_t seed = 0; seed < 100; ++seed) {
        const StateVector s = oracle::random_state(1, srng);
        Rng rng(seed);
        const auto r = protocols::teleport(s, rng);
        worst = std::max(worst, std::abs(1.0 - fidelity(DensityMatrix::pure(r.bob_state), DensityMatrix::pure(s))));
    }
    c.require(worst <= 1e-9, fmt::format("teleport fidelity deficit {}", worst));
    int dense_ok = 0;
    for (int v = 0; v < 4; ++v) {
        dense_ok += protocols::dense_code_roundtrip(v) == v;
    }
    c.require(dense_ok == 4, "dense coding");
    StateVector plus(1);
    apply_1q(plus, gates::H(), 0);
    const double clone = protocols::attempt_clone_via_xor(plus);
    c.require(near(clone, 0.5, 1e-12), fmt::format("clone fidelity {}", clone));
    c.note(fmt::format("teleport 1-F <= {:.1e}, dense 4/4, clone(|+>)={:.12f}", worst, clone));
}

void bb84(Check &c) {
    int clean = 0;
    for (uint64_t seed = 0; seed < 50; ++seed) {
        Rng rng(seed);
        const auto r = protocols::bb84(1000, false, 0.1, rng);
        clean += r.qber == 0.0 && r.final_key_bits == r.bob_final_key_bits;
    }
    c.require(clean == 50, fmt::format("{} of 50 clean runs", clean));
    Rng rng(0);
    const auto eve = protocols::bb84(10000, true, 0.1, rng);
    c.require(eve.qber >= 0.23 && eve.qber <= 0.27, fmt::format("qber with Eve {}", eve.qber));
    c.note(fmt::format("50/50 identical keys, qber(Eve)={:.4f}", eve.qber));
}

void shor(Check &c) {
    const auto inst = algorithms::PeriodInstance::make(7, 15);
    std::map<uint64_t, int> counts;
    std::vector<std::pair<uint64_t, uint64_t>> periods;  // (a, r)
    const int samples = 10000;
    for (int i = 0; i < samples; ++i) {
        Rng rng = derive_rng(15, static_cast<uint64_t>(i));
        const auto t = algorithms::shor_period(inst, rng);
        ++counts[t.measured_k];
        if (t.r) {
            periods.emplace_back(7, *t.r);
        }
    }
    const double sigma = std::sqrt(samples * 0.25 * 0.75);
    for (uint64_t k : {0U, 64U, 128U, 192U}) {
        c.require(std::abs(counts[k] - samples / 4.0) <= 3 * sigma, fmt::format("k={} count {}", k, counts[k]));
    }
    c.require(counts.size() == 4, fmt::format("{} distinct k values", counts.size()));

    int factored = 0;
    for (uint64_t seed = 0; seed < 1000; ++seed) {
        Rng rng(seed);
        const auto r = algorithms::shor_factor(15, rng, 20);
        factored += r.factor && (*r.factor == 3 || *r.factor == 5);
        for (std::size_t i = 0; i < r.transcripts.size(); ++i) {
            if (r.transcripts[i].r) {
                periods.emplace_back(r.transcripts[i].a, *r.transcripts[i].r);
            }
        }
    }
    c.require(factored >= 999, fmt::format("{} of 1000 factored", factored));
    int bad = 0;
    for (const auto &[a, r] : periods) {
        bad += algorithms::modexp(a, r, 15) != 1 || r != algorithms::classical_period(a, 15);
    }
    c.require(bad == 0, fmt::format("{} wrong periods", bad));
    c.note(fmt::format("k counts {}/{}/{}/{}, factored {}/1000, {} periods checked", counts[0], counts[64],
                       counts[128], counts[192], factored, periods.size()));
}

void grover(Check &c) {
    Rng rng(0);
    const auto four = algorithms::grover_search(algorithms::GroverInstance::make(2, 2), rng);
    const auto sixteen = algorithms::grover_search(algorithms::GroverInstance::make(4, 5), rng);
    c.require(near(four.success_probability, 1.0, 1e-12), fmt::format("N=4 {}", four.success_probability));
    c.require(sixteen.iterations == 3, "N=16 iteration count");
    c.require(near(sixteen.success_probability, 0.961, 1e-3), fmt::format("N=16 {}", sixteen.success_probability));
    double worst = 0.0;
    for (std::size_t n = 1; n <= 10; ++n) {
        const uint64_t N = uint64_t{1} << n;
        const std::size_t m = algorithms::grover_iterations(N);
        const auto amps = algorithms::grover_marked_amplitudes(algorithms::GroverInstance::make(n, N - 1), 2 * m);
        const double theta0 = std::asin(1.0 / std::sqrt(static_cast<double>(N)));
        for (std::size_t t = 0; t < amps.size(); ++t) {
            worst = std::max(worst, std::abs(amps[t] - std::sin((2.0 * t + 1.0) * theta0)));
        }
    }
    c.require(worst <= 1e-9, fmt::format("rotation deviation {}", worst));
    c.note(fmt::format("P(N=4)={:.12f}, P(N=16)={:.6f}, max dev {:.1e}", four.success_probability,
                       sixteen.success_probability, worst));
}

void qec_code(Check &c) {
    const auto &code = qec::steane();
    const double dot = std::abs(inner(code.logical_zero(), code.logical_one()));
    c.require(dot <= 1e-12, fmt::format("<0_E|1_E> = {}", dot));

    std::vector<PauliString> errors;
    for (std::size_t q = 0; q < 7; ++q) {
        for (Pauli p : {Pauli::X, Pauli::Y, Pauli::Z}) {
            PauliString e(7);
            e.set(q, p);
            errors.push_back(e);
        }
    }
    std::set<unsigned> syndromes;
    {
        StateVector s = qec::encode_logical(1.0, 0.0);
        syndromes.insert(qec::extract_syndrome(s).key());
        for (const auto &e : errors) {
            StateVector t = qec::encode_logical(1.0, 0.0);
            apply_pauli_string(t, e);
            syndromes.insert(qec::extract_syndrome(t).key());
        }
    }
    c.require(syndromes.size() == 22, fmt::format("{} distinct syndromes", syndromes.size()));

    Rng rng(7);
    double worst = 0.0;
    for (int i = 0; i < 200; ++i) {
        const StateVector logical = oracle::random_state(1, rng);
        const StateVector original = qec::encode_logical(logical[0], logical[1]);
        for (const auto &e : errors) {
            StateVector s = original;
            apply_pauli_string(s, e);
            const auto syn = qec::extract_syndrome(s, rng);
            qec::recover(s, syn);
            worst = std::max(worst, std::abs(1.0 - overlap(s, original)));
        }
    }
    c.require(worst <= 1e-9, fmt::format("recovery deficit {}", worst));

    std::vector<gf2::BitWord> zero_support;
    for (const char *w : {"0000000", "1010101", "0110011", "1100110", "0001111", "1011010", "0111100", "1101001"}) {
        zero_support.push_back(gf2::BitWord::parse(w));
    }
    c.require(qec::css_duality_check(zero_support).holds, "CSS duality");
    const auto b = qec::quantum_hamming_bound(5, 1);
    c.require(b.lhs == b.rhs && b.lhs == 16, "bound (5,1) not an equality");
    const double est = qec::uncorrectable_estimate(23, 3, 0.001);
    c.require(near(est, 2.8e-7, 0.05e-7), fmt::format("estimate {}", est));
    c.note(fmt::format("22 syndromes, 4200 recoveries 1-F <= {:.1e}, (23e-3)^4={:.3g}", worst, est));
}

void qec_scaling(Check &c) {
    const auto r = qec::noise_scaling_mc({0.003, 0.01, 0.03}, 100000, 0);
    c.require(near(r.slope, 2.0, 0.3), fmt::format("slope {}", r.slope));
    std::string rates;
    for (const auto &row : r.rows) {
        rates += fmt::format(" {}:{:.2e}", row.eps, row.rate);
    }
    c.note(fmt::format("slope={:.3f}, rates{}", r.slope, rates));
}

oracle::Matrix toffoli_matrix(std::size_t n, std::size_t c1, std::size_t c2, std::size_t t) {
    const std::size_t dim = std::size_t{1} << n;
    oracle::Matrix m(dim, std::vector<oracle::cplx>(dim, 0.0));
    for (std::size_t j = 0; j < dim; ++j) {
        const bool fire = ((j >> c1) & 1U) && ((j >> c2) & 1U);
        m[fire ? j ^ (std::size_t{1} << t) : j][j] = 1.0;
    }
    return m;
}

void oracle_equivalence(Check &c) {
    Rng rng(12);
    double gate_dev = 0.0;
    int gate_cases = 0;
    for (std::size_t n = 1; n <= 4; ++n) {
        for (std::size_t a = 0; a < n; ++a) {
            for (int rep = 0; rep < 5; ++rep) {
                const Gate1Q g = oracle::random_unitary(rng);
                StateVector s = oracle::random_state(n, rng);
                const auto e = oracle::apply(oracle::single_qubit(n, g, a), s.amplitudes());
                apply_1q(s, g, a);
                gate_dev = std::max(gate_dev, oracle::max_diff(s.amplitudes(), e));
                ++gate_cases;
            }
            for (std::size_t b = 0; b < n; ++b) {
                if (a == b) {
                    continue;
                }
                const Gate1Q g = oracle::random_unitary(rng);
                StateVector s = oracle::random_state(n, rng);
                const auto e = oracle::apply(oracle::controlled(n, g, a, b), s.amplitudes());
                apply_controlled(s, a, b, g);
                gate_dev = std::max(gate_dev, oracle::max_diff(s.amplitudes(), e));
                ++gate_cases;
                for (std::size_t t = 0; t < n; ++t) {
                    if (t == a || t == b) {
                        continue;
                    }
                    StateVector u = oracle::random_state(n, rng);
                    const auto f = oracle::apply(toffoli_matrix(n, a, b, t), u.amplitudes());
                    apply_toffoli(u, a, b, t);
                    gate_dev = std::max(gate_dev, oracle::max_diff(u.amplitudes(), f));
                    ++gate_cases;
                }
            }
        }
    }
    c.require(gate_dev <= 1e-9, fmt::format("gate deviation {}", gate_dev));

    double qft_dev = 0.0;
    for (std::size_t n = 1; n <= 8; ++n) {
        StateVector s = oracle::random_state(n, rng);
        const auto e = oracle::dft(s.amplitudes());
        qft(s, 0, n - 1);
        qft_dev = std::max(qft_dev, oracle::max_diff(s.amplitudes(), e));
    }
    c.require(qft_dev <= 1e-9, fmt::format("QFT deviation {}", qft_dev));

    // Exhaustive optimum over length assignments obeying Kraft.
    int huff_bad = 0;
    int huff_cases = 0;
    std::exponential_distribution<double> expo(1.0);
    for (std::size_t size = 2; size <= 5; ++size) {
        for (int rep = 0; rep < 50; ++rep) {
            std::vector<double> p(size);
            double total = 0.0;
            for (auto &v : p) {
                v = expo(rng);
                total += v;
            }
            for (auto &v : p) {
                v /= total;
            }
            std::vector<int> len(size, 1);
            double best = 1e300;
            while (true) {
                double kraft = 0.0, avg = 0.0;
                for (std::size_t i = 0; i < size; ++i) {
                    kraft += std::ldexp(1.0, -len[i]);
                    avg += p[i] * len[i];
                }
                if (kraft <= 1.0 + 1e-15) {
                    best = std::min(best, avg);
                }
                std::size_t i = 0;
                while (i < size && len[i] == static_cast<int>(size) - 1) {
                    len[i++] = 1;
                }
                if (i == size) {
                    break;
                }
                ++len[i];
            }
            const auto code = info::huffman_build(info::ProbDist(p));
            huff_bad += !near(code.average_length, best, 1e-12);
            ++huff_cases;
        }
    }
    c.require(huff_bad == 0, fmt::format("{} Huffman mismatches", huff_bad));
    c.note(fmt::format("{} gate cases dev {:.1e}, QFT n<=8 dev {:.1e}, Huffman {}/{} optimal", gate_cases, gate_dev,
                       qft_dev, huff_cases - huff_bad, huff_cases));
}

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {1, "entropy numbers", 1, entropy_numbers},
        {2, "huffman average length", 10, huffman_table},
        {3, "hamming code table and decoding", 10, hamming_code},
        {4, "shannon demo vs binomial", 5000, shannon_demo},
        {5, "bell curve vs LHV bound", 1000, bell_curve},
        {6, "teleport, dense coding, cloning", 1000, protocol_suite},
        {7, "bb84 qber and keys", 2000, bb84},
        {8, "shor on N=15", 30000, shor},
        {9, "grover success and rotation", 5000, grover},
        {10, "steane code", 10000, qec_code},
        {11, "steane noise scaling", 60000, qec_scaling},
        {12, "oracle equivalence", 30000, oracle_equivalence},
    };
    int failed = 0;
    for (const auto &cr : criteria) {
        Check c;
        const auto t0 = std::chrono::steady_clock::now();
        try {
            cr.body(c);
        } catch (const std::exception &e) {
            c.require(false, std::string("exception: ") + e.what());
        }
        const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
        if (ms > cr.budget_ms) {
            c.require(false, fmt::format("took {:.1f} ms, budget {} ms", ms, cr.budget_ms));
        }
        failed += !c.ok;
        std::printf("%s  %2d  %-34s %10.2f ms  %s\n", c.ok ? "PASS" : "FAIL", cr.id, cr.name, ms, c.detail.c_str());
        std::fflush(stdout);
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
