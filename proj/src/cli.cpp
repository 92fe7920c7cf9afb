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

#include "qinfo/cli.hpp"

#include <cmath>
#include <fstream>
#include <map>
#include <numbers>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <nlohmann/json.hpp>

#include "qinfo/algorithms.hpp"
#include "qinfo/gf2_codes.hpp"
#include "qinfo/info_theory.hpp"
#include "qinfo/protocols.hpp"
#include "qinfo/qec.hpp"
#include "qinfo/rng.hpp"
#include "qinfo/state.hpp"

namespace qinfo::cli {

namespace {

using Json = nlohmann::ordered_json;

constexpr int kSchemaVersion = 1;
constexpr double kDeg = std::numbers::pi / 180.0;

// Runtime failure that still produced output (e.g. shor ran out of rounds).
struct Failure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A command fills `doc` with scalar fields and optionally a table. JSON
// output is the doc plus the table as "rows"; CSV output is the table, or
// field,value pairs when there is no table.
struct Output {
    Json doc = Json::object();
    std::vector<std::string> columns;
    std::vector<std::vector<Json>> rows;
    bool json_default = false;
};

std::string csv_cell(const Json &v) {
    std::string s;
    if (v.is_string()) {
        s = v.get<std::string>();
    } else if (v.is_number_float()) {
        s = fmt::format("{}", v.get<double>());
    } else if (v.is_null()) {
        s = "";
    } else {
        s = v.dump();
    }
    if (s.find_first_of(",\"\n") != std::string::npos) {
        std::string quoted = "\"";
        for (char c : s) {
            quoted += c;
            if (c == '"') {
                quoted += '"';
            }
        }
        return quoted + "\"";
    }
    return s;
}

void render(const Output &o, const std::string &command, bool json, std::ostream &os) {
    if (json) {
        Json doc;
        doc["schema_version"] = kSchemaVersion;
        doc["command"] = command;
        for (const auto &[k, v] : o.doc.items()) {
            doc[k] = v;
        }
        if (!o.columns.empty()) {
            Json rows = Json::array();
            for (const auto &r : o.rows) {
                Json obj;
                for (std::size_t i = 0; i < o.columns.size(); ++i) {
                    obj[o.columns[i]] = r[i];
                }
                rows.push_back(std::move(obj));
            }
            doc["rows"] = std::move(rows);
        }
        os << doc.dump(2) << '\n';
        return;
    }
    if (!o.columns.empty()) {
        for (std::size_t i = 0; i < o.columns.size(); ++i) {
            os << (i ? "," : "") << o.columns[i];
        }
        os << '\n';
        for (const auto &r : o.rows) {
            for (std::size_t i = 0; i < r.size(); ++i) {
                os << (i ? "," : "") << csv_cell(r[i]);
            }
            os << '\n';
        }
        return;
    }
    os << "field,value\n";
    for (const auto &[k, v] : o.doc.items()) {
        os << k << ',' << csv_cell(v) << '\n';
    }
}

std::vector<double> parse_list(const std::string &text, const char *what) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        double v = 0.0;
        try {
            v = std::stod(item, &used);
        } catch (const std::exception &) {
            used = 0;
        }
        if (used == 0 || item.find_first_not_of(" \t", used) != std::string::npos) {
            throw CLI::ValidationError(what, "not a comma-separated list of numbers: '" + text + "'");
        }
        out.push_back(v);
    }
    if (out.empty()) {
        throw CLI::ValidationError(what, "empty list");
    }
    return out;
}

Json state_json(const StateVector &s) { return Json::parse(dump_state_json(s)); }

void write_state(const std::string &path, const StateVector &s) {
    std::ofstream f(path);
    if (!f) {
        throw std::runtime_error("cannot open '" + path + "' for writing");
    }
    f << dump_state_json(s) << '\n';
}

// cos(theta/2)|0> + e^{i phi} sin(theta/2)|1>, angles in degrees.
StateVector bloch_state(double theta_deg, double phi_deg) {
    const double t = theta_deg * kDeg / 2.0;
    return StateVector::normalized({std::cos(t), std::polar(std::sin(t), phi_deg * kDeg)});
}

struct Options {
    // entropy
    std::string probs;
    double p = 0.25;
    int typical_n = 20;
    double typical_eps = 0.1;
    // huffman
    int bits = 4;
    // hamming
    std::string decode_word;
    // shannon-demo
    std::size_t n_rep = 5;
    uint64_t trials = 100000;
    // bell / lhv
    std::size_t steps = 36;
    std::string angles = "0,120,240";
    // clone / teleport
    std::optional<double> theta;
    double phi = 0.0;
    std::string dump_state;
    // bb84
    uint64_t n = 10000;
    bool eve = false;
    double disclose = 0.1;
    // shor
    uint64_t shor_n = 15;
    std::size_t max_rounds = 20;
    std::optional<uint64_t> base;
    // grover
    std::size_t qubits = 4;
    std::optional<uint64_t> marked;
    std::optional<std::size_t> iterations;
    // qec-scaling
    std::string eps_list = "0.003,0.01,0.03";
    uint64_t qec_trials = 100000;
    // bound
    std::size_t bound_n = 7;
    std::size_t bound_k = 1;
    std::size_t bound_t = 1;
    double bound_eps = 0.001;
};

Output cmd_entropy(const Options &o) {
    Output out;
    out.columns = {"quantity", "value"};
    auto row = [&](const std::string &name, double v) { out.rows.push_back({name, v}); };
    if (!o.probs.empty()) {
        const info::ProbDist d(parse_list(o.probs, "--probs"));
        row("shannon_entropy", info::shannon_entropy(d));
        return out;
    }
    row("fair_die", info::shannon_entropy(info::ProbDist::uniform(6)));
    row("loaded_die", info::shannon_entropy(info::ProbDist({0.1, 0.1, 0.1, 0.1, 0.1, 0.5})));
    row("binary_entropy", info::binary_entropy(o.p));
    row("bsc_capacity", info::bsc_capacity(o.p));
    row("bsc_mutual_information", info::mutual_information(info::bsc_joint(o.p)));
    row("bsc_equivocation", info::conditional_entropy(info::bsc_joint(o.p).transposed()));
    const auto ts = info::typical_set_stats(o.typical_n, o.p, o.typical_eps);
    row("typical_set_size", ts.size);
    row("typical_set_log2_size_per_symbol", ts.log2_size / o.typical_n);
    row("typical_set_mass", ts.mass);
    return out;
}

Output cmd_huffman(const Options &o) {
    const info::ProbDist src = info::block_source(o.bits, o.p);
    const info::HuffmanCode code = info::huffman_build(src);
    Output out;
    out.columns = {"message", "probability", "codeword", "length"};
    for (std::size_t i = 0; i < src.size(); ++i) {
        std::string msg(static_cast<std::size_t>(o.bits), '0');
        for (int b = 0; b < o.bits; ++b) {
            if ((i >> (o.bits - 1 - b)) & 1U) {
                msg[static_cast<std::size_t>(b)] = '1';
            }
        }
        out.rows.push_back({msg, src[i], code.codewords[i], code.codewords[i].size()});
    }
    out.doc["average_length"] = code.average_length;
    out.doc["entropy_bound"] = info::shannon_entropy(src);
    out.doc["kraft_sum"] = code.kraft_sum();
    return out;
}

Output cmd_hamming(const Options &o) {
    const gf2::LinearCode h = gf2::hamming_7_4();
    Output out;
    if (!o.decode_word.empty()) {
        const gf2::BitWord r = gf2::BitWord::parse(o.decode_word);
        const auto d = gf2::decode(h, r);
        out.columns = {"received", "syndrome", "message", "codeword", "corrected"};
        out.rows.push_back({r.to_string(), gf2::syndrome(h, r).to_string(), d.message.to_string(),
                            d.codeword.to_string(), d.corrected});
        return out;
    }
    out.columns = {"message", "codeword"};
    for (uint64_t m = 0; m < 16; ++m) {
        // Message bit 0 is the leftmost character.
        gf2::BitWord msg(4);
        for (std::size_t b = 0; b < 4; ++b) {
            msg.set(b, (m >> (3 - b)) & 1U);
        }
        out.rows.push_back({msg.to_string(), gf2::encode(h, msg).to_string()});
    }
    out.doc["n"] = h.n();
    out.doc["k"] = h.k();
    out.doc["d"] = gf2::min_distance(h);
    return out;
}

Output cmd_shannon(const Options &o, uint64_t seed) {
    Output out;
    out.columns = {"scheme", "rate", "success_prob", "trials", "seed"};
    for (const auto &r : gf2::shannon_demo(o.n_rep, o.p, o.trials, seed)) {
        out.rows.push_back({r.scheme, r.rate, r.success_prob, r.trials, r.seed});
    }
    return out;
}

Output cmd_bell(const Options &o) {
    Output out;
    out.columns = {"phi_a", "phi_b", "p_same"};
    for (const auto &r : protocols::bell_sweep(o.steps)) {
        out.rows.push_back({r.phi_a_deg, r.phi_b_deg, r.p_same});
    }
    return out;
}

Output cmd_lhv(const Options &o) {
    std::vector<double> rad;
    for (double a : parse_list(o.angles, "--angles")) {
        rad.push_back(a * kDeg);
    }
    Output out;
    out.columns = {"quantity", "value"};
    out.rows.push_back({"lhv_max_same_probability", protocols::lhv_max_same_probability(rad)});
    out.rows.push_back({"quantum_average_same_probability", protocols::quantum_average_same_probability(rad)});
    return out;
}

Output cmd_ghz() {
    const auto r = protocols::ghz_check();
    Output out;
    out.json_default = true;
    const char *names[4] = {"XXX", "XYY", "YXY", "YYX"};
    for (int i = 0; i < 4; ++i) {
        out.doc[std::string("expectation_") + names[i]] = r.expectations[static_cast<std::size_t>(i)];
    }
    out.doc["product"] = r.product;
    out.doc["lhv_assignments"] = r.lhv_assignments;
    out.doc["lhv_product"] = r.lhv_product;
    out.doc["lhv_product_constant"] = r.lhv_product_constant;
    return out;
}

Output cmd_clone(const Options &o) {
    Output out;
    out.columns = {"input", "fidelity"};
    if (o.theta) {
        out.rows.push_back({fmt::format("theta={},phi={}", *o.theta, o.phi),
                            protocols::attempt_clone_via_xor(bloch_state(*o.theta, o.phi))});
        return out;
    }
    out.rows.push_back({"zero", protocols::attempt_clone_via_xor(StateVector(1, 0))});
    out.rows.push_back({"one", protocols::attempt_clone_via_xor(StateVector(1, 1))});
    out.rows.push_back({"plus", protocols::attempt_clone_via_xor(bloch_state(90.0, 0.0))});
    return out;
}

Output cmd_densecode(Rng &rng) {
    Output out;
    out.columns = {"input", "operation", "decoded"};
    const char *ops[4] = {"I", "X", "Y", "Z"};
    for (int v = 0; v < 4; ++v) {
        out.rows.push_back({v, ops[v], protocols::dense_code_roundtrip(v, rng)});
    }
    return out;
}

Output cmd_teleport(const Options &o, Rng &rng) {
    const StateVector s = bloch_state(o.theta.value_or(60.0), o.phi);
    const auto r = protocols::teleport(s, rng);
    Output out;
    out.json_default = true;
    out.doc["input_state"] = state_json(s);
    out.doc["classical_bits"] = std::to_string(r.classical_bits[0]) + std::to_string(r.classical_bits[1]);
    out.doc["bob_state"] = state_json(r.bob_state);
    out.doc["fidelity"] = overlap(r.bob_state, s);
    if (!o.dump_state.empty()) {
        write_state(o.dump_state, r.bob_state);
    }
    return out;
}

Output cmd_bb84(const Options &o, Rng &rng) {
    const auto r = protocols::bb84(o.n, o.eve, o.disclose, rng);
    Output out;
    out.json_default = true;
    const nlohmann::json report = protocols::to_json(r);
    for (const auto &[k, v] : report.items()) {
        out.doc[k] = v;
    }
    return out;
}

Output cmd_shor(const Options &o, Rng &rng) {
    const auto r = algorithms::shor_factor(o.shor_n, rng, o.max_rounds, o.base);
    Output out;
    out.json_default = true;
    out.doc["N"] = o.shor_n;
    out.doc["rounds"] = r.rounds;
    out.doc["classical_reason"] = r.classical_reason;
    out.doc["bases"] = r.bases;
    Json transcripts = Json::array();
    for (const auto &t : r.transcripts) {
        transcripts.push_back(Json::parse(algorithms::to_json(t).dump()));
    }
    out.doc["transcripts"] = std::move(transcripts);
    if (r.factor) {
        out.doc["factor"] = *r.factor;
        out.doc["cofactor"] = o.shor_n / *r.factor;
        out.doc["verified"] = o.shor_n % *r.factor == 0 && *r.factor > 1 && *r.factor < o.shor_n;
    } else {
        out.doc["factor"] = nullptr;
        out.doc["verified"] = false;
    }
    return out;
}

Output cmd_grover(const Options &o, Rng &rng) {
    const auto inst = algorithms::GroverInstance::make(o.qubits, o.marked.value_or(0));
    const auto r = algorithms::grover_search(inst, rng, o.iterations);
    Output out;
    out.json_default = true;
    out.doc["n_qubits"] = inst.n_qubits;
    out.doc["N"] = inst.N;
    out.doc["marked"] = inst.marked;
    out.doc["iterations"] = r.iterations;
    out.doc["success_probability"] = r.success_probability;
    out.doc["found"] = r.found;
    out.doc["success"] = r.found == inst.marked;
    if (!o.dump_state.empty()) {
        write_state(o.dump_state, r.final_state);
    }
    return out;
}

Output cmd_qec_syndromes() {
    Output out;
    out.columns = {"error", "syndrome_x", "syndrome_z"};
    for (const auto &r : qec::syndrome_table()) {
        out.rows.push_back({r.error, r.syndrome_x, r.syndrome_z});
    }
    return out;
}

Output cmd_qec_scaling(const Options &o, uint64_t seed) {
    const auto r = qec::noise_scaling_mc(parse_list(o.eps_list, "--eps"), o.qec_trials, seed);
    Output out;
    out.columns = {"eps", "failures", "trials", "rate"};
    for (const auto &row : r.rows) {
        out.rows.push_back({row.eps, row.failures, row.trials, row.rate});
    }
    out.doc["slope"] = std::isnan(r.slope) ? Json(nullptr) : Json(r.slope);
    out.doc["seed"] = seed;
    return out;
}

Output cmd_bound(const Options &o) {
    const auto b = qec::quantum_hamming_bound(o.bound_n, o.bound_k);
    Output out;
    out.json_default = true;
    out.doc["n"] = o.bound_n;
    out.doc["k"] = o.bound_k;
    out.doc["lhs"] = b.lhs;
    out.doc["rhs"] = b.rhs;
    out.doc["satisfied"] = b.satisfied;
    out.doc["equality"] = b.lhs == b.rhs;
    out.doc["t"] = o.bound_t;
    out.doc["eps"] = o.bound_eps;
    out.doc["uncorrectable_estimate"] = qec::uncorrectable_estimate(o.bound_n, o.bound_t, o.bound_eps);
    return out;
}

}  // namespace

int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
    CLI::App app{"qinfo: classical and quantum information demos"};
    app.require_subcommand(1);
    app.fallthrough();

    uint64_t seed = 0;
    std::string out_path;
    std::string format;
    app.add_option("--seed", seed, "RNG seed")->capture_default_str();
    app.add_option("--out", out_path, "Write output to this file instead of stdout");
    app.add_option("--format", format, "Output format (default depends on the command)")
        ->check(CLI::IsMember({"csv", "json"}));

    Options o;
    std::map<std::string, CLI::App *> subs;
    auto sub = [&](const char *name, const char *desc) {
        CLI::App *s = app.add_subcommand(name, desc);
        subs[name] = s;
        return s;
    };

    auto *entropy = sub("entropy", "Entropy, BSC capacity and typical-set numbers");
    entropy->add_option("--probs", o.probs, "Comma-separated distribution to evaluate instead");
    entropy->add_option("--p", o.p, "Bit probability for the binary quantities")->capture_default_str();
    entropy->add_option("--typical-n", o.typical_n, "Sequence length for the typical set")->capture_default_str();
    entropy->add_option("--typical-eps", o.typical_eps, "Typical-set tolerance")->capture_default_str();

    auto *huffman = sub("huffman", "Huffman code for a block source of biased bits");
    huffman->add_option("--bits", o.bits, "Bits per message")->capture_default_str()->check(CLI::Range(1, 16));
    huffman->add_option("--p-one", o.p, "Probability of a 1 bit")->capture_default_str();

    auto *hamming = sub("hamming", "The [7,4,3] Hamming code table, or decode one word");
    hamming->add_option("--decode", o.decode_word, "Received 7-bit word to decode");

    auto *shannon = sub("shannon-demo", "Monte Carlo of repetition and Hamming codes on a BSC");
    shannon->add_option("--n-rep", o.n_rep, "Largest repetition factor")->capture_default_str();
    shannon->add_option("--p", o.p, "Channel flip probability")->capture_default_str();
    shannon->add_option("--trials", o.trials, "Trials per scheme")->capture_default_str();

    auto *bell = sub("bell", "Singlet correlation sweep, phi_a over [0,180) degrees");
    bell->add_option("--steps", o.steps, "Number of sweep points")->capture_default_str();

    auto *lhv = sub("lhv", "Local hidden variable bound vs quantum average");
    lhv->add_option("--angles", o.angles, "Comma-separated axis angles in degrees")->capture_default_str();

    sub("ghz", "GHZ expectation products vs local assignments");

    auto *clone = sub("clone", "Attempt to copy a qubit with XOR");
    clone->add_option("--theta", o.theta, "Polar angle of the input state, degrees");
    clone->add_option("--phi", o.phi, "Azimuth of the input state, degrees");

    sub("densecode", "Send two bits with one qubit of an EPR pair");

    auto *teleport = sub("teleport", "Teleport cos(theta/2)|0> + e^{i phi} sin(theta/2)|1>");
    teleport->add_option("--theta", o.theta, "Polar angle in degrees (default 60)");
    teleport->add_option("--phi", o.phi, "Azimuth in degrees")->capture_default_str();
    teleport->add_option("--dump-state", o.dump_state, "Write Bob's state as JSON [re, im] pairs to this file");

    auto *bb84 = sub("bb84", "BB84 key distribution");
    bb84->add_option("--n", o.n, "Qubits sent")->capture_default_str();
    bb84->add_flag("--eve", o.eve, "Insert an intercept-resend eavesdropper");
    bb84->add_option("--disclose", o.disclose, "Fraction of sifted bits disclosed for checking")
        ->capture_default_str();

    auto *shor = sub("shor", "Factor N by quantum period finding");
    shor->add_option("--N", o.shor_n, "Number to factor")->capture_default_str();
    shor->add_option("--max-rounds", o.max_rounds, "Attempts before giving up")->capture_default_str();
    shor->add_option("--a", o.base, "Fix the base instead of drawing it at random");

    auto *grover = sub("grover", "Grover search for one marked item");
    grover->add_option("--qubits", o.qubits, "Register size")->capture_default_str();
    grover->add_option("--marked", o.marked, "Marked index (default 0)");
    grover->add_option("--iterations", o.iterations, "Override the iteration count");
    grover->add_option("--dump-state", o.dump_state, "Write the final state as JSON [re, im] pairs to this file");

    sub("qec-syndromes", "Syndromes of the 22 correctable Steane errors");

    auto *scaling = sub("qec-scaling", "Steane logical failure rate vs physical error rate");
    scaling->add_option("--eps", o.eps_list, "Comma-separated error probabilities")->capture_default_str();
    scaling->add_option("--trials", o.qec_trials, "Trials per point (>= 1000)")->capture_default_str();

    auto *bound = sub("bound", "Quantum Hamming bound and (n eps)^(t+1) estimate");
    bound->add_option("--n", o.bound_n, "Block length")->capture_default_str();
    bound->add_option("--k", o.bound_k, "Logical qubits")->capture_default_str();
    bound->add_option("--t", o.bound_t, "Correctable errors")->capture_default_str();
    bound->add_option("--eps", o.bound_eps, "Physical error probability")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        return app.exit(e, out, err) == 0 ? 0 : 2;
    }

    std::string command;
    for (const auto &[name, s] : subs) {
        if (s->parsed()) {
            command = name;
        }
    }

    Rng rng = derive_rng(seed, 0);
    Output result;
    int code = 0;
    try {
        if (command == "entropy") {
            result = cmd_entropy(o);
        } else if (command == "huffman") {
            result = cmd_huffman(o);
        } else if (command == "hamming") {
            result = cmd_hamming(o);
        } else if (command == "shannon-demo") {
            result = cmd_shannon(o, seed);
        } else if (command == "bell") {
            result = cmd_bell(o);
        } else if (command == "lhv") {
            result = cmd_lhv(o);
        } else if (command == "ghz") {
            result = cmd_ghz();
        } else if (command == "clone") {
            result = cmd_clone(o);
        } else if (command == "densecode") {
            result = cmd_densecode(rng);
        } else if (command == "teleport") {
            result = cmd_teleport(o, rng);
        } else if (command == "bb84") {
            result = cmd_bb84(o, rng);
        } else if (command == "shor") {
            result = cmd_shor(o, rng);
            if (result.doc["factor"].is_null()) {
                err << "shor: no factor found in " << o.max_rounds << " rounds\n";
                code = 1;
            }
        } else if (command == "grover") {
            result = cmd_grover(o, rng);
        } else if (command == "qec-syndromes") {
            result = cmd_qec_syndromes();
        } else if (command == "qec-scaling") {
            result = cmd_qec_scaling(o, seed);
        } else if (command == "bound") {
            result = cmd_bound(o);
        }
    } catch (const CLI::ValidationError &e) {
        err << command << ": " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument &e) {
        err << command << ": " << e.what() << '\n';
        return 2;
    } catch (const std::out_of_range &e) {
        err << command << ": " << e.what() << '\n';
        return 2;
    } catch (const std::exception &e) {
        err << command << ": " << e.what() << '\n';
        return 1;
    }

    const bool json = format.empty() ? result.json_default : format == "json";
    if (out_path.empty()) {
        render(result, command, json, out);
    } else {
        std::ofstream f(out_path);
        if (!f) {
            err << "cannot open '" << out_path << "' for writing\n";
            return 1;
        }
        render(result, command, json, f);
    }
    return code;
}

}  // namespace qinfo::cli
