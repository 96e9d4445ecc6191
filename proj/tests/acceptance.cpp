// Copyright 2026 The weaksim Authors
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

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <numbers>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include "json.hpp"
#include "test_support.hpp"
#include "weaksim/backends.hpp"
#include "weaksim/bench.hpp"
#include "weaksim/ch_form.hpp"
#include "weaksim/generators.hpp"
#include "weaksim/mps.hpp"
#include "weaksim/optimizer.hpp"
#include "weaksim/qaoa.hpp"
#include "weaksim/sampler.hpp"
#include "weaksim/statevector.hpp"

namespace weaksim {
namespace {

using Clock = std::chrono::steady_clock;
using testing::empirical;
using testing::overlap;
using testing::tvd;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Outcome {
    bool pass;
    std::string detail;
};

std::string fmt(const char *format, double value) {
    char buf[96];
    std::snprintf(buf, sizeof(buf), format, value);
    return buf;
}

/// Multinomial draw of `shots` samples from an exact distribution.
std::map<BitString, double> ideal_sample(const std::map<BitString, double> &exact,
                                         std::uint64_t shots,
                                         std::uint64_t seed) {
    RngStream rng(seed, 0);
    std::map<BitString, double> out;
    std::uint64_t remaining = shots;
    double mass_left = 1;
    for (const auto &[b, p] : exact) {
        if (remaining == 0) {
            break;
        }
        const double q = mass_left > 0 ? std::clamp(p / mass_left, 0.0, 1.0) : 1.0;
        const std::uint64_t taken = rng.binomial(remaining, q);
        mass_left -= p;
        remaining -= taken;
        if (taken > 0) {
            out[b] = static_cast<double>(taken) / static_cast<double>(shots);
        }
    }
    return out;
}

/// Least-squares slope of log(y) against log(x).
double loglog_slope(const std::vector<double> &x, const std::vector<double> &y) {
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    const double n = static_cast<double>(x.size());
    for (std::size_t k = 0; k < x.size(); ++k) {
        const double lx = std::log(x[k]);
        const double ly = std::log(y[k]);
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

Outcome ghz_correctness() {
    std::string detail;
    bool pass = true;
    Circuit c = generate_ghz(2);
    c.measure_all();
    for (const char *name : {"statevector", "stabilizer", "mps"}) {
        const auto start = Clock::now();
        const auto result = sample_gate_by_gate(c, make_backend_factory(name), 1000, 1);
        const double seconds = seconds_since(start);
        std::uint64_t zeros = 0;
        std::uint64_t ones = 0;
        std::uint64_t other = 0;
        for (const auto &[b, n] : result.counts) {
            const std::string s = b.to_string();
            (s == "00" ? zeros : s == "11" ? ones : other) += n;
        }
        pass = pass && other == 0 && zeros >= 400 && zeros <= 600 && ones >= 400 && ones <= 600 && seconds < 1.0;
        detail += std::string(name) + " 00=" + std::to_string(zeros) + " 11=" + std::to_string(ones) +
                  " other=" + std::to_string(other) + fmt(" %.4fs; ", seconds);
    }
    return {pass, detail};
}

std::vector<Circuit> soundness_circuits() {
    FamilySpec family;
    family.family = "random";
    family.qubits = 5;
    family.depth = 20;
    std::vector<Circuit> out;
    for (std::uint64_t k = 0; k < 20; ++k) {
        out.push_back(build_family_circuit(family, derive_seed(2, k)));
    }
    return out;
}

Outcome sampler_soundness() {
    const auto circuits = soundness_circuits();
    const auto start = Clock::now();
    double worst = 0;
    for (std::size_t k = 0; k < circuits.size(); ++k) {
        const auto result = sample_gate_by_gate(circuits[k], statevector_factory(), 20000, k);
        worst = std::max(worst, tvd(empirical(result), exact_distribution(circuits[k])));
    }
    const double seconds = seconds_since(start);
    return {worst < 0.03 && seconds < 30, fmt("max TVD %.4f over 20 circuits", worst) + fmt(", %.2fs", seconds)};
}

Outcome cross_sampler() {
    const auto circuits = soundness_circuits();
    double worst = 0;
    for (std::size_t k = 0; k < circuits.size(); ++k) {
        const auto gbg = sample_gate_by_gate(circuits[k], statevector_factory(), 20000, 100 + k);
        const auto qbq = sample_qubit_by_qubit(circuits[k], 20000, 200 + k);
        worst = std::max(worst, tvd(empirical(gbg), empirical(qbq)));
    }
    return {worst < 0.05, fmt("max gate-by-gate vs qubit-by-qubit TVD %.4f over 20 circuits", worst)};
}

Outcome stabilizer_oracle() {
    double worst = 0;
    bool relations = true;
    std::size_t steps = 0;
    for (std::uint64_t k = 0; k < 50; ++k) {
        const std::size_t n = 1 + k % 6;
        const Circuit c = testing::random_clifford_ops(n, 200, 1000 + k);
        StabilizerBackend backend(n);
        DenseState dense(n);
        RngStream rng(0, 0);
        for (const auto &op : c.ops()) {
            backend.apply_op(op, rng);
            dense.apply(op);
            const auto rec = testing::reconstruct_ch_form(backend.state());
            relations = relations && rec.relations_hold && testing::max_abs_diff(rec.state, dense.amplitudes()) < 1e-10;
            ++steps;
        }
        for (std::uint64_t x = 0; x < (std::uint64_t{1} << n); ++x) {
            const BitString b = BitString::from_index(x, n);
            worst = std::max(worst, std::abs(backend.probability(b) - dense.probability(b)));
        }
    }
    return {worst < 1e-10 && relations, fmt("max |p_ch - p_dense| %.2e", worst) + ", reconstruction " +
                                            (relations ? "held" : "failed") + " at " + std::to_string(steps) +
                                            " steps of 50 circuits"};
}

Outcome rz_identity() {
    RngStream rng(17, 0);
    const cplx i{0, 1};
    double worst = 0;
    for (int k = 0; k < 1000; ++k) {
        const double theta = (2 * rng.uniform() - 1) * 2 * std::numbers::pi;
        const RzDecomposition d = decompose_rz(theta);
        worst = std::max(worst, std::abs(d.c_identity + d.c_s - std::exp(-i * theta / 2.0)));
        worst = std::max(worst, std::abs(d.c_identity + i * d.c_s - std::exp(i * theta / 2.0)));
    }
    const RzDecomposition zero = decompose_rz(0);
    const RzDecomposition quarter = decompose_rz(std::numbers::pi / 2);
    const bool endpoints = zero.c_identity == cplx(1, 0) && zero.c_s == cplx(0, 0) &&
                           quarter.c_identity == cplx(0, 0) &&
                           std::abs(quarter.c_s - std::exp(-i * std::numbers::pi / 4.0)) < 1e-15;
    return {worst < 1e-12 && endpoints,
            fmt("max entry error %.2e over 1000 angles", worst) + ", endpoints " + (endpoints ? "exact" : "inexact")};
}

Outcome near_clifford_convergence() {
    const Circuit c = testing::clifford_with_t(5, 10, 4, 0);
    const auto exact = exact_distribution(c);
    std::vector<double> overlaps;
    for (std::uint64_t shots : {1000, 10000, 100000}) {
        overlaps.push_back(overlap(empirical(sample_gate_by_gate(c, stabilizer_factory(), shots, 6)), exact));
    }
    const bool monotone = overlaps[0] <= overlaps[1] && overlaps[1] <= overlaps[2];
    return {monotone && overlaps[2] > 0.9, fmt("overlap 1e3: %.4f", overlaps[0]) + fmt(", 1e4: %.4f", overlaps[1]) +
                                               fmt(", 1e5: %.4f", overlaps[2])};
}

Outcome t_gates_degrade() {
    double with_none = 0;
    double with_eight = 0;
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        const Circuit clifford = testing::clifford_with_t(5, 10, 0, seed);
        const Circuit magic = testing::clifford_with_t(5, 10, 8, seed);
        with_none += overlap(empirical(sample_gate_by_gate(clifford, stabilizer_factory(), 10000, seed)),
                             exact_distribution(clifford));
        with_eight += overlap(empirical(sample_gate_by_gate(magic, stabilizer_factory(), 10000, seed)),
                              exact_distribution(magic));
    }
    with_none /= 5;
    with_eight /= 5;
    return {with_none >= with_eight,
            fmt("mean overlap 0 T: %.4f", with_none) + fmt(", 8 T: %.4f", with_eight) + " (5 seeds)"};
}

Outcome mps_oracle() {
    FamilySpec family;
    family.family = "random";
    family.qubits = 8;
    family.depth = 10;
    double worst_prob = 0;
    double sum_tvd = 0;
    double worst_tvd = 0;
    double sum_ideal = 0;
    for (std::uint64_t k = 0; k < 20; ++k) {
        const Circuit c = build_family_circuit(family, derive_seed(8, k));
        Mps mps(8, Mps::kUnbounded);
        for (const auto &op : c.ops()) {
            mps.apply(op);
        }
        const DenseState dense = simulate_dense(c);
        for (std::uint64_t x = 0; x < 256; ++x) {
            const BitString b = BitString::from_index(x, 8);
            worst_prob = std::max(worst_prob, std::abs(mps.probability(b) - dense.probability(b)));
        }
        const auto exact = exact_distribution(c);
        const double d = tvd(empirical(sample_gate_by_gate(c, mps_factory(), 20000, k)), exact);
        sum_tvd += d;
        worst_tvd = std::max(worst_tvd, d);
        sum_ideal += tvd(ideal_sample(exact, 20000, 500 + k), exact);
    }
    const double mean_tvd = sum_tvd / 20;
    return {worst_prob < 1e-8 && mean_tvd < 0.03,
            fmt("max |p_mps - p_dense| %.2e", worst_prob) + fmt(", mean TVD %.4f", mean_tvd) +
                fmt(" (max %.4f", worst_tvd) + fmt(", ideal-sampler mean %.4f)", sum_ideal / 20)};
}

/// Median over 40 random circuits per width, in width order.
std::vector<double> width_times(const std::string &family, const std::vector<std::uint64_t> &widths) {
    BenchSpec spec;
    spec.circuit.family = family;
    spec.circuit.cnots = 8;
    spec.circuit.singles = 16;
    spec.backend = "mps";
    spec.axis = SweepAxis::Width;
    spec.values = widths;
    spec.shots = 20000;
    spec.trials = 40;
    spec.seed = 9;
    const auto rows = run_bench(spec);
    std::vector<double> medians;
    for (std::size_t w = 0; w < widths.size(); ++w) {
        std::vector<double> times;
        for (std::size_t t = 0; t < spec.trials; ++t) {
            times.push_back(*rows[w * spec.trials + t].seconds);
        }
        std::nth_element(times.begin(), times.begin() + times.size() / 2, times.end());
        medians.push_back(times[times.size() / 2]);
    }
    return medians;
}

Outcome mps_scaling() {
    const std::vector<std::uint64_t> widths = {6, 8, 10, 12, 14, 16};
    const auto fixed = width_times("fixed-cnot", widths);
    const double slope = loglog_slope({widths.begin(), widths.end()}, fixed);
    const auto ghz = width_times("ghz-random", {8, 14});
    const double fixed_ratio = fixed[4] / fixed[1];
    const double ghz_ratio = ghz[1] / ghz[0];
    return {slope < 1.5 && ghz_ratio > fixed_ratio,
            fmt("fixed-cnot exponent %.3f", slope) + fmt(", time(14)/time(8): fixed-cnot %.2f", fixed_ratio) +
                fmt(", ghz-random %.2f", ghz_ratio)};
}

Outcome multiplicity_saturation() {
    FamilySpec family;
    family.family = "clifford";
    family.qubits = 4;
    family.depth = 10;
    const Circuit c = build_family_circuit(family, 3);
    std::size_t peak = 0;
    SamplerOptions options;
    options.on_step = [&](const MultiplicityMap &m) { peak = std::max(peak, m.size()); };
    auto total_time = [&](std::uint64_t shots) {
        const auto start = Clock::now();
        for (std::uint64_t r = 0; r < 50; ++r) {
            sample_gate_by_gate(c, stabilizer_factory(), shots, r, options);
        }
        return seconds_since(start);
    };
    total_time(10000);
    const double small = total_time(10000);
    const double large = total_time(1000000);
    const double ratio = large / small;
    return {ratio < 3 && peak <= 16,
            fmt("time(1e6)/time(1e4) %.3f", ratio) + ", peak distinct bitstrings " + std::to_string(peak)};
}

Outcome optimizer_speedup() {
    FamilySpec family;
    family.family = "random";
    family.qubits = 8;
    family.depth = 50;
    family.two_qubit_fraction = 0.1;
    double plain = 0;
    double optimized = 0;
    double worst_tvd = 0;
    for (std::uint64_t k = 0; k < 5; ++k) {
        const Circuit c = build_family_circuit(family, derive_seed(11, k));
        const Circuit opt = optimize_circuit(c);
        worst_tvd = std::max(worst_tvd, tvd(exact_distribution(c), exact_distribution(opt)));
        for (int rep = 0; rep < 3; ++rep) {
            auto start = Clock::now();
            sample_gate_by_gate(c, statevector_factory(), 2000, k);
            plain += seconds_since(start);
            start = Clock::now();
            sample_gate_by_gate(opt, statevector_factory(), 2000, k);
            optimized += seconds_since(start);
        }
    }
    const double speedup = plain / optimized;
    return {speedup >= 1.2 && worst_tvd < 1e-10,
            fmt("speedup %.2fx", speedup) + fmt(", max exact TVD %.2e", worst_tvd)};
}

Outcome qaoa_maxcut() {
    QaoaOptions options;
    const auto start = Clock::now();
    const auto report = run_qaoa(options, make_backend_factory("mps"));
    const double seconds = seconds_since(start);
    const std::size_t bf = report.brute_force_max_cut.value_or(0);
    return {report.best_cut + 1 >= bf && report.best_cut <= bf && seconds < 600,
            "best sampled cut " + std::to_string(report.best_cut) + ", brute-force max " + std::to_string(bf) +
                ", " + std::to_string(report.instance.edges.size()) + " edges" + fmt(", %.2fs", seconds)};
}

std::string read_text(const std::filesystem::path &path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

/// Output with timing removed: the runtime_s field of JSON reports and the
/// seconds column of bench CSV.
std::string without_timing(const std::string &text) {
    if (!text.empty() && text[0] == '{') {
        auto j = nlohmann::json::parse(text);
        j.erase("runtime_s");
        return j.dump();
    }
    std::istringstream in(text);
    std::string line;
    std::string out;
    bool bench = false;
    bool first = true;
    while (std::getline(in, line)) {
        if (first) {
            bench = line.find(",seconds,") != std::string::npos;
            first = false;
        }
        if (bench) {
            std::vector<std::string> cells;
            std::stringstream cs(line);
            std::string cell;
            while (std::getline(cs, cell, ',')) {
                cells.push_back(cell);
            }
            if (cells.size() > 5) {
                cells.erase(cells.begin() + 5);
            }
            line.clear();
            for (const auto &c : cells) {
                line += c + ",";
            }
        }
        out += line + "\n";
    }
    return out;
}

Outcome cli_determinism() {
    const std::string cli = WEAKSIM_CLI_PATH;
    const std::string data = WEAKSIM_EXAMPLES_DIR;
    const std::vector<std::string> invocations = {
        "sample --generator ghz --qubits 2 --backend statevector --shots 10 --seed 3",
        "sample --generator ghz-random --qubits 6 --backend mps --shots 500 --seed 4 --format csv",
        "sample --generator clifford-t --qubits 4 --depth 6 --backend stabilizer --shots 500 --seed 5 --format csv",
        "sample --generator random --qubits 6 --depth 8 --backend mps --shots 1000 --seed 7 --optimize",
        "sample --generator clifford --qubits 5 --depth 8 --backend statevector --shots 800 --seed 2 --threads 3",
        "sample --qasm " + data + "/bell.qasm --backend mps --shots 100 --seed 1",
        "bench --family fixed-cnot --axis width --values 4,6 --backend mps --shots 200 --trials 2 --seed 1",
        "bench --family clifford --axis shots --range 100 300 100 --sampler qubit-by-qubit --qubits 4 --seed 2",
        "bench --family random --axis width --values 4,27 --backend statevector --shots 50 --seed 3",
        "optimize --generator random --qubits 4 --depth 6 --seed 2",
        "qaoa --nodes 6 --grid-size 3 --sweep-shots 50 --final-shots 200 --seed 4",
    };
    const auto dir = std::filesystem::temp_directory_path() / ("weaksim_acceptance_" + std::to_string(::getpid()));
    std::filesystem::create_directories(dir);
    bool pass = true;
    std::string failures;
    for (std::size_t k = 0; k < invocations.size(); ++k) {
        std::string outputs[2];
        for (int run = 0; run < 2; ++run) {
            const auto file = dir / ("run" + std::to_string(k) + "_" + std::to_string(run) + ".out");
            const std::string cmd = "\"" + cli + "\" " + invocations[k] + " --out \"" + file.string() + "\"";
            if (std::system(cmd.c_str()) != 0) {
                pass = false;
                failures += " [exit status: " + invocations[k] + "]";
            }
            outputs[run] = without_timing(read_text(file));
        }
        if (outputs[0].empty() || outputs[0] != outputs[1]) {
            pass = false;
            failures += " [differs: " + invocations[k] + "]";
        }
    }
    std::filesystem::remove_all(dir);
    return {pass, std::to_string(invocations.size()) + " invocations repeated" + failures};
}

}  // namespace
}  // namespace weaksim

int main() {
    using weaksim::Outcome;
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"ghz-correctness", weaksim::ghz_correctness},
        {"sampler-soundness", weaksim::sampler_soundness},
        {"cross-sampler-agreement", weaksim::cross_sampler},
        {"stabilizer-oracle-equivalence", weaksim::stabilizer_oracle},
        {"rz-decomposition-identity", weaksim::rz_identity},
        {"near-clifford-convergence", weaksim::near_clifford_convergence},
        {"t-gates-degrade-overlap", weaksim::t_gates_degrade},
        {"mps-oracle-equivalence", weaksim::mps_oracle},
        {"mps-scaling-shape", weaksim::mps_scaling},
        {"multiplicity-saturation", weaksim::multiplicity_saturation},
        {"optimizer-speedup", weaksim::optimizer_speedup},
        {"qaoa-maxcut", weaksim::qaoa_maxcut},
        {"cli-determinism", weaksim::cli_determinism},
    };
    int failed = 0;
    for (std::size_t k = 0; k < criteria.size(); ++k) {
        Outcome outcome{false, ""};
        try {
            outcome = criteria[k].second();
        } catch (const std::exception &e) {
            outcome = {false, std::string("exception: ") + e.what()};
        }
        failed += outcome.pass ? 0 : 1;
        std::printf("[%s] %zu %s: %s\n", outcome.pass ? "PASS" : "FAIL", k + 1, criteria[k].first.c_str(),
                    outcome.detail.c_str());
        std::fflush(stdout);
    }
    std::printf("%zu/%zu criteria passed\n", criteria.size() - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
