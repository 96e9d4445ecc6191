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

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "weaksim/backends.hpp"
#include "weaksim/bench.hpp"
#include "weaksim/errors.hpp"
#include "weaksim/optimizer.hpp"
#include "weaksim/qaoa.hpp"
#include "weaksim/qasm.hpp"
#include "weaksim/sampler.hpp"

namespace {

constexpr int kExitUnsupported = 2;
constexpr int kExitInput = 3;

class InputError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

struct CircuitSource {
    std::string qasm;
    std::string generator;
    weaksim::FamilySpec family;
    std::uint64_t seed = 0;
    bool optimize = false;
};

void add_circuit_source(CLI::App *cmd, CircuitSource &src) {
    auto *qasm = cmd->add_option("--qasm", src.qasm, "OpenQASM 2.0 input file");
    auto *gen = cmd->add_option("--generator", src.generator, "Circuit generator")
                    ->check(CLI::IsMember({"ghz", "ghz-random", "random", "clifford", "clifford-t", "fixed-cnot"}));
    qasm->excludes(gen);
    cmd->add_option("--qubits", src.family.qubits, "Generator width")->capture_default_str();
    cmd->add_option("--depth", src.family.depth, "Generator moments")->capture_default_str();
    cmd->add_option("--two-qubit-fraction", src.family.two_qubit_fraction, "Two-qubit gate probability per slot")
        ->capture_default_str();
    cmd->add_option("--cnots", src.family.cnots, "CNOT count of the fixed-cnot generator")->capture_default_str();
    cmd->add_option("--singles", src.family.singles, "Single-qubit gate count of the fixed-cnot generator")
        ->capture_default_str();
    cmd->add_option("--seed", src.seed, "Master seed")->capture_default_str();
    cmd->add_flag("--optimize", src.optimize, "Merge single-qubit gate runs before sampling");
}

std::string read_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw InputError("cannot open '" + path + "'");
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

weaksim::Circuit load_circuit(const CircuitSource &src) {
    if (src.qasm.empty() && src.generator.empty()) {
        throw InputError("one of --qasm or --generator is required");
    }
    if (!src.qasm.empty()) {
        return weaksim::parse_qasm(read_file(src.qasm));
    }
    weaksim::FamilySpec family = src.family;
    family.family = src.generator;
    return weaksim::build_family_circuit(family, src.seed);
}

void write_output(const std::string &path, const std::string &text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw InputError("cannot write '" + path + "'");
    }
    out << text;
}

nlohmann::json op_to_json(const weaksim::GateOp &op) {
    nlohmann::json j = {{"gate", std::string(weaksim::gate_type_name(op.kind.type()))}, {"qubits", op.qubits}};
    if (op.kind.is_rotation() || op.kind.is_channel()) {
        j["param"] = op.kind.param();
    }
    if (!op.kind.entries().empty()) {
        nlohmann::json m = nlohmann::json::array();
        for (const auto &c : op.kind.entries()) {
            m.push_back({c.real(), c.imag()});
        }
        j["matrix"] = m;
    }
    return j;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"weaksim: weak simulation of quantum circuits by gate-by-gate sampling"};
    app.require_subcommand(1);

    CircuitSource sample_src;
    std::string sample_backend = "statevector";
    std::uint64_t sample_shots = 1000;
    std::size_t sample_chi = 0;
    std::string sample_out;
    std::string sample_format = "json";
    unsigned sample_threads = 1;
    auto *sample = app.add_subcommand("sample", "Sample bitstrings from a circuit");
    add_circuit_source(sample, sample_src);
    sample->add_option("--backend", sample_backend, "State backend")
        ->check(CLI::IsMember({"statevector", "stabilizer", "mps"}))
        ->capture_default_str();
    sample->add_option("--shots", sample_shots, "Number of samples")->capture_default_str();
    sample->add_option("--chi-max", sample_chi, "MPS bond dimension cap (0 = unbounded)")->capture_default_str();
    sample->add_option("--out", sample_out, "Output file (default stdout)");
    sample->add_option("--format", sample_format, "Output format")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();
    sample->add_option("--threads", sample_threads, "Worker threads for trajectory sampling")->capture_default_str();

    weaksim::BenchSpec bench_spec;
    std::string bench_axis = "width";
    std::vector<std::uint64_t> bench_range;
    std::string bench_out;
    auto *bench = app.add_subcommand("bench", "Benchmark sweep written as CSV");
    bench->add_option("--family", bench_spec.circuit.family, "Circuit family")
        ->check(CLI::IsMember({"ghz", "ghz-random", "random", "clifford", "clifford-t", "fixed-cnot"}))
        ->capture_default_str();
    bench->add_option("--axis", bench_axis, "Sweep axis")
        ->check(CLI::IsMember({"depth", "width", "shots", "cnot-count"}))
        ->capture_default_str();
    auto *values = bench->add_option("--values", bench_spec.values, "Comma-separated sweep values")->delimiter(',');
    auto *range = bench->add_option("--range", bench_range, "Sweep values START STOP STEP (inclusive)")
                      ->expected(3);
    values->excludes(range);
    bench->add_option("--qubits", bench_spec.circuit.qubits, "Width")->capture_default_str();
    bench->add_option("--depth", bench_spec.circuit.depth, "Moments")->capture_default_str();
    bench->add_option("--two-qubit-fraction", bench_spec.circuit.two_qubit_fraction, "Two-qubit gate probability")
        ->capture_default_str();
    bench->add_option("--cnots", bench_spec.circuit.cnots, "CNOT count (fixed-cnot)")->capture_default_str();
    bench->add_option("--singles", bench_spec.circuit.singles, "Single-qubit count (fixed-cnot)")
        ->capture_default_str();
    bench->add_option("--backend", bench_spec.backend, "State backend")
        ->check(CLI::IsMember({"statevector", "stabilizer", "mps"}))
        ->capture_default_str();
    bench->add_option("--sampler", bench_spec.sampler, "Sampling algorithm")
        ->check(CLI::IsMember({"gate-by-gate", "qubit-by-qubit"}))
        ->capture_default_str();
    bench->add_option("--shots", bench_spec.shots, "Shots per run")->capture_default_str();
    bench->add_option("--trials", bench_spec.trials, "Trials per sweep value")->capture_default_str();
    bench->add_option("--seed", bench_spec.seed, "Master seed")->capture_default_str();
    bench->add_option("--chi-max", bench_spec.chi_max, "MPS bond dimension cap (0 = unbounded)")
        ->capture_default_str();
    bench->add_flag("--optimize", bench_spec.optimize, "Merge single-qubit gate runs before sampling");
    bench->add_option("--out", bench_out, "Output file (default stdout)");

    CircuitSource opt_src;
    std::string opt_out;
    auto *optimize = app.add_subcommand("optimize", "Merge single-qubit gate runs and report the result as JSON");
    add_circuit_source(optimize, opt_src);
    optimize->add_option("--out", opt_out, "Output file (default stdout)");

    weaksim::QaoaOptions qaoa_opts;
    std::string qaoa_backend = "mps";
    std::size_t qaoa_chi = 0;
    std::string qaoa_out;
    auto *qaoa = app.add_subcommand("qaoa", "QAOA MaxCut grid search on a random graph");
    qaoa->add_option("--nodes", qaoa_opts.nodes, "Graph nodes")->capture_default_str();
    qaoa->add_option("--edge-prob", qaoa_opts.edge_probability, "Edge probability")->capture_default_str();
    qaoa->add_option("--layers", qaoa_opts.layers, "QAOA layers")->capture_default_str();
    qaoa->add_option("--grid-size", qaoa_opts.grid_size, "Grid points per parameter")->capture_default_str();
    qaoa->add_option("--sweep-shots", qaoa_opts.sweep_shots, "Shots per grid point")->capture_default_str();
    qaoa->add_option("--final-shots", qaoa_opts.final_shots, "Shots of the final run")->capture_default_str();
    qaoa->add_option("--backend", qaoa_backend, "State backend")
        ->check(CLI::IsMember({"statevector", "stabilizer", "mps"}))
        ->capture_default_str();
    qaoa->add_option("--chi-max", qaoa_chi, "MPS bond dimension cap (0 = unbounded)")->capture_default_str();
    qaoa->add_option("--seed", qaoa_opts.seed, "Master seed")->capture_default_str();
    qaoa->add_option("--out", qaoa_out, "Output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : kExitInput;
    }

    try {
        if (*sample) {
            weaksim::Circuit circuit = load_circuit(sample_src);
            if (sample_src.optimize) {
                circuit = weaksim::optimize_circuit(circuit);
            }
            weaksim::SamplerOptions options;
            options.threads = sample_threads;
            const auto result = weaksim::sample_gate_by_gate(
                circuit, weaksim::make_backend_factory(sample_backend, sample_chi), sample_shots, sample_src.seed,
                options);
            write_output(sample_out, sample_format == "csv" ? weaksim::to_csv(result) : weaksim::to_json(result));
        } else if (*bench) {
            bench_spec.axis = weaksim::sweep_axis_from_name(bench_axis);
            if (!bench_range.empty()) {
                if (bench_range[2] == 0 || bench_range[1] < bench_range[0]) {
                    throw InputError("--range needs START <= STOP and STEP > 0");
                }
                for (std::uint64_t v = bench_range[0]; v <= bench_range[1]; v += bench_range[2]) {
                    bench_spec.values.push_back(v);
                }
            }
            if (bench_spec.values.empty()) {
                throw InputError("one of --values or --range is required");
            }
            write_output(bench_out, weaksim::to_csv(weaksim::run_bench(bench_spec)));
        } else if (*optimize) {
            const weaksim::Circuit circuit = load_circuit(opt_src);
            const weaksim::Circuit optimized = weaksim::optimize_circuit(circuit);
            nlohmann::json ops = nlohmann::json::array();
            for (const auto &op : optimized.ops()) {
                ops.push_back(op_to_json(op));
            }
            const nlohmann::json report = {{"n_qubits", optimized.n_qubits()},
                                           {"ops_before", circuit.size()},
                                           {"ops_after", optimized.size()},
                                           {"ops", ops}};
            write_output(opt_out, report.dump(2) + "\n");
        } else if (*qaoa) {
            const auto report = weaksim::run_qaoa(qaoa_opts, weaksim::make_backend_factory(qaoa_backend, qaoa_chi));
            write_output(qaoa_out, weaksim::to_json(report));
        }
    } catch (const weaksim::UnsupportedOp &e) {
        std::cerr << "unsupported operation: " << e.what() << "\n";
        return kExitUnsupported;
    } catch (const weaksim::ParseError &e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitInput;
    } catch (const weaksim::InvalidSpec &e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return kExitInput;
    } catch (const InputError &e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
