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

#include "weaksim/bench.hpp"

#include <chrono>
#include <cstdio>

#include "weaksim/backends.hpp"
#include "weaksim/errors.hpp"
#include "weaksim/generators.hpp"
#include "weaksim/optimizer.hpp"
#include "weaksim/rng.hpp"
#include "weaksim/sampler.hpp"

namespace weaksim {

namespace {

const std::vector<GateType> kRandomSet = {GateType::H,  GateType::X,  GateType::Y,    GateType::Z,
                                          GateType::S,  GateType::T,  GateType::Rx,   GateType::Ry,
                                          GateType::Rz, GateType::Cnot, GateType::Cz};
const std::vector<GateType> kCliffordSet = {GateType::H, GateType::S, GateType::Cnot};
const std::vector<GateType> kCliffordTSet = {GateType::H, GateType::S, GateType::Cnot, GateType::T};

}  // namespace

SweepAxis sweep_axis_from_name(std::string_view name) {
    if (name == "depth") {
        return SweepAxis::Depth;
    }
    if (name == "width") {
        return SweepAxis::Width;
    }
    if (name == "shots") {
        return SweepAxis::Shots;
    }
    if (name == "cnot-count") {
        return SweepAxis::CnotCount;
    }
    throw InvalidSpec("unknown sweep axis '" + std::string(name) + "'");
}

std::string_view sweep_axis_name(SweepAxis axis) {
    switch (axis) {
        case SweepAxis::Depth:
            return "depth";
        case SweepAxis::Width:
            return "width";
        case SweepAxis::Shots:
            return "shots";
        case SweepAxis::CnotCount:
            return "cnot-count";
    }
    return "";
}

Circuit build_family_circuit(const FamilySpec &spec, std::uint64_t seed) {
    const std::string &f = spec.family;
    Circuit circuit(1);
    if (f == "ghz") {
        circuit = generate_ghz(spec.qubits);
    } else if (f == "ghz-random") {
        circuit = generate_ghz_random_cnot(spec.qubits, seed);
    } else if (f == "random") {
        circuit = generate_random_circuit(spec.qubits, spec.depth, kRandomSet, spec.two_qubit_fraction, seed);
    } else if (f == "clifford") {
        circuit = generate_random_circuit(spec.qubits, spec.depth, kCliffordSet, spec.two_qubit_fraction, seed);
    } else if (f == "clifford-t") {
        circuit = generate_random_circuit(spec.qubits, spec.depth, kCliffordTSet, spec.two_qubit_fraction, seed);
    } else if (f == "fixed-cnot") {
        circuit = generate_fixed_cnot_circuit(spec.qubits, spec.cnots, spec.singles, seed);
    } else {
        throw InvalidSpec("unknown circuit family '" + f + "'");
    }
    circuit.measure_all();
    return circuit;
}

std::size_t family_depth(const FamilySpec &spec) {
    if (spec.family == "fixed-cnot") {
        return spec.cnots;
    }
    if (spec.family == "ghz" || spec.family == "ghz-random") {
        return spec.qubits;
    }
    return spec.depth;
}

std::vector<BenchRecord> run_bench(const BenchSpec &spec) {
    if (spec.sampler != "gate-by-gate" && spec.sampler != "qubit-by-qubit") {
        throw InvalidSpec("unknown sampler '" + spec.sampler + "'");
    }
    if (spec.sampler == "qubit-by-qubit" && spec.backend != "statevector") {
        throw InvalidSpec("the qubit-by-qubit sampler runs on the statevector backend only");
    }
    if (spec.trials == 0) {
        throw InvalidSpec("trials must be at least 1");
    }
    const BackendFactory factory = make_backend_factory(spec.backend, spec.chi_max);
    const bool dense = spec.backend == "statevector";

    std::vector<BenchRecord> records;
    for (const std::uint64_t value : spec.values) {
        FamilySpec family = spec.circuit;
        std::uint64_t shots = spec.shots;
        switch (spec.axis) {
            case SweepAxis::Depth:
                family.depth = value;
                break;
            case SweepAxis::Width:
                family.qubits = value;
                break;
            case SweepAxis::Shots:
                shots = value;
                break;
            case SweepAxis::CnotCount:
                family.cnots = value;
                break;
        }
        const std::uint64_t point_seed = derive_seed(spec.seed, value);
        for (std::size_t trial = 0; trial < spec.trials; ++trial) {
            BenchRecord record;
            record.backend = spec.backend;
            record.sampler = spec.sampler;
            record.n_qubits = family.qubits;
            record.depth = family_depth(family);
            record.shots = shots;
            record.seed = derive_seed(point_seed, trial);
            if (dense && family.qubits > kMaxDenseBenchQubits) {
                records.push_back(record);
                continue;
            }
            Circuit circuit = build_family_circuit(family, record.seed);
            if (spec.optimize) {
                circuit = optimize_circuit(circuit);
            }
            const auto start = std::chrono::steady_clock::now();
            if (spec.sampler == "qubit-by-qubit") {
                sample_qubit_by_qubit(circuit, shots, record.seed);
            } else {
                sample_gate_by_gate(circuit, factory, shots, record.seed);
            }
            record.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
            records.push_back(record);
        }
    }
    return records;
}

std::string bench_csv_header() {
    return "backend,sampler,n_qubits,depth,shots,seconds,seed\n";
}

std::string to_csv_row(const BenchRecord &record) {
    std::string seconds = "skipped";
    if (record.seconds) {
        char buf[32];
        std::snprintf(buf, sizeof(buf), "%.6f", *record.seconds);
        seconds = buf;
    }
    return record.backend + "," + record.sampler + "," + std::to_string(record.n_qubits) + "," +
           std::to_string(record.depth) + "," + std::to_string(record.shots) + "," + seconds + "," +
           std::to_string(record.seed) + "\n";
}

std::string to_csv(const std::vector<BenchRecord> &records) {
    std::string out = bench_csv_header();
    for (const auto &r : records) {
        out += to_csv_row(r);
    }
    return out;
}

}  // namespace weaksim
