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

#ifndef WEAKSIM_BENCH_HPP
#define WEAKSIM_BENCH_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "weaksim/circuit.hpp"

namespace weaksim {

enum class SweepAxis { Depth, Width, Shots, CnotCount };

SweepAxis sweep_axis_from_name(std::string_view name);
std::string_view sweep_axis_name(SweepAxis axis);

/// Circuit family parameters shared by the CLI and the benchmark harness.
struct FamilySpec {
    /// ghz, ghz-random, random, clifford, clifford-t or fixed-cnot.
    std::string family = "random";
    std::size_t qubits = 6;
    /// Moments for the random families.
    std::size_t depth = 10;
    double two_qubit_fraction = 0.3;
    /// CNOT and single-qubit gate counts of the fixed-cnot family.
    std::size_t cnots = 8;
    std::size_t singles = 16;
};

/// Builds one member of a family with a terminal MEASURE over all qubits.
/// Throws InvalidSpec for unknown families.
Circuit build_family_circuit(const FamilySpec &spec, std::uint64_t seed);

/// The value reported in the depth column: the moment count for random
/// families, the CNOT count for fixed-cnot and the width for GHZ families.
std::size_t family_depth(const FamilySpec &spec);

struct BenchSpec {
    FamilySpec circuit;
    std::string backend = "statevector";
    /// gate-by-gate or qubit-by-qubit (statevector only).
    std::string sampler = "gate-by-gate";
    SweepAxis axis = SweepAxis::Width;
    std::vector<std::uint64_t> values;
    std::uint64_t shots = 1000;
    std::size_t trials = 1;
    std::uint64_t seed = 0;
    std::size_t chi_max = 0;
    bool optimize = false;
};

struct BenchRecord {
    std::string backend;
    std::string sampler;
    std::size_t n_qubits = 0;
    std::size_t depth = 0;
    std::uint64_t shots = 0;
    /// Empty for skipped (infeasible) configurations.
    std::optional<double> seconds;
    std::uint64_t seed = 0;
};

/// Dense state vectors above this width are reported as skipped rows.
inline constexpr std::size_t kMaxDenseBenchQubits = 26;

/// One record per (sweep value, trial), in sweep order then trial order.
/// The seed of each record is derive_seed(derive_seed(spec.seed, value),
/// trial) and drives both circuit generation and sampling. Timing covers
/// state evolution and sampling only.
std::vector<BenchRecord> run_bench(const BenchSpec &spec);

/// Header "backend,sampler,n_qubits,depth,shots,seconds,seed"; skipped rows
/// carry "skipped" in the seconds column.
std::string bench_csv_header();
std::string to_csv_row(const BenchRecord &record);
std::string to_csv(const std::vector<BenchRecord> &records);

}  // namespace weaksim

#endif
