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

#ifndef WEAKSIM_QAOA_HPP
#define WEAKSIM_QAOA_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "weaksim/backend.hpp"
#include "weaksim/bitstring.hpp"
#include "weaksim/circuit.hpp"

namespace weaksim {

using Edge = std::pair<std::uint32_t, std::uint32_t>;

/// Undirected simple graph; edges are stored with first < second.
struct MaxCutInstance {
    std::size_t n_nodes = 0;
    std::vector<Edge> edges;
    std::uint64_t seed = 0;
    double edge_probability = 0;
};

/// Validates and canonicalizes an edge list. Throws InvalidSpec on
/// self-loops, duplicates or out-of-range nodes.
MaxCutInstance make_maxcut_instance(std::size_t n_nodes, std::vector<Edge> edges);

/// G(n, p): each of the n(n-1)/2 pairs is an edge with probability p.
MaxCutInstance erdos_renyi_instance(std::size_t n_nodes, double edge_probability, std::uint64_t seed);

struct QaoaParams {
    double gamma = 0;
    double beta = 0;
    unsigned layers = 1;
};

/// H on every qubit; each layer applies CNOT(i,j) RZ(2 gamma)@j CNOT(i,j)
/// per edge and RX(2 beta) on every qubit; ends with a MEASURE of all qubits.
Circuit build_qaoa_maxcut_circuit(const MaxCutInstance &instance, const QaoaParams &params);

/// Edges whose endpoints get different bits.
std::size_t cut_value(const MaxCutInstance &instance, const BitString &b);

/// Exhaustive maximum over all 2^n assignments. Requires n_nodes <= 20.
std::size_t brute_force_max_cut(const MaxCutInstance &instance);

struct QaoaOptions {
    std::size_t nodes = 10;
    double edge_probability = 0.3;
    unsigned layers = 1;
    std::size_t grid_size = 8;
    std::uint64_t sweep_shots = 100;
    std::uint64_t final_shots = 1000;
    std::uint64_t seed = 0;
};

struct QaoaSweepPoint {
    double gamma;
    double beta;
    double mean_cut;
};

struct QaoaReport {
    MaxCutInstance instance;
    std::string backend;
    QaoaParams best_params;
    BitString best_bitstring;
    std::size_t best_cut = 0;
    /// Mean cut of the final run.
    double mean_cut = 0;
    std::optional<std::size_t> brute_force_max_cut;
    std::vector<QaoaSweepPoint> sweep;
    double runtime_s = 0;
};

/// Grid search over gamma in [0, pi) and beta in [0, pi/2) maximizing the
/// mean sampled cut (ties go to the first point in gamma-major order), then a
/// final run at the best point. The brute-force maximum is included for
/// graphs of at most 20 nodes.
QaoaReport run_qaoa(const MaxCutInstance &instance, const QaoaOptions &options, const BackendFactory &factory);
/// Same, on erdos_renyi_instance(options.nodes, options.edge_probability, options.seed).
QaoaReport run_qaoa(const QaoaOptions &options, const BackendFactory &factory);

std::string to_json(const QaoaReport &report);

}  // namespace weaksim

#endif
