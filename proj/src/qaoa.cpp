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

#include "weaksim/qaoa.hpp"

#include <algorithm>
#include <chrono>
#include <numbers>
#include <set>
#include <string>

#include "json.hpp"
#include "weaksim/errors.hpp"
#include "weaksim/rng.hpp"
#include "weaksim/sampler.hpp"

namespace weaksim {

namespace {

constexpr std::size_t kBruteForceLimit = 20;

double mean_cut(const MaxCutInstance &instance, const SampleResult &result) {
    double total = 0;
    for (const auto &[b, count] : result.counts) {
        total += static_cast<double>(cut_value(instance, b) * count);
    }
    return total / static_cast<double>(result.shots);
}

}  // namespace

MaxCutInstance make_maxcut_instance(std::size_t n_nodes, std::vector<Edge> edges) {
    if (n_nodes == 0) {
        throw InvalidSpec("graph needs at least one node");
    }
    std::set<Edge> seen;
    for (auto &e : edges) {
        if (e.first == e.second) {
            throw InvalidSpec("self-loop on node " + std::to_string(e.first));
        }
        if (e.first >= n_nodes || e.second >= n_nodes) {
            throw InvalidSpec("edge endpoint outside the graph");
        }
        if (e.first > e.second) {
            std::swap(e.first, e.second);
        }
        if (!seen.insert(e).second) {
            throw InvalidSpec("duplicate edge " + std::to_string(e.first) + "-" + std::to_string(e.second));
        }
    }
    MaxCutInstance instance;
    instance.n_nodes = n_nodes;
    instance.edges = std::move(edges);
    return instance;
}

MaxCutInstance erdos_renyi_instance(std::size_t n_nodes, double edge_probability, std::uint64_t seed) {
    if (!(edge_probability >= 0 && edge_probability <= 1)) {
        throw InvalidSpec("edge probability must lie in [0, 1]");
    }
    RngStream rng(seed, 0);
    std::vector<Edge> edges;
    for (std::uint32_t i = 0; i < n_nodes; ++i) {
        for (std::uint32_t j = i + 1; j < n_nodes; ++j) {
            if (rng.bernoulli(edge_probability)) {
                edges.emplace_back(i, j);
            }
        }
    }
    MaxCutInstance instance = make_maxcut_instance(n_nodes, std::move(edges));
    instance.seed = seed;
    instance.edge_probability = edge_probability;
    return instance;
}

Circuit build_qaoa_maxcut_circuit(const MaxCutInstance &instance, const QaoaParams &params) {
    if (params.layers == 0) {
        throw InvalidSpec("QAOA needs at least one layer");
    }
    Circuit circuit(instance.n_nodes);
    for (std::uint32_t q = 0; q < instance.n_nodes; ++q) {
        circuit.append(GateType::H, {q});
    }
    for (unsigned layer = 0; layer < params.layers; ++layer) {
        for (const auto &[i, j] : instance.edges) {
            circuit.append(GateType::Cnot, {i, j});
            circuit.append(GateKind::rz(2 * params.gamma), {j});
            circuit.append(GateType::Cnot, {i, j});
        }
        for (std::uint32_t q = 0; q < instance.n_nodes; ++q) {
            circuit.append(GateKind::rx(2 * params.beta), {q});
        }
    }
    circuit.measure_all();
    return circuit;
}

std::size_t cut_value(const MaxCutInstance &instance, const BitString &b) {
    if (b.size() != instance.n_nodes) {
        throw InvalidSpec("bitstring width does not match the graph");
    }
    std::size_t cut = 0;
    for (const auto &[i, j] : instance.edges) {
        cut += b[i] != b[j] ? 1 : 0;
    }
    return cut;
}

std::size_t brute_force_max_cut(const MaxCutInstance &instance) {
    if (instance.n_nodes > kBruteForceLimit) {
        throw InvalidSpec("brute-force max cut is limited to 20 nodes");
    }
    std::size_t best = 0;
    const std::uint64_t total = std::uint64_t{1} << instance.n_nodes;
    for (std::uint64_t x = 0; x < total; ++x) {
        std::size_t cut = 0;
        for (const auto &[i, j] : instance.edges) {
            cut += ((x >> i) ^ (x >> j)) & 1;
        }
        best = std::max(best, cut);
    }
    return best;
}

QaoaReport run_qaoa(const MaxCutInstance &instance, const QaoaOptions &options, const BackendFactory &factory) {
    if (options.grid_size == 0) {
        throw InvalidSpec("grid size must be at least 1");
    }
    const auto start = std::chrono::steady_clock::now();
    QaoaReport report;
    report.instance = instance;

    std::uint64_t point = 0;
    double best_mean = -1;
    for (std::size_t gi = 0; gi < options.grid_size; ++gi) {
        for (std::size_t bi = 0; bi < options.grid_size; ++bi) {
            QaoaParams params;
            params.gamma = std::numbers::pi * static_cast<double>(gi) / static_cast<double>(options.grid_size);
            params.beta = std::numbers::pi / 2 * static_cast<double>(bi) / static_cast<double>(options.grid_size);
            params.layers = options.layers;
            const Circuit circuit = build_qaoa_maxcut_circuit(instance, params);
            const SampleResult result =
                sample_gate_by_gate(circuit, factory, options.sweep_shots, derive_seed(options.seed, 1 + point++));
            const double mean = mean_cut(instance, result);
            report.sweep.push_back({params.gamma, params.beta, mean});
            if (mean > best_mean) {
                best_mean = mean;
                report.best_params = params;
            }
        }
    }

    const Circuit circuit = build_qaoa_maxcut_circuit(instance, report.best_params);
    const SampleResult final_run =
        sample_gate_by_gate(circuit, factory, options.final_shots, derive_seed(options.seed, 1 + point));
    report.backend = final_run.backend;
    report.mean_cut = mean_cut(instance, final_run);
    bool first = true;
    for (const auto &[b, count] : final_run.counts) {
        const std::size_t cut = cut_value(instance, b);
        if (first || cut > report.best_cut) {
            report.best_cut = cut;
            report.best_bitstring = b;
            first = false;
        }
    }
    if (instance.n_nodes <= kBruteForceLimit) {
        report.brute_force_max_cut = brute_force_max_cut(instance);
    }
    report.runtime_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

QaoaReport run_qaoa(const QaoaOptions &options, const BackendFactory &factory) {
    return run_qaoa(erdos_renyi_instance(options.nodes, options.edge_probability, options.seed), options, factory);
}

std::string to_json(const QaoaReport &report) {
    nlohmann::json edges = nlohmann::json::array();
    for (const auto &[i, j] : report.instance.edges) {
        edges.push_back({i, j});
    }
    nlohmann::json sweep = nlohmann::json::array();
    for (const auto &p : report.sweep) {
        sweep.push_back({{"gamma", p.gamma}, {"beta", p.beta}, {"mean_cut", p.mean_cut}});
    }
    nlohmann::json j = {
        {"graph",
         {{"nodes", report.instance.n_nodes},
          {"edge_probability", report.instance.edge_probability},
          {"seed", report.instance.seed},
          {"edges", edges}}},
        {"backend", report.backend},
        {"best_params",
         {{"gamma", report.best_params.gamma},
          {"beta", report.best_params.beta},
          {"layers", report.best_params.layers}}},
        {"best_bitstring", report.best_bitstring.to_string()},
        {"best_cut", report.best_cut},
        {"mean_cut", report.mean_cut},
        {"brute_force_max_cut", report.brute_force_max_cut ? nlohmann::json(*report.brute_force_max_cut)
                                                           : nlohmann::json(nullptr)},
        {"sweep", sweep},
        {"runtime_s", report.runtime_s},
    };
    return j.dump(2) + "\n";
}

}  // namespace weaksim
