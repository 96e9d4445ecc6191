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

#include <gtest/gtest.h>

#include <sstream>

#include "test_support.hpp"
#include "weaksim/backends.hpp"
#include "weaksim/bench.hpp"
#include "weaksim/errors.hpp"
#include "weaksim/qaoa.hpp"
#include "weaksim/statevector.hpp"

namespace weaksim {
namespace {

MaxCutInstance k_n(std::size_t n) {
    std::vector<Edge> edges;
    for (std::uint32_t i = 0; i < n; ++i) {
        for (std::uint32_t j = i + 1; j < n; ++j) {
            edges.emplace_back(i, j);
        }
    }
    return make_maxcut_instance(n, edges);
}

TEST(MaxCut, InstanceValidation) {
    EXPECT_THROW(make_maxcut_instance(3, {{1, 1}}), InvalidSpec);
    EXPECT_THROW(make_maxcut_instance(3, {{0, 1}, {1, 0}}), InvalidSpec);
    EXPECT_THROW(make_maxcut_instance(3, {{0, 3}}), InvalidSpec);
    const auto g = make_maxcut_instance(3, {{2, 0}});
    EXPECT_EQ(g.edges[0], Edge(0, 2));
}

TEST(MaxCut, ErdosRenyiIsDeterministic) {
    const auto a = erdos_renyi_instance(10, 0.3, 4);
    const auto b = erdos_renyi_instance(10, 0.3, 4);
    EXPECT_EQ(a.edges, b.edges);
    EXPECT_EQ(erdos_renyi_instance(6, 1.0, 0).edges.size(), 15u);
    EXPECT_TRUE(erdos_renyi_instance(6, 0.0, 0).edges.empty());
}

TEST(MaxCut, CutValueExamplesAndSymmetry) {
    const auto k2 = k_n(2);
    EXPECT_EQ(cut_value(k2, BitString::from_string("01")), 1u);
    EXPECT_EQ(cut_value(k2, BitString::from_string("00")), 0u);
    const auto g = erdos_renyi_instance(9, 0.5, 2);
    for (std::uint64_t x = 0; x < 512; ++x) {
        const BitString b = BitString::from_index(x, 9);
        EXPECT_EQ(cut_value(g, b), cut_value(g, b.complement()));
    }
    EXPECT_EQ(brute_force_max_cut(k_n(4)), 4u);
    EXPECT_EQ(brute_force_max_cut(k_n(5)), 6u);
}

TEST(Qaoa, EdgelessGraphIsUniform) {
    const auto g = make_maxcut_instance(3, {});
    const auto d = exact_distribution(build_qaoa_maxcut_circuit(g, {0.4, 0.9, 2}));
    ASSERT_EQ(d.size(), 8u);
    for (const auto &[b, p] : d) {
        EXPECT_NEAR(p, 0.125, 1e-12);
    }
}

TEST(Qaoa, IdentityParametersGiveUniformK2) {
    const auto d = exact_distribution(build_qaoa_maxcut_circuit(k_n(2), {0, 0, 1}));
    for (const auto &[b, p] : d) {
        EXPECT_NEAR(p, 0.25, 1e-12);
    }
}

TEST(Qaoa, CircuitShape) {
    const auto c = build_qaoa_maxcut_circuit(k_n(3), {0.1, 0.2, 2});
    EXPECT_EQ(c.size(), 3u + 2 * (3 * 3 + 3) + 1);
    EXPECT_THROW(build_qaoa_maxcut_circuit(k_n(3), {0.1, 0.2, 0}), InvalidSpec);
}

TEST(Qaoa, GridSearchFindsK2Cut) {
    QaoaOptions options;
    options.grid_size = 4;
    options.sweep_shots = 50;
    options.final_shots = 200;
    const auto report = run_qaoa(k_n(2), options, make_backend_factory("mps"));
    EXPECT_EQ(report.best_cut, 1u);
    EXPECT_EQ(report.brute_force_max_cut, 1u);
    EXPECT_EQ(report.sweep.size(), 16u);
}

TEST(Qaoa, K4ReachesMaximum) {
    QaoaOptions options;
    options.nodes = 4;
    options.edge_probability = 1.0;
    options.grid_size = 4;
    const auto report = run_qaoa(options, make_backend_factory("mps"));
    EXPECT_EQ(report.brute_force_max_cut, 4u);
    EXPECT_EQ(report.best_cut, 4u);
    EXPECT_LE(report.best_cut, *report.brute_force_max_cut);
}

TEST(Qaoa, ReportIsDeterministic) {
    QaoaOptions options;
    options.nodes = 5;
    options.grid_size = 3;
    const auto a = run_qaoa(options, make_backend_factory("statevector"));
    const auto b = run_qaoa(options, make_backend_factory("statevector"));
    EXPECT_EQ(a.best_bitstring, b.best_bitstring);
    EXPECT_EQ(a.mean_cut, b.mean_cut);
    EXPECT_NE(to_json(a).find("\"brute_force_max_cut\""), std::string::npos);
}

TEST(Bench, CsvHeaderIsStable) {
    EXPECT_EQ(bench_csv_header(), "backend,sampler,n_qubits,depth,shots,seconds,seed\n");
    BenchRecord r;
    r.backend = "mps";
    r.sampler = "gate-by-gate";
    r.n_qubits = 30;
    r.depth = 4;
    r.shots = 10;
    r.seed = 7;
    EXPECT_EQ(to_csv_row(r), "mps,gate-by-gate,30,4,10,skipped,7\n");
}

TEST(Bench, WidthSweepRowsAreOrderedAndSeeded) {
    BenchSpec spec;
    spec.circuit.family = "clifford";
    spec.circuit.depth = 5;
    spec.axis = SweepAxis::Width;
    spec.values = {3, 4, 27};
    spec.trials = 2;
    spec.shots = 100;
    const auto rows = run_bench(spec);
    ASSERT_EQ(rows.size(), 6u);
    EXPECT_EQ(rows[0].n_qubits, 3u);
    EXPECT_EQ(rows[2].n_qubits, 4u);
    EXPECT_TRUE(rows[0].seconds.has_value());
    EXPECT_FALSE(rows[4].seconds.has_value());
    EXPECT_NE(rows[0].seed, rows[1].seed);
    const auto again = run_bench(spec);
    for (std::size_t k = 0; k < rows.size(); ++k) {
        EXPECT_EQ(rows[k].seed, again[k].seed);
    }
}

TEST(Bench, QubitByQubitNeedsStatevector) {
    BenchSpec spec;
    spec.backend = "mps";
    spec.sampler = "qubit-by-qubit";
    spec.values = {3};
    EXPECT_THROW(run_bench(spec), InvalidSpec);
}

TEST(Bench, FamiliesBuild) {
    FamilySpec f;
    f.qubits = 5;
    for (const char *name : {"ghz", "ghz-random", "random", "clifford", "clifford-t", "fixed-cnot"}) {
        f.family = name;
        const Circuit c = build_family_circuit(f, 1);
        EXPECT_EQ(c.n_qubits(), 5u);
        EXPECT_NE(c.terminal_measure(), nullptr);
    }
    f.family = "nope";
    EXPECT_THROW(build_family_circuit(f, 1), InvalidSpec);
    EXPECT_THROW(sweep_axis_from_name("time"), InvalidSpec);
}

}  // namespace
}  // namespace weaksim
