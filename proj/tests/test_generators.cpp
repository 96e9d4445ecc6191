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

#include "weaksim/generators.hpp"

#include <gtest/gtest.h>

#include <set>

#include "weaksim/errors.hpp"
#include "weaksim/statevector.hpp"

namespace weaksim {
namespace {

const std::vector<GateType> kMixed = {GateType::H, GateType::T, GateType::Rx, GateType::Cnot, GateType::Cz};

TEST(Generators, SameSeedSameCircuit) {
    EXPECT_EQ(generate_random_circuit(6, 20, kMixed, 0.3, 11), generate_random_circuit(6, 20, kMixed, 0.3, 11));
    EXPECT_FALSE(generate_random_circuit(6, 20, kMixed, 0.3, 11) == generate_random_circuit(6, 20, kMixed, 0.3, 12));
    EXPECT_EQ(generate_ghz_random_cnot(7, 3), generate_ghz_random_cnot(7, 3));
    EXPECT_EQ(generate_fixed_cnot_circuit(9, 8, 16, 5), generate_fixed_cnot_circuit(9, 8, 16, 5));
}

TEST(Generators, RandomCircuitInvariants) {
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        const std::size_t n = 1 + seed % 9;
        const std::size_t moments = 1 + seed % 13;
        const Circuit c = generate_random_circuit(n, moments, kMixed, 0.5, seed);
        std::size_t covered = 0;
        for (const auto &op : c.ops()) {
            EXPECT_TRUE(op.kind.is_unitary());
            if (op.kind.is_rotation()) {
                EXPECT_GE(op.kind.param(), 0.0);
                EXPECT_LT(op.kind.param(), 2 * std::numbers::pi);
            }
            covered += op.qubits.size();
        }
        EXPECT_EQ(covered, n * moments);
        EXPECT_EQ(c.terminal_measure(), nullptr);
    }
}

TEST(Generators, RejectsInvalidSpecs) {
    EXPECT_THROW(generate_random_circuit(3, 5, {GateType::Measure}, 0.2, 0), InvalidSpec);
    EXPECT_THROW(generate_random_circuit(1, 5, {GateType::Cnot}, 0.2, 0), InvalidSpec);
    EXPECT_THROW(generate_random_circuit(3, 5, {}, 0.2, 0), InvalidSpec);
    EXPECT_THROW(generate_ghz_random_cnot(1, 0), InvalidSpec);
}

TEST(Generators, TwoQubitOnlySetStillCoversQubits) {
    const Circuit c = generate_random_circuit(4, 3, {GateType::Cnot}, 0.0, 1);
    EXPECT_EQ(c.size(), 6u);
}

TEST(Generators, GhzFamiliesPrepareGhz) {
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        for (const Circuit &c : {generate_ghz(5), generate_ghz_random_cnot(5, seed)}) {
            const DenseState state = simulate_dense(c);
            EXPECT_NEAR(state.probability(BitString::from_string("00000")), 0.5, 1e-12);
            EXPECT_NEAR(state.probability(BitString::from_string("11111")), 0.5, 1e-12);
        }
    }
}

TEST(Generators, FixedCnotCounts) {
    const Circuit c = generate_fixed_cnot_circuit(12, 8, 16, 2);
    std::size_t cnots = 0;
    for (const auto &op : c.ops()) {
        cnots += op.kind.type() == GateType::Cnot ? 1 : 0;
    }
    EXPECT_EQ(cnots, 8u);
    EXPECT_EQ(c.size(), 24u);
}

}  // namespace
}  // namespace weaksim
