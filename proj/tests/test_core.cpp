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

#include <numbers>
#include <unordered_set>

#include "weaksim/bitstring.hpp"
#include "weaksim/circuit.hpp"
#include "weaksim/errors.hpp"
#include "weaksim/gate.hpp"
#include "weaksim/rng.hpp"

namespace weaksim {
namespace {

TEST(BitString, QubitZeroIsLeftmost) {
    const BitString b = BitString::from_string("100");
    EXPECT_TRUE(b[0]);
    EXPECT_FALSE(b[2]);
    EXPECT_EQ(b.to_index(), 4u);
    EXPECT_EQ(BitString::from_index(4, 3), b);
    EXPECT_EQ(b.to_string(), "100");
}

TEST(BitString, RoundTripsAcrossWordBoundary) {
    std::string text(130, '0');
    text[0] = '1';
    text[63] = '1';
    text[64] = '1';
    text[129] = '1';
    const BitString b = BitString::from_string(text);
    EXPECT_EQ(b.to_string(), text);
    EXPECT_EQ(b.popcount(), 4u);
    EXPECT_EQ(b.complement().popcount(), 126u);
}

TEST(BitString, RejectsBadCharacters) {
    EXPECT_THROW(BitString::from_string("01x"), InvalidSpec);
}

TEST(BitString, SelectAndFlip) {
    BitString b = BitString::from_string("0110");
    EXPECT_EQ(b.select({2, 0}).to_string(), "10");
    b.flip(0);
    EXPECT_EQ(b.to_string(), "1110");
    b.set(1, false);
    EXPECT_EQ(b.to_string(), "1010");
}

TEST(BitString, OrderingAndHash) {
    std::unordered_set<BitString> seen;
    for (std::uint64_t x = 0; x < 16; ++x) {
        seen.insert(BitString::from_index(x, 4));
    }
    EXPECT_EQ(seen.size(), 16u);
    EXPECT_LT(BitString::from_string("0011"), BitString::from_string("0100"));
}

TEST(Gate, AnglesAreNormalized) {
    EXPECT_NEAR(GateKind::rz(-std::numbers::pi / 2).param(), 3 * std::numbers::pi / 2, 1e-15);
    EXPECT_NEAR(GateKind::rx(5 * std::numbers::pi).param(), std::numbers::pi, 1e-12);
    EXPECT_EQ(GateKind::rz(2 * std::numbers::pi).param(), 0.0);
}

TEST(Gate, ChannelProbabilityIsValidated) {
    EXPECT_THROW(GateKind::bit_flip(1.5), InvalidSpec);
    EXPECT_THROW(GateKind::depolarize(-0.1), InvalidSpec);
    EXPECT_NO_THROW(GateKind::bit_flip(0.2));
}

TEST(Gate, MatricesAreUnitary) {
    const GateType types[] = {GateType::H, GateType::X,   GateType::Y, GateType::Z,
                              GateType::S, GateType::Sdg, GateType::T, GateType::Tdg};
    for (GateType t : types) {
        const Matrix2 m = GateKind::simple(t).matrix1q();
        EXPECT_LT(unitarity_error({m.begin(), m.end()}, 2), 1e-14) << gate_type_name(t);
    }
    for (GateType t : {GateType::Cnot, GateType::Cz, GateType::Swap}) {
        const Matrix4 m = GateKind::simple(t).matrix2q();
        EXPECT_LT(unitarity_error({m.begin(), m.end()}, 4), 1e-14) << gate_type_name(t);
    }
    EXPECT_THROW(GateKind::matrix1q({cplx(1), cplx(1), cplx(0), cplx(1)}), InvalidSpec);
}

TEST(Gate, NamesRoundTrip) {
    for (auto t : {GateType::H, GateType::Sdg, GateType::Cnot, GateType::BitFlip, GateType::Matrix2Q}) {
        EXPECT_EQ(gate_type_from_name(gate_type_name(t)), t);
    }
    EXPECT_FALSE(gate_type_from_name("TOFFOLI").has_value());
}

TEST(Circuit, AppendValidatesSupport) {
    Circuit c(3);
    EXPECT_THROW(c.append(GateType::H, {3}), InvalidSpec);
    EXPECT_THROW(c.append(GateType::Cnot, {1, 1}), InvalidSpec);
    EXPECT_THROW(c.append(GateType::Cnot, {1}), InvalidSpec);
    EXPECT_THROW(c.append(GateType::H, {0, 1}), InvalidSpec);
    EXPECT_NO_THROW(c.append(GateType::Cnot, {2, 0}));
    EXPECT_EQ(c.size(), 1u);
    EXPECT_THROW(Circuit(0), InvalidSpec);
}

TEST(Circuit, MultiQubitMeasureMustBeLast) {
    Circuit c(2);
    c.append(GateType::Measure, {0});
    c.append(GateType::H, {0});
    EXPECT_TRUE(c.has_mid_circuit_measure());
    c.measure_all();
    EXPECT_NE(c.terminal_measure(), nullptr);
    EXPECT_THROW(c.append(GateType::H, {1}), InvalidSpec);
}

TEST(Circuit, StructuralEquality) {
    Circuit a(2);
    Circuit b(2);
    a.append(GateKind::rz(0.5), {1});
    b.append(GateKind::rz(0.5 + 2 * std::numbers::pi), {1});
    EXPECT_NEAR(a.ops()[0].kind.param(), b.ops()[0].kind.param(), 1e-15);
    a.append(GateType::Cz, {0, 1});
    b.append(GateType::Cz, {1, 0});
    EXPECT_FALSE(a == b);
}

TEST(Rng, StreamsAreReproducibleAndDistinct) {
    RngStream a(42, 3);
    RngStream b(42, 3);
    RngStream c(42, 4);
    bool differs = false;
    for (int k = 0; k < 100; ++k) {
        const double x = a.uniform();
        EXPECT_EQ(x, b.uniform());
        differs |= x != c.uniform();
    }
    EXPECT_TRUE(differs);
    EXPECT_NE(derive_seed(1, 0), derive_seed(1, 1));
    EXPECT_EQ(derive_seed(9, 9), derive_seed(9, 9));
}

TEST(Rng, BinomialEdgeCases) {
    RngStream rng(1, 0);
    EXPECT_EQ(rng.binomial(10, 0.0), 0u);
    EXPECT_EQ(rng.binomial(10, 1.0), 10u);
    EXPECT_EQ(rng.binomial(0, 0.5), 0u);
}

}  // namespace
}  // namespace weaksim
