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

#include <algorithm>
#include <numbers>

#include "weaksim/errors.hpp"
#include "weaksim/rng.hpp"

namespace weaksim {

namespace {

GateKind random_kind(GateType type, RngStream &rng) {
    switch (type) {
        case GateType::Rx:
            return GateKind::rx(2 * std::numbers::pi * rng.uniform());
        case GateType::Ry:
            return GateKind::ry(2 * std::numbers::pi * rng.uniform());
        case GateType::Rz:
            return GateKind::rz(2 * std::numbers::pi * rng.uniform());
        default:
            return GateKind::simple(type);
    }
}

template <typename T>
void shuffle(std::vector<T> &items, RngStream &rng) {
    // Fisher-Yates with our own index draws so the order does not depend on
    // the standard library's std::shuffle.
    for (std::size_t i = items.size(); i > 1; --i) {
        std::swap(items[i - 1], items[rng.below(i)]);
    }
}

}  // namespace

Circuit generate_random_circuit(std::size_t n_qubits,
                                std::size_t n_moments,
                                const std::vector<GateType> &gate_set,
                                double two_qubit_fraction,
                                std::uint64_t seed) {
    if (gate_set.empty()) {
        throw InvalidSpec("gate set must not be empty");
    }
    if (!(two_qubit_fraction >= 0 && two_qubit_fraction <= 1)) {
        throw InvalidSpec("two_qubit_fraction must lie in [0, 1]");
    }
    std::vector<GateType> one_q;
    std::vector<GateType> two_q;
    for (auto type : gate_set) {
        switch (type) {
            case GateType::Measure:
            case GateType::BitFlip:
            case GateType::Depolarize:
            case GateType::Matrix1Q:
            case GateType::Matrix2Q:
                throw InvalidSpec("random circuits only draw parameter-free gates and rotations, got " +
                                  std::string(gate_type_name(type)));
            default:
                break;
        }
        (gate_type_arity(type) == 2 ? two_q : one_q).push_back(type);
    }
    if (one_q.empty() && n_qubits < 2) {
        throw InvalidSpec("a two-qubit gate set needs at least two qubits");
    }

    Circuit circuit(n_qubits);
    RngStream rng(seed, 0);
    std::vector<std::uint32_t> order(n_qubits);
    for (std::size_t m = 0; m < n_moments; ++m) {
        for (std::uint32_t q = 0; q < n_qubits; ++q) {
            order[q] = q;
        }
        shuffle(order, rng);
        std::size_t k = 0;
        while (k < order.size()) {
            const bool room = k + 1 < order.size();
            bool place_two = false;
            if (room && !two_q.empty()) {
                place_two = one_q.empty() || rng.bernoulli(two_qubit_fraction);
            }
            if (place_two) {
                GateType type = two_q[rng.below(two_q.size())];
                circuit.append(random_kind(type, rng), {order[k], order[k + 1]});
                k += 2;
            } else if (!one_q.empty()) {
                GateType type = one_q[rng.below(one_q.size())];
                circuit.append(random_kind(type, rng), {order[k]});
                k += 1;
            } else {
                k += 1;
            }
        }
    }
    return circuit;
}

Circuit generate_ghz_random_cnot(std::size_t n_qubits, std::uint64_t seed) {
    if (n_qubits < 2) {
        throw InvalidSpec("a random-CNOT GHZ circuit needs at least two qubits");
    }
    RngStream rng(seed, 0);
    std::vector<std::uint32_t> order(n_qubits);
    for (std::uint32_t q = 0; q < n_qubits; ++q) {
        order[q] = q;
    }
    shuffle(order, rng);

    Circuit circuit(n_qubits);
    circuit.append(GateType::H, {order[0]});
    for (std::size_t k = 1; k < n_qubits; ++k) {
        std::uint32_t control = order[rng.below(k)];
        circuit.append(GateType::Cnot, {control, order[k]});
    }
    return circuit;
}

Circuit generate_ghz(std::size_t n_qubits) {
    Circuit circuit(n_qubits);
    circuit.append(GateType::H, {0});
    for (std::uint32_t q = 1; q < n_qubits; ++q) {
        circuit.append(GateType::Cnot, {q - 1, q});
    }
    return circuit;
}

Circuit generate_fixed_cnot_circuit(std::size_t n_qubits,
                                    std::size_t n_cnots,
                                    std::size_t n_single,
                                    std::uint64_t seed) {
    if (n_cnots > 0 && n_qubits < 2) {
        throw InvalidSpec("CNOTs need at least two qubits");
    }
    static constexpr GateType kSingles[] = {GateType::H, GateType::S, GateType::T,
                                            GateType::Rx, GateType::Ry, GateType::Rz};
    RngStream rng(seed, 0);
    Circuit circuit(n_qubits);
    const std::size_t total = n_cnots + n_single;
    std::size_t cnots_left = n_cnots;
    for (std::size_t k = 0; k < total; ++k) {
        const std::size_t remaining = total - k;
        if (rng.below(remaining) < cnots_left) {
            auto a = static_cast<std::uint32_t>(rng.below(n_qubits));
            auto b = static_cast<std::uint32_t>(rng.below(n_qubits - 1));
            if (b >= a) {
                ++b;
            }
            circuit.append(GateType::Cnot, {a, b});
            --cnots_left;
        } else {
            GateType type = kSingles[rng.below(std::size(kSingles))];
            circuit.append(random_kind(type, rng), {static_cast<std::uint32_t>(rng.below(n_qubits))});
        }
    }
    return circuit;
}

}  // namespace weaksim
