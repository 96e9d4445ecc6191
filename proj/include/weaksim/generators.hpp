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

#ifndef WEAKSIM_GENERATORS_HPP
#define WEAKSIM_GENERATORS_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

#include "weaksim/circuit.hpp"

namespace weaksim {

/// Random circuit built moment by moment. Each moment visits the qubits in
/// a random order and covers every one of them: with probability
/// `two_qubit_fraction` (and when at least two qubits are still free) it
/// places a two-qubit gate from `gate_set` on the current qubit and another
/// free one, otherwise a single-qubit gate. Rotations get an angle drawn
/// uniformly from [0, 2pi). No MEASURE is appended.
///
/// Only unitary gate types without explicit matrices are accepted.
Circuit generate_random_circuit(std::size_t n_qubits,
                                std::size_t n_moments,
                                const std::vector<GateType> &gate_set,
                                double two_qubit_fraction,
                                std::uint64_t seed);

/// H on a random qubit followed by n-1 CNOTs, each from an already
/// entangled qubit onto a fresh one, in random order. Prepares GHZ(n).
Circuit generate_ghz_random_cnot(std::size_t n_qubits, std::uint64_t seed);

/// H on qubit 0 and a CNOT chain 0->1->...->n-1.
Circuit generate_ghz(std::size_t n_qubits);

/// Width-scaling family with a fixed amount of entanglement: `n_cnots`
/// CNOTs between random qubit pairs interleaved with `n_single` random
/// single-qubit gates from {H, S, T, RX, RY, RZ}.
Circuit generate_fixed_cnot_circuit(std::size_t n_qubits,
                                    std::size_t n_cnots,
                                    std::size_t n_single,
                                    std::uint64_t seed);

}  // namespace weaksim

#endif
