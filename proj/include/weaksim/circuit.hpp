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

#ifndef WEAKSIM_CIRCUIT_HPP
#define WEAKSIM_CIRCUIT_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

#include "weaksim/gate.hpp"

namespace weaksim {

/// Ordered gate list over a fixed number of qubits.
///
/// Invariants enforced by append():
///  - every support index is < n_qubits and distinct,
///  - support length matches the kind's arity (MEASURE: 1..n qubits),
///  - a MEASURE over more than one qubit can only be the last op.
///
/// Two circuits are structurally equal when their widths and op lists
/// (kinds, parameters and supports, in order) are equal.
class Circuit {
  public:
    explicit Circuit(std::size_t n_qubits);

    std::size_t n_qubits() const noexcept {
        return n_qubits_;
    }
    const std::vector<GateOp> &ops() const noexcept {
        return ops_;
    }
    std::size_t size() const noexcept {
        return ops_.size();
    }

    /// Validates and appends. Throws InvalidSpec.
    Circuit &append(GateOp op);
    Circuit &append(GateType type, std::vector<std::uint32_t> qubits);
    Circuit &append(GateKind kind, std::vector<std::uint32_t> qubits);
    /// Appends a MEASURE over every qubit.
    Circuit &measure_all();

    /// The last op if it is a MEASURE.
    const GateOp *terminal_measure() const noexcept;
    bool has_channels() const noexcept;
    /// True if some MEASURE op is not the last op.
    bool has_mid_circuit_measure() const noexcept;

    bool operator==(const Circuit &other) const = default;

  private:
    std::size_t n_qubits_;
    std::vector<GateOp> ops_;
};

}  // namespace weaksim

#endif
