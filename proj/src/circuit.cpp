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

#include "weaksim/circuit.hpp"

#include <algorithm>
#include <string>

#include "weaksim/errors.hpp"

namespace weaksim {

Circuit::Circuit(std::size_t n_qubits) : n_qubits_(n_qubits) {
    if (n_qubits == 0) {
        throw InvalidSpec("a circuit needs at least one qubit");
    }
}

Circuit &Circuit::append(GateOp op) {
    const auto name = std::string(gate_type_name(op.kind.type()));
    const unsigned arity = op.kind.arity();
    if (arity == 0) {
        if (op.qubits.empty() || op.qubits.size() > n_qubits_) {
            throw InvalidSpec("MEASURE needs between 1 and n_qubits qubits");
        }
    } else if (op.qubits.size() != arity) {
        throw InvalidSpec(name + " expects " + std::to_string(arity) + " qubit(s), got " +
                          std::to_string(op.qubits.size()));
    }
    for (std::size_t k = 0; k < op.qubits.size(); ++k) {
        if (op.qubits[k] >= n_qubits_) {
            throw InvalidSpec(name + " on qubit " + std::to_string(op.qubits[k]) + " outside a " +
                              std::to_string(n_qubits_) + "-qubit circuit");
        }
        if (std::find(op.qubits.begin(), op.qubits.begin() + k, op.qubits[k]) != op.qubits.begin() + k) {
            throw InvalidSpec(name + " lists qubit " + std::to_string(op.qubits[k]) + " twice");
        }
    }
    if (!ops_.empty() && ops_.back().kind.type() == GateType::Measure && ops_.back().qubits.size() > 1) {
        throw InvalidSpec("a multi-qubit MEASURE must be the final op");
    }
    ops_.push_back(std::move(op));
    return *this;
}

Circuit &Circuit::append(GateType type, std::vector<std::uint32_t> qubits) {
    return append(make_op(type, std::move(qubits)));
}

Circuit &Circuit::append(GateKind kind, std::vector<std::uint32_t> qubits) {
    return append(make_op(std::move(kind), std::move(qubits)));
}

Circuit &Circuit::measure_all() {
    std::vector<std::uint32_t> all(n_qubits_);
    for (std::uint32_t q = 0; q < n_qubits_; ++q) {
        all[q] = q;
    }
    return append(GateType::Measure, std::move(all));
}

const GateOp *Circuit::terminal_measure() const noexcept {
    if (!ops_.empty() && ops_.back().kind.type() == GateType::Measure) {
        return &ops_.back();
    }
    return nullptr;
}

bool Circuit::has_channels() const noexcept {
    return std::any_of(ops_.begin(), ops_.end(), [](const GateOp &op) { return op.kind.is_channel(); });
}

bool Circuit::has_mid_circuit_measure() const noexcept {
    for (std::size_t k = 0; k + 1 < ops_.size(); ++k) {
        if (ops_[k].kind.type() == GateType::Measure) {
            return true;
        }
    }
    return false;
}

}  // namespace weaksim
