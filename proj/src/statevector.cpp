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

#include "weaksim/statevector.hpp"

#include <cmath>
#include <string>

#include "weaksim/errors.hpp"

namespace weaksim {

namespace {

std::size_t index_of(const BitString &b) {
    std::size_t index = 0;
    for (std::size_t q = 0; q < b.size(); ++q) {
        index = (index << 1) | static_cast<std::size_t>(b[q]);
    }
    return index;
}

}  // namespace

DenseState::DenseState(std::size_t n_qubits) : n_(n_qubits) {
    if (n_qubits == 0 || n_qubits > kMaxQubits) {
        throw InvalidSpec("dense state supports 1.." + std::to_string(kMaxQubits) + " qubits, got " +
                          std::to_string(n_qubits));
    }
    amps_.assign(std::size_t{1} << n_qubits, cplx{0, 0});
    amps_[0] = 1;
}

void DenseState::apply_1q(const Matrix2 &m, std::uint32_t q) {
    const std::size_t stride = std::size_t{1} << (n_ - 1 - q);
    const std::size_t size = amps_.size();
    for (std::size_t block = 0; block < size; block += 2 * stride) {
        for (std::size_t i = block; i < block + stride; ++i) {
            const cplx a0 = amps_[i];
            const cplx a1 = amps_[i + stride];
            amps_[i] = m[0] * a0 + m[1] * a1;
            amps_[i + stride] = m[2] * a0 + m[3] * a1;
        }
    }
}

void DenseState::apply_2q(const Matrix4 &m, std::uint32_t q0, std::uint32_t q1) {
    const std::size_t s0 = std::size_t{1} << (n_ - 1 - q0);
    const std::size_t s1 = std::size_t{1} << (n_ - 1 - q1);
    const std::size_t size = amps_.size();
    for (std::size_t i = 0; i < size; ++i) {
        if (i & (s0 | s1)) {
            continue;
        }
        const std::size_t idx[4] = {i, i | s1, i | s0, i | s0 | s1};
        const cplx a[4] = {amps_[idx[0]], amps_[idx[1]], amps_[idx[2]], amps_[idx[3]]};
        for (std::size_t r = 0; r < 4; ++r) {
            amps_[idx[r]] = m[4 * r] * a[0] + m[4 * r + 1] * a[1] + m[4 * r + 2] * a[2] + m[4 * r + 3] * a[3];
        }
    }
}

void DenseState::apply(const GateOp &op) {
    if (op.kind.type() == GateType::Measure) {
        return;
    }
    if (op.kind.is_channel()) {
        throw UnsupportedOp("dense state cannot apply channel " + std::string(gate_type_name(op.kind.type())) +
                            " directly");
    }
    if (op.kind.arity() == 1) {
        apply_1q(op.kind.matrix1q(), op.qubits[0]);
    } else {
        apply_2q(op.kind.matrix2q(), op.qubits[0], op.qubits[1]);
    }
}

cplx DenseState::amplitude(const BitString &b) const {
    return amps_[index_of(b)];
}

double DenseState::probability(const BitString &b) const {
    return std::norm(amps_[index_of(b)]);
}

void DenseState::project(std::uint32_t q, bool bit) {
    const std::size_t mask = std::size_t{1} << (n_ - 1 - q);
    double kept = 0;
    for (std::size_t i = 0; i < amps_.size(); ++i) {
        if (static_cast<bool>(i & mask) != bit) {
            amps_[i] = 0;
        } else {
            kept += std::norm(amps_[i]);
        }
    }
    if (kept <= 0) {
        throw NumericalUnderflow("projection of qubit " + std::to_string(q) + " onto a zero-probability outcome");
    }
    const double scale = 1 / std::sqrt(kept);
    for (auto &a : amps_) {
        a *= scale;
    }
}

double DenseState::norm_squared() const {
    double total = 0;
    for (const auto &a : amps_) {
        total += std::norm(a);
    }
    return total;
}

bool StatevectorBackend::supports(const GateKind &kind) const {
    (void)kind;
    return true;
}

void StatevectorBackend::apply_op(const GateOp &op, RngStream &rng) {
    (void)rng;
    state_.apply(op);
}

BackendFactory statevector_factory() {
    return [](std::size_t n) { return std::make_unique<StatevectorBackend>(n); };
}

DenseState simulate_dense(const Circuit &circuit) {
    DenseState state(circuit.n_qubits());
    for (const auto &op : circuit.ops()) {
        state.apply(op);
    }
    return state;
}

std::map<BitString, double> exact_distribution(const Circuit &circuit, double cutoff) {
    const DenseState state = simulate_dense(circuit);
    const std::size_t n = circuit.n_qubits();
    const GateOp *measure = circuit.terminal_measure();
    std::map<BitString, double> dist;
    for (std::size_t i = 0; i < state.amplitudes().size(); ++i) {
        const double p = std::norm(state.amplitudes()[i]);
        if (p <= cutoff) {
            continue;
        }
        BitString b = BitString::from_index(i, n);
        dist[measure ? b.select(measure->qubits) : b] += p;
    }
    return dist;
}

}  // namespace weaksim
