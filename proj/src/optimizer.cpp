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

#include "weaksim/optimizer.hpp"

#include <optional>

namespace weaksim {

namespace {

struct PendingRun {
    std::optional<GateOp> first;
    Matrix2 product{};
    std::size_t length = 0;
};

}  // namespace

Circuit optimize_circuit(const Circuit &circuit) {
    const std::size_t n = circuit.n_qubits();
    Circuit out(n);
    std::vector<PendingRun> pending(n);

    auto flush = [&](std::uint32_t q) {
        PendingRun &run = pending[q];
        if (run.length == 1) {
            out.append(*run.first);
        } else if (run.length > 1) {
            out.append(GateKind::matrix1q(run.product), {q});
        }
        run = PendingRun{};
    };

    const auto &ops = circuit.ops();
    for (std::size_t k = 0; k < ops.size(); ++k) {
        const GateOp &op = ops[k];
        if (op.kind.is_unitary() && op.kind.arity() == 1) {
            PendingRun &run = pending[op.qubits[0]];
            Matrix2 m = op.kind.matrix1q();
            if (run.length == 0) {
                run.first = op;
                run.product = m;
            } else {
                run.product = matmul(m, run.product);
            }
            ++run.length;
            continue;
        }
        const bool terminal_measure = op.kind.type() == GateType::Measure && k + 1 == ops.size();
        if (terminal_measure) {
            for (std::uint32_t q = 0; q < n; ++q) {
                flush(q);
            }
        } else {
            for (auto q : op.qubits) {
                flush(q);
            }
        }
        out.append(op);
    }
    // A trailing MEASURE was appended above; only unterminated runs remain.
    for (std::uint32_t q = 0; q < n; ++q) {
        flush(q);
    }
    return out;
}

}  // namespace weaksim
