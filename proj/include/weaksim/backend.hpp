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

#ifndef WEAKSIM_BACKEND_HPP
#define WEAKSIM_BACKEND_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <string_view>

#include "weaksim/bitstring.hpp"
#include "weaksim/circuit.hpp"
#include "weaksim/rng.hpp"

namespace weaksim {

/// What the gate-by-gate sampler needs from a quantum state: a way to
/// apply an operation and the Born probability of one bitstring.
///
/// A backend instance is owned by one evolution at a time. clone() yields an
/// independent copy.
class StateBackend {
  public:
    virtual ~StateBackend() = default;

    virtual std::string_view name() const = 0;
    virtual std::unique_ptr<StateBackend> clone() const = 0;
    virtual std::size_t n_qubits() const = 0;

    /// Whether apply_op accepts ops of this kind. Channels are applied by the
    /// sampler through Pauli ops, so a backend opts into them here.
    virtual bool supports(const GateKind &kind) const = 0;

    /// True if evolving `circuit` on this backend is stochastic, so every
    /// shot needs its own evolution.
    virtual bool needs_trajectories(const Circuit &circuit) const {
        (void)circuit;
        return false;
    }

    /// Applies a unitary op. MEASURE is a no-op. `rng` is only consumed by
    /// stochastic backends.
    virtual void apply_op(const GateOp &op, RngStream &rng) = 0;

    /// |<b|psi>|^2, in [0, 1].
    virtual double probability(const BitString &b) const = 0;

    virtual bool supports_mid_circuit_measure() const {
        return false;
    }

    /// Projects `qubit` onto `bit` and renormalizes. Backends without
    /// mid-circuit measurement throw UnsupportedOp.
    virtual void project(std::uint32_t qubit, bool bit);
};

/// Builds a fresh |0...0> state of the requested width.
using BackendFactory = std::function<std::unique_ptr<StateBackend>(std::size_t n_qubits)>;

/// Throws UnsupportedOp naming the backend and kind if any op is rejected.
void check_supported(const StateBackend &backend, const Circuit &circuit);

}  // namespace weaksim

#endif
