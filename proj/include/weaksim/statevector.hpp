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

#ifndef WEAKSIM_STATEVECTOR_HPP
#define WEAKSIM_STATEVECTOR_HPP

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <vector>

#include "weaksim/backend.hpp"
#include "weaksim/gate.hpp"

namespace weaksim {

/// 2^n complex amplitudes. Amplitude index is the big-endian encoding of the
/// bitstring, so qubit q lives at bit (n - 1 - q) of the index.
class DenseState {
  public:
    static constexpr std::size_t kMaxQubits = 30;

    explicit DenseState(std::size_t n_qubits);

    std::size_t n_qubits() const noexcept {
        return n_;
    }
    const std::vector<cplx> &amplitudes() const noexcept {
        return amps_;
    }

    void apply_1q(const Matrix2 &m, std::uint32_t q);
    /// `m` is indexed by 2*bit(q0) + bit(q1).
    void apply_2q(const Matrix4 &m, std::uint32_t q0, std::uint32_t q1);
    /// Unitary ops only; MEASURE is a no-op, channels throw UnsupportedOp.
    void apply(const GateOp &op);

    cplx amplitude(const BitString &b) const;
    double probability(const BitString &b) const;
    void project(std::uint32_t q, bool bit);
    double norm_squared() const;

  private:
    std::size_t n_;
    std::vector<cplx> amps_;
};

class StatevectorBackend final : public StateBackend {
  public:
    explicit StatevectorBackend(std::size_t n_qubits) : state_(n_qubits) {
    }

    std::string_view name() const override {
        return "statevector";
    }
    std::unique_ptr<StateBackend> clone() const override {
        return std::make_unique<StatevectorBackend>(*this);
    }
    std::size_t n_qubits() const override {
        return state_.n_qubits();
    }
    bool supports(const GateKind &kind) const override;
    void apply_op(const GateOp &op, RngStream &rng) override;
    double probability(const BitString &b) const override {
        return state_.probability(b);
    }
    bool supports_mid_circuit_measure() const override {
        return true;
    }
    void project(std::uint32_t qubit, bool bit) override {
        state_.project(qubit, bit);
    }

    const DenseState &state() const noexcept {
        return state_;
    }

  private:
    DenseState state_;
};

BackendFactory statevector_factory();

/// Final state of a unitary circuit (MEASURE ops ignored).
DenseState simulate_dense(const Circuit &circuit);

/// Exact output distribution keyed like SampleResult::counts, dropping
/// outcomes below `cutoff`.
std::map<BitString, double> exact_distribution(const Circuit &circuit, double cutoff = 0);

}  // namespace weaksim

#endif
