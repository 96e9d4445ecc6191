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

#ifndef WEAKSIM_MPS_HPP
#define WEAKSIM_MPS_HPP

#include <Eigen/Dense>
#include <array>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <vector>

#include "weaksim/backend.hpp"
#include "weaksim/gate.hpp"

namespace weaksim {

/// Open-chain matrix product state. Site k holds one (chi_left x chi_right)
/// matrix per physical value, with chi = 1 at both ends. An orthogonality
/// center is tracked so two-site splits see true Schmidt values.
class Mps {
  public:
    using Matrix = Eigen::MatrixXcd;
    /// chi_max == 0 means unbounded.
    static constexpr std::size_t kUnbounded = 0;

    Mps(std::size_t n_qubits, std::size_t chi_max);

    std::size_t n_qubits() const noexcept {
        return sites_.size();
    }
    std::size_t chi_max() const noexcept {
        return chi_max_;
    }
    double truncation_error() const noexcept {
        return truncation_error_;
    }
    /// Bond dimension between site k and k+1, for k in [0, n-2].
    std::size_t bond_dimension(std::size_t k) const {
        return sites_[k][0].cols();
    }
    std::size_t max_bond_dimension() const;
    const std::array<Matrix, 2> &site(std::size_t k) const {
        return sites_[k];
    }

    void apply_1q(const Matrix2 &m, std::uint32_t q);
    /// Any pair of distinct qubits; non-adjacent pairs are routed with SWAPs
    /// and moved back afterwards. `m` is indexed by 2*bit(q0) + bit(q1).
    void apply_2q(const Matrix4 &m, std::uint32_t q0, std::uint32_t q1);
    void apply(const GateOp &op);

    /// Selects the physical slice matching each bit and contracts the
    /// remaining bond chain left to right. O(n chi^2).
    cplx amplitude(const BitString &b) const;
    /// Same scalar contracted right to left.
    cplx amplitude_right_to_left(const BitString &b) const;
    double probability(const BitString &b) const;

    /// Full 2^n state vector (big-endian index). Testing aid for small n.
    std::vector<cplx> to_dense() const;

  private:
    /// Gate on sites (k, k+1), `m` indexed by 2*bit(k) + bit(k+1).
    void apply_adjacent(const Matrix4 &m, std::size_t k);
    void move_center(std::size_t k);

    std::vector<std::array<Matrix, 2>> sites_;
    std::size_t chi_max_;
    std::size_t center_ = 0;
    double truncation_error_ = 0;
};

class MpsBackend final : public StateBackend {
  public:
    MpsBackend(std::size_t n_qubits, std::size_t chi_max) : state_(n_qubits, chi_max) {
    }

    std::string_view name() const override {
        return "mps";
    }
    std::unique_ptr<StateBackend> clone() const override {
        return std::make_unique<MpsBackend>(*this);
    }
    std::size_t n_qubits() const override {
        return state_.n_qubits();
    }
    bool supports(const GateKind &kind) const override {
        return !kind.is_channel();
    }
    void apply_op(const GateOp &op, RngStream &rng) override;
    double probability(const BitString &b) const override {
        return state_.probability(b);
    }

    const Mps &state() const noexcept {
        return state_;
    }

  private:
    Mps state_;
};

BackendFactory mps_factory(std::size_t chi_max = Mps::kUnbounded);

}  // namespace weaksim

#endif
