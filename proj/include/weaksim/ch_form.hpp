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

#ifndef WEAKSIM_CH_FORM_HPP
#define WEAKSIM_CH_FORM_HPP

#include <bit>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <vector>

#include "weaksim/backend.hpp"
#include "weaksim/gate.hpp"

namespace weaksim {

/// Packed row over GF(2); bit j lives at word j/64, position j%64.
class Gf2Row {
  public:
    Gf2Row() = default;
    explicit Gf2Row(std::size_t n) : words_((n + 63) / 64, 0) {
    }

    bool get(std::size_t j) const noexcept {
        return (words_[j >> 6] >> (j & 63)) & 1;
    }
    void set(std::size_t j, bool value) noexcept {
        const std::uint64_t mask = std::uint64_t{1} << (j & 63);
        words_[j >> 6] = value ? (words_[j >> 6] | mask) : (words_[j >> 6] & ~mask);
    }
    void flip(std::size_t j) noexcept {
        words_[j >> 6] ^= std::uint64_t{1} << (j & 63);
    }

    Gf2Row &operator^=(const Gf2Row &other) noexcept {
        for (std::size_t k = 0; k < words_.size(); ++k) {
            words_[k] ^= other.words_[k];
        }
        return *this;
    }
    friend Gf2Row operator^(Gf2Row a, const Gf2Row &b) noexcept {
        a ^= b;
        return a;
    }
    friend Gf2Row operator&(Gf2Row a, const Gf2Row &b) noexcept {
        for (std::size_t k = 0; k < a.words_.size(); ++k) {
            a.words_[k] &= b.words_[k];
        }
        return a;
    }
    Gf2Row operator~() const noexcept {
        Gf2Row out(*this);
        for (auto &w : out.words_) {
            w = ~w;
        }
        return out;
    }

    /// Parity of popcount(this & other).
    bool dot(const Gf2Row &other) const noexcept {
        std::uint64_t acc = 0;
        for (std::size_t k = 0; k < words_.size(); ++k) {
            acc ^= words_[k] & other.words_[k];
        }
        return std::popcount(acc) & 1;
    }
    /// popcount(this & other) restricted to the first n bits.
    std::size_t count_and(const Gf2Row &other, std::size_t n) const noexcept;
    std::size_t count(std::size_t n) const noexcept;

    bool operator==(const Gf2Row &other) const = default;

  private:
    std::vector<std::uint64_t> words_;
};

/// Stabilizer state omega * U_C * U_H * |s>, where U_C is a product of
/// S, CZ and CNOT gates recorded through its action on Paulis:
///
///   U_C^-1 Z_p U_C = prod_j Z_j^G[p][j]
///   U_C^-1 X_p U_C = i^gamma[p] prod_j X_j^F[p][j] Z_j^M[p][j]
///
/// and U_H = prod_j H_j^v[j].
///
/// Gate methods left-multiply the state by the gate with its exact phase.
class ChForm {
  public:
    explicit ChForm(std::size_t n_qubits);

    std::size_t n_qubits() const noexcept {
        return n_;
    }

    void apply_h(std::uint32_t q);
    void apply_s(std::uint32_t q);
    void apply_sdg(std::uint32_t q);
    void apply_x(std::uint32_t q);
    void apply_y(std::uint32_t q);
    void apply_z(std::uint32_t q);
    void apply_cnot(std::uint32_t control, std::uint32_t target);
    void apply_cz(std::uint32_t a, std::uint32_t b);
    void apply_swap(std::uint32_t a, std::uint32_t b);

    /// <b|psi> with its full phase. O(n^2).
    cplx amplitude(const BitString &b) const;
    /// |<b|psi>|^2 = |omega|^2 2^-|v| when (bF)_j = s_j for all j with
    /// v_j = 0, else 0. O(n^2).
    double probability(const BitString &b) const;

    bool F(std::size_t p, std::size_t j) const {
        return f_[p].get(j);
    }
    bool G(std::size_t p, std::size_t j) const {
        return g_[p].get(j);
    }
    bool M(std::size_t p, std::size_t j) const {
        return m_[p].get(j);
    }
    unsigned gamma(std::size_t p) const {
        return gamma_[p];
    }
    bool v(std::size_t j) const {
        return v_.get(j);
    }
    bool s(std::size_t j) const {
        return s_.get(j);
    }
    cplx omega() const noexcept {
        return omega_;
    }

  private:
    // Right-multiplication of U_C, used when absorbing a Hadamard.
    void right_s(std::uint32_t q);
    void right_cnot(std::uint32_t control, std::uint32_t target);
    void right_cz(std::uint32_t a, std::uint32_t b);
    /// Rewrites U_H (|t> + i^delta |u>) / sqrt(2), times (-1)^alpha, back
    /// into CH form.
    void update_sum(const Gf2Row &t, const Gf2Row &u, unsigned delta, bool alpha);
    /// u = bF over GF(2).
    Gf2Row row_combination(const BitString &b) const;

    std::size_t n_;
    std::vector<Gf2Row> f_;
    std::vector<Gf2Row> g_;
    std::vector<Gf2Row> m_;
    std::vector<unsigned> gamma_;
    Gf2Row v_;
    Gf2Row s_;
    cplx omega_{1, 0};
};

/// I/S decomposition of R(theta) = diag(e^{-i theta/2}, e^{i theta/2}).
struct RzDecomposition {
    cplx c_identity;
    cplx c_s;
};

/// c_I = cos(theta/2) - sin(theta/2), c_S = (1 - i) sin(theta/2), so that
/// c_I * I + c_S * S = R(theta) exactly. theta = 0 and theta = pi/2 (within
/// 1e-12) return the exact endpoints (1, 0) and (0, e^{-i pi/4}).
RzDecomposition decompose_rz(double theta);

/// True for Clifford kinds (and MEASURE), and for RZ at a multiple of pi/2
/// within 1e-12.
bool has_stabilizer_effect(const GateKind &kind);

/// CH-form backend. Clifford ops are exact. RZ/T/TDG at non-Clifford angles
/// are replaced by I or S, drawn with probability |c_g| / (|c_I| + |c_S|),
/// so each evolution follows one branch of the sum over Cliffords and the
/// sampler runs one trajectory per shot.
class StabilizerBackend final : public StateBackend {
  public:
    explicit StabilizerBackend(std::size_t n_qubits) : state_(n_qubits) {
    }

    std::string_view name() const override {
        return "stabilizer";
    }
    std::unique_ptr<StateBackend> clone() const override {
        return std::make_unique<StabilizerBackend>(*this);
    }
    std::size_t n_qubits() const override {
        return state_.n_qubits();
    }
    bool supports(const GateKind &kind) const override;
    bool needs_trajectories(const Circuit &circuit) const override;
    void apply_op(const GateOp &op, RngStream &rng) override;
    double probability(const BitString &b) const override {
        return state_.probability(b);
    }

    const ChForm &state() const noexcept {
        return state_;
    }

  private:
    void apply_clifford(const GateOp &op);

    ChForm state_;
};

BackendFactory stabilizer_factory();

}  // namespace weaksim

#endif
