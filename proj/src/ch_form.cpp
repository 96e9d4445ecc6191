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

#include "weaksim/ch_form.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "weaksim/errors.hpp"

namespace weaksim {

namespace {

constexpr double kCliffordAngleTolerance = 1e-12;

cplx i_pow(unsigned k) {
    switch (k & 3) {
        case 0:
            return {1, 0};
        case 1:
            return {0, 1};
        case 2:
            return {-1, 0};
        default:
            return {0, -1};
    }
}

/// Number of quarter turns if theta is a multiple of pi/2, else -1.
int quarter_turns(double theta) {
    const double quarters = normalize_angle(theta) / (std::numbers::pi / 2);
    const double nearest = std::round(quarters);
    if (std::abs(quarters - nearest) * (std::numbers::pi / 2) > kCliffordAngleTolerance) {
        return -1;
    }
    return static_cast<int>(nearest) & 3;
}

}  // namespace

std::size_t Gf2Row::count_and(const Gf2Row &other, std::size_t n) const noexcept {
    std::size_t total = 0;
    for (std::size_t k = 0; k < words_.size(); ++k) {
        std::uint64_t w = words_[k] & other.words_[k];
        if ((k + 1) * 64 > n) {
            const std::size_t keep = n - k * 64;
            w &= keep >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << keep) - 1);
        }
        total += static_cast<std::size_t>(std::popcount(w));
    }
    return total;
}

std::size_t Gf2Row::count(std::size_t n) const noexcept {
    return count_and(*this, n);
}

ChForm::ChForm(std::size_t n_qubits)
    : n_(n_qubits),
      f_(n_qubits, Gf2Row(n_qubits)),
      g_(n_qubits, Gf2Row(n_qubits)),
      m_(n_qubits, Gf2Row(n_qubits)),
      gamma_(n_qubits, 0),
      v_(n_qubits),
      s_(n_qubits) {
    if (n_qubits == 0) {
        throw InvalidSpec("CH form needs at least one qubit");
    }
    for (std::size_t p = 0; p < n_; ++p) {
        f_[p].set(p, true);
        g_[p].set(p, true);
    }
}

void ChForm::apply_s(std::uint32_t q) {
    m_[q] ^= g_[q];
    gamma_[q] = (gamma_[q] + 3) & 3;
}

void ChForm::apply_sdg(std::uint32_t q) {
    m_[q] ^= g_[q];
    gamma_[q] = (gamma_[q] + 1) & 3;
}

void ChForm::apply_z(std::uint32_t q) {
    gamma_[q] = (gamma_[q] + 2) & 3;
}

void ChForm::apply_x(std::uint32_t q) {
    apply_h(q);
    apply_z(q);
    apply_h(q);
}

void ChForm::apply_y(std::uint32_t q) {
    // Y = i X Z
    apply_z(q);
    apply_x(q);
    omega_ *= cplx{0, 1};
}

void ChForm::apply_cnot(std::uint32_t c, std::uint32_t t) {
    gamma_[c] = (gamma_[c] + gamma_[t] + 2 * static_cast<unsigned>(m_[c].dot(f_[t]))) & 3;
    g_[t] ^= g_[c];
    f_[c] ^= f_[t];
    m_[c] ^= m_[t];
}

void ChForm::apply_cz(std::uint32_t a, std::uint32_t b) {
    m_[a] ^= g_[b];
    m_[b] ^= g_[a];
}

void ChForm::apply_swap(std::uint32_t a, std::uint32_t b) {
    apply_cnot(a, b);
    apply_cnot(b, a);
    apply_cnot(a, b);
}

void ChForm::right_s(std::uint32_t q) {
    for (std::size_t p = 0; p < n_; ++p) {
        if (f_[p].get(q)) {
            m_[p].flip(q);
            gamma_[p] = (gamma_[p] + 3) & 3;
        }
    }
}

void ChForm::right_cnot(std::uint32_t c, std::uint32_t t) {
    for (std::size_t p = 0; p < n_; ++p) {
        if (g_[p].get(t)) {
            g_[p].flip(c);
        }
        if (f_[p].get(c)) {
            f_[p].flip(t);
        }
        if (m_[p].get(t)) {
            m_[p].flip(c);
        }
    }
}

void ChForm::right_cz(std::uint32_t a, std::uint32_t b) {
    for (std::size_t p = 0; p < n_; ++p) {
        const bool fa = f_[p].get(a);
        const bool fb = f_[p].get(b);
        if (fb) {
            m_[p].flip(a);
        }
        if (fa) {
            m_[p].flip(b);
        }
        if (fa && fb) {
            gamma_[p] = (gamma_[p] + 2) & 3;
        }
    }
}

void ChForm::apply_h(std::uint32_t q) {
    // H_q = (X_q + Z_q)/sqrt(2); conjugate both Paulis through U_C and push
    // them past U_H onto |s>, giving a sum of two basis states.
    const Gf2Row not_v = ~v_;
    const Gf2Row t = s_ ^ (g_[q] & v_);
    const Gf2Row u = s_ ^ (f_[q] & not_v) ^ (m_[q] & v_);

    const bool alpha = g_[q].count_and(not_v & s_, n_) & 1;
    std::size_t beta = m_[q].count_and(not_v & s_, n_);
    beta += f_[q].count_and(v_ & m_[q], n_);
    beta += f_[q].count_and(v_ & s_, n_);
    const unsigned delta = (gamma_[q] + 2 * (static_cast<unsigned>(alpha) + static_cast<unsigned>(beta & 1))) & 3;

    update_sum(t, u, delta, alpha);
}

void ChForm::update_sum(const Gf2Row &t, const Gf2Row &u, unsigned delta, bool alpha) {
    const double sign = alpha ? -1.0 : 1.0;
    if (t == u) {
        s_ = t;
        omega_ *= sign * (cplx{1, 0} + i_pow(delta)) / std::numbers::sqrt2;
        return;
    }

    const Gf2Row diff = t ^ u;
    std::vector<std::uint32_t> set0;
    std::vector<std::uint32_t> set1;
    for (std::uint32_t j = 0; j < n_; ++j) {
        if (diff.get(j)) {
            (v_.get(j) ? set1 : set0).push_back(j);
        }
    }

    // Fold the differing positions onto one qubit q with a right C-type
    // circuit so that the two basis states differ at q alone.
    std::uint32_t q;
    if (!set0.empty()) {
        q = set0.front();
        for (auto j : set0) {
            if (j != q) {
                right_cnot(q, j);
            }
        }
        for (auto j : set1) {
            right_cz(q, j);
        }
    } else {
        q = set1.front();
        for (auto j : set1) {
            if (j != q) {
                right_cnot(j, q);
            }
        }
    }

    Gf2Row y;
    Gf2Row z;
    if (t.get(q)) {
        y = u;
        y.flip(q);
        z = u;
    } else {
        y = t;
        z = t;
        z.flip(q);
    }

    // Single-qubit reduction: H^v (|y_q> + i^delta |z_q>)/sqrt(2) = w S^a H^b |c>.
    const bool vq = v_.get(q);
    const bool yq = y.get(q);
    cplx w;
    bool a;
    bool b;
    bool c;
    if (!vq) {
        w = yq ? i_pow(delta) : cplx{1, 0};
        const unsigned delta2 = (yq ? 4 - delta : delta) & 3;
        c = (delta2 >> 1) & 1;
        a = delta2 & 1;
        b = true;
    } else if ((delta & 1) == 0) {
        a = false;
        b = false;
        c = (delta >> 1) & 1;
        w = (c && yq) ? -1.0 : 1.0;
    } else {
        w = (cplx{1, 0} + i_pow(delta)) / std::numbers::sqrt2;
        a = true;
        b = true;
        c = !(((delta >> 1) & 1) ^ yq);
    }

    s_ = y;
    s_.set(q, c);
    omega_ *= sign * w;
    if (a) {
        right_s(q);
    }
    v_.set(q, b);
}

Gf2Row ChForm::row_combination(const BitString &b) const {
    Gf2Row u(n_);
    for (std::size_t p = 0; p < n_; ++p) {
        if (b[p]) {
            u ^= f_[p];
        }
    }
    return u;
}

cplx ChForm::amplitude(const BitString &b) const {
    // <b| U_C = <0| U_C P with P = U_C^-1 X(b) U_C = i^phase X^u Z^w.
    unsigned phase = 0;
    Gf2Row u(n_);
    Gf2Row w(n_);
    for (std::size_t p = 0; p < n_; ++p) {
        if (!b[p]) {
            continue;
        }
        phase += gamma_[p] + 2 * static_cast<unsigned>(w.dot(f_[p]));
        u ^= f_[p];
        w ^= m_[p];
    }
    // <0| X^u Z^w = (-1)^{u.w} <u|
    phase += 2 * static_cast<unsigned>(u.dot(w));
    // <u| U_H |s>: delta(u_j, s_j) off the Hadamard layer, (-1)^{u_j s_j}/sqrt(2) on it.
    const Gf2Row mismatch = u ^ s_;
    if ((mismatch & ~v_).count(n_) != 0) {
        return {0, 0};
    }
    phase += 2 * static_cast<unsigned>((u & s_).dot(v_));
    const double magnitude = std::pow(2.0, -0.5 * static_cast<double>(v_.count(n_)));
    return omega_ * i_pow(phase) * magnitude;
}

double ChForm::probability(const BitString &b) const {
    const Gf2Row u = row_combination(b);
    if (((u ^ s_) & ~v_).count(n_) != 0) {
        return 0;
    }
    return std::norm(omega_) * std::pow(2.0, -static_cast<double>(v_.count(n_)));
}

RzDecomposition decompose_rz(double theta) {
    if (std::abs(theta) <= kCliffordAngleTolerance) {
        return {cplx{1, 0}, cplx{0, 0}};
    }
    if (std::abs(theta - std::numbers::pi / 2) <= kCliffordAngleTolerance) {
        return {cplx{0, 0}, cplx{1, -1} / std::numbers::sqrt2};
    }
    const double c = std::cos(theta / 2);
    const double s = std::sin(theta / 2);
    return {cplx{c - s, 0}, cplx{s, -s}};
}

bool has_stabilizer_effect(const GateKind &kind) {
    switch (kind.type()) {
        case GateType::H:
        case GateType::X:
        case GateType::Y:
        case GateType::Z:
        case GateType::S:
        case GateType::Sdg:
        case GateType::Cnot:
        case GateType::Cz:
        case GateType::Swap:
        case GateType::Measure:
            return true;
        case GateType::Rz:
            return quarter_turns(kind.param()) >= 0;
        default:
            return false;
    }
}

bool StabilizerBackend::supports(const GateKind &kind) const {
    return has_stabilizer_effect(kind) || kind.type() == GateType::Rz || kind.type() == GateType::T ||
           kind.type() == GateType::Tdg;
}

bool StabilizerBackend::needs_trajectories(const Circuit &circuit) const {
    for (const auto &op : circuit.ops()) {
        if (!has_stabilizer_effect(op.kind)) {
            return true;
        }
    }
    return false;
}

void StabilizerBackend::apply_clifford(const GateOp &op) {
    const auto &qs = op.qubits;
    switch (op.kind.type()) {
        case GateType::H:
            state_.apply_h(qs[0]);
            break;
        case GateType::X:
            state_.apply_x(qs[0]);
            break;
        case GateType::Y:
            state_.apply_y(qs[0]);
            break;
        case GateType::Z:
            state_.apply_z(qs[0]);
            break;
        case GateType::S:
            state_.apply_s(qs[0]);
            break;
        case GateType::Sdg:
            state_.apply_sdg(qs[0]);
            break;
        case GateType::Cnot:
            state_.apply_cnot(qs[0], qs[1]);
            break;
        case GateType::Cz:
            state_.apply_cz(qs[0], qs[1]);
            break;
        case GateType::Swap:
            state_.apply_swap(qs[0], qs[1]);
            break;
        case GateType::Measure:
            break;
        case GateType::Rz:
            // Clifford angle; global phase dropped.
            switch (quarter_turns(op.kind.param())) {
                case 1:
                    state_.apply_s(qs[0]);
                    break;
                case 2:
                    state_.apply_z(qs[0]);
                    break;
                case 3:
                    state_.apply_sdg(qs[0]);
                    break;
                default:
                    break;
            }
            break;
        default:
            throw UnsupportedOp("stabilizer backend: " + std::string(gate_type_name(op.kind.type())) +
                                " is not Clifford");
    }
}

void StabilizerBackend::apply_op(const GateOp &op, RngStream &rng) {
    if (has_stabilizer_effect(op.kind)) {
        apply_clifford(op);
        return;
    }
    double theta;
    switch (op.kind.type()) {
        case GateType::Rz:
            theta = op.kind.param();
            break;
        case GateType::T:
            theta = std::numbers::pi / 4;
            break;
        case GateType::Tdg:
            theta = -std::numbers::pi / 4;
            break;
        default:
            throw UnsupportedOp("stabilizer backend does not support " + std::string(gate_type_name(op.kind.type())));
    }
    const RzDecomposition d = decompose_rz(theta);
    const double w_identity = std::abs(d.c_identity);
    const double w_s = std::abs(d.c_s);
    if (rng.uniform() * (w_identity + w_s) >= w_identity) {
        state_.apply_s(op.qubits[0]);
    }
}

BackendFactory stabilizer_factory() {
    return [](std::size_t n) { return std::make_unique<StabilizerBackend>(n); };
}

}  // namespace weaksim
