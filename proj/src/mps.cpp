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

#include "weaksim/mps.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "weaksim/errors.hpp"

namespace weaksim {

namespace {

/// Singular values below this fraction of the largest are treated as zero.
constexpr double kRelativeCutoff = 1e-14;

const Matrix4 &swap_matrix() {
    static const Matrix4 m = GateKind::simple(GateType::Swap).matrix2q();
    return m;
}

/// Same gate with its two qubits listed in the opposite order.
Matrix4 reverse_qubits(const Matrix4 &m) {
    Matrix4 out{};
    auto flip = [](std::size_t i) { return ((i & 1) << 1) | (i >> 1); };
    for (std::size_t r = 0; r < 4; ++r) {
        for (std::size_t c = 0; c < 4; ++c) {
            out[4 * flip(r) + flip(c)] = m[4 * r + c];
        }
    }
    return out;
}

}  // namespace

Mps::Mps(std::size_t n_qubits, std::size_t chi_max) : sites_(n_qubits), chi_max_(chi_max) {
    if (n_qubits == 0) {
        throw InvalidSpec("MPS needs at least one qubit");
    }
    for (auto &site : sites_) {
        site[0] = Matrix::Ones(1, 1);
        site[1] = Matrix::Zero(1, 1);
    }
}

std::size_t Mps::max_bond_dimension() const {
    std::size_t chi = 1;
    for (std::size_t k = 0; k + 1 < sites_.size(); ++k) {
        chi = std::max<std::size_t>(chi, bond_dimension(k));
    }
    return chi;
}

void Mps::apply_1q(const Matrix2 &m, std::uint32_t q) {
    auto &site = sites_[q];
    Matrix a0 = m[0] * site[0] + m[1] * site[1];
    Matrix a1 = m[2] * site[0] + m[3] * site[1];
    site[0] = std::move(a0);
    site[1] = std::move(a1);
}

void Mps::move_center(std::size_t k) {
    while (center_ < k) {
        auto &site = sites_[center_];
        const Eigen::Index chi_l = site[0].rows();
        const Eigen::Index chi_r = site[0].cols();
        Matrix stacked(2 * chi_l, chi_r);
        stacked << site[0], site[1];
        Eigen::HouseholderQR<Matrix> qr(stacked);
        const Eigen::Index r = std::min(2 * chi_l, chi_r);
        Matrix q = qr.householderQ() * Matrix::Identity(2 * chi_l, r);
        Matrix upper = qr.matrixQR().topRows(r).triangularView<Eigen::Upper>();
        site[0] = q.topRows(chi_l);
        site[1] = q.bottomRows(chi_l);
        auto &next = sites_[center_ + 1];
        next[0] = upper * next[0];
        next[1] = upper * next[1];
        ++center_;
    }
    while (center_ > k) {
        auto &site = sites_[center_];
        const Eigen::Index chi_l = site[0].rows();
        const Eigen::Index chi_r = site[0].cols();
        Matrix wide(chi_l, 2 * chi_r);
        wide << site[0], site[1];
        Matrix adjoint = wide.adjoint();
        Eigen::HouseholderQR<Matrix> qr(adjoint);
        const Eigen::Index r = std::min(2 * chi_r, chi_l);
        Matrix q = qr.householderQ() * Matrix::Identity(2 * chi_r, r);
        Matrix upper = qr.matrixQR().topRows(r).triangularView<Eigen::Upper>();
        Matrix q_adj = q.adjoint();
        site[0] = q_adj.leftCols(chi_r);
        site[1] = q_adj.rightCols(chi_r);
        Matrix upper_adj = upper.adjoint();
        auto &prev = sites_[center_ - 1];
        prev[0] = prev[0] * upper_adj;
        prev[1] = prev[1] * upper_adj;
        --center_;
    }
}

void Mps::apply_adjacent(const Matrix4 &m, std::size_t k) {
    move_center(k);
    auto &left = sites_[k];
    auto &right = sites_[k + 1];
    const Eigen::Index chi_l = left[0].rows();
    const Eigen::Index chi_r = right[0].cols();

    Matrix theta[2][2];
    for (int s1 = 0; s1 < 2; ++s1) {
        for (int s2 = 0; s2 < 2; ++s2) {
            theta[s1][s2] = left[s1] * right[s2];
        }
    }
    Matrix block(2 * chi_l, 2 * chi_r);
    for (int t1 = 0; t1 < 2; ++t1) {
        for (int t2 = 0; t2 < 2; ++t2) {
            Matrix acc = Matrix::Zero(chi_l, chi_r);
            for (int s1 = 0; s1 < 2; ++s1) {
                for (int s2 = 0; s2 < 2; ++s2) {
                    const cplx g = m[4 * (2 * t1 + t2) + 2 * s1 + s2];
                    if (g != cplx{0, 0}) {
                        acc += g * theta[s1][s2];
                    }
                }
            }
            block.block(t1 * chi_l, t2 * chi_r, chi_l, chi_r) = acc;
        }
    }

    Eigen::BDCSVD<Matrix> svd(block, Eigen::ComputeThinU | Eigen::ComputeThinV);
    const auto &sv = svd.singularValues();
    const double total = sv.squaredNorm();
    Eigen::Index keep = 0;
    while (keep < sv.size() && sv(keep) > kRelativeCutoff * sv(0)) {
        ++keep;
    }
    keep = std::max<Eigen::Index>(keep, 1);
    if (chi_max_ != kUnbounded) {
        keep = std::min<Eigen::Index>(keep, static_cast<Eigen::Index>(chi_max_));
    }
    const double kept = sv.head(keep).squaredNorm();
    if (total > 0) {
        truncation_error_ += std::max(0.0, (total - kept) / total);
    }

    Eigen::VectorXd weights = sv.head(keep) / std::sqrt(kept);
    Matrix u = svd.matrixU().leftCols(keep);
    Matrix sv_vh = weights.asDiagonal() * svd.matrixV().leftCols(keep).adjoint();
    left[0] = u.topRows(chi_l);
    left[1] = u.bottomRows(chi_l);
    right[0] = sv_vh.leftCols(chi_r);
    right[1] = sv_vh.rightCols(chi_r);
    center_ = k + 1;
}

void Mps::apply_2q(const Matrix4 &m, std::uint32_t q0, std::uint32_t q1) {
    if (q0 == q1) {
        throw InvalidSpec("two-qubit gate on a repeated qubit");
    }
    if (q0 < q1) {
        for (std::size_t k = q1 - 1; k > q0; --k) {
            apply_adjacent(swap_matrix(), k);
        }
        apply_adjacent(m, q0);
        for (std::size_t k = q0 + 1; k < q1; ++k) {
            apply_adjacent(swap_matrix(), k);
        }
    } else {
        for (std::size_t k = q1; k + 1 < q0; ++k) {
            apply_adjacent(swap_matrix(), k);
        }
        apply_adjacent(reverse_qubits(m), q0 - 1);
        for (std::size_t k = q0 - 1; k > q1; --k) {
            apply_adjacent(swap_matrix(), k - 1);
        }
    }
}

void Mps::apply(const GateOp &op) {
    if (op.kind.type() == GateType::Measure) {
        return;
    }
    if (op.kind.is_channel()) {
        throw UnsupportedOp("mps backend does not support " + std::string(gate_type_name(op.kind.type())));
    }
    if (op.kind.arity() == 1) {
        apply_1q(op.kind.matrix1q(), op.qubits[0]);
    } else {
        apply_2q(op.kind.matrix2q(), op.qubits[0], op.qubits[1]);
    }
}

cplx Mps::amplitude(const BitString &b) const {
    Eigen::RowVectorXcd v = Eigen::RowVectorXcd::Ones(1);
    for (std::size_t k = 0; k < sites_.size(); ++k) {
        v = v * sites_[k][b[k]];
    }
    return v(0);
}

cplx Mps::amplitude_right_to_left(const BitString &b) const {
    Eigen::VectorXcd v = Eigen::VectorXcd::Ones(1);
    for (std::size_t k = sites_.size(); k-- > 0;) {
        v = sites_[k][b[k]] * v;
    }
    return v(0);
}

double Mps::probability(const BitString &b) const {
    return std::norm(amplitude(b));
}

std::vector<cplx> Mps::to_dense() const {
    const std::size_t n = sites_.size();
    if (n > 24) {
        throw InvalidSpec("to_dense is limited to 24 qubits");
    }
    std::vector<cplx> out(std::size_t{1} << n);
    for (std::size_t i = 0; i < out.size(); ++i) {
        out[i] = amplitude(BitString::from_index(i, n));
    }
    return out;
}

void MpsBackend::apply_op(const GateOp &op, RngStream &rng) {
    (void)rng;
    state_.apply(op);
}

BackendFactory mps_factory(std::size_t chi_max) {
    return [chi_max](std::size_t n) { return std::make_unique<MpsBackend>(n, chi_max); };
}

}  // namespace weaksim
