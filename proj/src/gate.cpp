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

#include "weaksim/gate.hpp"

#include <cmath>
#include <numbers>

#include "weaksim/errors.hpp"

namespace weaksim {

namespace {

constexpr double kUnitaryTolerance = 1e-10;

struct NameEntry {
    GateType type;
    std::string_view name;
};

constexpr NameEntry kNames[] = {
    {GateType::H, "H"},
    {GateType::X, "X"},
    {GateType::Y, "Y"},
    {GateType::Z, "Z"},
    {GateType::S, "S"},
    {GateType::Sdg, "SDG"},
    {GateType::T, "T"},
    {GateType::Tdg, "TDG"},
    {GateType::Rx, "RX"},
    {GateType::Ry, "RY"},
    {GateType::Rz, "RZ"},
    {GateType::Cnot, "CNOT"},
    {GateType::Cz, "CZ"},
    {GateType::Swap, "SWAP"},
    {GateType::Measure, "MEASURE"},
    {GateType::BitFlip, "CHANNEL_BITFLIP"},
    {GateType::Depolarize, "CHANNEL_DEPOLARIZE"},
    {GateType::Matrix1Q, "MATRIX1Q"},
    {GateType::Matrix2Q, "MATRIX2Q"},
};

void check_probability(double p) {
    if (!(p >= 0 && p <= 1)) {
        throw InvalidSpec("channel probability must lie in [0, 1], got " + std::to_string(p));
    }
}

}  // namespace

std::string_view gate_type_name(GateType type) {
    for (const auto &e : kNames) {
        if (e.type == type) {
            return e.name;
        }
    }
    return "?";
}

std::optional<GateType> gate_type_from_name(std::string_view name) {
    for (const auto &e : kNames) {
        if (e.name == name) {
            return e.type;
        }
    }
    return std::nullopt;
}

double normalize_angle(double theta) {
    constexpr double two_pi = 2 * std::numbers::pi;
    double r = std::fmod(theta, two_pi);
    if (r < 0) {
        r += two_pi;
    }
    // fmod of a value just below zero can round up to exactly 2pi.
    if (r >= two_pi) {
        r = 0;
    }
    return r;
}

GateKind::GateKind(GateType type, double param, std::vector<cplx> entries)
    : type_(type), param_(param), entries_(std::move(entries)) {
}

GateKind GateKind::simple(GateType type) {
    switch (type) {
        case GateType::Rx:
        case GateType::Ry:
        case GateType::Rz:
        case GateType::BitFlip:
        case GateType::Depolarize:
        case GateType::Matrix1Q:
        case GateType::Matrix2Q:
            throw InvalidSpec(std::string(gate_type_name(type)) + " needs parameters");
        default:
            return GateKind(type, 0, {});
    }
}

GateKind GateKind::rx(double theta) {
    return GateKind(GateType::Rx, normalize_angle(theta), {});
}
GateKind GateKind::ry(double theta) {
    return GateKind(GateType::Ry, normalize_angle(theta), {});
}
GateKind GateKind::rz(double theta) {
    return GateKind(GateType::Rz, normalize_angle(theta), {});
}

GateKind GateKind::bit_flip(double p) {
    check_probability(p);
    return GateKind(GateType::BitFlip, p, {});
}

GateKind GateKind::depolarize(double p) {
    check_probability(p);
    return GateKind(GateType::Depolarize, p, {});
}

GateKind GateKind::matrix1q(const Matrix2 &m) {
    std::vector<cplx> entries(m.begin(), m.end());
    if (unitarity_error(entries, 2) > kUnitaryTolerance) {
        throw InvalidSpec("MATRIX1Q entries are not unitary");
    }
    return GateKind(GateType::Matrix1Q, 0, std::move(entries));
}

GateKind GateKind::matrix2q(const Matrix4 &m) {
    std::vector<cplx> entries(m.begin(), m.end());
    if (unitarity_error(entries, 4) > kUnitaryTolerance) {
        throw InvalidSpec("MATRIX2Q entries are not unitary");
    }
    return GateKind(GateType::Matrix2Q, 0, std::move(entries));
}

unsigned GateKind::arity() const noexcept {
    return gate_type_arity(type_);
}

unsigned gate_type_arity(GateType type) noexcept {
    switch (type) {
        case GateType::Cnot:
        case GateType::Cz:
        case GateType::Swap:
        case GateType::Matrix2Q:
            return 2;
        case GateType::Measure:
            return 0;
        default:
            return 1;
    }
}

bool GateKind::is_channel() const noexcept {
    return type_ == GateType::BitFlip || type_ == GateType::Depolarize;
}

bool GateKind::is_unitary() const noexcept {
    return !is_channel() && type_ != GateType::Measure;
}

bool GateKind::is_rotation() const noexcept {
    return type_ == GateType::Rx || type_ == GateType::Ry || type_ == GateType::Rz;
}

Matrix2 GateKind::matrix1q() const {
    using namespace std::complex_literals;
    const double r = std::numbers::sqrt2 / 2;
    const double c = std::cos(param_ / 2);
    const double s = std::sin(param_ / 2);
    switch (type_) {
        case GateType::H:
            return {r, r, r, -r};
        case GateType::X:
            return {0, 1, 1, 0};
        case GateType::Y:
            return {0, -1i, 1i, 0};
        case GateType::Z:
            return {1, 0, 0, -1};
        case GateType::S:
            return {1, 0, 0, 1i};
        case GateType::Sdg:
            return {1, 0, 0, -1i};
        case GateType::T:
            return {1, 0, 0, std::polar(1.0, std::numbers::pi / 4)};
        case GateType::Tdg:
            return {1, 0, 0, std::polar(1.0, -std::numbers::pi / 4)};
        case GateType::Rx:
            return {c, -1i * s, -1i * s, c};
        case GateType::Ry:
            return {c, -s, s, c};
        case GateType::Rz:
            return {std::polar(1.0, -param_ / 2), 0, 0, std::polar(1.0, param_ / 2)};
        case GateType::Matrix1Q:
            return {entries_[0], entries_[1], entries_[2], entries_[3]};
        default:
            throw UnsupportedOp(std::string(gate_type_name(type_)) + " has no 2x2 unitary");
    }
}

Matrix4 GateKind::matrix2q() const {
    Matrix4 m{};
    switch (type_) {
        case GateType::Cnot:
            m[0] = m[5] = m[11] = m[14] = 1;
            return m;
        case GateType::Cz:
            m[0] = m[5] = m[10] = 1;
            m[15] = -1;
            return m;
        case GateType::Swap:
            m[0] = m[6] = m[9] = m[15] = 1;
            return m;
        case GateType::Matrix2Q:
            for (std::size_t k = 0; k < 16; ++k) {
                m[k] = entries_[k];
            }
            return m;
        default:
            throw UnsupportedOp(std::string(gate_type_name(type_)) + " has no 4x4 unitary");
    }
}

GateOp make_op(GateType type, std::vector<std::uint32_t> qubits) {
    return GateOp{GateKind::simple(type), std::move(qubits)};
}

GateOp make_op(GateKind kind, std::vector<std::uint32_t> qubits) {
    return GateOp{std::move(kind), std::move(qubits)};
}

Matrix2 matmul(const Matrix2 &a, const Matrix2 &b) {
    return {
        a[0] * b[0] + a[1] * b[2],
        a[0] * b[1] + a[1] * b[3],
        a[2] * b[0] + a[3] * b[2],
        a[2] * b[1] + a[3] * b[3],
    };
}

double unitarity_error(const std::vector<cplx> &m, std::size_t dim) {
    if (m.size() != dim * dim) {
        return INFINITY;
    }
    double worst = 0;
    for (std::size_t r = 0; r < dim; ++r) {
        for (std::size_t c = 0; c < dim; ++c) {
            cplx acc = 0;
            for (std::size_t k = 0; k < dim; ++k) {
                acc += m[r * dim + k] * std::conj(m[c * dim + k]);
            }
            worst = std::max(worst, std::abs(acc - (r == c ? 1.0 : 0.0)));
        }
    }
    return worst;
}

}  // namespace weaksim
