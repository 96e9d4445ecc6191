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

#ifndef WEAKSIM_GATE_HPP
#define WEAKSIM_GATE_HPP

#include <array>
#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace weaksim {

using cplx = std::complex<double>;

/// Row-major 2x2 unitary.
using Matrix2 = std::array<cplx, 4>;
/// Row-major 4x4 unitary. Row/column index is 2*bit(support[0]) + bit(support[1]).
using Matrix4 = std::array<cplx, 16>;

enum class GateType : std::uint8_t {
    H,
    X,
    Y,
    Z,
    S,
    Sdg,
    T,
    Tdg,
    Rx,
    Ry,
    Rz,
    Cnot,
    Cz,
    Swap,
    Measure,
    BitFlip,
    Depolarize,
    Matrix1Q,
    Matrix2Q,
};

std::string_view gate_type_name(GateType type);
/// Qubits a gate of this type acts on; 0 for MEASURE (any width).
unsigned gate_type_arity(GateType type) noexcept;
/// Inverse of gate_type_name; nullopt for unknown names.
std::optional<GateType> gate_type_from_name(std::string_view name);

/// A gate type together with its parameters. Construct through the static
/// factories; they normalize angles to [0, 2pi) and validate probabilities
/// and unitarity.
class GateKind {
  public:
    static GateKind simple(GateType type);
    static GateKind rx(double theta);
    static GateKind ry(double theta);
    static GateKind rz(double theta);
    static GateKind bit_flip(double p);
    static GateKind depolarize(double p);
    static GateKind matrix1q(const Matrix2 &m);
    static GateKind matrix2q(const Matrix4 &m);

    GateType type() const noexcept {
        return type_;
    }
    /// Rotation angle (radians, in [0, 2pi)) or channel probability.
    double param() const noexcept {
        return param_;
    }
    const std::vector<cplx> &entries() const noexcept {
        return entries_;
    }

    /// Number of qubits the kind acts on; 0 for MEASURE (any width).
    unsigned arity() const noexcept;
    bool is_unitary() const noexcept;
    bool is_channel() const noexcept;
    bool is_rotation() const noexcept;

    Matrix2 matrix1q() const;
    Matrix4 matrix2q() const;

    bool operator==(const GateKind &other) const = default;

  private:
    GateKind(GateType type, double param, std::vector<cplx> entries);

    GateType type_ = GateType::H;
    double param_ = 0;
    std::vector<cplx> entries_;
};

/// Reduces an angle to [0, 2pi).
double normalize_angle(double theta);

/// A kind applied to an ordered list of distinct qubits.
struct GateOp {
    GateKind kind;
    std::vector<std::uint32_t> qubits;

    bool operator==(const GateOp &other) const = default;
};

GateOp make_op(GateType type, std::vector<std::uint32_t> qubits);
GateOp make_op(GateKind kind, std::vector<std::uint32_t> qubits);

Matrix2 matmul(const Matrix2 &a, const Matrix2 &b);
/// Max entrywise deviation of m * m^dagger from identity.
double unitarity_error(const std::vector<cplx> &m, std::size_t dim);

}  // namespace weaksim

#endif
