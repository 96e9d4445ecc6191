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

#ifndef WEAKSIM_QASM_HPP
#define WEAKSIM_QASM_HPP

#include <string>
#include <string_view>

#include "weaksim/circuit.hpp"

namespace weaksim {

/// Parses the OpenQASM 2.0 subset: header, include (ignored), one qreg,
/// creg and barrier (ignored), h x y z s sdg t tdg rx ry rz cx cz swap,
/// measure, and // comments. Angle arguments accept arithmetic on numbers
/// and `pi`. A trailing block of measure statements becomes one terminal
/// MEASURE over the measured qubits in source order; earlier measures are
/// single-qubit mid-circuit MEASURE ops.
///
/// Throws ParseError with the 1-based line of the offending token.
Circuit parse_qasm(std::string_view text);

/// Renders a circuit as OpenQASM 2.0 that parse_qasm reads back to a
/// structurally equal circuit. Angles are printed with 17 significant digits.
///
/// Throws UnsupportedExport for channel and explicit-matrix ops.
std::string emit_qasm(const Circuit &circuit);

}  // namespace weaksim

#endif
