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

#ifndef WEAKSIM_OPTIMIZER_HPP
#define WEAKSIM_OPTIMIZER_HPP

#include "weaksim/circuit.hpp"

namespace weaksim {

/// Merges every maximal run of two or more consecutive single-qubit unitary
/// ops on one qubit into a single MATRIX1Q op holding their product. A run
/// ends at any op touching its qubit that is not a single-qubit unitary
/// (two-qubit gates, channels, MEASURE). Runs of length one are kept as-is.
///
/// Fewer ops means fewer bitstring updates in gate-by-gate sampling; the
/// circuit unitary is unchanged.
Circuit optimize_circuit(const Circuit &circuit);

}  // namespace weaksim

#endif
