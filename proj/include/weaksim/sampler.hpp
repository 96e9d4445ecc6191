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

#ifndef WEAKSIM_SAMPLER_HPP
#define WEAKSIM_SAMPLER_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "weaksim/backend.hpp"
#include "weaksim/bitstring.hpp"
#include "weaksim/circuit.hpp"
#include "weaksim/rng.hpp"

namespace weaksim {

/// Distinct in-flight bitstrings and how many shots currently hold each.
using MultiplicityMap = std::map<BitString, std::uint64_t>;

struct SampleResult {
    /// Keyed by the measured qubits of the terminal MEASURE (in its support
    /// order), or by all qubits when the circuit has no MEASURE.
    std::map<BitString, std::uint64_t> counts;
    std::uint64_t shots = 0;
    std::uint64_t seed = 0;
    double runtime_s = 0;
    std::string backend;
    /// Largest MultiplicityMap seen during a shared evolution; 0 when every
    /// shot ran its own trajectory.
    std::size_t peak_distinct = 0;
};

struct SamplerOptions {
    /// Worker threads for trajectory mode. Results do not depend on it.
    unsigned threads = 1;
    /// Called with the MultiplicityMap after every gate step of a shared
    /// evolution (and once for the initial map).
    std::function<void(const MultiplicityMap &)> on_step;
};

/// All 2^|support| bitstrings agreeing with `b` off the support. Candidate
/// k assigns bit (|support|-1-j) of k to support[j], so for ascending
/// supports the list is in increasing integer order. Includes `b`.
std::vector<BitString> candidates(const BitString &b, const std::vector<std::uint32_t> &support);

/// One gate step for `count` shots sitting on `b`: scores every candidate
/// with backend.probability, renormalizes, and adds a multinomial draw of
/// `count` updated bitstrings to `out`.
///
/// Throws NumericalUnderflow when all candidates are below 1e-300.
void update_bitstring(const StateBackend &backend,
                      const BitString &b,
                      const std::vector<std::uint32_t> &support,
                      std::uint64_t count,
                      RngStream &rng,
                      MultiplicityMap &out);

/// Gate-by-gate sampling. Deterministic evolutions share one state and a
/// MultiplicityMap across all shots; stochastic ones (channels, mid-circuit
/// measurement, or a backend that asks for it) fall back to
/// sample_with_trajectories.
///
/// Throws UnsupportedOp if the backend rejects an op of the circuit.
SampleResult sample_gate_by_gate(const Circuit &circuit,
                                 const BackendFactory &factory,
                                 std::uint64_t shots,
                                 std::uint64_t seed,
                                 const SamplerOptions &options = {});

/// One independent evolution per shot, shot k drawing from RngStream(seed, k).
/// Channels are unravelled into Pauli ops (bit flip: X with probability p;
/// depolarizing: X, Y, Z each with p/3). A mid-circuit MEASURE samples its
/// qubit like a gate step and then projects the state onto the outcome.
SampleResult sample_with_trajectories(const Circuit &circuit,
                                      const BackendFactory &factory,
                                      std::uint64_t shots,
                                      std::uint64_t seed,
                                      const SamplerOptions &options = {});

/// Baseline: evolve a dense state vector once, then sample each shot qubit
/// by qubit from conditional marginals. Unitary circuits only.
SampleResult sample_qubit_by_qubit(const Circuit &circuit, std::uint64_t shots, std::uint64_t seed);

/// {"counts": {...}, "shots": N, "seed": S, "runtime_s": t, "backend": name}
std::string to_json(const SampleResult &result);
/// "bitstring,count" header and one row per observed bitstring.
std::string to_csv(const SampleResult &result);

}  // namespace weaksim

#endif
