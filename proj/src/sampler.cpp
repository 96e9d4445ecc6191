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

#include "weaksim/sampler.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <optional>
#include <sstream>
#include <string>
#include <thread>

#include "json.hpp"
#include "weaksim/errors.hpp"
#include "weaksim/statevector.hpp"

namespace weaksim {

namespace {

constexpr double kUnderflow = 1e-300;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

BitString output_key(const Circuit &circuit, const BitString &b) {
    const GateOp *measure = circuit.terminal_measure();
    return measure ? b.select(measure->qubits) : b;
}

/// Candidate probabilities normalized to sum 1.
std::vector<double> candidate_weights(const StateBackend &backend, const std::vector<BitString> &cands) {
    std::vector<double> weights(cands.size());
    double total = 0;
    for (std::size_t k = 0; k < cands.size(); ++k) {
        weights[k] = std::max(0.0, backend.probability(cands[k]));
        total += weights[k];
    }
    if (!(total >= kUnderflow)) {
        throw NumericalUnderflow("all " + std::to_string(cands.size()) + " candidates around " +
                                 cands.front().to_string() + " have probability below 1e-300 on backend " +
                                 std::string(backend.name()));
    }
    for (auto &w : weights) {
        w /= total;
    }
    return weights;
}

std::size_t draw_index(const std::vector<double> &weights, RngStream &rng) {
    double u = rng.uniform();
    for (std::size_t k = 0; k + 1 < weights.size(); ++k) {
        if (u < weights[k]) {
            return k;
        }
        u -= weights[k];
    }
    return weights.size() - 1;
}

const GateKind &pauli(GateType type) {
    static const GateKind x = GateKind::simple(GateType::X);
    static const GateKind y = GateKind::simple(GateType::Y);
    static const GateKind z = GateKind::simple(GateType::Z);
    return type == GateType::X ? x : type == GateType::Y ? y : z;
}

/// Pauli type realized by one unravelling of a channel, or nullopt for identity.
std::optional<GateType> unravel_channel(const GateKind &kind, RngStream &rng) {
    const double u = rng.uniform();
    const double p = kind.param();
    if (kind.type() == GateType::BitFlip) {
        return u < p ? std::optional(GateType::X) : std::nullopt;
    }
    if (u >= p) {
        return std::nullopt;
    }
    const double third = p / 3;
    return u < third ? GateType::X : u < 2 * third ? GateType::Y : GateType::Z;
}

void check_circuit(const StateBackend &backend, const Circuit &circuit) {
    check_supported(backend, circuit);
    if (circuit.has_mid_circuit_measure() && !backend.supports_mid_circuit_measure()) {
        throw UnsupportedOp("backend " + std::string(backend.name()) + " does not support mid-circuit MEASURE");
    }
}

/// One trajectory; returns the sampled full-width bitstring.
BitString run_trajectory(const Circuit &circuit, const BackendFactory &factory, RngStream &rng) {
    const auto &ops = circuit.ops();
    auto state = factory(circuit.n_qubits());
    BitString b(circuit.n_qubits());
    for (std::size_t k = 0; k < ops.size(); ++k) {
        const GateOp &op = ops[k];
        if (op.kind.type() == GateType::Measure) {
            if (k + 1 == ops.size()) {
                break;
            }
            const auto cands = candidates(b, op.qubits);
            b = cands[draw_index(candidate_weights(*state, cands), rng)];
            state->project(op.qubits[0], b[op.qubits[0]]);
            continue;
        }
        if (op.kind.is_channel()) {
            auto type = unravel_channel(op.kind, rng);
            if (type) {
                state->apply_op(GateOp{pauli(*type), op.qubits}, rng);
            }
        } else {
            state->apply_op(op, rng);
        }
        const auto cands = candidates(b, op.qubits);
        b = cands[draw_index(candidate_weights(*state, cands), rng)];
    }
    return b;
}

}  // namespace

void check_supported(const StateBackend &backend, const Circuit &circuit) {
    for (const auto &op : circuit.ops()) {
        if (!backend.supports(op.kind)) {
            throw UnsupportedOp("backend " + std::string(backend.name()) + " does not support " +
                                std::string(gate_type_name(op.kind.type())));
        }
    }
}

void StateBackend::project(std::uint32_t qubit, bool bit) {
    (void)qubit;
    (void)bit;
    throw UnsupportedOp("backend " + std::string(name()) + " does not support mid-circuit MEASURE");
}

std::vector<BitString> candidates(const BitString &b, const std::vector<std::uint32_t> &support) {
    const std::size_t k = support.size();
    std::vector<BitString> out;
    out.reserve(std::size_t{1} << k);
    for (std::size_t v = 0; v < (std::size_t{1} << k); ++v) {
        BitString c = b;
        for (std::size_t j = 0; j < k; ++j) {
            c.set(support[j], (v >> (k - 1 - j)) & 1);
        }
        out.push_back(std::move(c));
    }
    return out;
}

void update_bitstring(const StateBackend &backend,
                      const BitString &b,
                      const std::vector<std::uint32_t> &support,
                      std::uint64_t count,
                      RngStream &rng,
                      MultiplicityMap &out) {
    const auto cands = candidates(b, support);
    const auto weights = candidate_weights(backend, cands);
    if (count == 1) {
        out[cands[draw_index(weights, rng)]] += 1;
        return;
    }
    // Multinomial as a chain of conditional binomials.
    std::uint64_t remaining = count;
    double mass_left = 1;
    for (std::size_t k = 0; k < cands.size() && remaining > 0; ++k) {
        std::uint64_t taken;
        if (k + 1 == cands.size()) {
            taken = remaining;
        } else {
            const double p = mass_left > 0 ? std::clamp(weights[k] / mass_left, 0.0, 1.0) : 1.0;
            taken = rng.binomial(remaining, p);
        }
        mass_left -= weights[k];
        remaining -= taken;
        if (taken > 0) {
            out[cands[k]] += taken;
        }
    }
}

SampleResult sample_gate_by_gate(const Circuit &circuit,
                                 const BackendFactory &factory,
                                 std::uint64_t shots,
                                 std::uint64_t seed,
                                 const SamplerOptions &options) {
    if (shots == 0) {
        throw InvalidSpec("shots must be at least 1");
    }
    const auto start = Clock::now();
    auto state = factory(circuit.n_qubits());
    check_circuit(*state, circuit);
    if (state->needs_trajectories(circuit) || circuit.has_channels() || circuit.has_mid_circuit_measure()) {
        return sample_with_trajectories(circuit, factory, shots, seed, options);
    }

    SampleResult result;
    result.shots = shots;
    result.seed = seed;
    result.backend = std::string(state->name());

    RngStream rng(seed, 0);
    MultiplicityMap current{{BitString(circuit.n_qubits()), shots}};
    result.peak_distinct = 1;
    if (options.on_step) {
        options.on_step(current);
    }
    for (const auto &op : circuit.ops()) {
        if (op.kind.type() == GateType::Measure) {
            // Only a terminal MEASURE reaches here; it does not touch the state.
            continue;
        }
        state->apply_op(op, rng);
        MultiplicityMap next;
        for (const auto &[b, count] : current) {
            update_bitstring(*state, b, op.qubits, count, rng, next);
        }
        current = std::move(next);
        result.peak_distinct = std::max(result.peak_distinct, current.size());
        if (options.on_step) {
            options.on_step(current);
        }
    }
    for (const auto &[b, count] : current) {
        result.counts[output_key(circuit, b)] += count;
    }
    result.runtime_s = seconds_since(start);
    return result;
}

SampleResult sample_with_trajectories(const Circuit &circuit,
                                      const BackendFactory &factory,
                                      std::uint64_t shots,
                                      std::uint64_t seed,
                                      const SamplerOptions &options) {
    if (shots == 0) {
        throw InvalidSpec("shots must be at least 1");
    }
    const auto start = Clock::now();
    auto probe = factory(circuit.n_qubits());
    check_circuit(*probe, circuit);

    SampleResult result;
    result.shots = shots;
    result.seed = seed;
    result.backend = std::string(probe->name());

    const unsigned threads = std::max(1u, std::min<unsigned>(options.threads, static_cast<unsigned>(shots)));
    std::vector<std::map<BitString, std::uint64_t>> partial(threads);
    std::vector<std::exception_ptr> errors(threads);
    auto work = [&](unsigned worker) {
        try {
            const std::uint64_t begin = shots * worker / threads;
            const std::uint64_t end = shots * (worker + 1) / threads;
            for (std::uint64_t shot = begin; shot < end; ++shot) {
                RngStream rng(seed, shot);
                partial[worker][output_key(circuit, run_trajectory(circuit, factory, rng))] += 1;
            }
        } catch (...) {
            errors[worker] = std::current_exception();
        }
    };
    if (threads == 1) {
        work(0);
    } else {
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < threads; ++w) {
            pool.emplace_back(work, w);
        }
    }
    for (const auto &e : errors) {
        if (e) {
            std::rethrow_exception(e);
        }
    }
    for (const auto &p : partial) {
        for (const auto &[b, count] : p) {
            result.counts[b] += count;
        }
    }
    result.runtime_s = seconds_since(start);
    return result;
}

SampleResult sample_qubit_by_qubit(const Circuit &circuit, std::uint64_t shots, std::uint64_t seed) {
    if (shots == 0) {
        throw InvalidSpec("shots must be at least 1");
    }
    if (circuit.has_channels() || circuit.has_mid_circuit_measure()) {
        throw UnsupportedOp("qubit-by-qubit sampling needs a unitary circuit with at most a terminal MEASURE");
    }
    const auto start = Clock::now();
    const DenseState state = simulate_dense(circuit);
    const std::size_t n = circuit.n_qubits();

    // prefix[i] = sum of |amp|^2 over indices < i. Fixing qubits 0..k-1 pins
    // the high bits of the index, so each conditional marginal is a ratio of
    // two contiguous block sums.
    const auto &amps = state.amplitudes();
    std::vector<double> prefix(amps.size() + 1, 0.0);
    for (std::size_t i = 0; i < amps.size(); ++i) {
        prefix[i + 1] = prefix[i] + std::norm(amps[i]);
    }

    SampleResult result;
    result.shots = shots;
    result.seed = seed;
    result.backend = "statevector";
    RngStream rng(seed, 0);
    for (std::uint64_t shot = 0; shot < shots; ++shot) {
        BitString b(n);
        std::size_t lo = 0;
        std::size_t width = amps.size();
        for (std::size_t q = 0; q < n; ++q) {
            const std::size_t half = width / 2;
            const double p0 = prefix[lo + half] - prefix[lo];
            const double p1 = prefix[lo + width] - prefix[lo + half];
            const double total = p0 + p1;
            if (!(total >= kUnderflow)) {
                throw NumericalUnderflow("conditional marginal vanished at qubit " + std::to_string(q));
            }
            if (rng.uniform() * total >= p0) {
                b.set(q, true);
                lo += half;
            }
            width = half;
        }
        result.counts[output_key(circuit, b)] += 1;
    }
    result.runtime_s = seconds_since(start);
    return result;
}

std::string to_json(const SampleResult &result) {
    nlohmann::json counts = nlohmann::json::object();
    for (const auto &[b, count] : result.counts) {
        counts[b.to_string()] = count;
    }
    nlohmann::json j = {
        {"counts", counts},
        {"shots", result.shots},
        {"seed", result.seed},
        {"runtime_s", result.runtime_s},
        {"backend", result.backend},
    };
    return j.dump(2) + "\n";
}

std::string to_csv(const SampleResult &result) {
    std::ostringstream out;
    out << "bitstring,count\n";
    for (const auto &[b, count] : result.counts) {
        out << b.to_string() << ',' << count << '\n';
    }
    return out.str();
}

}  // namespace weaksim
