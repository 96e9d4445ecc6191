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

#ifndef WEAKSIM_RNG_HPP
#define WEAKSIM_RNG_HPP

#include <cstdint>
#include <random>

namespace weaksim {

/// Reproducible random stream keyed by (master seed, stream index). Two
/// streams with the same key produce identical draws.
class RngStream {
  public:
    RngStream(std::uint64_t seed, std::uint64_t stream);

    std::uint64_t seed() const noexcept {
        return seed_;
    }
    std::uint64_t stream() const noexcept {
        return stream_;
    }

    std::mt19937_64 &engine() noexcept {
        return engine_;
    }

    /// Uniform double in [0, 1).
    double uniform();
    /// Uniform integer in [0, n).
    std::uint64_t below(std::uint64_t n);
    bool bernoulli(double p);
    /// Binomial(trials, p) draw.
    std::uint64_t binomial(std::uint64_t trials, double p);

  private:
    std::uint64_t seed_;
    std::uint64_t stream_;
    std::mt19937_64 engine_;
};

/// Derives a child seed from a parent seed and a tag; used to give sweep
/// points and trials independent, reproducible seeds.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t tag);

}  // namespace weaksim

#endif
