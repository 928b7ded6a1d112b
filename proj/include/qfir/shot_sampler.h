// Copyright 2026 The qfir Authors
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

#ifndef QFIR_SHOT_SAMPLER_H
#define QFIR_SHOT_SAMPLER_H

#include <cstddef>
#include <cstdint>
#include <map>

#include "qfir/encoder.h"

namespace qfir {

/// Stateless counter-based generator: draw k is a pure function of
/// (seed, k), so independent streams can be consumed in any order or in
/// parallel with identical results.
class CounterRng {
   public:
    explicit CounterRng(uint64_t seed) : seed_(seed) {
    }

    uint64_t bits(uint64_t counter) const;
    /// Uniform in [0, 1) with 53 bits of resolution.
    double uniform(uint64_t counter) const;

    /// Seed for an independent sub-stream, e.g. one per time index.
    static uint64_t derive(uint64_t seed, uint64_t stream);

   private:
    uint64_t seed_;
};

/// splitmix64 finalizer.
uint64_t mix64(uint64_t z);

struct ShotRecord {
    std::map<std::size_t, uint64_t> counts;  ///< only outcomes that occurred
    uint64_t shots;
    uint64_t seed;
    std::size_t target_index;
    std::size_t dim;

    uint64_t count(std::size_t index) const {
        auto it = counts.find(index);
        return it == counts.end() ? 0 : it->second;
    }
};

struct ProbabilityEstimate {
    double p_hat;
    double stderr_;  ///< sqrt(p_hat (1 - p_hat) / N)
    uint64_t shots;
};

/// Draws `shots` Z-basis outcomes from |amplitude_k|^2 by inverse CDF over
/// the full outcome set. Throws UnnormalizedState if the squared norm is off
/// by more than 1e-8 and InvalidArgument when shots == 0.
ShotRecord sample(const StateVector &y, uint64_t shots, uint64_t seed, std::size_t target_index = 0);

ProbabilityEstimate estimate(const ShotRecord &record, std::size_t target);

}  // namespace qfir

#endif
