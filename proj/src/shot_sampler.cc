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

#include "qfir/shot_sampler.h"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "qfir/error.h"

namespace qfir {

namespace {

constexpr uint64_t kGolden = 0x9E3779B97F4A7C15ull;
constexpr double kSamplingNormTolerance = 1e-8;

}  // namespace

uint64_t mix64(uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

uint64_t CounterRng::bits(uint64_t counter) const {
    return mix64(seed_ + kGolden * (counter + 1));
}

double CounterRng::uniform(uint64_t counter) const {
    return static_cast<double>(bits(counter) >> 11) * 0x1.0p-53;
}

uint64_t CounterRng::derive(uint64_t seed, uint64_t stream) {
    return mix64(mix64(seed) ^ (kGolden * (stream + 1)));
}

ShotRecord sample(const StateVector &y, uint64_t shots, uint64_t seed, std::size_t target_index) {
    if (shots == 0) {
        throw Error(ErrorKind::InvalidArgument, "shots must be at least 1");
    }
    if (target_index >= y.dim()) {
        throw Error(ErrorKind::DimensionMismatch, "target index outside the state");
    }
    std::vector<double> cdf(y.dim());
    double total = 0;
    for (std::size_t k = 0; k < y.dim(); k++) {
        total += std::norm(y[k]);
        cdf[k] = total;
    }
    if (std::abs(total - 1) > kSamplingNormTolerance) {
        throw Error(ErrorKind::UnnormalizedState, "sum of probabilities is " + std::to_string(total));
    }

    // Rounding can push u * total onto the final CDF value; such draws land
    // on the last outcome with nonzero probability.
    std::size_t last_nonzero = 0;
    for (std::size_t k = 0; k < y.dim(); k++) {
        if (std::norm(y[k]) > 0) {
            last_nonzero = k;
        }
    }

    CounterRng rng(seed);
    std::vector<uint64_t> tally(y.dim());
    for (uint64_t shot = 0; shot < shots; shot++) {
        double target = rng.uniform(shot) * total;
        auto it = std::upper_bound(cdf.begin(), cdf.end(), target);
        std::size_t k = it == cdf.end() ? last_nonzero : static_cast<std::size_t>(it - cdf.begin());
        tally[k]++;
    }

    ShotRecord record{{}, shots, seed, target_index, y.dim()};
    for (std::size_t k = 0; k < tally.size(); k++) {
        if (tally[k] != 0) {
            record.counts.emplace(k, tally[k]);
        }
    }
    return record;
}

ProbabilityEstimate estimate(const ShotRecord &record, std::size_t target) {
    if (target >= record.dim) {
        throw Error(ErrorKind::DimensionMismatch, "target index outside the sampled state");
    }
    double n = static_cast<double>(record.shots);
    double p = static_cast<double>(record.count(target)) / n;
    return {p, std::sqrt(p * (1 - p) / n), record.shots};
}

}  // namespace qfir
