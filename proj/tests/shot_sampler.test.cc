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

#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <set>

#include "qfir/error.h"
#include "test_util.h"

using namespace qfir;

namespace {

StateVector random_state(std::mt19937_64 &rng, std::size_t dim) {
    auto amps = test_util::random_vector(rng, dim);
    double n = norm2(amps);
    for (auto &z : amps) {
        z /= n;
    }
    return StateVector(amps);
}

}  // namespace

TEST(shot_sampler, mix64_reference_values) {
    // splitmix64 stream seeded with 0: first outputs of the reference generator.
    uint64_t state = 0;
    state += 0x9E3779B97F4A7C15ull;
    ASSERT_EQ(mix64(state), 0xE220A8397B1DCDAFull);
    state += 0x9E3779B97F4A7C15ull;
    ASSERT_EQ(mix64(state), 0x6E789E6AA1B965F4ull);
    ASSERT_EQ(CounterRng(0).bits(0), 0xE220A8397B1DCDAFull);
    ASSERT_EQ(CounterRng(0).bits(1), 0x6E789E6AA1B965F4ull);
}

TEST(shot_sampler, uniform_range) {
    CounterRng rng(42);
    for (uint64_t k = 0; k < 10000; k++) {
        double u = rng.uniform(k);
        ASSERT_GE(u, 0.0);
        ASSERT_LT(u, 1.0);
    }
    ASSERT_NE(CounterRng::derive(7, 0), CounterRng::derive(7, 1));
    ASSERT_NE(CounterRng::derive(7, 0), CounterRng::derive(8, 0));
}

TEST(shot_sampler, basis_state_is_deterministic) {
    ShotRecord rec = sample(StateVector::basis(2, 2), 1024, 5, 2);
    ASSERT_EQ(rec.count(2), 1024u);
    ASSERT_EQ(rec.counts.size(), 1u);
    ProbabilityEstimate e = estimate(rec, 2);
    ASSERT_EQ(e.p_hat, 1.0);
    ASSERT_EQ(e.stderr_, 0.0);
    ASSERT_EQ(estimate(rec, 0).p_hat, 0.0);
}

TEST(shot_sampler, uniform_state_frequencies) {
    std::vector<Complex> amps(4, Complex(0.5, 0));
    StateVector y(amps);
    const uint64_t shots = 1000000;
    ShotRecord rec = sample(y, shots, 1, 0);
    double sigma = std::sqrt(0.25 * 0.75 * shots);
    uint64_t total = 0;
    for (std::size_t k = 0; k < 4; k++) {
        ASSERT_LE(std::abs(static_cast<double>(rec.count(k)) - 0.25 * shots), 5 * sigma) << k;
        total += rec.count(k);
    }
    ASSERT_EQ(total, shots);
}

TEST(shot_sampler, zero_probability_outcomes_never_occur) {
    StateVector y({Complex(0.6, 0), 0, Complex(0, 0.8), 0});
    ShotRecord rec = sample(y, 100000, 3);
    ASSERT_EQ(rec.count(1), 0u);
    ASSERT_EQ(rec.count(3), 0u);
    ASSERT_EQ(rec.count(0) + rec.count(2), 100000u);
}

TEST(shot_sampler, determinism) {
    std::mt19937_64 rng(1);
    StateVector y = random_state(rng, 8);
    ShotRecord a = sample(y, 4096, 99, 3);
    ShotRecord b = sample(y, 4096, 99, 3);
    ASSERT_EQ(a.counts, b.counts);
    ShotRecord c = sample(y, 4096, 100, 3);
    ASSERT_NE(a.counts, c.counts);
}

TEST(shot_sampler, errors) {
    StateVector loose({Complex(0.6, 0), Complex(0.6, 0)}, 1.0);
    try {
        sample(loose, 10, 0);
        FAIL();
    } catch (const Error &e) {
        ASSERT_EQ(e.kind(), ErrorKind::UnnormalizedState);
    }
    try {
        sample(StateVector::basis(1, 0), 0, 0);
        FAIL();
    } catch (const Error &e) {
        ASSERT_EQ(e.kind(), ErrorKind::InvalidArgument);
    }
    ShotRecord rec = sample(StateVector::basis(1, 0), 8, 0);
    try {
        estimate(rec, 2);
        FAIL();
    } catch (const Error &e) {
        ASSERT_EQ(e.kind(), ErrorKind::DimensionMismatch);
    }
}

TEST(shot_sampler, estimate_examples) {
    ShotRecord rec{{{0, 768}, {1, 256}}, 1024, 0, 1, 2};
    ProbabilityEstimate e = estimate(rec, 1);
    ASSERT_EQ(e.p_hat, 0.25);
    ASSERT_NEAR(e.stderr_, 0.013531646934131853, 1e-18);
    ASSERT_EQ(e.shots, 1024u);
}

TEST(shot_sampler, estimator_consistency) {
    std::mt19937_64 rng(2);
    for (int trial = 0; trial < 5; trial++) {
        StateVector y = random_state(rng, 8);
        std::size_t target = trial % 8;
        double p = std::norm(y[target]);
        ProbabilityEstimate e = estimate(sample(y, 1000000, 1000 + trial, target), target);
        ASSERT_LE(std::abs(e.p_hat - p), 5 * std::sqrt(p * (1 - p) / 1e6) + 1e-12) << trial;
    }
}

TEST(shot_sampler, spread_matches_binomial) {
    StateVector y({Complex(std::sqrt(0.3), 0), Complex(std::sqrt(0.7), 0)});
    const uint64_t shots = 1024;
    double sum = 0;
    double sum_sq = 0;
    const int seeds = 200;
    for (int s = 0; s < seeds; s++) {
        double p = estimate(sample(y, shots, CounterRng::derive(17, s)), 0).p_hat;
        sum += p;
        sum_sq += p * p;
    }
    double mean = sum / seeds;
    double sd = std::sqrt((sum_sq - seeds * mean * mean) / (seeds - 1));
    double expected = std::sqrt(0.3 * 0.7 / shots);
    ASSERT_GE(sd, expected / 1.5);
    ASSERT_LE(sd, expected * 1.5);
}
