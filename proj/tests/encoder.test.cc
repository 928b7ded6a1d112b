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

#include "qfir/encoder.h"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "qfir/error.h"
#include "test_util.h"

using namespace qfir;

TEST(encoder, choose_qubits) {
    ASSERT_EQ(choose_qubits(1), 1u);
    ASSERT_EQ(choose_qubits(2), 2u);
    ASSERT_EQ(choose_qubits(3), 2u);
    ASSERT_EQ(choose_qubits(4), 3u);
    ASSERT_EQ(choose_qubits(7), 3u);
    ASSERT_EQ(choose_qubits(8), 4u);
    ASSERT_THROW(choose_qubits(0), Error);
}

TEST(encoder, scale_policy) {
    ScalePolicy s(2.0, 3);
    ASSERT_NEAR(s.factor() * s.amplitude_bound() * std::sqrt(3.0), 1.0, 1e-12);
    ASSERT_THROW(ScalePolicy(0.0, 3), Error);
    ASSERT_THROW(ScalePolicy(1.0, 0), Error);

    Signal x({0.5, Complex(0, -2), 1}, 1.0);
    ASSERT_EQ(ScalePolicy::for_signal(x, 2).amplitude_bound(), 2.0);
    Signal zeros({0, 0}, 1.0);
    ASSERT_EQ(ScalePolicy::for_signal(zeros, 2).amplitude_bound(), 1.0);
}

TEST(encoder, zero_signal_is_eta_basis_state) {
    Signal x({0, 0, 0, 0, 0}, 1.0);
    for (std::size_t d = 1; d <= 5; d++) {
        ScalePolicy s(1.0, d);
        StateVector st = encode_window(x, 4, d, s);
        ASSERT_EQ(st.dim(), std::size_t{1} << choose_qubits(d));
        for (std::size_t k = 0; k + 1 < st.dim(); k++) {
            ASSERT_EQ(st[k], Complex(0, 0));
        }
        ASSERT_EQ(st[st.dim() - 1], Complex(1, 0));
    }
}

TEST(encoder, single_sample_qubit) {
    // d = 1: scaled sample 0.6 -> [0.6, 0.8].
    Signal x({0.6}, 1.0);
    StateVector st = encode_window(x, 0, 1, ScalePolicy(1.0, 1));
    ASSERT_EQ(st.dim(), 2u);
    ASSERT_NEAR(st[0].real(), 0.6, 1e-15);
    ASSERT_NEAR(st[1].real(), 0.8, 1e-15);
}

TEST(encoder, three_sample_window) {
    // M = 1/sqrt(3) makes the factor 1, so the window is encoded verbatim.
    Signal x({0.1, 0.2, 0.3}, 1.0);
    ScalePolicy s(1 / std::sqrt(3.0), 3);
    StateVector st = encode_window(x, 2, 3, s);
    ASSERT_EQ(st.dim(), 4u);
    ASSERT_NEAR(st[0].real(), 0.1, 1e-15);
    ASSERT_NEAR(st[1].real(), 0.2, 1e-15);
    ASSERT_NEAR(st[2].real(), 0.3, 1e-15);
    // sqrt(1 - 0.14), also cross-checked as sqrt(1 - |window|^2).
    ASSERT_NEAR(st[3].real(), 0.9273618495495703, 1e-15);
    std::vector<Complex> window{0.1, 0.2, 0.3};
    ASSERT_NEAR(st[3].real(), std::sqrt(1 - std::pow(norm2(window), 2)), 1e-15);
}

TEST(encoder, explicit_zero_slots) {
    // d = 4 -> 3 qubits; slots 4..6 are exact zeros.
    Signal x({1, -1, 1, -1}, 1.0);
    StateVector st = encode_window(x, 3, 4, ScalePolicy(1.0, 4));
    ASSERT_EQ(st.dim(), 8u);
    for (std::size_t k = 4; k < 7; k++) {
        ASSERT_EQ(st[k], Complex(0, 0));
    }
    ASSERT_NEAR(st[7].real(), 0.0, 1e-15);
}

TEST(encoder, scale_overflow) {
    Signal x({1, 1, 1}, 1.0);
    try {
        encode_window(x, 2, 3, ScalePolicy(0.5, 3));
        FAIL();
    } catch (const Error &e) {
        ASSERT_EQ(e.kind(), ErrorKind::ScaleOverflow);
    }
    // Exactly at the bound: eta clamps to zero instead of going NaN.
    StateVector st = encode_window(x, 2, 3, ScalePolicy(1.0, 3));
    ASSERT_GE(st[3].real(), 0.0);
    ASSERT_LE(st[3].real(), 1e-7);
}

TEST(encoder, rejects_mismatched_policy_and_index) {
    Signal x({1, 1, 1}, 1.0);
    ASSERT_THROW(encode_window(x, 2, 3, ScalePolicy(1.0, 2)), Error);
    ASSERT_THROW(encode_window(x, 3, 3, ScalePolicy(1.0, 3)), Error);
}

TEST(encoder, state_vector_validation) {
    ASSERT_THROW(StateVector({1, 0, 0}), Error);
    try {
        StateVector({0.5, 0.5});
        FAIL();
    } catch (const Error &e) {
        ASSERT_EQ(e.kind(), ErrorKind::UnnormalizedState);
    }
    StateVector b = StateVector::basis(3, 5);
    ASSERT_EQ(b.num_qubits(), 3u);
    ASSERT_EQ(b[5], Complex(1, 0));
}

TEST(encoder, slide_window_examples) {
    std::vector<Complex> w{1, 2, 3};
    ASSERT_EQ(slide_window(w, 4), (std::vector<Complex>{2, 3, 4}));
    std::vector<Complex> zeros(3);
    ASSERT_EQ(slide_window(zeros, 0), zeros);
}

TEST(encoder, sliding_reproduces_direct_encoding) {
    std::mt19937_64 rng(11);
    for (std::size_t d = 1; d <= 5; d++) {
        Signal x(test_util::random_vector(rng, 40), 1.0);
        ScalePolicy s = ScalePolicy::for_signal(x, d);
        std::vector<Complex> window(d);
        for (std::size_t n = 0; n < x.size(); n++) {
            window = slide_window(window, x.samples()[n]);
            StateVector slid = encode_samples(window, s);
            StateVector direct = encode_window(x, n, d, s);
            for (std::size_t k = 0; k < slid.dim(); k++) {
                ASSERT_LE(std::abs(slid[k] - direct[k]), 1e-15);
            }
        }
    }
}

TEST(encoder, zero_padding_consistency) {
    Signal x({0.3, Complex(0.1, 0.2), -0.4, 0.5}, 1.0);
    const std::size_t d = 4;
    ScalePolicy s = ScalePolicy::for_signal(x, d);
    for (std::size_t n = 0; n + 1 < d; n++) {
        std::vector<Complex> padded(d);
        for (std::size_t k = 0; k <= n; k++) {
            padded[d - 1 - n + k] = x.samples()[k];
        }
        StateVector direct = encode_window(x, n, d, s);
        StateVector manual = encode_samples(padded, s);
        ASSERT_EQ(direct.amplitudes(), manual.amplitudes());
    }
}

TEST(encoder, norm_and_scale_round_trip_property) {
    std::mt19937_64 rng(500);
    for (int trial = 0; trial < 500; trial++) {
        std::size_t d = 1 + static_cast<std::size_t>(trial % 6);
        std::size_t len = d + static_cast<std::size_t>(trial % 9);
        Signal x(test_util::random_vector(rng, len, trial % 2 == 0), 1.0);
        ScalePolicy s = ScalePolicy::for_signal(x, d);
        std::size_t n = static_cast<std::size_t>(trial) % len;
        StateVector st = encode_window(x, n, d, s);
        ASSERT_NEAR(norm2(st.amplitudes()), 1.0, 1e-10);
        auto window = extract_window(x, n, d);
        double recover = s.amplitude_bound() * std::sqrt(static_cast<double>(d));
        for (std::size_t i = 0; i < d; i++) {
            ASSERT_LE(std::abs(st[i] * recover - window[i]), 1e-12);
        }
    }
}
