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

#include <bit>
#include <cmath>
#include <string>

#include "qfir/error.h"

namespace qfir {

namespace {

constexpr double kScaleOverflowSlack = 1e-12;

}  // namespace

ScalePolicy::ScalePolicy(double amplitude_bound, std::size_t d)
    : amplitude_bound_(amplitude_bound), d_(d), factor_(0) {
    if (!(amplitude_bound_ > 0) || !std::isfinite(amplitude_bound_)) {
        throw Error(ErrorKind::InvalidArgument, "amplitude bound M must be positive and finite");
    }
    if (d_ == 0) {
        throw Error(ErrorKind::InvalidArgument, "d must be at least 1");
    }
    factor_ = 1 / (amplitude_bound_ * std::sqrt(static_cast<double>(d_)));
}

ScalePolicy ScalePolicy::for_signal(const Signal &x, std::size_t d) {
    double peak = x.peak_magnitude();
    return ScalePolicy(peak > 0 ? peak : 1.0, d);
}

StateVector::StateVector(std::vector<Complex> amplitudes, double norm_tolerance)
    : amplitudes_(std::move(amplitudes)), num_qubits_(0) {
    if (amplitudes_.size() < 2 || !std::has_single_bit(amplitudes_.size())) {
        throw Error(
            ErrorKind::DimensionMismatch,
            "state length " + std::to_string(amplitudes_.size()) + " is not a power of two >= 2");
    }
    num_qubits_ = static_cast<std::size_t>(std::countr_zero(amplitudes_.size()));
    double nrm = norm2(amplitudes_);
    if (!(std::abs(nrm * nrm - 1) <= norm_tolerance)) {
        throw Error(ErrorKind::UnnormalizedState, "state norm^2 is " + std::to_string(nrm * nrm));
    }
}

StateVector StateVector::basis(std::size_t num_qubits, std::size_t index) {
    std::vector<Complex> amps(std::size_t{1} << num_qubits);
    amps.at(index) = 1.0;
    return StateVector(std::move(amps));
}

std::size_t choose_qubits(std::size_t d) {
    if (d == 0) {
        throw Error(ErrorKind::InvalidArgument, "d must be at least 1");
    }
    return static_cast<std::size_t>(std::bit_width(d));  // == ceil(log2(d + 1))
}

std::vector<Complex> extract_window(const Signal &x, std::size_t n, std::size_t d) {
    if (n >= x.size()) {
        throw Error(
            ErrorKind::DimensionMismatch,
            "time index " + std::to_string(n) + " past end of " + std::to_string(x.size()) + "-sample signal");
    }
    std::vector<Complex> window(d);
    for (std::size_t i = 0; i < d; i++) {
        auto k = static_cast<std::ptrdiff_t>(n) - static_cast<std::ptrdiff_t>(d - 1) + static_cast<std::ptrdiff_t>(i);
        window[i] = x.at(k);
    }
    return window;
}

StateVector encode_samples(std::span<const Complex> window, const ScalePolicy &scale) {
    if (window.size() != scale.d()) {
        throw Error(
            ErrorKind::DimensionMismatch,
            "window of " + std::to_string(window.size()) + " samples with scale policy for d=" +
                std::to_string(scale.d()));
    }
    const std::size_t d = window.size();
    std::vector<Complex> amps(std::size_t{1} << choose_qubits(d));
    double weight = 0;
    for (std::size_t i = 0; i < d; i++) {
        amps[i] = window[i] * scale.factor();
        weight += std::norm(amps[i]);
    }
    if (weight > 1 + kScaleOverflowSlack) {
        throw Error(
            ErrorKind::ScaleOverflow,
            "scaled window has norm^2 " + std::to_string(weight) + " > 1; amplitude bound M=" +
                std::to_string(scale.amplitude_bound()) + " is too small");
    }
    amps.back() = std::sqrt(std::max(0.0, 1 - weight));
    return StateVector(std::move(amps));
}

StateVector encode_window(const Signal &x, std::size_t n, std::size_t d, const ScalePolicy &scale) {
    if (scale.d() != d) {
        throw Error(ErrorKind::DimensionMismatch, "scale policy was built for a different d");
    }
    auto window = extract_window(x, n, d);
    return encode_samples(window, scale);
}

std::vector<Complex> slide_window(std::span<const Complex> window, Complex x_next) {
    if (window.empty()) {
        return {};
    }
    std::vector<Complex> out(window.begin() + 1, window.end());
    out.push_back(x_next);
    return out;
}

}  // namespace qfir
