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

#include "qfir/classical_fir.h"

#include <cmath>
#include <numbers>
#include <string>

#include "qfir/error.h"

namespace qfir {

Signal::Signal(std::vector<Complex> samples, double sample_interval)
    : samples_(std::move(samples)), sample_interval_(sample_interval) {
    if (samples_.empty()) {
        throw Error(ErrorKind::InvalidArgument, "signal needs at least one sample");
    }
    if (!(sample_interval_ > 0) || !std::isfinite(sample_interval_)) {
        throw Error(ErrorKind::InvalidArgument, "sample interval must be positive and finite");
    }
    for (const auto &z : samples_) {
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
            throw Error(ErrorKind::InvalidArgument, "signal samples must be finite");
        }
    }
}

Signal Signal::from_real(const std::vector<double> &samples, double sample_interval) {
    return Signal(std::vector<Complex>(samples.begin(), samples.end()), sample_interval);
}

Complex Signal::at(std::ptrdiff_t n) const {
    if (n < 0) {
        return {};
    }
    return samples_.at(static_cast<std::size_t>(n));
}

double Signal::peak_magnitude() const {
    double peak = 0;
    for (const auto &z : samples_) {
        peak = std::max(peak, std::abs(z));
    }
    return peak;
}

FilterSpec::FilterSpec(std::vector<Complex> taps) : taps_(std::move(taps)), tap_norm_(0) {
    if (taps_.empty()) {
        throw Error(ErrorKind::ZeroFilter, "filter needs at least one tap");
    }
    for (const auto &p : taps_) {
        if (!std::isfinite(p.real()) || !std::isfinite(p.imag())) {
            throw Error(ErrorKind::InvalidArgument, "filter taps must be finite");
        }
    }
    tap_norm_ = norm2(taps_);
    if (tap_norm_ == 0) {
        throw Error(ErrorKind::ZeroFilter, "all taps are zero");
    }
}

Signal fir_apply(const FilterSpec &filter, const Signal &x) {
    std::vector<Complex> y(x.size());
    const auto &taps = filter.taps();
    for (std::size_t n = 0; n < x.size(); n++) {
        Complex acc{};
        for (std::size_t i = 0; i < taps.size() && i <= n; i++) {
            acc += taps[i] * x.samples()[n - i];
        }
        y[n] = acc;
    }
    return Signal(std::move(y), x.sample_interval());
}

FilterSpec cascade_taps(const FilterSpec &first, const FilterSpec &second) {
    if (first.size() != 2 || second.size() != 2) {
        throw Error(
            ErrorKind::WrongArity,
            "cascade_taps expects two 2-tap filters, got " + std::to_string(first.size()) + " and " +
                std::to_string(second.size()));
    }
    Complex a1 = first.taps()[0];
    Complex b1 = first.taps()[1];
    Complex a2 = second.taps()[0];
    Complex b2 = second.taps()[1];
    return FilterSpec({a1 * a2, a1 * b2 + a2 * b1, b1 * b2});
}

std::vector<Complex> convolve_taps(const std::vector<Complex> &first, const std::vector<Complex> &second) {
    if (first.empty() || second.empty()) {
        return {};
    }
    std::vector<Complex> out(first.size() + second.size() - 1);
    for (std::size_t i = 0; i < first.size(); i++) {
        for (std::size_t j = 0; j < second.size(); j++) {
            out[i + j] += first[i] * second[j];
        }
    }
    return out;
}

Signal two_tone(std::size_t n, double f_low, double f_high, double sample_interval) {
    if (n == 0) {
        throw Error(ErrorKind::InvalidArgument, "two_tone needs at least one sample");
    }
    if (!(sample_interval > 0)) {
        throw Error(ErrorKind::InvalidArgument, "sample interval must be positive");
    }
    const double nyquist = 0.5 / sample_interval;
    for (double f : {f_low, f_high}) {
        if (!(f >= 0) || f >= nyquist) {
            throw Error(
                ErrorKind::AliasedTone,
                "tone " + std::to_string(f) + " Hz is outside [0, " + std::to_string(nyquist) + ") Hz");
        }
    }
    std::vector<double> samples(n);
    for (std::size_t k = 0; k < n; k++) {
        double t = static_cast<double>(k) * sample_interval;
        samples[k] = 0.5 * std::sin(2 * std::numbers::pi * f_low * t) + 0.5 * std::sin(2 * std::numbers::pi * f_high * t);
    }
    return Signal::from_real(samples, sample_interval);
}

Complex dtft_gain(const FilterSpec &filter, double omega) {
    Complex acc{};
    for (std::size_t i = 0; i < filter.size(); i++) {
        acc += filter.taps()[i] * std::polar(1.0, -omega * static_cast<double>(i));
    }
    return acc;
}

}  // namespace qfir
