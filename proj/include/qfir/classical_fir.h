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

#ifndef QFIR_CLASSICAL_FIR_H
#define QFIR_CLASSICAL_FIR_H

#include <cstddef>
#include <vector>

#include "qfir/linalg.h"

namespace qfir {

/// Uniformly sampled discrete-time sequence. Non-empty, finite samples,
/// positive sample interval (seconds).
class Signal {
   public:
    Signal(std::vector<Complex> samples, double sample_interval);
    static Signal from_real(const std::vector<double> &samples, double sample_interval);

    const std::vector<Complex> &samples() const noexcept {
        return samples_;
    }
    double sample_interval() const noexcept {
        return sample_interval_;
    }
    std::size_t size() const noexcept {
        return samples_.size();
    }
    /// x[n], with x[n] = 0 for n < 0.
    Complex at(std::ptrdiff_t n) const;
    /// max_n |x[n]|.
    double peak_magnitude() const;

   private:
    std::vector<Complex> samples_;
    double sample_interval_;
};

/// Ordered taps p_0..p_{d-1} of y[n] = sum_i p_i x[n - i].
class FilterSpec {
   public:
    explicit FilterSpec(std::vector<Complex> taps);

    const std::vector<Complex> &taps() const noexcept {
        return taps_;
    }
    std::size_t size() const noexcept {
        return taps_.size();
    }
    /// sqrt(sum_i |p_i|^2); always > 0.
    double tap_norm() const noexcept {
        return tap_norm_;
    }

   private:
    std::vector<Complex> taps_;
    double tap_norm_;
};

/// Direct-form convolution with zero pre-history; output length = input length.
Signal fir_apply(const FilterSpec &filter, const Signal &x);

/// Taps of the cascade of two 2-tap filters:
/// (a1 a2, a1 b2 + a2 b1, b1 b2). Throws WrongArity otherwise.
FilterSpec cascade_taps(const FilterSpec &first, const FilterSpec &second);

/// Full linear convolution of two tap sequences (length d1 + d2 - 1).
std::vector<Complex> convolve_taps(const std::vector<Complex> &first, const std::vector<Complex> &second);

/// 0.5 sin(2 pi f_low t) + 0.5 sin(2 pi f_high t) at t = k * sample_interval.
/// Throws AliasedTone when either frequency reaches Nyquist.
Signal two_tone(std::size_t n, double f_low, double f_high, double sample_interval);

/// H(omega) = sum_i p_i exp(-j omega i).
Complex dtft_gain(const FilterSpec &filter, double omega);

}  // namespace qfir

#endif
