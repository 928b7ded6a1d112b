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

#ifndef QFIR_ENCODER_H
#define QFIR_ENCODER_H

#include <cstddef>
#include <span>
#include <vector>

#include "qfir/classical_fir.h"
#include "qfir/linalg.h"

namespace qfir {

/// Uniform amplitude scaling 1 / (M sqrt(d)) applied before encoding, where
/// M bounds |x[n]| and d is the number of samples encoded together.
class ScalePolicy {
   public:
    ScalePolicy(double amplitude_bound, std::size_t d);

    /// Batch mode: M = max |x[n]| over the signal (1 for an all-zero signal).
    static ScalePolicy for_signal(const Signal &x, std::size_t d);

    double amplitude_bound() const noexcept {
        return amplitude_bound_;
    }
    std::size_t d() const noexcept {
        return d_;
    }
    double factor() const noexcept {
        return factor_;
    }

   private:
    double amplitude_bound_;
    std::size_t d_;
    double factor_;
};

/// Unit-norm amplitude vector of length 2^m.
class StateVector {
   public:
    /// Throws DimensionMismatch unless the length is a power of two and
    /// UnnormalizedState if the norm is off by more than `norm_tolerance`.
    explicit StateVector(std::vector<Complex> amplitudes, double norm_tolerance = kStructuralTolerance);

    static StateVector basis(std::size_t num_qubits, std::size_t index);

    const std::vector<Complex> &amplitudes() const noexcept {
        return amplitudes_;
    }
    std::size_t num_qubits() const noexcept {
        return num_qubits_;
    }
    std::size_t dim() const noexcept {
        return amplitudes_.size();
    }
    Complex operator[](std::size_t k) const {
        return amplitudes_.at(k);
    }

   private:
    std::vector<Complex> amplitudes_;
    std::size_t num_qubits_;
};

/// Minimum qubit count holding d samples plus the normalization slot:
/// ceil(log2(d + 1)).
std::size_t choose_qubits(std::size_t d);

/// Raw samples x[n-(d-1)], ..., x[n], oldest first; indices before the start
/// of the signal read as zero.
std::vector<Complex> extract_window(const Signal &x, std::size_t n, std::size_t d);

/// Encodes raw window samples (oldest first): scaled samples in slots
/// 0..d-1, zeros, then eta = sqrt(1 - sum |scaled|^2) in the last slot.
/// Throws ScaleOverflow when the scaled window norm exceeds 1.
StateVector encode_samples(std::span<const Complex> window, const ScalePolicy &scale);

StateVector encode_window(const Signal &x, std::size_t n, std::size_t d, const ScalePolicy &scale);

/// Drops the oldest sample and appends x_next.
std::vector<Complex> slide_window(std::span<const Complex> window, Complex x_next);

}  // namespace qfir

#endif
