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

#ifndef QFIR_FIR_UNITARY_H
#define QFIR_FIR_UNITARY_H

#include <cstddef>

#include "qfir/classical_fir.h"
#include "qfir/encoder.h"
#include "qfir/linalg.h"

namespace qfir {

/// Unitary realizing one FIR filter on the amplitude-encoded window.
///
/// Indexing is 0-based throughout. Row d-1 carries the normalized taps in
/// reversed order, [p_{d-1}, ..., p_0, 0, ..., 0] / tap_norm, so that with
/// the oldest-first window encoding amplitude d-1 of U|X_n> is
/// y[n] / tap_norm (in scaled units). The last row and column are the final
/// basis vector, leaving the eta slot untouched. The remaining rows come
/// from complete_to_unitary.
struct FilterUnitary {
    ComplexMatrix matrix;
    std::size_t d;
    std::size_t num_qubits;
    double tap_norm;
    UnitarityCertificate certificate;
};

/// Rank-one projector |k><k| onto basis index k.
struct Projector {
    std::size_t index;
};

/// Throws DimensionMismatch if 2^m < d + 1 and CertificateFailure if the
/// completed matrix is not unitary to kStructuralTolerance.
FilterUnitary build_filter_unitary(const FilterSpec &filter, std::size_t num_qubits);

/// Projector onto the amplitude holding the filter output (index d-1).
inline Projector output_projector(const FilterUnitary &u) {
    return {u.d - 1};
}

/// U |X_n>.
StateVector apply(const FilterUnitary &u, const StateVector &x);

/// <Y|Pi|Y> = |y_k|^2.
double ideal_probability(const StateVector &y, Projector pi);

/// Undoes tap normalization and input scaling: sqrt(p) * tap_norm * M * sqrt(d).
/// For the ideal probability this is exactly |y[n]|.
double reconstruct_magnitude(double probability, const FilterSpec &filter, const ScalePolicy &scale);

}  // namespace qfir

#endif
