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

#include "qfir/fir_unitary.h"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "qfir/error.h"

namespace qfir {

FilterUnitary build_filter_unitary(const FilterSpec &filter, std::size_t num_qubits) {
    const std::size_t d = filter.size();
    if (num_qubits >= 8 * sizeof(std::size_t) || (std::size_t{1} << num_qubits) < d + 1) {
        throw Error(
            ErrorKind::DimensionMismatch,
            std::to_string(num_qubits) + " qubits cannot hold " + std::to_string(d) + " taps plus the eta slot");
    }
    const std::size_t dim = std::size_t{1} << num_qubits;
    const double tap_norm = filter.tap_norm();

    std::vector<Complex> tap_row(dim);
    for (std::size_t c = 0; c < d; c++) {
        tap_row[c] = filter.taps()[d - 1 - c] / tap_norm;
    }
    std::vector<Complex> eta_row(dim);
    eta_row.back() = 1.0;

    std::vector<FixedRow> fixed{{d - 1, std::move(tap_row)}, {dim - 1, std::move(eta_row)}};
    ComplexMatrix matrix = complete_to_unitary(fixed, dim);

    UnitarityCertificate cert = certify_unitary(matrix);
    if (!cert.passed()) {
        throw Error(
            ErrorKind::CertificateFailure, "filter unitary residual " + std::to_string(cert.residual));
    }
    return FilterUnitary{std::move(matrix), d, num_qubits, tap_norm, cert};
}

StateVector apply(const FilterUnitary &u, const StateVector &x) {
    if (x.dim() != u.matrix.rows()) {
        throw Error(
            ErrorKind::DimensionMismatch,
            "state of dimension " + std::to_string(x.dim()) + " vs unitary of dimension " +
                std::to_string(u.matrix.rows()));
    }
    return StateVector(u.matrix.apply(x.amplitudes()));
}

double ideal_probability(const StateVector &y, Projector pi) {
    if (pi.index >= y.dim()) {
        throw Error(ErrorKind::DimensionMismatch, "projector index outside the state");
    }
    return std::clamp(std::norm(y[pi.index]), 0.0, 1.0);
}

double reconstruct_magnitude(double probability, const FilterSpec &filter, const ScalePolicy &scale) {
    if (!(probability >= 0) || probability > 1) {
        throw Error(ErrorKind::InvalidArgument, "probability must lie in [0, 1]");
    }
    return std::sqrt(probability) * filter.tap_norm() * scale.amplitude_bound() *
           std::sqrt(static_cast<double>(scale.d()));
}

}  // namespace qfir
