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

#include "qfir/cascade.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "qfir/error.h"

namespace qfir {

namespace {

constexpr double kAlphaMargin = 1e-12;

double pair_norm(Complex a, Complex b, const char *which) {
    double n = std::sqrt(std::norm(a) + std::norm(b));
    if (n == 0) {
        throw Error(ErrorKind::ZeroFilter, std::string(which) + " has both coefficients zero");
    }
    return n;
}

double subnormalization_for(const ComplexMatrix &m) {
    return std::max(1.0, spectral_norm(m)) * (1 + kAlphaMargin);
}

void require_square(const ComplexMatrix &m, const char *what) {
    if (!m.is_square()) {
        throw Error(ErrorKind::DimensionMismatch, std::string(what) + " must be square");
    }
}

}  // namespace

std::string_view dilation_mode_name(DilationMode mode) {
    return mode == DilationMode::Exact ? "exact-dilation" : "paper-literal";
}

ScaledOperator build_u1(Complex a1, Complex b1) {
    double n = pair_norm(a1, b1, "filter 1");
    Complex a = a1 / n;
    Complex b = b1 / n;
    ComplexMatrix m = ComplexMatrix::from_rows({
        {a, 0, b, 0},
        {b, a, 0, 0},
        {0, b, a, 0},
        {0, 0, 0, 1},
    });
    double alpha = subnormalization_for(m);
    return ScaledOperator{std::move(m), alpha};
}

Dilation dilate(const ScaledOperator &s, DilationMode mode) {
    require_square(s.matrix, "dilated operator");
    const std::size_t n = s.matrix.rows();
    const ComplexMatrix id = ComplexMatrix::identity(n);

    if (mode == DilationMode::Exact) {
        ComplexMatrix a = s.subnormalized();
        double sigma = spectral_norm(a);
        if (sigma > 1 + kStructuralTolerance) {
            throw Error(
                ErrorKind::NotAContraction,
                "matrix / alpha has spectral norm " + std::to_string(sigma) + "; alpha is too small");
        }
        ComplexMatrix ad = a.adjoint();
        ComplexMatrix left = psd_sqrt(id - a * ad);
        ComplexMatrix lower = psd_sqrt(id - ad * a);
        ComplexMatrix u = ComplexMatrix::from_blocks(a, left, lower, -ad);
        UnitarityCertificate cert = certify_unitary(u);
        return Dilation{std::move(u), cert, mode};
    }

    const ComplexMatrix &a = s.matrix;
    double sigma = spectral_norm(a);
    if (sigma * sigma > 1 + kStructuralTolerance) {
        throw Error(
            ErrorKind::NotAContraction,
            "spectral norm " + std::to_string(sigma) + " > 1 makes I - A A^dagger indefinite");
    }
    ComplexMatrix b = psd_sqrt(id - a * a.adjoint());
    ComplexMatrix u = ComplexMatrix::from_blocks(a, b, b, -a);
    UnitarityCertificate cert = certify_unitary(u, kLiteralDilationTolerance);
    return Dilation{std::move(u), cert, mode};
}

double literal_block_residual(const ScaledOperator &s) {
    require_square(s.matrix, "dilated operator");
    ComplexMatrix a = s.subnormalized();
    ComplexMatrix b = psd_sqrt(ComplexMatrix::identity(a.rows()) - a * a.adjoint());
    return certify_unitary(ComplexMatrix::from_blocks(a, b, b, -a)).residual;
}

ComplexMatrix build_u2(Complex a2, Complex b2) {
    double n = pair_norm(a2, b2, "filter 2");
    Complex a = a2 / n;
    Complex b = b2 / n;
    if (a.imag() == 0 && b.imag() == 0) {
        return ComplexMatrix::from_rows({
            {1, 0, 0, 0},
            {0, -a, b, 0},
            {0, b, a, 0},
            {0, 0, 0, 1},
        });
    }
    std::vector<FixedRow> fixed{{2, {0, b, a, 0}}, {3, {0, 0, 0, 1}}};
    return complete_to_unitary(fixed, 4);
}

ComplexMatrix extend_u2(const ComplexMatrix &u2) {
    require_square(u2, "second stage");
    ComplexMatrix zero(u2.rows(), u2.cols());
    return ComplexMatrix::from_blocks(u2, zero, zero, -u2);
}

CascadeOperator compose(const ComplexMatrix &u1d, const ComplexMatrix &u2e, double alpha, DilationMode mode) {
    require_square(u1d, "dilated first stage");
    require_square(u2e, "extended second stage");
    if (u1d.rows() != u2e.rows()) {
        throw Error(
            ErrorKind::DimensionMismatch,
            "stage dimensions differ: " + std::to_string(u1d.rows()) + " vs " + std::to_string(u2e.rows()));
    }
    if (u1d.rows() % 2 != 0) {
        throw Error(ErrorKind::DimensionMismatch, "cascade operators act on an even-dimensional space");
    }
    if (mode == DilationMode::Exact) {
        for (const auto *m : {&u1d, &u2e}) {
            UnitarityCertificate cert = certify_unitary(*m);
            if (!cert.passed()) {
                throw Error(
                    ErrorKind::CertificateFailure, "cascade factor residual " + std::to_string(cert.residual));
            }
        }
    }
    ComplexMatrix composed = u2e * u1d;
    double tolerance = mode == DilationMode::Exact ? kStructuralTolerance : kLiteralDilationTolerance;
    UnitarityCertificate cert = certify_unitary(composed, tolerance);
    return CascadeOperator{u1d, u2e, std::move(composed), alpha, mode, cert};
}

StateVector cascaded_output(const CascadeOperator &c, const StateVector &x) {
    if (2 * x.dim() != c.composed.rows()) {
        throw Error(
            ErrorKind::DimensionMismatch,
            "signal state of dimension " + std::to_string(x.dim()) + " vs cascade of dimension " +
                std::to_string(c.composed.rows()));
    }
    if (!c.certificate.passed()) {
        throw Error(
            ErrorKind::CertificateFailure,
            std::string(dilation_mode_name(c.mode)) + " cascade residual " + std::to_string(c.certificate.residual) +
                " exceeds " + std::to_string(c.certificate.tolerance));
    }
    std::vector<Complex> input(c.composed.rows());
    std::copy(x.amplitudes().begin(), x.amplitudes().end(), input.begin());
    double norm_tolerance = c.mode == DilationMode::Exact ? kStructuralTolerance : 4 * kLiteralDilationTolerance;
    return StateVector(c.composed.apply(input), norm_tolerance);
}

ScaledOperator build_general_u1(const FilterSpec &f1, std::size_t d, std::size_t dim) {
    const std::size_t d1 = f1.size();
    if (d < d1) {
        throw Error(
            ErrorKind::ArityMismatch,
            "total tap count " + std::to_string(d) + " is smaller than the first stage (" + std::to_string(d1) + ")");
    }
    if (dim < d + 1) {
        throw Error(ErrorKind::DimensionMismatch, "dimension " + std::to_string(dim) + " cannot hold d + 1 slots");
    }
    const double n1 = f1.tap_norm();
    ComplexMatrix m = ComplexMatrix::identity(dim);
    for (std::size_t k = 0; k < d; k++) {
        for (std::size_t c = 0; c < d; c++) {
            std::size_t lag = (k + d - c) % d;
            m(k, c) = lag < d1 ? f1.taps()[lag] / n1 : Complex{};
        }
    }
    double alpha = subnormalization_for(m);
    return ScaledOperator{std::move(m), alpha};
}

ComplexMatrix build_general_u2(const FilterSpec &f2, std::size_t d, std::size_t dim) {
    const std::size_t d2 = f2.size();
    if (d < d2) {
        throw Error(
            ErrorKind::ArityMismatch,
            "total tap count " + std::to_string(d) + " is smaller than the second stage (" + std::to_string(d2) + ")");
    }
    if (dim < d + 1) {
        throw Error(ErrorKind::DimensionMismatch, "dimension " + std::to_string(dim) + " cannot hold d + 1 slots");
    }
    std::vector<Complex> tap_row(dim);
    for (std::size_t j = 0; j < d2; j++) {
        tap_row[d - 1 - j] = f2.taps()[j] / f2.tap_norm();
    }
    std::vector<Complex> eta_row(dim);
    eta_row.back() = 1.0;
    std::vector<FixedRow> fixed{{d - 1, std::move(tap_row)}, {dim - 1, std::move(eta_row)}};
    ComplexMatrix u = complete_to_unitary(fixed, dim);
    UnitarityCertificate cert = certify_unitary(u);
    if (!cert.passed()) {
        throw Error(ErrorKind::CertificateFailure, "second stage residual " + std::to_string(cert.residual));
    }
    return u;
}

std::vector<Complex> effective_taps(const ComplexMatrix &window_block, std::size_t d) {
    if (d == 0 || d > window_block.rows() || d > window_block.cols()) {
        throw Error(ErrorKind::DimensionMismatch, "window block too small for " + std::to_string(d) + " taps");
    }
    std::vector<Complex> taps(d);
    for (std::size_t i = 0; i < d; i++) {
        taps[i] = window_block(d - 1, d - 1 - i);
    }
    return taps;
}

double CascadeFilter::max_unitarity_residual() const {
    return std::max(
        {dilation.certificate.residual, certify_unitary(op.u2_extended).residual, op.certificate.residual});
}

CascadeFilter build_cascade(const FilterSpec &first, const FilterSpec &second, DilationMode mode) {
    FilterSpec combined(convolve_taps(first.taps(), second.taps()));
    const std::size_t d = combined.size();
    const std::size_t m = choose_qubits(d);
    const std::size_t dim = std::size_t{1} << m;

    bool two_by_two = first.size() == 2 && second.size() == 2;
    ScaledOperator stage1 = two_by_two ? build_u1(first.taps()[0], first.taps()[1]) : build_general_u1(first, d, dim);
    ComplexMatrix stage2 = two_by_two ? build_u2(second.taps()[0], second.taps()[1]) : build_general_u2(second, d, dim);

    Dilation dilation = dilate(stage1, mode);
    if (!dilation.certificate.passed()) {
        throw Error(
            ErrorKind::CertificateFailure,
            std::string(dilation_mode_name(mode)) + " dilation residual " +
                std::to_string(dilation.certificate.residual) + " exceeds " +
                std::to_string(dilation.certificate.tolerance));
    }
    double alpha = mode == DilationMode::Exact ? stage1.alpha : 1.0;
    CascadeOperator op = compose(dilation.matrix, extend_u2(stage2), alpha, mode);
    double stage_norm = first.tap_norm() * second.tap_norm();
    return CascadeFilter{
        first,
        second,
        std::move(combined),
        m,
        stage_norm,
        std::move(stage1),
        std::move(dilation),
        std::move(stage2),
        std::move(op)};
}

double reconstruct_cascade_magnitude(double probability, const CascadeFilter &cascade, const ScalePolicy &scale) {
    if (!(probability >= 0) || probability > 1) {
        throw Error(ErrorKind::InvalidArgument, "probability must lie in [0, 1]");
    }
    return std::sqrt(probability) * cascade.op.alpha * cascade.stage_norm * scale.amplitude_bound() *
           std::sqrt(static_cast<double>(scale.d()));
}

}  // namespace qfir
