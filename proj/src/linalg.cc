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

#include "qfir/linalg.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "qfir/error.h"

namespace qfir {

namespace {

constexpr int kMaxJacobiSweeps = 100;
constexpr double kJacobiOffDiagonalTolerance = 1e-13;

void require_same_shape(const ComplexMatrix &a, const ComplexMatrix &b, const char *what) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw Error(
            ErrorKind::DimensionMismatch,
            std::string(what) + ": " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) + " vs " +
                std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
    }
}

void require_square(const ComplexMatrix &a, const char *what) {
    if (!a.is_square()) {
        throw Error(
            ErrorKind::DimensionMismatch,
            std::string(what) + " requires a square matrix, got " + std::to_string(a.rows()) + "x" +
                std::to_string(a.cols()));
    }
}

ComplexMatrix hermitian_part(const ComplexMatrix &a) {
    ComplexMatrix out(a.rows(), a.cols());
    for (std::size_t r = 0; r < a.rows(); r++) {
        for (std::size_t c = 0; c < a.cols(); c++) {
            out(r, c) = 0.5 * (a(r, c) + std::conj(a(c, r)));
        }
    }
    return out;
}

}  // namespace

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : ComplexMatrix(rows, cols, std::vector<Complex>(rows * cols)) {
}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (rows_ == 0 || cols_ == 0) {
        throw Error(ErrorKind::DimensionMismatch, "matrix dimensions must be at least 1x1");
    }
    if (entries_.size() != rows_ * cols_) {
        throw Error(
            ErrorKind::DimensionMismatch,
            "expected " + std::to_string(rows_ * cols_) + " entries, got " + std::to_string(entries_.size()));
    }
    for (const auto &z : entries_) {
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
            throw Error(ErrorKind::InvalidArgument, "matrix entries must be finite");
        }
    }
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
    ComplexMatrix out(n, n);
    for (std::size_t k = 0; k < n; k++) {
        out(k, k) = 1.0;
    }
    return out;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const Complex> diag) {
    ComplexMatrix out(diag.size(), diag.size());
    for (std::size_t k = 0; k < diag.size(); k++) {
        out(k, k) = diag[k];
    }
    return out;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const double> diag) {
    std::vector<Complex> values(diag.begin(), diag.end());
    return diagonal(std::span<const Complex>(values));
}

ComplexMatrix ComplexMatrix::from_rows(const std::vector<std::vector<Complex>> &rows) {
    if (rows.empty()) {
        throw Error(ErrorKind::DimensionMismatch, "from_rows needs at least one row");
    }
    std::size_t cols = rows.front().size();
    std::vector<Complex> entries;
    entries.reserve(rows.size() * cols);
    for (const auto &r : rows) {
        if (r.size() != cols) {
            throw Error(ErrorKind::DimensionMismatch, "ragged rows passed to from_rows");
        }
        entries.insert(entries.end(), r.begin(), r.end());
    }
    return ComplexMatrix(rows.size(), cols, std::move(entries));
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix out(cols_, rows_);
    for (std::size_t r = 0; r < rows_; r++) {
        for (std::size_t c = 0; c < cols_; c++) {
            out(c, r) = std::conj((*this)(r, c));
        }
    }
    return out;
}

ComplexMatrix ComplexMatrix::operator*(const ComplexMatrix &other) const {
    if (cols_ != other.rows_) {
        throw Error(
            ErrorKind::DimensionMismatch,
            "cannot multiply " + std::to_string(rows_) + "x" + std::to_string(cols_) + " by " +
                std::to_string(other.rows_) + "x" + std::to_string(other.cols_));
    }
    ComplexMatrix out(rows_, other.cols_);
    for (std::size_t r = 0; r < rows_; r++) {
        for (std::size_t k = 0; k < cols_; k++) {
            Complex a = (*this)(r, k);
            if (a == Complex{}) {
                continue;
            }
            for (std::size_t c = 0; c < other.cols_; c++) {
                out(r, c) += a * other(k, c);
            }
        }
    }
    return out;
}

ComplexMatrix ComplexMatrix::operator+(const ComplexMatrix &other) const {
    require_same_shape(*this, other, "operator+");
    ComplexMatrix out = *this;
    for (std::size_t k = 0; k < entries_.size(); k++) {
        out.entries_[k] += other.entries_[k];
    }
    return out;
}

ComplexMatrix ComplexMatrix::operator-(const ComplexMatrix &other) const {
    require_same_shape(*this, other, "operator-");
    ComplexMatrix out = *this;
    for (std::size_t k = 0; k < entries_.size(); k++) {
        out.entries_[k] -= other.entries_[k];
    }
    return out;
}

ComplexMatrix ComplexMatrix::operator-() const {
    return scaled(-1.0);
}

ComplexMatrix ComplexMatrix::scaled(Complex factor) const {
    ComplexMatrix out = *this;
    for (auto &z : out.entries_) {
        z *= factor;
    }
    return out;
}

std::vector<Complex> ComplexMatrix::apply(std::span<const Complex> vec) const {
    if (vec.size() != cols_) {
        throw Error(
            ErrorKind::DimensionMismatch,
            "vector of length " + std::to_string(vec.size()) + " applied to " + std::to_string(rows_) + "x" +
                std::to_string(cols_) + " matrix");
    }
    std::vector<Complex> out(rows_);
    for (std::size_t r = 0; r < rows_; r++) {
        Complex acc{};
        for (std::size_t c = 0; c < cols_; c++) {
            acc += (*this)(r, c) * vec[c];
        }
        out[r] = acc;
    }
    return out;
}

ComplexMatrix ComplexMatrix::block(std::size_t row0, std::size_t col0, std::size_t rows, std::size_t cols) const {
    if (row0 + rows > rows_ || col0 + cols > cols_) {
        throw Error(ErrorKind::DimensionMismatch, "block extends past matrix bounds");
    }
    ComplexMatrix out(rows, cols);
    for (std::size_t r = 0; r < rows; r++) {
        for (std::size_t c = 0; c < cols; c++) {
            out(r, c) = (*this)(row0 + r, col0 + c);
        }
    }
    return out;
}

ComplexMatrix ComplexMatrix::from_blocks(
    const ComplexMatrix &tl, const ComplexMatrix &tr, const ComplexMatrix &bl, const ComplexMatrix &br) {
    if (tl.rows() != tr.rows() || bl.rows() != br.rows() || tl.cols() != bl.cols() || tr.cols() != br.cols()) {
        throw Error(ErrorKind::DimensionMismatch, "inconsistent block sizes");
    }
    ComplexMatrix out(tl.rows() + bl.rows(), tl.cols() + tr.cols());
    auto place = [&out](const ComplexMatrix &src, std::size_t r0, std::size_t c0) {
        for (std::size_t r = 0; r < src.rows(); r++) {
            for (std::size_t c = 0; c < src.cols(); c++) {
                out(r0 + r, c0 + c) = src(r, c);
            }
        }
    };
    place(tl, 0, 0);
    place(tr, 0, tl.cols());
    place(bl, tl.rows(), 0);
    place(br, tl.rows(), tl.cols());
    return out;
}

double max_abs_diff(const ComplexMatrix &a, const ComplexMatrix &b) {
    require_same_shape(a, b, "max_abs_diff");
    double worst = 0;
    for (std::size_t k = 0; k < a.entries().size(); k++) {
        worst = std::max(worst, std::abs(a.entries()[k] - b.entries()[k]));
    }
    return worst;
}

double hermiticity_defect(const ComplexMatrix &a) {
    require_square(a, "hermiticity_defect");
    double worst = 0;
    for (std::size_t r = 0; r < a.rows(); r++) {
        for (std::size_t c = r; c < a.cols(); c++) {
            worst = std::max(worst, std::abs(a(r, c) - std::conj(a(c, r))));
        }
    }
    return worst;
}

UnitarityCertificate certify_unitary(const ComplexMatrix &a, double tolerance) {
    require_square(a, "certify_unitary");
    return {max_abs_diff(a * a.adjoint(), ComplexMatrix::identity(a.rows())), tolerance};
}

HermitianEigen hermitian_eig(const ComplexMatrix &a, double hermitian_tolerance) {
    require_square(a, "hermitian_eig");
    double defect = hermiticity_defect(a);
    if (defect > hermitian_tolerance) {
        throw Error(ErrorKind::NonHermitianInput, "max |A - A^dagger| = " + std::to_string(defect));
    }

    const std::size_t n = a.rows();
    ComplexMatrix work = hermitian_part(a);
    ComplexMatrix vecs = ComplexMatrix::identity(n);

    double frob = 0;
    for (const auto &z : work.entries()) {
        frob += std::norm(z);
    }
    frob = std::sqrt(frob);

    auto off_diagonal = [&work, n]() {
        double acc = 0;
        for (std::size_t r = 0; r < n; r++) {
            for (std::size_t c = 0; c < n; c++) {
                if (r != c) {
                    acc += std::norm(work(r, c));
                }
            }
        }
        return std::sqrt(acc);
    };

    bool converged = frob == 0 || n == 1;
    for (int sweep = 0; sweep < kMaxJacobiSweeps && !converged; sweep++) {
        if (off_diagonal() <= kJacobiOffDiagonalTolerance * frob) {
            converged = true;
            break;
        }
        for (std::size_t p = 0; p + 1 < n; p++) {
            for (std::size_t q = p + 1; q < n; q++) {
                Complex apq = work(p, q);
                double mag = std::abs(apq);
                if (mag == 0) {
                    continue;
                }
                // Phase q so the (p, q) entry becomes the real number `mag`,
                // then zero it with a real symmetric rotation.
                Complex phase = std::conj(apq) / mag;
                double app = work(p, p).real();
                double aqq = work(q, q).real();
                double theta = (aqq - app) / (2 * mag);
                double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1));
                double c = 1 / std::sqrt(t * t + 1);
                double s = t * c;
                Complex gpp = c;
                Complex gpq = s;
                Complex gqp = -s * phase;
                Complex gqq = c * phase;

                for (std::size_t k = 0; k < n; k++) {
                    Complex akp = work(k, p);
                    Complex akq = work(k, q);
                    work(k, p) = akp * gpp + akq * gqp;
                    work(k, q) = akp * gpq + akq * gqq;
                }
                for (std::size_t k = 0; k < n; k++) {
                    Complex apk = work(p, k);
                    Complex aqk = work(q, k);
                    work(p, k) = std::conj(gpp) * apk + std::conj(gqp) * aqk;
                    work(q, k) = std::conj(gpq) * apk + std::conj(gqq) * aqk;
                }
                for (std::size_t k = 0; k < n; k++) {
                    Complex vkp = vecs(k, p);
                    Complex vkq = vecs(k, q);
                    vecs(k, p) = vkp * gpp + vkq * gqp;
                    vecs(k, q) = vkp * gpq + vkq * gqq;
                }
                work(p, q) = 0;
                work(q, p) = 0;
                work(p, p) = work(p, p).real();
                work(q, q) = work(q, q).real();
            }
        }
    }
    if (!converged && off_diagonal() > kJacobiOffDiagonalTolerance * frob) {
        throw Error(ErrorKind::NoConvergence, "Jacobi sweeps did not converge");
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&work](std::size_t x, std::size_t y) {
        return work(x, x).real() < work(y, y).real();
    });

    HermitianEigen out{std::vector<double>(n), ComplexMatrix(n, n)};
    for (std::size_t k = 0; k < n; k++) {
        out.eigenvalues[k] = work(order[k], order[k]).real();
        for (std::size_t r = 0; r < n; r++) {
            out.eigenvectors(r, k) = vecs(r, order[k]);
        }
    }
    return out;
}

ComplexMatrix psd_sqrt(const ComplexMatrix &a, double negative_tolerance) {
    HermitianEigen eig = hermitian_eig(a);
    const std::size_t n = a.rows();
    std::vector<double> roots(n);
    for (std::size_t k = 0; k < n; k++) {
        double lambda = eig.eigenvalues[k];
        if (lambda < -negative_tolerance) {
            throw Error(ErrorKind::IndefiniteInput, "eigenvalue " + std::to_string(lambda) + " is negative");
        }
        roots[k] = std::sqrt(std::max(lambda, 0.0));
    }
    const ComplexMatrix &v = eig.eigenvectors;
    ComplexMatrix out = v * ComplexMatrix::diagonal(std::span<const double>(roots)) * v.adjoint();
    return hermitian_part(out);
}

double spectral_norm(const ComplexMatrix &a) {
    ComplexMatrix gram = a.rows() <= a.cols() ? a * a.adjoint() : a.adjoint() * a;
    HermitianEigen eig = hermitian_eig(hermitian_part(gram));
    return std::sqrt(std::max(eig.eigenvalues.back(), 0.0));
}

Complex inner(std::span<const Complex> u, std::span<const Complex> v) {
    if (u.size() != v.size()) {
        throw Error(ErrorKind::DimensionMismatch, "inner product of vectors with different lengths");
    }
    Complex acc{};
    for (std::size_t k = 0; k < u.size(); k++) {
        acc += u[k] * std::conj(v[k]);
    }
    return acc;
}

double norm2(std::span<const Complex> v) {
    double acc = 0;
    for (const auto &z : v) {
        acc += std::norm(z);
    }
    return std::sqrt(acc);
}

ComplexMatrix complete_to_unitary(std::span<const FixedRow> fixed_rows, std::size_t dim) {
    if (dim == 0) {
        throw Error(ErrorKind::DimensionMismatch, "completion dimension must be positive");
    }
    std::vector<bool> taken(dim, false);
    for (const auto &fr : fixed_rows) {
        if (fr.index >= dim) {
            throw Error(
                ErrorKind::DimensionMismatch,
                "fixed row index " + std::to_string(fr.index) + " out of range for dim " + std::to_string(dim));
        }
        if (fr.values.size() != dim) {
            throw Error(
                ErrorKind::DimensionMismatch,
                "fixed row " + std::to_string(fr.index) + " has length " + std::to_string(fr.values.size()));
        }
        if (taken[fr.index]) {
            throw Error(ErrorKind::NonOrthonormalConstraint, "row " + std::to_string(fr.index) + " fixed twice");
        }
        taken[fr.index] = true;
    }
    for (std::size_t i = 0; i < fixed_rows.size(); i++) {
        double nrm = norm2(fixed_rows[i].values);
        if (std::abs(nrm - 1) > kStructuralTolerance) {
            throw Error(
                ErrorKind::NonOrthonormalConstraint,
                "fixed row " + std::to_string(fixed_rows[i].index) + " has norm " + std::to_string(nrm));
        }
        for (std::size_t j = 0; j < i; j++) {
            double overlap = std::abs(inner(fixed_rows[i].values, fixed_rows[j].values));
            if (overlap > kStructuralTolerance) {
                throw Error(
                    ErrorKind::NonOrthonormalConstraint,
                    "fixed rows " + std::to_string(fixed_rows[j].index) + " and " +
                        std::to_string(fixed_rows[i].index) + " overlap by " + std::to_string(overlap));
            }
        }
    }

    std::vector<std::vector<Complex>> basis;
    basis.reserve(dim);
    for (const auto &fr : fixed_rows) {
        basis.push_back(fr.values);
    }
    const std::size_t needed = dim - fixed_rows.size();
    std::vector<std::vector<Complex>> accepted;
    for (std::size_t j = 0; j < dim && accepted.size() < needed; j++) {
        std::vector<Complex> v(dim);
        v[j] = 1.0;
        // Two passes of modified Gram-Schmidt keep the result orthogonal to
        // working precision even when the first pass cancels heavily.
        for (int pass = 0; pass < 2; pass++) {
            for (const auto &b : basis) {
                Complex proj = inner(v, b);
                if (proj == Complex{}) {
                    continue;
                }
                for (std::size_t k = 0; k < dim; k++) {
                    v[k] -= proj * b[k];
                }
            }
        }
        double nrm = norm2(v);
        if (nrm < kCompletionSkipNorm) {
            continue;
        }
        for (auto &z : v) {
            z /= nrm;
        }
        basis.push_back(v);
        accepted.push_back(std::move(v));
    }
    if (accepted.size() != needed) {
        throw Error(ErrorKind::NoConvergence, "canonical basis exhausted before completion finished");
    }

    ComplexMatrix out(dim, dim);
    for (const auto &fr : fixed_rows) {
        for (std::size_t c = 0; c < dim; c++) {
            out(fr.index, c) = fr.values[c];
        }
    }
    std::size_t next = 0;
    for (std::size_t r = 0; r < dim; r++) {
        if (taken[r]) {
            continue;
        }
        for (std::size_t c = 0; c < dim; c++) {
            out(r, c) = accepted[next][c];
        }
        next++;
    }
    return out;
}

}  // namespace qfir
