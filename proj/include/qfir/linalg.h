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

#ifndef QFIR_LINALG_H
#define QFIR_LINALG_H

#include <complex>
#include <cstddef>
#include <span>
#include <utility>
#include <vector>

namespace qfir {

using Complex = std::complex<double>;

/// Structural tolerance: hermiticity, orthonormality and unitarity checks.
inline constexpr double kStructuralTolerance = 1e-10;
/// Reconstruction tolerance for factorizations (eigendecomposition, square root).
inline constexpr double kReconstructionTolerance = 1e-9;
/// Residual norm below which a completion candidate is considered dependent.
inline constexpr double kCompletionSkipNorm = 1e-8;

/// Dense row-major complex matrix. Dimensions are at least 1x1 and every
/// entry is finite; both are checked on construction.
class ComplexMatrix {
   public:
    ComplexMatrix(std::size_t rows, std::size_t cols);
    ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);

    static ComplexMatrix identity(std::size_t n);
    static ComplexMatrix diagonal(std::span<const Complex> diag);
    static ComplexMatrix diagonal(std::span<const double> diag);
    /// Builds a matrix from nested rows, e.g. {{1, 0}, {0, 1}}.
    static ComplexMatrix from_rows(const std::vector<std::vector<Complex>> &rows);

    std::size_t rows() const noexcept {
        return rows_;
    }
    std::size_t cols() const noexcept {
        return cols_;
    }
    bool is_square() const noexcept {
        return rows_ == cols_;
    }

    Complex &operator()(std::size_t r, std::size_t c) {
        return entries_[r * cols_ + c];
    }
    const Complex &operator()(std::size_t r, std::size_t c) const {
        return entries_[r * cols_ + c];
    }

    std::span<const Complex> row(std::size_t r) const {
        return {entries_.data() + r * cols_, cols_};
    }
    std::span<const Complex> entries() const noexcept {
        return entries_;
    }

    ComplexMatrix adjoint() const;
    ComplexMatrix operator*(const ComplexMatrix &other) const;
    ComplexMatrix operator+(const ComplexMatrix &other) const;
    ComplexMatrix operator-(const ComplexMatrix &other) const;
    ComplexMatrix operator-() const;
    ComplexMatrix scaled(Complex factor) const;
    std::vector<Complex> apply(std::span<const Complex> vec) const;

    /// Copies the [row0, row0+rows) x [col0, col0+cols) sub-block.
    ComplexMatrix block(std::size_t row0, std::size_t col0, std::size_t rows, std::size_t cols) const;
    /// Assembles [[tl, tr], [bl, br]]; blocks in the same row/column must agree in size.
    static ComplexMatrix from_blocks(
        const ComplexMatrix &tl, const ComplexMatrix &tr, const ComplexMatrix &bl, const ComplexMatrix &br);

    bool operator==(const ComplexMatrix &other) const = default;

   private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Complex> entries_;
};

/// max_ij |a_ij - b_ij|. Throws DimensionMismatch on shape disagreement.
double max_abs_diff(const ComplexMatrix &a, const ComplexMatrix &b);

/// Max-entry deviation of A from its adjoint.
double hermiticity_defect(const ComplexMatrix &a);

struct UnitarityCertificate {
    double residual;   ///< max |(A A^dagger - I)_ij|
    double tolerance;

    bool passed() const noexcept {
        return residual <= tolerance;
    }
};

UnitarityCertificate certify_unitary(const ComplexMatrix &a, double tolerance = kStructuralTolerance);

struct HermitianEigen {
    std::vector<double> eigenvalues;  ///< ascending
    ComplexMatrix eigenvectors;       ///< column k pairs with eigenvalues[k]
};

/// Eigendecomposition of a Hermitian matrix by cyclic complex Jacobi rotations.
/// Throws NonHermitianInput when A deviates from A^dagger by more than
/// `hermitian_tolerance`, and NoConvergence if the sweeps do not settle.
HermitianEigen hermitian_eig(const ComplexMatrix &a, double hermitian_tolerance = kStructuralTolerance);

/// Principal square root of a Hermitian positive semidefinite matrix.
/// Eigenvalues in [-negative_tolerance, 0) are clamped to zero; anything
/// more negative raises IndefiniteInput.
ComplexMatrix psd_sqrt(const ComplexMatrix &a, double negative_tolerance = kStructuralTolerance);

/// Largest singular value.
double spectral_norm(const ComplexMatrix &a);

struct FixedRow {
    std::size_t index;
    std::vector<Complex> values;
};

/// Extends a set of orthonormal rows to a dim x dim unitary. The fixed rows
/// are copied verbatim; the free rows are filled in ascending index order by
/// modified Gram-Schmidt over e_0, e_1, ... (candidates whose residual norm
/// falls below kCompletionSkipNorm are skipped). Deterministic.
ComplexMatrix complete_to_unitary(std::span<const FixedRow> fixed_rows, std::size_t dim);

/// Conjugate-linear in the second argument: sum_k u_k conj(v_k).
Complex inner(std::span<const Complex> u, std::span<const Complex> v);
double norm2(std::span<const Complex> v);

}  // namespace qfir

#endif
