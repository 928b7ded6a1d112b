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

#ifndef QFIR_CASCADE_H
#define QFIR_CASCADE_H

#include <cstddef>
#include <string_view>
#include <vector>

#include "qfir/classical_fir.h"
#include "qfir/encoder.h"
#include "qfir/fir_unitary.h"
#include "qfir/linalg.h"

namespace qfir {

/// Two-stage FIR cascades realized as a product of unitaries.
///
/// The first stage matrix is generally not unitary (nor even a contraction),
/// so it is divided by a subnormalization alpha >= max(1, sigma_max) and
/// embedded as the top-left block of a unitary dilation on one extra qubit.
/// The second stage is unitary and is lifted to the same space as Z (x) U2,
/// i.e. block-diag(U2, -U2). The top-left block of the product is then
/// U2 U1 / alpha, whose row d-1 holds the reversed, convolved taps.

enum class DilationMode {
    /// [[A, sqrt(I - A A^dagger)], [sqrt(I - A^dagger A), -A^dagger]] with
    /// A = U1 / alpha. Always unitary.
    Exact,
    /// [[A, B], [B, -A]] with B = sqrt(I - A A^dagger) and A = U1 itself.
    /// Only unitary when A is normal; kept for comparison and always reported
    /// together with its residual.
    PaperLiteral,
};

std::string_view dilation_mode_name(DilationMode mode);

/// Residual above which a paper-literal dilation is refused for simulation.
inline constexpr double kLiteralDilationTolerance = 1e-8;

/// A matrix together with the subnormalization that makes matrix / alpha a
/// contraction.
struct ScaledOperator {
    ComplexMatrix matrix;
    double alpha;

    ComplexMatrix subnormalized() const {
        return matrix.scaled(1 / alpha);
    }
};

struct Dilation {
    ComplexMatrix matrix;
    UnitarityCertificate certificate;
    DilationMode mode;
};

struct CascadeOperator {
    ComplexMatrix u1_dilated;
    ComplexMatrix u2_extended;
    ComplexMatrix composed;  ///< u2_extended * u1_dilated
    double alpha;            ///< 1 in paper-literal mode
    DilationMode mode;
    UnitarityCertificate certificate;  ///< of `composed`

    /// The 2^m x 2^m block acting on the ancilla-|0> subspace.
    ComplexMatrix top_left() const {
        std::size_t half = composed.rows() / 2;
        return composed.block(0, 0, half, half);
    }
};

/// The first-stage 4x4 for a 2-tap filter (a1, b1):
///   [a 0 b 0; b a 0 0; 0 b a 0; 0 0 0 1] with (a, b) = (a1, b1) / sqrt(|a1|^2 + |b1|^2),
/// and alpha = max(1, sigma_max) * (1 + 1e-12).
ScaledOperator build_u1(Complex a1, Complex b1);

/// Unitary dilation of s. Exact mode throws NotAContraction if s.matrix / s.alpha
/// is not a contraction; paper-literal mode throws NotAContraction when
/// s.matrix itself is not one (its radicand would be indefinite).
Dilation dilate(const ScaledOperator &s, DilationMode mode = DilationMode::Exact);

/// Residual of the literal block form [[A, B], [B, -A]] evaluated on the
/// subnormalized A = s.matrix / s.alpha, where the square root always exists.
/// Quantifies how far the literal form is from unitary for operators that
/// paper-literal dilate() refuses outright.
double literal_block_residual(const ScaledOperator &s);

/// The second-stage 4x4 for a 2-tap filter (a2, b2), with (a, b) normalized:
///   [1 0 0 0; 0 -a b 0; 0 b a 0; 0 0 0 1].
/// For complex coefficients that form is not unitary, so rows 2 and 3 are
/// fixed and the rest completed with complete_to_unitary.
ComplexMatrix build_u2(Complex a2, Complex b2);

/// Z (x) u2 = block-diag(u2, -u2).
ComplexMatrix extend_u2(const ComplexMatrix &u2);

/// u2e * u1d. In exact mode both factors must pass unitarity at
/// kStructuralTolerance (CertificateFailure otherwise).
CascadeOperator compose(
    const ComplexMatrix &u1d, const ComplexMatrix &u2e, double alpha, DilationMode mode = DilationMode::Exact);

/// composed * (|0> (x) x). Throws CertificateFailure for a paper-literal
/// operator whose residual exceeds kLiteralDilationTolerance.
StateVector cascaded_output(const CascadeOperator &c, const StateVector &x);

/// General first stage for a d-tap cascade built from a d1-tap filter f1 and
/// a (d - d1 + 1)-tap second stage, on a dim x dim space. The d x d window
/// block is circulant: row k holds the reversed normalized f1 taps ending at
/// column k (wrapping), so row d-1 has d-d1 leading zeros and each row above
/// is the one below left-shifted by one. Rows d..dim-2 are identity and the
/// last row/column is e_last. Reproduces build_u1 for d1 = 2, d = 3.
ScaledOperator build_general_u1(const FilterSpec &f1, std::size_t d, std::size_t dim);

/// General second stage: row d-1 holds the reversed normalized f2 taps ending
/// at column d-1, row dim-1 is e_last, and everything else is completed.
ComplexMatrix build_general_u2(const FilterSpec &f2, std::size_t d, std::size_t dim);

/// Reads row d-1 of a window block and reverses it into tap order p_0..p_{d-1}.
std::vector<Complex> effective_taps(const ComplexMatrix &window_block, std::size_t d);

/// End-to-end cascade of two filters, ready to run against encoded windows.
struct CascadeFilter {
    FilterSpec first;
    FilterSpec second;
    FilterSpec combined;  ///< convolution of the two tap lists
    std::size_t num_qubits;  ///< signal qubits m; the operator acts on m + 1
    double stage_norm;       ///< product of the two stage tap norms
    ScaledOperator stage1;
    Dilation dilation;
    ComplexMatrix stage2;
    CascadeOperator op;

    std::size_t d() const noexcept {
        return combined.size();
    }
    /// Global basis index holding the cascaded output (ancilla |0>, slot d-1).
    Projector output_projector() const noexcept {
        return {combined.size() - 1};
    }
    /// Largest unitarity residual over the dilation, the extended second
    /// stage and the composed operator.
    double max_unitarity_residual() const;
};

/// Uses the explicit 4x4 constructions for two 2-tap stages and the general
/// ones otherwise. Throws CertificateFailure when a paper-literal dilation
/// fails its certificate.
CascadeFilter build_cascade(const FilterSpec &first, const FilterSpec &second, DilationMode mode = DilationMode::Exact);

/// sqrt(p) * alpha * stage_norm * M * sqrt(d): |y[n]| for the ideal probability.
double reconstruct_cascade_magnitude(double probability, const CascadeFilter &cascade, const ScalePolicy &scale);

}  // namespace qfir

#endif
