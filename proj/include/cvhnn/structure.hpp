#pragma once

// Generators and classifiers for the structured weight-matrix families:
// sign/symmetry-constrained real parts, Hermitian, skew-Hermitian, braided
// Hermitian, braided skew-Hermitian and polar-form matrices, plus the
// realification M = A + Bi  ->  W = [[A, -B], [B, A]].

#include <set>
#include <string>
#include <string_view>

#include "cvhnn/core.hpp"
#include "cvhnn/rng.hpp"

namespace cvhnn {

enum class SymmetryKind { Symmetric, Antisymmetric, Arbitrary };

/// Entry interval: Positive [0,1], Negative [-1,0], Arbitrary [-1,1].
enum class SignKind { Positive, Negative, Arbitrary };

enum class ThresholdMode { Zero, UniformScaled };

struct RealMatrixSpec {
    std::size_t n = 1;
    SymmetryKind symmetry = SymmetryKind::Arbitrary;
    SignKind sign = SignKind::Arbitrary;
};

struct PolarSpec {
    std::size_t n = 1;
    SymmetryKind magnitude_symmetry = SymmetryKind::Arbitrary;
    SymmetryKind phase_symmetry = SymmetryKind::Arbitrary;
};

std::string_view to_string(SymmetryKind k);
std::string_view to_string(SignKind k);
std::string_view to_string(ThresholdMode m);
SymmetryKind parse_symmetry(std::string_view s);
SignKind parse_sign(std::string_view s);
ThresholdMode parse_threshold(std::string_view s);

/// Draws a real matrix whose entries lie in the sign interval.
///
/// Symmetric: upper triangle including the diagonal is drawn row by row and
/// mirrored. Antisymmetric: strict upper triangle is drawn and negate-mirrored;
/// the diagonal is exactly 0. Arbitrary: all n^2 entries in row-major order.
RealMatrix gen_real_constrained(const RealMatrixSpec& spec, SeededRng& rng);

/// M = A + B i.
ComplexMatrix compose_weights(const RealMatrix& a, const RealMatrix& b);

/// M = A + A^T i. Satisfies M^T = i conj(M).
ComplexMatrix gen_braided_hermitian(const RealMatrix& a);

/// M = A - A^T i. Satisfies M^T = -i conj(M).
ComplexMatrix gen_braided_skew_hermitian(const RealMatrix& a);

/// Random Hermitian matrix: symmetric real part with off-diagonal entries from
/// `sign_re`, antisymmetric imaginary part from `sign_im`. The diagonal is real
/// and drawn from [0,1] when `diag_nonneg` is set, from [-1,1] otherwise.
ComplexMatrix gen_hermitian(std::size_t n, SignKind sign_re, SignKind sign_im, bool diag_nonneg,
                            SeededRng& rng);

/// Random skew-Hermitian matrix: antisymmetric real part and symmetric
/// imaginary part (diagonal included), components uniform on [-1,1].
ComplexMatrix gen_skew_hermitian(std::size_t n, SeededRng& rng);

/// M_ij = G_ij (cos P_ij + i sin P_ij) with G built on [0,1] and P on
/// [-pi, pi] under their respective symmetry kinds. An antisymmetric G has
/// negative entries below the diagonal.
ComplexMatrix gen_polar(const PolarSpec& spec, SeededRng& rng);

/// Exact (zero tolerance) structural classification.
std::set<StructureTag> classify(const ComplexMatrix& m);

/// W = [[A, -B], [B, A]] for M = A + B i, size 2n.
RealMatrix realify(const ComplexMatrix& m);

/// Zero: all 0. UniformScaled: real and imaginary parts independently
/// uniform on [-n, n].
ComplexVector gen_threshold(std::size_t n, ThresholdMode mode, SeededRng& rng);

}  // namespace cvhnn
