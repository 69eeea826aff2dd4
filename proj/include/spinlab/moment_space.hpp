#pragma once

#include <vector>

#include <Eigen/Dense>

#include "spinlab/spin.hpp"
#include "spinlab/types.hpp"

namespace spinlab {

/// Hilbert-Schmidt inner product Re tr(a^dagger b); real because it is only
/// used between Hermitian matrices, where tr(ab) is real.
double hs_inner(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b);

/// Largest absolute eigenvalue of a Hermitian matrix.
double hermitian_operator_norm(const Eigen::MatrixXcd& a);

/// Orthogonal basis of the moment space V_{s,t}: the span of the traceless
/// Hermitian parts of all words of length 1..t in Sx, Sy, Sz.
///
/// The ops are Hermitian, traceless, pairwise HS-orthogonal, and each is
/// scaled to unit operator norm, so residuals read directly as worst-case
/// expectation values. The list is empty for order 0.
struct MomentBasis {
    SpinQuantum s;
    int order = 0;
    std::vector<Eigen::MatrixXcd> ops;

    int dim() const noexcept { return static_cast<int>(ops.size()); }
};

/// Builds V_{s,t} by Gram-Schmidt over the word expansion. Words are
/// generated level by level and each contributes its Hermitian and
/// anti-Hermitian parts; candidates whose orthogonal remainder falls below
/// rank_tol times the largest candidate norm of the same word length are
/// discarded as dependent.
MomentBasis moment_basis(SpinQuantum s, int order, double rank_tol = kRankTol);

}  // namespace spinlab
