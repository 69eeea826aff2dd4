#pragma once

#include <map>
#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "spinlab/moment_space.hpp"
#include "spinlab/spin.hpp"
#include "spinlab/types.hpp"

namespace spinlab {

/// A subspace of the spin-s Hilbert space, held as a d x k matrix with
/// orthonormal columns. certified_order records the result of the last
/// successful certification, if any.
struct Subspace {
    SpinQuantum s;
    Eigen::MatrixXcd basis;
    std::optional<int> certified_order;

    int dim() const noexcept { return static_cast<int>(basis.cols()); }
    SpinState column_state(int j) const { return {s, basis.col(j)}; }
};

/// Wraps a basis matrix after checking shape and orthonormality.
Subspace make_subspace(SpinQuantum s, Eigen::MatrixXcd basis, double ortho_tol = 1e-8);

struct SpanResult {
    Subspace subspace;
    Eigen::VectorXd singular_values;  // of the stacked state matrix, descending
};

/// Orthonormal basis of the span of a list of states (not necessarily
/// independent), with rank decided by singular values above
/// rank_tol * sigma_max. An empty list or all-zero states give dimension 0.
SpanResult span_subspace(SpinQuantum s, const std::vector<SpinState>& states,
                         double rank_tol = kRankTol);

/// Worst compressed moment: max over basis ops of || B^dagger A B ||_op.
/// Zero exactly when every moment operator of the given order vanishes on
/// the subspace.
double subspace_residual(const Subspace& subspace, const MomentBasis& moments);
double subspace_residual(const Subspace& subspace, int order);

/// Worst moment expectation max_A |<psi| A |psi>| over the moment basis.
double state_residual(const SpinState& state, const MomentBasis& moments);
double state_residual(const SpinState& state, int order);

/// Largest t <= t_max with all residuals of orders 1..t below tol; 0 when
/// even order 1 fails. The state must be normalized.
int anticoherence_order(const SpinState& state, int t_max, double tol = kCertificationTol);

/// Subspace analogue of anticoherence_order. Writes the result back into
/// subspace.certified_order and returns it.
int subspace_order(Subspace& subspace, int t_max, double tol = kCertificationTol);

/// Residuals for every order 1..t_max, keyed by order. Does not stop at the
/// first failure, so reports show how sharply the hierarchy cuts off.
std::map<int, double> residual_profile(const Subspace& subspace, int t_max);

}  // namespace spinlab
