#include "spinlab/anticoherence.hpp"

#include <cmath>
#include <string>

namespace spinlab {

namespace {

void require_matching_spin(SpinQuantum s, const MomentBasis& moments) {
    if (!(s == moments.s)) {
        throw DimensionMismatch("moment basis built for 2s = " +
                                std::to_string(moments.s.doubled) + ", operand has 2s = " +
                                std::to_string(s.doubled));
    }
}

void require_normalized(const SpinState& state) {
    if (std::abs(state.amps.norm() - 1.0) > 1e-9) {
        throw std::invalid_argument("state must be normalized");
    }
}

}  // namespace

Subspace make_subspace(SpinQuantum s, Eigen::MatrixXcd basis, double ortho_tol) {
    if (basis.rows() != s.dimension()) {
        throw DimensionMismatch("basis has " + std::to_string(basis.rows()) +
                                " rows for spin dimension " + std::to_string(s.dimension()));
    }
    if (basis.cols() > basis.rows()) {
        throw DimensionMismatch("subspace dimension exceeds the ambient dimension");
    }
    const Eigen::MatrixXcd gram = basis.adjoint() * basis;
    const double defect =
        (gram - Eigen::MatrixXcd::Identity(basis.cols(), basis.cols())).cwiseAbs().maxCoeff();
    if (basis.cols() > 0 && defect > ortho_tol) {
        throw std::invalid_argument("subspace basis is not orthonormal (defect " +
                                    std::to_string(defect) + ")");
    }
    return {s, std::move(basis), std::nullopt};
}

SpanResult span_subspace(SpinQuantum s, const std::vector<SpinState>& states, double rank_tol) {
    const int d = s.dimension();
    Eigen::MatrixXcd stacked(d, static_cast<Eigen::Index>(states.size()));
    for (std::size_t j = 0; j < states.size(); ++j) {
        if (!(states[j].s == s) || states[j].amps.size() != d) {
            throw DimensionMismatch("state " + std::to_string(j) + " does not belong to spin 2s = " +
                                    std::to_string(s.doubled));
        }
        stacked.col(static_cast<Eigen::Index>(j)) = states[j].amps;
    }

    SpanResult result;
    if (states.empty() || stacked.cwiseAbs().maxCoeff() == 0.0) {
        result.subspace = {s, Eigen::MatrixXcd::Zero(d, 0), std::nullopt};
        result.singular_values = Eigen::VectorXd::Zero(0);
        return result;
    }

    Eigen::BDCSVD<Eigen::MatrixXcd> svd(stacked, Eigen::ComputeThinU);
    const Eigen::VectorXd sigma = svd.singularValues();
    int rank = 0;
    while (rank < sigma.size() && sigma(rank) > rank_tol * sigma(0)) ++rank;

    result.subspace = {s, svd.matrixU().leftCols(rank), std::nullopt};
    result.singular_values = sigma;
    return result;
}

double subspace_residual(const Subspace& subspace, const MomentBasis& moments) {
    require_matching_spin(subspace.s, moments);
    if (subspace.dim() == 0) return 0.0;
    const Eigen::MatrixXcd& b = subspace.basis;
    double worst = 0.0;
    for (const auto& op : moments.ops) {
        Eigen::MatrixXcd compressed = b.adjoint() * op * b;
        compressed = 0.5 * (compressed + compressed.adjoint());  // scrub rounding skew
        worst = std::max(worst, hermitian_operator_norm(compressed));
    }
    return worst;
}

double subspace_residual(const Subspace& subspace, int order) {
    return subspace_residual(subspace, moment_basis(subspace.s, order));
}

double state_residual(const SpinState& state, const MomentBasis& moments) {
    require_matching_spin(state.s, moments);
    require_normalized(state);
    double worst = 0.0;
    for (const auto& op : moments.ops) {
        worst = std::max(worst, std::abs(expectation(state, op)));
    }
    return worst;
}

double state_residual(const SpinState& state, int order) {
    return state_residual(state, moment_basis(state.s, order));
}

int anticoherence_order(const SpinState& state, int t_max, double tol) {
    require_normalized(state);
    int order = 0;
    for (int t = 1; t <= t_max; ++t) {
        if (state_residual(state, t) > tol) break;
        order = t;
    }
    return order;
}

int subspace_order(Subspace& subspace, int t_max, double tol) {
    int order = 0;
    for (int t = 1; t <= t_max; ++t) {
        if (subspace_residual(subspace, t) > tol) break;
        order = t;
    }
    subspace.certified_order = order;
    return order;
}

std::map<int, double> residual_profile(const Subspace& subspace, int t_max) {
    std::map<int, double> profile;
    for (int t = 1; t <= t_max; ++t) {
        profile[t] = subspace_residual(subspace, t);
    }
    return profile;
}

}  // namespace spinlab
