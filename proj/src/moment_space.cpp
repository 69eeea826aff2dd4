#include "spinlab/moment_space.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>
#include <utility>

namespace spinlab {

double hs_inner(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
    return a.conjugate().cwiseProduct(b).sum().real();
}

double hermitian_operator_norm(const Eigen::MatrixXcd& a) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(a, Eigen::EigenvaluesOnly);
    return solver.eigenvalues().cwiseAbs().maxCoeff();
}

namespace {

// Appends the candidate to the working orthonormal list unless it is
// (numerically) in the current span. The cutoff is an absolute norm measured
// against the scale of the largest candidate at the same word length: parts
// of long words can cancel exactly (the skew part of a palindromic word is
// zero), leaving pure rounding noise that a cutoff relative to the
// candidate's own norm would mistake for a new direction. Two projection
// passes keep the basis orthogonal to near machine precision even for badly
// scaled candidates.
void absorb_candidate(std::vector<Eigen::MatrixXcd>& basis, Eigen::MatrixXcd candidate,
                      double cutoff) {
    if (std::sqrt(hs_inner(candidate, candidate)) <= cutoff) return;

    for (int pass = 0; pass < 2; ++pass) {
        for (const auto& b : basis) {
            candidate -= hs_inner(b, candidate) * b;
        }
    }
    const double remainder = std::sqrt(hs_inner(candidate, candidate));
    if (remainder <= cutoff) return;
    basis.push_back(candidate / remainder);
}

}  // namespace

MomentBasis moment_basis(SpinQuantum s, int order, double rank_tol) {
    if (order < 0) {
        throw DimensionMismatch("moment order must be non-negative, got " +
                                std::to_string(order));
    }
    const int d = s.dimension();
    const int full_dim = d * d - 1;

    const SpinOperators spin = spin_operators(s);
    const std::array<Eigen::MatrixXcd, 3> letters{spin.sx, spin.sy, spin.sz};
    const Eigen::MatrixXcd identity = Eigen::MatrixXcd::Identity(d, d);

    std::vector<Eigen::MatrixXcd> basis;  // HS-orthonormal during construction
    std::vector<Eigen::MatrixXcd> words{identity};

    for (int level = 1; level <= order && static_cast<int>(basis.size()) < full_dim; ++level) {
        std::vector<Eigen::MatrixXcd> next;
        next.reserve(words.size() * 3);
        for (const auto& w : words) {
            for (const auto& letter : letters) {
                next.push_back(w * letter);
            }
        }

        std::vector<Eigen::MatrixXcd> candidates;
        candidates.reserve(next.size() * 2);
        double scale = 0.0;
        for (const auto& w : next) {
            Eigen::MatrixXcd herm = 0.5 * (w + w.adjoint());
            herm -= (herm.trace() / static_cast<double>(d)) * identity;
            scale = std::max(scale, std::sqrt(hs_inner(herm, herm)));
            candidates.push_back(std::move(herm));

            Eigen::MatrixXcd anti = Complex{0.0, -0.5} * (w - w.adjoint());
            anti -= (anti.trace() / static_cast<double>(d)) * identity;
            scale = std::max(scale, std::sqrt(hs_inner(anti, anti)));
            candidates.push_back(std::move(anti));
        }

        const double cutoff = rank_tol * scale;
        for (auto& candidate : candidates) {
            absorb_candidate(basis, std::move(candidate), cutoff);
            if (static_cast<int>(basis.size()) == full_dim) break;
        }
        words = std::move(next);
    }

    MomentBasis result;
    result.s = s;
    result.order = order;
    result.ops.reserve(basis.size());
    for (auto& b : basis) {
        result.ops.push_back(b / hermitian_operator_norm(b));
    }
    return result;
}

}  // namespace spinlab
