#include "spinlab/subspace_search.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "spinlab/moment_space.hpp"
#include "spinlab/rng.hpp"

namespace spinlab {

namespace {

double compression_objective(const std::vector<Eigen::MatrixXcd>& ops,
                             const Eigen::MatrixXcd& b,
                             std::vector<Eigen::MatrixXcd>& compressed) {
    double total = 0.0;
    for (std::size_t j = 0; j < ops.size(); ++j) {
        compressed[j].noalias() = b.adjoint() * ops[j] * b;
        total += compressed[j].squaredNorm();
    }
    return total;
}

Eigen::MatrixXcd retract(const Eigen::MatrixXcd& m, int k) {
    const Eigen::HouseholderQR<Eigen::MatrixXcd> qr(m);
    return qr.householderQ() * Eigen::MatrixXcd::Identity(m.rows(), k);
}

Eigen::MatrixXcd kernel_vector(const Eigen::MatrixXcd& op, double tol) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(op);
    Eigen::MatrixXcd vectors(op.rows(), 0);
    for (int i = 0; i < solver.eigenvalues().size(); ++i) {
        if (std::abs(solver.eigenvalues()(i)) < tol) {
            vectors.conservativeResize(Eigen::NoChange, vectors.cols() + 1);
            vectors.col(vectors.cols() - 1) = solver.eigenvectors().col(i);
        }
    }
    return vectors;
}

int numerical_rank(const Eigen::MatrixXcd& m, double rel_tol) {
    if (m.cols() == 0) return 0;
    const Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m);
    const Eigen::VectorXd sigma = svd.singularValues();
    if (sigma.size() == 0 || sigma(0) == 0.0) return 0;
    int rank = 0;
    while (rank < sigma.size() && sigma(rank) > rel_tol * sigma(0)) ++rank;
    return rank;
}

}  // namespace

SearchOutcome search_anticoherent_subspace(SpinQuantum s, int order, int k,
                                           const SearchOptions& options) {
    const int d = s.dimension();
    if (k < 1 || k > d) {
        throw InvalidRank("subspace dimension " + std::to_string(k) +
                          " is outside 1.." + std::to_string(d));
    }
    const MomentBasis moments = moment_basis(s, order);
    Rng rng(options.seed);

    SearchOutcome outcome;
    outcome.best_residual = std::numeric_limits<double>::infinity();

    std::vector<Eigen::MatrixXcd> compressed(moments.ops.size());
    for (int restart = 0; restart < options.restarts; ++restart) {
        outcome.restarts_used = restart + 1;

        Eigen::MatrixXcd b = random_isometry(d, k, rng);
        double value = compression_objective(moments.ops, b, compressed);
        double step = 0.1;

        for (int iter = 0; iter < options.max_iterations; ++iter) {
            if (std::sqrt(value) <= 0.25 * options.tol || step < 1e-14) break;

            Eigen::MatrixXcd gradient = Eigen::MatrixXcd::Zero(d, k);
            for (std::size_t j = 0; j < moments.ops.size(); ++j) {
                gradient.noalias() += 2.0 * (moments.ops[j] * b) * compressed[j];
            }

            const Eigen::MatrixXcd trial = retract(b - step * gradient, k);
            std::vector<Eigen::MatrixXcd> trial_compressed(moments.ops.size());
            const double trial_value =
                compression_objective(moments.ops, trial, trial_compressed);
            if (trial_value < value) {
                b = trial;
                value = trial_value;
                compressed = std::move(trial_compressed);
                step *= 1.2;
            } else {
                step *= 0.5;
            }
        }

        // Independent certificate: never trust the optimizer's objective.
        Subspace candidate = make_subspace(s, b);
        const double residual = subspace_residual(candidate, moments);
        outcome.best_residual = std::min(outcome.best_residual, residual);
        if (residual <= options.tol) {
            candidate.certified_order = subspace_order(candidate, order, options.tol);
            outcome.subspace = std::move(candidate);
            return outcome;
        }
    }
    return outcome;
}

EliminationReport elimination_probe(SpinQuantum s, int k, double tol) {
    const int d = s.dimension();
    if (k < 1 || k > d) {
        throw InvalidRank("subspace dimension " + std::to_string(k) +
                          " is outside 1.." + std::to_string(d));
    }

    const int forced = 2 * k - d;
    if (forced < 1) {
        return {EliminationVerdict::Inconclusive,
                "2k - d = " + std::to_string(forced) + " forces no kernel vector"};
    }

    if (!s.is_integer()) {
        return {EliminationVerdict::Impossible,
                "half-integer spin components are nonsingular, yet 2k - d >= 1 would "
                "force a kernel vector into the subspace"};
    }

    const SpinOperators ops = spin_operators(s);
    const std::array<const Eigen::MatrixXcd*, 3> components{&ops.sx, &ops.sy, &ops.sz};

    Eigen::MatrixXcd kernels(d, 0);
    for (const auto* op : components) {
        const Eigen::MatrixXcd vecs = kernel_vector(*op, 1e-9);
        kernels.conservativeResize(Eigen::NoChange, kernels.cols() + vecs.cols());
        kernels.rightCols(vecs.cols()) = vecs;
    }

    const int kernel_rank = numerical_rank(kernels, 1e-10);
    if (kernel_rank > k) {
        return {EliminationVerdict::Impossible,
                "forced kernel vectors span " + std::to_string(kernel_rank) +
                " dimensions, more than k = " + std::to_string(k)};
    }

    // Vanishing compressions push S_i(W) into the orthogonal complement.
    Eigen::MatrixXcd images(d, 3 * kernels.cols());
    int col = 0;
    for (const auto* op : components) {
        for (int j = 0; j < kernels.cols(); ++j) {
            images.col(col++) = (*op) * kernels.col(j);
        }
    }
    const int image_rank = numerical_rank(images, 1e-10);
    if (image_rank > d - k) {
        return {EliminationVerdict::Impossible,
                "images of the forced vectors span " + std::to_string(image_rank) +
                " dimensions, more than d - k = " + std::to_string(d - k)};
    }

    if (kernel_rank == k) {
        // The subspace is fully determined; test it directly.
        const Eigen::JacobiSVD<Eigen::MatrixXcd> svd(kernels, Eigen::ComputeThinU);
        const Subspace forced_subspace = make_subspace(s, svd.matrixU().leftCols(k));
        double worst = 0.0;
        for (const auto* op : components) {
            Eigen::MatrixXcd c = forced_subspace.basis.adjoint() * (*op) * forced_subspace.basis;
            c = 0.5 * (c + c.adjoint());
            worst = std::max(worst, hermitian_operator_norm(c));
        }
        if (worst <= tol) {
            return {EliminationVerdict::WitnessExists,
                    "the forced kernel span itself has vanishing compressions"};
        }
        return {EliminationVerdict::Impossible,
                "the subspace is forced to equal the kernel span, whose compressions "
                "have norm " + std::to_string(worst)};
    }

    return {EliminationVerdict::Inconclusive, "dimension counting does not decide this case"};
}

}  // namespace spinlab
