#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "spinlab/anticoherence.hpp"
#include "spinlab/types.hpp"

namespace spinlab {

struct SearchOptions {
    int restarts = 50;
    int max_iterations = 10000;
    double tol = kSearchTol;  // a subspace counts as found when its residual certifies below this
    std::uint64_t seed = 0;
};

/// Result of the variational search. subspace is set only when a candidate
/// passed independent certification; best_residual tracks the smallest
/// certified residual over all restarts either way.
struct SearchOutcome {
    std::optional<Subspace> subspace;
    double best_residual = 0.0;
    int restarts_used = 0;
};

/// Projected gradient descent over the Stiefel manifold of d x k isometries,
/// minimizing the total squared compression of the order-t moment basis.
/// Every converged candidate is re-certified with subspace_residual before
/// being accepted; the optimizer's own objective is never trusted as a
/// certificate. Throws InvalidRank unless 1 <= k <= dim.
SearchOutcome search_anticoherent_subspace(SpinQuantum s, int order, int k,
                                           const SearchOptions& options = {});

enum class EliminationVerdict {
    Impossible,      // no k-dimensional 1-anticoherent subspace exists
    WitnessExists,   // the forced subspace itself certifies
    Inconclusive,    // the dimension count forces nothing
};

struct EliminationReport {
    EliminationVerdict verdict = EliminationVerdict::Inconclusive;
    std::string reason;
};

/// Analytic screen for order 1: any k-dimensional subspace W with vanishing
/// compressions satisfies dim(ker S_i intersect W) >= 2k - d, and the kernel
/// of each spin component is at most one-dimensional. When 2k - d >= 1 the
/// kernel vectors are forced into W and S_i(W) must fit inside the
/// complement, which bounds both span sizes; either bound failing rules the
/// configuration out without any optimization.
EliminationReport elimination_probe(SpinQuantum s, int k, double tol = kCertificationTol);

}  // namespace spinlab
