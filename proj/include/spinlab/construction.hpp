#pragma once

#include <array>
#include <map>
#include <optional>
#include <vector>

#include "spinlab/anticoherence.hpp"
#include "spinlab/klein.hpp"
#include "spinlab/types.hpp"

namespace spinlab {

/// Exponent triple with u*deg(h1) + v*deg(h2) + w*deg(h3) = 2s.
struct DegreeSolution {
    int u = 0, v = 0, w = 0;

    friend bool operator==(const DegreeSolution&, const DegreeSolution&) = default;
};

/// All non-negative solutions, ordered by ascending (u, v). target < 0 gives
/// an empty list.
std::vector<DegreeSolution> degree_solutions(const std::array<int, 3>& degrees, int target);

struct Candidate {
    DegreeSolution exponents;
    HomoPoly poly;  // h1^u h2^v h3^w, homogeneous of degree 2s
};

/// One candidate per degree solution for the family's invariant triple.
std::vector<Candidate> candidate_polynomials(const GroupFamily& family, SpinQuantum s);

struct ConstructionReport {
    GroupFamily family;
    SpinQuantum s;
    std::vector<DegreeSolution> solutions;
    std::vector<Candidate> candidates;
    Eigen::VectorXd singular_values;      // of the stacked candidate states
    int dim = 0;                          // numerical rank of the span
    std::optional<Subspace> subspace;     // absent when dim == 0
    std::map<int, double> residuals;      // per moment order
    int expected_order = 0;
    int certified_order = 0;
};

/// Runs the whole pipeline: solve the degree equation, multiply invariants,
/// convert to states, orthonormalize the span, and certify moment residuals
/// up to expected order + order_margin. Syzygies between the candidates
/// surface as rank deficits of the span, which is why dim can be smaller
/// than the candidate count.
ConstructionReport build_anticoherent_subspace(const GroupFamily& family, SpinQuantum s,
                                               double rank_tol = kRankTol,
                                               double cert_tol = kCertificationTol,
                                               int order_margin = 1);

/// Reports for every half-integer step in [s_min, s_max], certified exactly
/// to the family's expected order. Spins are processed in parallel.
std::vector<ConstructionReport> scan_dimensions(const GroupFamily& family, SpinQuantum s_min,
                                                SpinQuantum s_max,
                                                double rank_tol = kRankTol,
                                                double cert_tol = kCertificationTol);

}  // namespace spinlab
