#pragma once

#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "spinlab/homo_poly.hpp"
#include "spinlab/spin.hpp"
#include "spinlab/types.hpp"

namespace spinlab {

/// Majorana polynomial of a spin-s state: a univariate polynomial of formal
/// degree 2s with coeffs(k) on z^k. Amplitude a_m enters the coefficient of
/// z^{s+m} with sign (-1)^{s+m-2s} and weight sqrt(C(2s, s+m)).
struct MajoranaPoly {
    SpinQuantum s;
    Eigen::VectorXcd coeffs;
};

/// Roots of a Majorana polynomial counted with multiplicity. Leading
/// coefficients that vanish numerically become roots at infinity, so
/// finite_roots.size() + infinity_multiplicity == 2s always.
struct RootMultiset {
    std::vector<Complex> finite_roots;
    int infinity_multiplicity = 0;
};

struct PointSet {
    std::vector<Eigen::Vector3d> points;

    int size() const noexcept { return static_cast<int>(points.size()); }
};

MajoranaPoly to_majorana_poly(const SpinState& state);

/// Inverse of to_majorana_poly up to normalization and global phase; the
/// returned state is normalized. Throws ZeroPolynomial on all-zero input.
SpinState from_majorana_poly(const MajoranaPoly& poly);

/// Reads a homogeneous polynomial of degree 2s as the Majorana polynomial
/// M(z) = p(z, 1), i.e. doubled spin = degree.
MajoranaPoly majorana_from_homogeneous(const HomoPoly& p);

/// Normalized state whose Majorana polynomial is p(z, 1).
SpinState state_from_homogeneous(const HomoPoly& p);

/// Finite roots via the companion matrix of the numerically effective
/// polynomial; degree drops (relative to 1e-12 of the largest coefficient)
/// are returned as multiplicity at infinity.
RootMultiset poly_roots(const MajoranaPoly& poly);

/// Inverse stereographic projection from the complex plane to the unit
/// sphere: z -> (2 Re z, 2 Im z, |z|^2 - 1) / (|z|^2 + 1). Infinity maps to
/// the north pole (0, 0, 1), exposed as stereo_infinity().
Eigen::Vector3d stereo_project(Complex z);
Eigen::Vector3d stereo_infinity();

/// Forward projection back to the plane; nullopt encodes infinity (points
/// within 1e-12 of the north pole). The input must be a unit vector.
std::optional<Complex> stereo_lift(const Eigen::Vector3d& v);

PointSet points_from_roots(const RootMultiset& roots);

/// The 2s Majorana points of a state on the unit sphere.
PointSet majorana_points(const SpinState& state);

/// State with the given Majorana constellation; the spin is half the point
/// count. Throws DimensionMismatch on an empty set.
SpinState state_from_points(const PointSet& points);

/// Greedy minimum matching between equal-size point multisets: repeatedly
/// pairs the globally closest remaining points and reports the largest
/// paired distance. Different sizes give +infinity.
double greedy_match_distance(const PointSet& a, const PointSet& b);

}  // namespace spinlab
