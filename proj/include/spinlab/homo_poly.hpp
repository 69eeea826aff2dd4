#pragma once

#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "spinlab/types.hpp"

namespace spinlab {

/// Homogeneous polynomial in two complex variables (z, w).
///
/// `coeffs[k]` multiplies the monomial z^k w^(degree-k), so the vector always
/// has degree + 1 entries. The zero polynomial of a given degree is
/// represented by an all-zero coefficient vector.
struct HomoPoly {
    int degree = 0;
    Eigen::VectorXcd coeffs;
};

/// Degree-0 polynomial with value c.
HomoPoly hpoly_constant(Complex c);

/// c * z^zpow * w^(degree - zpow). Requires 0 <= zpow <= degree.
HomoPoly hpoly_monomial(int degree, int zpow, Complex c = Complex{1.0, 0.0});

bool hpoly_is_zero(const HomoPoly& p, double tol = 0.0);

/// Largest absolute coefficient; zero polynomial gives 0.
double hpoly_max_abs(const HomoPoly& p);

HomoPoly operator*(const HomoPoly& p, const HomoPoly& q);
HomoPoly operator*(Complex c, const HomoPoly& p);

/// Sum of two polynomials of equal degree. Throws DegreeMismatch otherwise.
HomoPoly operator+(const HomoPoly& p, const HomoPoly& q);
HomoPoly operator-(const HomoPoly& p, const HomoPoly& q);

/// p raised to a non-negative integer power; p^0 is the constant 1.
HomoPoly hpoly_pow(const HomoPoly& p, int exponent);

/// Linear combination of same-degree polynomials. Throws DegreeMismatch if
/// the degrees disagree; an empty term list is rejected for lack of a degree.
HomoPoly hpoly_combine(const std::vector<std::pair<Complex, HomoPoly>>& terms);

/// Substitute (z, w) -> (a z + b w, c z + d w) for g = [[a, b], [c, d]],
/// i.e. return p(a z + b w, c z + d w). Degree is preserved.
HomoPoly hpoly_substitute(const HomoPoly& p, const Eigen::Matrix2cd& g);

Complex hpoly_eval(const HomoPoly& p, Complex z, Complex w);

/// Max-norm distance between coefficient vectors (degrees must agree).
double hpoly_distance(const HomoPoly& p, const HomoPoly& q);

/// Coefficientwise comparison; polynomials of different degrees are unequal.
bool hpoly_approx_equal(const HomoPoly& p, const HomoPoly& q, double tol = 1e-12);

}  // namespace spinlab
