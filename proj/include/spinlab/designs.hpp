#pragma once

#include <map>

#include "spinlab/majorana.hpp"
#include "spinlab/types.hpp"

namespace spinlab {

/// Exact fraction in lowest terms.
struct Rational {
    long long num = 0;
    long long den = 1;

    double to_double() const noexcept { return static_cast<double>(num) / static_cast<double>(den); }

    friend bool operator==(const Rational&, const Rational&) = default;
};

/// Uniform average of x^a y^b z^c over the unit sphere:
/// zero when any exponent is odd, otherwise
/// (a-1)!! (b-1)!! (c-1)!! / (a+b+c+1)!!, computed exactly.
/// Throws std::invalid_argument for negative exponents or a+b+c > 32, where
/// the double factorials leave 64-bit range.
Rational sphere_monomial_average(int a, int b, int c);

/// Worst absolute gap between set averages and sphere averages over all
/// monomials of total degree 1..t. Zero for a spherical t-design.
double design_residual(const PointSet& points, int t);

/// Per-degree residuals, keyed by the exact total degree 1..t_max.
std::map<int, double> design_residual_profile(const PointSet& points, int t_max);

struct DesignReport {
    int order = 0;                  // largest consecutive degree that passes
    std::map<int, double> residuals;
};

/// Certifies the spherical design order up to t_max. Points must lie on the
/// unit sphere; a lone point is a 0-design since degree 1 already fails.
DesignReport design_order(const PointSet& points, int t_max, double tol = 1e-8);

}  // namespace spinlab
