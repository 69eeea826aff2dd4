#include "spinlab/designs.hpp"

#include <cmath>
#include <numeric>
#include <string>
#include <vector>

namespace spinlab {

namespace {

// (m)!! for odd m >= -1; (-1)!! is the empty product.
long long odd_double_factorial(int m) {
    long long acc = 1;
    for (int i = m; i >= 3; i -= 2) acc *= i;
    return acc;
}

void require_points_on_sphere(const PointSet& points) {
    if (points.size() == 0) {
        throw DimensionMismatch("design test needs at least one point");
    }
    for (const auto& p : points.points) {
        if (std::abs(p.norm() - 1.0) > 1e-9) {
            throw std::invalid_argument("design points must lie on the unit sphere, found norm " +
                                        std::to_string(p.norm()));
        }
    }
}

}  // namespace

Rational sphere_monomial_average(int a, int b, int c) {
    if (a < 0 || b < 0 || c < 0) {
        throw std::invalid_argument("monomial exponents must be non-negative");
    }
    if (a + b + c > 32) {
        throw std::invalid_argument("monomial degree " + std::to_string(a + b + c) +
                                    " exceeds the exact 64-bit range (max 32)");
    }
    if (a % 2 != 0 || b % 2 != 0 || c % 2 != 0) {
        return {0, 1};
    }
    long long num = odd_double_factorial(a - 1) * odd_double_factorial(b - 1) *
                    odd_double_factorial(c - 1);
    long long den = odd_double_factorial(a + b + c + 1);
    const long long g = std::gcd(num, den);
    return {num / g, den / g};
}

double design_residual(const PointSet& points, int t) {
    const auto profile = design_residual_profile(points, t);
    double worst = 0.0;
    for (const auto& [degree, r] : profile) worst = std::max(worst, r);
    return worst;
}

std::map<int, double> design_residual_profile(const PointSet& points, int t_max) {
    require_points_on_sphere(points);
    if (t_max < 1) {
        throw std::invalid_argument("design order bound must be at least 1");
    }

    // Power tables: pow[i](k, j) = coordinate j of point k raised to i.
    const int n = points.size();
    std::vector<Eigen::MatrixXd> powers(static_cast<std::size_t>(t_max) + 1,
                                        Eigen::MatrixXd(n, 3));
    powers[0].setOnes();
    for (int i = 1; i <= t_max; ++i) {
        for (int k = 0; k < n; ++k) {
            powers[static_cast<std::size_t>(i)].row(k) =
                powers[static_cast<std::size_t>(i - 1)].row(k).cwiseProduct(
                    points.points[static_cast<std::size_t>(k)].transpose());
        }
    }

    std::map<int, double> profile;
    for (int degree = 1; degree <= t_max; ++degree) profile[degree] = 0.0;

    for (int a = 0; a <= t_max; ++a) {
        for (int b = 0; a + b <= t_max; ++b) {
            for (int c = 0; a + b + c <= t_max; ++c) {
                const int degree = a + b + c;
                if (degree == 0) continue;
                const double average =
                    (powers[static_cast<std::size_t>(a)].col(0).array() *
                     powers[static_cast<std::size_t>(b)].col(1).array() *
                     powers[static_cast<std::size_t>(c)].col(2).array())
                        .mean();
                const double exact = sphere_monomial_average(a, b, c).to_double();
                profile[degree] = std::max(profile[degree], std::abs(average - exact));
            }
        }
    }
    return profile;
}

DesignReport design_order(const PointSet& points, int t_max, double tol) {
    DesignReport report;
    report.residuals = design_residual_profile(points, t_max);
    for (int t = 1; t <= t_max; ++t) {
        if (report.residuals.at(t) > tol) break;
        report.order = t;
    }
    return report;
}

}  // namespace spinlab
