#include "spinlab/majorana.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace spinlab {

namespace {

double parity_sign(int k, int doubled) {
    return (k + doubled) % 2 == 0 ? 1.0 : -1.0;
}

}  // namespace

MajoranaPoly to_majorana_poly(const SpinState& state) {
    const int n = state.s.doubled;
    if (state.amps.size() != n + 1) {
        throw DimensionMismatch("state has " + std::to_string(state.amps.size()) +
                                " amplitudes for spin 2s = " + std::to_string(n));
    }
    MajoranaPoly poly;
    poly.s = state.s;
    poly.coeffs = Eigen::VectorXcd(n + 1);
    for (int k = 0; k <= n; ++k) {
        poly.coeffs(k) = parity_sign(k, n) * state.amps(n - k) *
                         std::sqrt(binomial_coefficient(n, k));
    }
    return poly;
}

SpinState from_majorana_poly(const MajoranaPoly& poly) {
    const int n = poly.s.doubled;
    if (poly.coeffs.size() != n + 1) {
        throw DimensionMismatch("polynomial has " + std::to_string(poly.coeffs.size()) +
                                " coefficients for spin 2s = " + std::to_string(n));
    }
    SpinState state;
    state.s = poly.s;
    state.amps = Eigen::VectorXcd(n + 1);
    for (int k = 0; k <= n; ++k) {
        state.amps(n - k) =
            parity_sign(k, n) * poly.coeffs(k) / std::sqrt(binomial_coefficient(n, k));
    }
    const double norm = state.amps.norm();
    if (norm == 0.0) {
        throw ZeroPolynomial("zero Majorana polynomial has no state");
    }
    state.amps /= norm;
    return state;
}

MajoranaPoly majorana_from_homogeneous(const HomoPoly& p) {
    if (p.coeffs.size() != p.degree + 1) {
        throw DegreeMismatch("malformed homogeneous polynomial");
    }
    return {SpinQuantum{p.degree}, p.coeffs};
}

SpinState state_from_homogeneous(const HomoPoly& p) {
    return from_majorana_poly(majorana_from_homogeneous(p));
}

RootMultiset poly_roots(const MajoranaPoly& poly) {
    const int n = poly.s.doubled;
    if (poly.coeffs.size() != n + 1) {
        throw DimensionMismatch("polynomial coefficient count does not match its spin");
    }
    const double scale = poly.coeffs.size() == 0 ? 0.0 : poly.coeffs.cwiseAbs().maxCoeff();
    if (scale == 0.0) {
        throw ZeroPolynomial("zero polynomial has every point as a root");
    }

    int degree = n;
    while (degree > 0 && std::abs(poly.coeffs(degree)) <= 1e-12 * scale) --degree;

    RootMultiset roots;
    roots.infinity_multiplicity = n - degree;
    if (degree == 0) return roots;

    // Companion matrix of the monic rescaling; its eigenvalues are the roots.
    Eigen::MatrixXcd companion = Eigen::MatrixXcd::Zero(degree, degree);
    for (int i = 1; i < degree; ++i) companion(i, i - 1) = 1.0;
    for (int i = 0; i < degree; ++i) {
        companion(i, degree - 1) = -poly.coeffs(i) / poly.coeffs(degree);
    }
    const Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(companion, false);
    roots.finite_roots.assign(solver.eigenvalues().begin(), solver.eigenvalues().end());
    return roots;
}

Eigen::Vector3d stereo_project(Complex z) {
    const double r2 = std::norm(z);
    return Eigen::Vector3d{2.0 * z.real(), 2.0 * z.imag(), r2 - 1.0} / (r2 + 1.0);
}

Eigen::Vector3d stereo_infinity() { return {0.0, 0.0, 1.0}; }

std::optional<Complex> stereo_lift(const Eigen::Vector3d& v) {
    if (std::abs(v.norm() - 1.0) > 1e-9) {
        throw std::invalid_argument("stereo_lift expects a unit vector, got norm " +
                                    std::to_string(v.norm()));
    }
    const double denom = 1.0 - v.z();
    if (denom <= 1e-12) return std::nullopt;
    return Complex{v.x() / denom, v.y() / denom};
}

PointSet points_from_roots(const RootMultiset& roots) {
    PointSet set;
    set.points.reserve(roots.finite_roots.size() + roots.infinity_multiplicity);
    for (const Complex& r : roots.finite_roots) set.points.push_back(stereo_project(r));
    for (int i = 0; i < roots.infinity_multiplicity; ++i) {
        set.points.push_back(stereo_infinity());
    }
    return set;
}

PointSet majorana_points(const SpinState& state) {
    return points_from_roots(poly_roots(to_majorana_poly(state)));
}

SpinState state_from_points(const PointSet& points) {
    if (points.size() == 0) {
        throw DimensionMismatch("empty point set has no spin");
    }
    const int n = points.size();
    int infinities = 0;
    Eigen::VectorXcd product(1);
    product(0) = Complex{1.0, 0.0};
    for (const auto& v : points.points) {
        const std::optional<Complex> root = stereo_lift(v);
        if (!root.has_value()) {
            ++infinities;
            continue;
        }
        // Multiply the running product by (z - root).
        Eigen::VectorXcd next = Eigen::VectorXcd::Zero(product.size() + 1);
        next.tail(product.size()) += product;
        next.head(product.size()) -= *root * product;
        product = std::move(next);
    }

    MajoranaPoly poly;
    poly.s = SpinQuantum{n};
    poly.coeffs = Eigen::VectorXcd::Zero(n + 1);
    poly.coeffs.head(n + 1 - infinities) = product;
    return from_majorana_poly(poly);
}

double greedy_match_distance(const PointSet& a, const PointSet& b) {
    if (a.size() != b.size()) return std::numeric_limits<double>::infinity();
    const int n = a.size();
    std::vector<bool> used_a(n, false), used_b(n, false);
    double worst = 0.0;
    for (int round = 0; round < n; ++round) {
        double best = std::numeric_limits<double>::infinity();
        int bi = -1, bj = -1;
        for (int i = 0; i < n; ++i) {
            if (used_a[i]) continue;
            for (int j = 0; j < n; ++j) {
                if (used_b[j]) continue;
                const double dist = (a.points[i] - b.points[j]).norm();
                if (dist < best) {
                    best = dist;
                    bi = i;
                    bj = j;
                }
            }
        }
        used_a[bi] = used_b[bj] = true;
        worst = std::max(worst, best);
    }
    return worst;
}

}  // namespace spinlab
