#include "spinlab/homo_poly.hpp"

#include <cmath>

namespace spinlab {

namespace {

void require_same_degree(const HomoPoly& p, const HomoPoly& q, const char* what) {
    if (p.degree != q.degree) {
        throw DegreeMismatch(std::string(what) + ": degrees " + std::to_string(p.degree) +
                             " and " + std::to_string(q.degree) + " differ");
    }
}

void require_shape(const HomoPoly& p) {
    if (p.degree < 0 || p.coeffs.size() != p.degree + 1) {
        throw DegreeMismatch("homogeneous polynomial has " + std::to_string(p.coeffs.size()) +
                             " coefficients for degree " + std::to_string(p.degree));
    }
}

// Coefficients of (a z + b w)^n as a vector indexed by the power of z.
Eigen::VectorXcd binomial_expand(Complex a, Complex b, int n) {
    Eigen::VectorXcd out(n + 1);
    Complex apow{1.0, 0.0};
    for (int i = 0; i <= n; ++i) {
        out(i) = binomial_coefficient(n, i) * apow;
        apow *= a;
    }
    Complex bpow{1.0, 0.0};
    for (int i = n; i >= 0; --i) {
        out(i) *= bpow;
        bpow *= b;
    }
    return out;
}

}  // namespace

HomoPoly hpoly_constant(Complex c) {
    HomoPoly p;
    p.degree = 0;
    p.coeffs = Eigen::VectorXcd::Constant(1, c);
    return p;
}

HomoPoly hpoly_monomial(int degree, int zpow, Complex c) {
    if (degree < 0 || zpow < 0 || zpow > degree) {
        throw DegreeMismatch("monomial z^" + std::to_string(zpow) + " w^" +
                             std::to_string(degree - zpow) + " is ill-formed");
    }
    HomoPoly p;
    p.degree = degree;
    p.coeffs = Eigen::VectorXcd::Zero(degree + 1);
    p.coeffs(zpow) = c;
    return p;
}

bool hpoly_is_zero(const HomoPoly& p, double tol) {
    require_shape(p);
    return hpoly_max_abs(p) <= tol;
}

double hpoly_max_abs(const HomoPoly& p) {
    require_shape(p);
    return p.coeffs.size() == 0 ? 0.0 : p.coeffs.cwiseAbs().maxCoeff();
}

HomoPoly operator*(const HomoPoly& p, const HomoPoly& q) {
    require_shape(p);
    require_shape(q);
    HomoPoly r;
    r.degree = p.degree + q.degree;
    r.coeffs = Eigen::VectorXcd::Zero(r.degree + 1);
    for (int i = 0; i <= p.degree; ++i) {
        if (p.coeffs(i) == Complex{0.0, 0.0}) continue;
        r.coeffs.segment(i, q.degree + 1) += p.coeffs(i) * q.coeffs;
    }
    return r;
}

HomoPoly operator*(Complex c, const HomoPoly& p) {
    require_shape(p);
    HomoPoly r = p;
    r.coeffs *= c;
    return r;
}

HomoPoly operator+(const HomoPoly& p, const HomoPoly& q) {
    require_same_degree(p, q, "sum");
    HomoPoly r = p;
    r.coeffs += q.coeffs;
    return r;
}

HomoPoly operator-(const HomoPoly& p, const HomoPoly& q) {
    require_same_degree(p, q, "difference");
    HomoPoly r = p;
    r.coeffs -= q.coeffs;
    return r;
}

HomoPoly hpoly_pow(const HomoPoly& p, int exponent) {
    require_shape(p);
    if (exponent < 0) {
        throw DegreeMismatch("negative exponent " + std::to_string(exponent));
    }
    HomoPoly acc = hpoly_constant(Complex{1.0, 0.0});
    for (int i = 0; i < exponent; ++i) acc = acc * p;
    return acc;
}

HomoPoly hpoly_combine(const std::vector<std::pair<Complex, HomoPoly>>& terms) {
    if (terms.empty()) {
        throw DegreeMismatch("empty linear combination has no degree");
    }
    HomoPoly acc = terms.front().first * terms.front().second;
    for (std::size_t i = 1; i < terms.size(); ++i) {
        acc = acc + terms[i].first * terms[i].second;
    }
    return acc;
}

HomoPoly hpoly_substitute(const HomoPoly& p, const Eigen::Matrix2cd& g) {
    require_shape(p);
    const Complex a = g(0, 0), b = g(0, 1), c = g(1, 0), d = g(1, 1);
    HomoPoly r;
    r.degree = p.degree;
    r.coeffs = Eigen::VectorXcd::Zero(p.degree + 1);
    for (int k = 0; k <= p.degree; ++k) {
        if (p.coeffs(k) == Complex{0.0, 0.0}) continue;
        // z^k w^(n-k) -> (a z + b w)^k (c z + d w)^(n-k), expanded by convolution.
        const Eigen::VectorXcd zs = binomial_expand(a, b, k);
        const Eigen::VectorXcd ws = binomial_expand(c, d, p.degree - k);
        for (int i = 0; i < zs.size(); ++i) {
            if (zs(i) == Complex{0.0, 0.0}) continue;
            r.coeffs.segment(i, ws.size()) += p.coeffs(k) * zs(i) * ws;
        }
    }
    return r;
}

Complex hpoly_eval(const HomoPoly& p, Complex z, Complex w) {
    require_shape(p);
    Eigen::VectorXcd wpow(p.degree + 1);
    wpow(0) = Complex{1.0, 0.0};
    for (int i = 1; i <= p.degree; ++i) wpow(i) = wpow(i - 1) * w;
    // Horner in z with pre-multiplied powers of w.
    Complex acc{0.0, 0.0};
    for (int k = p.degree; k >= 0; --k) {
        acc = acc * z + p.coeffs(k) * wpow(p.degree - k);
    }
    return acc;
}

double hpoly_distance(const HomoPoly& p, const HomoPoly& q) {
    require_same_degree(p, q, "distance");
    return (p.coeffs - q.coeffs).cwiseAbs().maxCoeff();
}

bool hpoly_approx_equal(const HomoPoly& p, const HomoPoly& q, double tol) {
    if (p.degree != q.degree) {
        return false;
    }
    return hpoly_distance(p, q) <= tol;
}

}  // namespace spinlab
