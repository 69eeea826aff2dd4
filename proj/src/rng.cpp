#include "spinlab/rng.hpp"

#include <cmath>
#include <numbers>

namespace spinlab {

double Rng::normal() {
    if (has_spare_) {
        has_spare_ = false;
        return spare_;
    }
    double u1 = uniform();
    const double u2 = uniform();
    if (u1 <= 0.0) u1 = 0x1.0p-53;  // log argument must stay positive
    const double radius = std::sqrt(-2.0 * std::log(u1));
    const double angle = 2.0 * std::numbers::pi * u2;
    spare_ = radius * std::sin(angle);
    has_spare_ = true;
    return radius * std::cos(angle);
}

Eigen::VectorXcd random_unit_vector(int dim, Rng& rng) {
    Eigen::VectorXcd v(dim);
    for (int i = 0; i < dim; ++i) v(i) = rng.complex_normal();
    const double norm = v.norm();
    if (norm == 0.0) return random_unit_vector(dim, rng);
    return v / norm;
}

Eigen::Vector3d random_unit_axis(Rng& rng) {
    Eigen::Vector3d v;
    for (int i = 0; i < 3; ++i) v(i) = rng.normal();
    const double norm = v.norm();
    if (norm == 0.0) return random_unit_axis(rng);
    return v / norm;
}

Eigen::MatrixXcd random_isometry(int dim, int k, Rng& rng) {
    Eigen::MatrixXcd m(dim, k);
    for (int j = 0; j < k; ++j) {
        for (int i = 0; i < dim; ++i) m(i, j) = rng.complex_normal();
    }
    const Eigen::HouseholderQR<Eigen::MatrixXcd> qr(m);
    return qr.householderQ() * Eigen::MatrixXcd::Identity(dim, k);
}

}  // namespace spinlab
