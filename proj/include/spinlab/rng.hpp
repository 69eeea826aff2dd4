#pragma once

#include <cstdint>
#include <random>

#include <Eigen/Dense>

#include "spinlab/types.hpp"

namespace spinlab {

/// Deterministic random source. mt19937_64 output is pinned by the standard
/// and the uniform/normal transforms below are written out explicitly, so a
/// given seed produces identical streams on every platform.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform double in [0, 1) with 53 random bits.
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    /// Standard normal via Box-Muller; generates values in pairs.
    double normal();

    Complex complex_normal() { return {normal(), normal()}; }

  private:
    std::mt19937_64 engine_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

/// Haar-uniform unit vector in C^dim.
Eigen::VectorXcd random_unit_vector(int dim, Rng& rng);

/// Uniform direction on the unit sphere in R^3.
Eigen::Vector3d random_unit_axis(Rng& rng);

/// dim x k matrix with orthonormal columns, Haar distributed.
Eigen::MatrixXcd random_isometry(int dim, int k, Rng& rng);

}  // namespace spinlab
