#pragma once

#include <cstdint>

#include <Eigen/Dense>

#include "spinlab/spin.hpp"
#include "spinlab/types.hpp"

namespace spinlab {

/// Monte Carlo image of the joint numerical range of (Sx, Sy, Sz): one row
/// (<Sx>, <Sy>, <Sz>) per Haar-random pure state.
struct RangeSample {
    SpinQuantum s;
    Eigen::Matrix<double, Eigen::Dynamic, 3> points;
};

/// Deterministic for a fixed seed. count must be positive.
RangeSample sample_joint_range(SpinQuantum s, int count, std::uint64_t seed);

}  // namespace spinlab
