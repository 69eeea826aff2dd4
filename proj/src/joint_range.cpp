#include "spinlab/joint_range.hpp"

#include <string>

#include "spinlab/rng.hpp"

namespace spinlab {

RangeSample sample_joint_range(SpinQuantum s, int count, std::uint64_t seed) {
    if (count <= 0) {
        throw DimensionMismatch("sample count must be positive, got " + std::to_string(count));
    }
    const SpinOperators ops = spin_operators(s);
    Rng rng(seed);

    RangeSample sample;
    sample.s = s;
    sample.points.resize(count, 3);
    for (int i = 0; i < count; ++i) {
        const Eigen::VectorXcd psi = random_unit_vector(s.dimension(), rng);
        sample.points(i, 0) = psi.dot(ops.sx * psi).real();
        sample.points(i, 1) = psi.dot(ops.sy * psi).real();
        sample.points(i, 2) = psi.dot(ops.sz * psi).real();
    }
    return sample;
}

}  // namespace spinlab
