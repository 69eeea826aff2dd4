#include "spinlab/spin.hpp"

#include <cmath>
#include <string>

namespace spinlab {

namespace {

void require_state_shape(const SpinState& state) {
    if (state.amps.size() != state.s.dimension()) {
        throw DimensionMismatch("state has " + std::to_string(state.amps.size()) +
                                " amplitudes for spin dimension " +
                                std::to_string(state.s.dimension()));
    }
}

}  // namespace

SpinOperators spin_operators(SpinQuantum s) {
    const int d = s.dimension();
    const double sval = s.value();

    Eigen::MatrixXcd sz = Eigen::MatrixXcd::Zero(d, d);
    for (int i = 0; i < d; ++i) sz(i, i) = sval - i;

    // Raising operator in the descending-m basis: S+ maps index i to i - 1.
    Eigen::MatrixXcd splus = Eigen::MatrixXcd::Zero(d, d);
    for (int i = 1; i < d; ++i) {
        const double m = sval - i;
        splus(i - 1, i) = std::sqrt(sval * (sval + 1.0) - m * (m + 1.0));
    }
    const Eigen::MatrixXcd sminus = splus.adjoint();

    SpinOperators ops;
    ops.s = s;
    ops.sx = 0.5 * (splus + sminus);
    ops.sy = Complex{0.0, -0.5} * (splus - sminus);
    ops.sz = std::move(sz);
    return ops;
}

SpinState basis_state(SpinQuantum s, int doubled_m) {
    if (std::abs(doubled_m) > s.doubled || (doubled_m - s.doubled) % 2 != 0) {
        throw DimensionMismatch("2m = " + std::to_string(doubled_m) +
                                " is not a weight of spin 2s = " + std::to_string(s.doubled));
    }
    SpinState state;
    state.s = s;
    state.amps = Eigen::VectorXcd::Zero(s.dimension());
    state.amps((s.doubled - doubled_m) / 2) = Complex{1.0, 0.0};
    return state;
}

SpinState normalized(const SpinState& state) {
    require_state_shape(state);
    const double norm = state.amps.norm();
    if (norm == 0.0) {
        throw DimensionMismatch("cannot normalize the zero state");
    }
    return {state.s, state.amps / norm};
}

Complex overlap(const SpinState& a, const SpinState& b) {
    if (a.s != b.s) {
        throw DimensionMismatch("overlap between different spins");
    }
    require_state_shape(a);
    require_state_shape(b);
    return a.amps.dot(b.amps);  // Eigen conjugates the left argument
}

double expectation(const SpinState& state, const Eigen::MatrixXcd& op) {
    require_state_shape(state);
    if (op.rows() != state.amps.size() || op.cols() != state.amps.size()) {
        throw DimensionMismatch("operator is " + std::to_string(op.rows()) + "x" +
                                std::to_string(op.cols()) + " but the state has dimension " +
                                std::to_string(state.amps.size()));
    }
    const Complex value = state.amps.dot(op * state.amps);
    if (std::abs(value.imag()) > 1e-8 * (1.0 + std::abs(value.real()))) {
        throw std::invalid_argument("expectation has imaginary part " +
                                    std::to_string(value.imag()) +
                                    "; operator is not Hermitian");
    }
    return value.real();
}

Eigen::MatrixXcd rotation_operator(SpinQuantum s, const Eigen::Vector3d& axis, double angle) {
    const double len = axis.norm();
    if (len == 0.0) {
        throw DimensionMismatch("rotation axis must be nonzero");
    }
    const Eigen::Vector3d n = axis / len;
    const SpinOperators ops = spin_operators(s);
    const Eigen::MatrixXcd generator = n.x() * ops.sx + n.y() * ops.sy + n.z() * ops.sz;

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(generator);
    const Eigen::VectorXd evals = solver.eigenvalues();
    Eigen::VectorXcd phases(evals.size());
    for (int i = 0; i < evals.size(); ++i) {
        phases(i) = std::polar(1.0, -angle * evals(i));
    }
    return solver.eigenvectors() * phases.asDiagonal() * solver.eigenvectors().adjoint();
}

Eigen::Vector3d spin_expectation_vector(const SpinState& state) {
    const SpinOperators ops = spin_operators(state.s);
    return {expectation(state, ops.sx), expectation(state, ops.sy), expectation(state, ops.sz)};
}

}  // namespace spinlab
