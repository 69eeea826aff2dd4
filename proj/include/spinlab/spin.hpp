#pragma once

#include <Eigen/Dense>

#include "spinlab/types.hpp"

namespace spinlab {

/// State of a spin-s system in the |s, m> basis with m descending from s to
/// -s, so amps(i) is the amplitude of m = s - i.
struct SpinState {
    SpinQuantum s;
    Eigen::VectorXcd amps;

    int dimension() const noexcept { return static_cast<int>(amps.size()); }
};

/// The three angular momentum matrices for spin s, in the same descending-m
/// basis. For s = 1/2 these are the Pauli matrices over two.
struct SpinOperators {
    SpinQuantum s;
    Eigen::MatrixXcd sx, sy, sz;
};

SpinOperators spin_operators(SpinQuantum s);

/// |s, m> with m passed as 2m. Throws DimensionMismatch when 2m is out of
/// range or has the wrong parity for s.
SpinState basis_state(SpinQuantum s, int doubled_m);

SpinState normalized(const SpinState& state);

Complex overlap(const SpinState& a, const SpinState& b);

/// <state| op |state> for a Hermitian operator. Throws DimensionMismatch on
/// shape mismatch and std::invalid_argument when the value has an imaginary
/// part above 1e-8, which signals a non-Hermitian operator.
double expectation(const SpinState& state, const Eigen::MatrixXcd& op);

/// exp(-i angle n.S) for the unit vector n along axis.
Eigen::MatrixXcd rotation_operator(SpinQuantum s, const Eigen::Vector3d& axis, double angle);

/// (<Sx>, <Sy>, <Sz>) of a normalized state.
Eigen::Vector3d spin_expectation_vector(const SpinState& state);

}  // namespace spinlab
