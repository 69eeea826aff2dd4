#pragma once

#include <array>
#include <vector>

#include "spinlab/binary_group.hpp"
#include "spinlab/homo_poly.hpp"
#include "spinlab/types.hpp"

namespace spinlab {

/// The three fundamental invariants of a binary polyhedral group, in
/// ascending degree. For the binary dihedral family these are
///   h1 = z^2 w^2,
///   h2 = (z^n - w^n)^2,
///   h3 = z w (z^{2n} - w^{2n}),
/// and for the exceptional families the classical vertex / edge / face forms.
struct KleinTriple {
    HomoPoly h1, h2, h3;
    // Per-form flag: true when the form is a full invariant of the binary
    // group, false when it is only invariant up to a character (the odd-n
    // dihedral h2 and h3 pick up chi = -1 on the flip generator).
    std::array<bool, 3> absolute{true, true, true};
};

/// Invariant degrees (deg h1, deg h2, deg h3). Throws UnsupportedFamily for
/// the cyclic family, which has no such triple.
std::array<int, 3> klein_degrees(const GroupFamily& family);

KleinTriple klein_generators(const GroupFamily& family);

/// Anticoherence order delivered by the family's construction:
/// dihedral 1, tetrahedral 2, octahedral 3, icosahedral 5.
int expected_anticoherence_order(const GroupFamily& family);

/// Outcome of testing p(g z) = chi(g) p(z) over a whole group.
struct CharacterReport {
    bool invariant = false;         // all characters equal to one
    bool relative = false;          // unimodular character per element
    std::vector<Complex> characters;  // one per group element, in element order
    double max_residual = 0.0;      // worst relative deviation from chi * p
};

/// Tests relative invariance of p under every element of the group. The
/// character for each element is read off the largest coefficient of p and
/// the residual is measured relative to that coefficient's magnitude.
/// Throws ZeroPolynomial when p has no nonzero coefficient.
CharacterReport check_relative_invariance(const HomoPoly& p, const BinaryGroup& group,
                                          double tol = 1e-8);

}  // namespace spinlab
