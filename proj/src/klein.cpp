#include "spinlab/klein.hpp"

#include <cmath>
#include <initializer_list>
#include <utility>

namespace spinlab {

namespace {

void require_polyhedral(const GroupFamily& family) {
    if (family.tag == FamilyTag::Cyclic) {
        throw UnsupportedFamily("cyclic groups have no Klein invariant triple");
    }
}

HomoPoly mono(int degree, int zpow, double c) {
    return hpoly_monomial(degree, zpow, Complex{c, 0.0});
}

// Sparse builder: degree plus a list of (z-power, coefficient) pairs.
HomoPoly sparse(int degree, std::initializer_list<std::pair<int, double>> terms) {
    HomoPoly p;
    p.degree = degree;
    p.coeffs = Eigen::VectorXcd::Zero(degree + 1);
    for (const auto& [zpow, c] : terms) p.coeffs(zpow) = Complex{c, 0.0};
    return p;
}

}  // namespace

std::array<int, 3> klein_degrees(const GroupFamily& family) {
    require_polyhedral(family);
    switch (family.tag) {
        case FamilyTag::BinaryDihedral: return {4, 2 * family.n, 2 * family.n + 2};
        case FamilyTag::BinaryTetrahedral: return {6, 8, 12};
        case FamilyTag::BinaryOctahedral: return {8, 12, 18};
        case FamilyTag::BinaryIcosahedral: return {12, 20, 30};
        default: break;
    }
    throw UnsupportedFamily("unknown family tag");
}

KleinTriple klein_generators(const GroupFamily& family) {
    require_polyhedral(family);

    // Tetrahedral edge, vertex and face forms; the octahedral triple is
    // assembled from them below.
    const HomoPoly tet_edge = sparse(6, {{5, 1.0}, {1, -1.0}});
    const HomoPoly tet_vertex = sparse(8, {{8, 1.0}, {4, 14.0}, {0, 1.0}});
    const HomoPoly tet_face = sparse(12, {{12, 1.0}, {8, -33.0}, {4, -33.0}, {0, 1.0}});

    switch (family.tag) {
        case FamilyTag::BinaryDihedral: {
            const int n = family.n;
            KleinTriple t;
            t.h1 = mono(4, 2, 1.0);
            t.h2 = sparse(2 * n, {{2 * n, 1.0}, {n, -2.0}, {0, 1.0}});
            t.h3 = sparse(2 * n + 2, {{2 * n + 1, 1.0}, {1, -1.0}});
            if (n % 2 != 0) t.absolute = {true, false, false};
            return t;
        }
        case FamilyTag::BinaryTetrahedral:
            return {tet_edge, tet_vertex, tet_face};
        case FamilyTag::BinaryOctahedral:
            return {tet_vertex, tet_edge * tet_edge, tet_edge * tet_face};
        case FamilyTag::BinaryIcosahedral: {
            KleinTriple t;
            t.h1 = sparse(12, {{11, 1.0}, {6, 11.0}, {1, -1.0}});
            t.h2 = sparse(20, {{20, -1.0}, {15, 228.0}, {10, -494.0}, {5, -228.0}, {0, -1.0}});
            t.h3 = sparse(30, {{30, 1.0}, {25, 522.0}, {20, -10005.0}, {10, -10005.0},
                               {5, -522.0}, {0, 1.0}});
            return t;
        }
        default: break;
    }
    throw UnsupportedFamily("unknown family tag");
}

int expected_anticoherence_order(const GroupFamily& family) {
    require_polyhedral(family);
    switch (family.tag) {
        case FamilyTag::BinaryDihedral: return 1;
        case FamilyTag::BinaryTetrahedral: return 2;
        case FamilyTag::BinaryOctahedral: return 3;
        case FamilyTag::BinaryIcosahedral: return 5;
        default: break;
    }
    throw UnsupportedFamily("unknown family tag");
}

CharacterReport check_relative_invariance(const HomoPoly& p, const BinaryGroup& group,
                                          double tol) {
    const double scale = hpoly_max_abs(p);
    if (scale == 0.0) {
        throw ZeroPolynomial("cannot test invariance of the zero polynomial");
    }
    int pivot = 0;
    p.coeffs.cwiseAbs().maxCoeff(&pivot);

    CharacterReport report;
    report.invariant = true;
    report.relative = true;
    report.characters.reserve(group.elements.size());

    for (const auto& g : group.elements) {
        const HomoPoly q = hpoly_substitute(p, g);
        const Complex chi = q.coeffs(pivot) / p.coeffs(pivot);
        report.characters.push_back(chi);

        const double residual = (q.coeffs - chi * p.coeffs).cwiseAbs().maxCoeff() / scale;
        report.max_residual = std::max(report.max_residual, residual);

        if (residual > tol || std::abs(std::abs(chi) - 1.0) > tol) report.relative = false;
        if (residual > tol || std::abs(chi - Complex{1.0, 0.0}) > tol) report.invariant = false;
    }
    return report;
}

}  // namespace spinlab
