#include <doctest.h>

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <vector>

#include "spinlab/anticoherence.hpp"
#include "spinlab/homo_poly.hpp"
#include "spinlab/majorana.hpp"
#include "spinlab/rng.hpp"
#include "spinlab/spin.hpp"

namespace {

using spinlab::Complex;
using spinlab::MajoranaPoly;
using spinlab::PointSet;
using spinlab::SpinQuantum;
using spinlab::SpinState;

SpinState random_state(SpinQuantum s, spinlab::Rng& rng) {
    SpinState state{s, Eigen::VectorXcd(s.dimension())};
    for (int i = 0; i < s.dimension(); ++i) {
        state.amps[i] = rng.complex_normal();
    }
    return spinlab::normalized(state);
}

bool roots_contain(const std::vector<Complex>& roots, Complex target, double tol) {
    return std::any_of(roots.begin(), roots.end(),
                       [&](Complex r) { return std::abs(r - target) <= tol; });
}

}  // namespace

TEST_SUITE("majorana") {

TEST_CASE("stretched states map to pure powers of z") {
    for (int doubled : {1, 2, 6}) {
        const SpinState top = spinlab::basis_state(SpinQuantum{doubled}, doubled);
        const MajoranaPoly poly = spinlab::to_majorana_poly(top);
        REQUIRE(poly.coeffs.size() == doubled + 1);
        CHECK(std::abs(poly.coeffs[doubled] - Complex{1.0, 0.0}) <= 1e-14);
        CHECK(poly.coeffs.head(doubled).cwiseAbs().maxCoeff() <= 1e-14);
    }
}

TEST_CASE("the spin-1 zero state has the expected linear polynomial") {
    const SpinState m0 = spinlab::basis_state(SpinQuantum{2}, 0);
    const MajoranaPoly poly = spinlab::to_majorana_poly(m0);
    CHECK(std::abs(poly.coeffs[1] + std::sqrt(2.0)) <= 1e-14);
    CHECK(std::abs(poly.coeffs[0]) <= 1e-14);
    CHECK(std::abs(poly.coeffs[2]) <= 1e-14);
}

TEST_CASE("the octahedral state maps to a multiple of z^5 - z") {
    SpinState oct{SpinQuantum{6}, Eigen::VectorXcd::Zero(7)};
    oct.amps[1] = -1.0 / std::sqrt(2.0);
    oct.amps[5] = 1.0 / std::sqrt(2.0);
    const MajoranaPoly poly = spinlab::to_majorana_poly(oct);
    const Complex scale = poly.coeffs[5];
    CHECK(std::abs(scale - std::sqrt(3.0)) <= 1e-12);
    CHECK(std::abs(poly.coeffs[1] + scale) <= 1e-12);
    for (int k : {0, 2, 3, 4, 6}) {
        CHECK(std::abs(poly.coeffs[k]) <= 1e-12);
    }
}

TEST_CASE("poly to state to poly is the identity up to phase") {
    spinlab::Rng rng(51);
    for (int doubled = 1; doubled <= 20; ++doubled) {
        const SpinQuantum s{doubled};
        for (int trial = 0; trial < 10; ++trial) {
            const SpinState original = random_state(s, rng);
            const SpinState recovered =
                spinlab::from_majorana_poly(spinlab::to_majorana_poly(original));
            const double fidelity = std::abs(spinlab::overlap(recovered, original));
            CHECK(fidelity >= 1.0 - 1e-10);
        }
    }
}

TEST_CASE("roots of simple polynomials") {
    SUBCASE("double root at the origin") {
        MajoranaPoly poly{SpinQuantum{2}, Eigen::VectorXcd::Zero(3)};
        poly.coeffs[2] = 1.0;
        const auto roots = spinlab::poly_roots(poly);
        REQUIRE(roots.finite_roots.size() == 2);
        CHECK(roots.infinity_multiplicity == 0);
        CHECK(std::abs(roots.finite_roots[0]) <= 1e-12);
        CHECK(std::abs(roots.finite_roots[1]) <= 1e-12);
    }

    SUBCASE("degree drop becomes multiplicity at infinity") {
        MajoranaPoly poly{SpinQuantum{1}, Eigen::VectorXcd::Zero(2)};
        poly.coeffs[0] = 3.0;
        const auto roots = spinlab::poly_roots(poly);
        CHECK(roots.finite_roots.empty());
        CHECK(roots.infinity_multiplicity == 1);
    }

    SUBCASE("z^5 - z factors into the fourth roots of unity and zero") {
        MajoranaPoly poly{SpinQuantum{6}, Eigen::VectorXcd::Zero(7)};
        poly.coeffs[5] = 1.0;
        poly.coeffs[1] = -1.0;
        const auto roots = spinlab::poly_roots(poly);
        REQUIRE(roots.finite_roots.size() == 5);
        CHECK(roots.infinity_multiplicity == 1);
        for (Complex target : {Complex{0.0, 0.0}, Complex{1.0, 0.0}, Complex{-1.0, 0.0},
                               Complex{0.0, 1.0}, Complex{0.0, -1.0}}) {
            CHECK(roots_contain(roots.finite_roots, target, 1e-10));
        }
    }
}

TEST_CASE("stereographic projection hits the textbook points") {
    CHECK((spinlab::stereo_project({0.0, 0.0}) - Eigen::Vector3d{0, 0, -1}).norm() <= 1e-15);
    CHECK((spinlab::stereo_project({1.0, 0.0}) - Eigen::Vector3d{1, 0, 0}).norm() <= 1e-15);
    CHECK((spinlab::stereo_project({0.0, 1.0}) - Eigen::Vector3d{0, 1, 0}).norm() <= 1e-15);
    CHECK((spinlab::stereo_infinity() - Eigen::Vector3d{0, 0, 1}).norm() == 0.0);
}

TEST_CASE("stereo projection and lift are mutually inverse") {
    spinlab::Rng rng(52);
    for (int trial = 0; trial < 40; ++trial) {
        const Complex z{4.0 * (rng.uniform() - 0.5), 4.0 * (rng.uniform() - 0.5)};
        const Eigen::Vector3d v = spinlab::stereo_project(z);
        CHECK(std::abs(v.norm() - 1.0) <= 1e-12);
        const auto back = spinlab::stereo_lift(v);
        REQUIRE(back.has_value());
        CHECK(std::abs(*back - z) <= 1e-9 * (1.0 + std::abs(z)));
    }
    CHECK_FALSE(spinlab::stereo_lift(Eigen::Vector3d{0, 0, 1}).has_value());
}

TEST_CASE("majorana points of reference states") {
    SUBCASE("coherent state piles all points on the south pole") {
        const PointSet pts = spinlab::majorana_points(spinlab::basis_state(SpinQuantum{6}, 6));
        REQUIRE(pts.size() == 6);
        for (const auto& p : pts.points) {
            CHECK((p - Eigen::Vector3d{0, 0, -1}).norm() <= 1e-8);
        }
    }

    SUBCASE("the spin-1 zero state splits across the poles") {
        const PointSet pts = spinlab::majorana_points(spinlab::basis_state(SpinQuantum{2}, 0));
        REQUIRE(pts.size() == 2);
        double z_sum = 0.0;
        for (const auto& p : pts.points) {
            CHECK(std::abs(std::abs(p.z()) - 1.0) <= 1e-10);
            z_sum += p.z();
        }
        CHECK(std::abs(z_sum) <= 1e-10);
    }

    SUBCASE("eigenstate |s, m> splits s+m down and s-m up") {
        const SpinQuantum s{8};
        for (int doubled_m = -8; doubled_m <= 8; doubled_m += 2) {
            const PointSet pts = spinlab::majorana_points(spinlab::basis_state(s, doubled_m));
            int up = 0, down = 0;
            for (const auto& p : pts.points) {
                if (p.z() > 0.9) ++up;
                if (p.z() < -0.9) ++down;
            }
            CHECK(up + down == 8);
            CHECK(down == (8 + doubled_m) / 2);
            CHECK(up == (8 - doubled_m) / 2);
        }
    }
}

TEST_CASE("state_from_points inverts majorana_points") {
    SUBCASE("two south poles give the stretched spin-1 state") {
        PointSet south;
        south.points = {{0, 0, -1}, {0, 0, -1}};
        const SpinState state = spinlab::state_from_points(south);
        CHECK(state.s.doubled == 2);
        CHECK(std::abs(std::abs(state.amps[0]) - 1.0) <= 1e-12);
    }

    SUBCASE("octahedron vertices give the order-3 spin-3 state") {
        PointSet oct;
        oct.points = {{1, 0, 0}, {-1, 0, 0}, {0, 1, 0}, {0, -1, 0}, {0, 0, 1}, {0, 0, -1}};
        const SpinState state = spinlab::state_from_points(oct);
        REQUIRE(state.s.doubled == 6);
        CHECK(std::abs(std::abs(state.amps[1]) - 1.0 / std::sqrt(2.0)) <= 1e-10);
        CHECK(std::abs(std::abs(state.amps[5]) - 1.0 / std::sqrt(2.0)) <= 1e-10);
        CHECK(std::abs(state.amps[1] + state.amps[5]) <= 1e-10);
    }

    SUBCASE("tetrahedron vertices give an order-2 spin-2 state") {
        const double r = 1.0 / std::sqrt(3.0);
        PointSet tet;
        tet.points = {{r, r, r}, {r, -r, -r}, {-r, r, -r}, {-r, -r, r}};
        const SpinState state = spinlab::state_from_points(tet);
        REQUIRE(state.s.doubled == 4);
        CHECK(spinlab::anticoherence_order(state, 3) == 2);
    }

    SUBCASE("round trip through points preserves the constellation") {
        spinlab::Rng rng(53);
        for (int doubled : {3, 5, 8}) {
            const SpinState original = random_state(SpinQuantum{doubled}, rng);
            const PointSet pts = spinlab::majorana_points(original);
            const SpinState rebuilt = spinlab::state_from_points(pts);
            const double fidelity = std::abs(spinlab::overlap(rebuilt, original));
            CHECK(fidelity >= 1.0 - 1e-8);
        }
    }

    SUBCASE("an empty point set is rejected") {
        CHECK_THROWS_AS(spinlab::state_from_points(PointSet{}), spinlab::DimensionMismatch);
    }
}

TEST_CASE("constellations rotate with the state") {
    // The descending-m coefficient convention together with north-pole
    // projection conjugates the rotation action by a half-turn about z:
    // applying exp(-i angle axis.S) to the state carries the constellation
    // to its image under the rotation by the same angle about the axis
    // (-ax, -ay, az). About the z axis itself the two agree.
    spinlab::Rng rng(54);
    for (int trial = 0; trial < 8; ++trial) {
        const SpinQuantum s{5};
        const SpinState state = random_state(s, rng);
        const Eigen::Vector3d axis = spinlab::random_unit_axis(rng);
        const double angle = rng.uniform() * 6.0;

        const SpinState rotated{s, spinlab::rotation_operator(s, axis, angle) * state.amps};
        const PointSet rotated_pts = spinlab::majorana_points(rotated);

        PointSet expected = spinlab::majorana_points(state);
        const Eigen::Vector3d induced_axis(-axis.x(), -axis.y(), axis.z());
        const Eigen::AngleAxisd rot(angle, induced_axis);
        for (auto& p : expected.points) {
            p = rot * p;
        }
        CHECK(spinlab::greedy_match_distance(rotated_pts, expected) <= 1e-6);
    }

    SUBCASE("rotation about z needs no axis adjustment") {
        const SpinState state = random_state(SpinQuantum{4}, rng);
        const double angle = 1.3;
        const SpinState rotated{
            SpinQuantum{4},
            spinlab::rotation_operator(SpinQuantum{4}, Eigen::Vector3d::UnitZ(), angle) *
                state.amps};
        PointSet expected = spinlab::majorana_points(state);
        const Eigen::AngleAxisd rot(angle, Eigen::Vector3d::UnitZ());
        for (auto& p : expected.points) {
            p = rot * p;
        }
        CHECK(spinlab::greedy_match_distance(spinlab::majorana_points(rotated), expected) <=
              1e-6);
    }
}

TEST_CASE("homogeneous polynomials feed the same machinery") {
    // p(z, w) = z^2 w^2 at degree 4 reads as M(z) = z^2 for spin 2.
    spinlab::HomoPoly p{4, Eigen::VectorXcd::Zero(5)};
    p.coeffs[2] = 5.0;
    const MajoranaPoly poly = spinlab::majorana_from_homogeneous(p);
    CHECK(poly.s.doubled == 4);
    CHECK((poly.coeffs - p.coeffs).cwiseAbs().maxCoeff() <= 1e-15);

    const SpinState state = spinlab::state_from_homogeneous(p);
    CHECK(std::abs(state.amps.norm() - 1.0) <= 1e-12);
    const PointSet pts = spinlab::majorana_points(state);
    int at_south = 0, at_north = 0;
    for (const auto& q : pts.points) {
        if (q.z() < -0.9) ++at_south;
        if (q.z() > 0.9) ++at_north;
    }
    CHECK(at_south == 2);
    CHECK(at_north == 2);
}

TEST_CASE("greedy matching reports infinity on size mismatch") {
    PointSet a, b;
    a.points = {{0, 0, 1}};
    b.points = {{0, 0, 1}, {0, 0, -1}};
    CHECK(spinlab::greedy_match_distance(a, b) == std::numeric_limits<double>::infinity());
    CHECK(spinlab::greedy_match_distance(a, a) == 0.0);
}

}  // TEST_SUITE
