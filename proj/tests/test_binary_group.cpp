#include <doctest.h>

#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <vector>

#include "spinlab/binary_group.hpp"
#include "spinlab/rng.hpp"

namespace {

using spinlab::BinaryGroup;
using spinlab::GroupFamily;

bool matrices_close(const Eigen::Matrix2cd& a, const Eigen::Matrix2cd& b, double tol) {
    return (a - b).cwiseAbs().maxCoeff() <= tol;
}

}  // namespace

TEST_SUITE("binary_group") {

TEST_CASE("group orders match the classical values") {
    CHECK(spinlab::expected_group_order(spinlab::cyclic_family(5)) == 5);
    CHECK(spinlab::expected_group_order(spinlab::binary_dihedral_family(2)) == 8);
    CHECK(spinlab::expected_group_order(spinlab::binary_dihedral_family(3)) == 12);
    CHECK(spinlab::expected_group_order(spinlab::binary_tetrahedral_family()) == 24);
    CHECK(spinlab::expected_group_order(spinlab::binary_octahedral_family()) == 48);
    CHECK(spinlab::expected_group_order(spinlab::binary_icosahedral_family()) == 120);

    CHECK(spinlab::generate_group(spinlab::cyclic_family(5)).order() == 5);
    CHECK(spinlab::generate_group(spinlab::binary_dihedral_family(2)).order() == 8);
    CHECK(spinlab::generate_group(spinlab::binary_dihedral_family(5)).order() == 20);
    CHECK(spinlab::generate_group(spinlab::binary_tetrahedral_family()).order() == 24);
    CHECK(spinlab::generate_group(spinlab::binary_octahedral_family()).order() == 48);
    CHECK(spinlab::generate_group(spinlab::binary_icosahedral_family()).order() == 120);
}

TEST_CASE("all elements are special unitary") {
    for (const GroupFamily family : {spinlab::binary_dihedral_family(3),
                                     spinlab::binary_tetrahedral_family(),
                                     spinlab::binary_icosahedral_family()}) {
        const BinaryGroup group = spinlab::generate_group(family);
        for (const auto& g : group.elements) {
            const Eigen::Matrix2cd defect = g.adjoint() * g - Eigen::Matrix2cd::Identity();
            CHECK(defect.cwiseAbs().maxCoeff() <= 1e-10);
            CHECK(std::abs(g.determinant() - std::complex<double>{1.0, 0.0}) <= 1e-10);
        }
    }
}

TEST_CASE("the element list is closed under products and inverses") {
    const BinaryGroup group = spinlab::generate_group(spinlab::binary_tetrahedral_family());
    spinlab::Rng rng(11);
    for (int trial = 0; trial < 40; ++trial) {
        const auto& g = group.elements[static_cast<int>(rng.uniform() * group.order())];
        const auto& h = group.elements[static_cast<int>(rng.uniform() * group.order())];
        CHECK(spinlab::contains_element(group, g * h));
        CHECK(spinlab::contains_element(group, g.adjoint()));
    }
}

TEST_CASE("minus identity belongs to every binary family") {
    const Eigen::Matrix2cd minus_identity = -Eigen::Matrix2cd::Identity();
    for (const GroupFamily family : {spinlab::binary_dihedral_family(2),
                                     spinlab::binary_dihedral_family(3),
                                     spinlab::binary_tetrahedral_family(),
                                     spinlab::binary_octahedral_family(),
                                     spinlab::binary_icosahedral_family()}) {
        const BinaryGroup group = spinlab::generate_group(family);
        CHECK(spinlab::contains_element(group, minus_identity));
    }
}

TEST_CASE("regeneration yields the same element set") {
    const BinaryGroup first = spinlab::generate_group(spinlab::binary_octahedral_family());
    const BinaryGroup second = spinlab::generate_group(spinlab::binary_octahedral_family());
    REQUIRE(first.order() == second.order());

    std::vector<bool> used(second.elements.size(), false);
    for (const auto& g : first.elements) {
        bool matched = false;
        for (size_t j = 0; j < second.elements.size(); ++j) {
            if (!used[j] && matrices_close(g, second.elements[j], 1e-10)) {
                used[j] = true;
                matched = true;
                break;
            }
        }
        CHECK(matched);
    }
}

TEST_CASE("closure failure is detected") {
    // A rotation by one radian generates an infinite group; the builder must
    // give up instead of looping.
    Eigen::Matrix2cd irrational = Eigen::Matrix2cd::Zero();
    irrational(0, 0) = std::polar(1.0, 0.5);
    irrational(1, 1) = std::polar(1.0, -0.5);
    CHECK_THROWS_AS(spinlab::close_under_multiplication({irrational}, 12),
                    spinlab::ClosureOverflow);
}

TEST_CASE("rotation images are orthogonal and multiplicative") {
    const BinaryGroup group = spinlab::generate_group(spinlab::binary_icosahedral_family());
    spinlab::Rng rng(12);
    for (int trial = 0; trial < 20; ++trial) {
        const auto& g = group.elements[static_cast<int>(rng.uniform() * group.order())];
        const auto& h = group.elements[static_cast<int>(rng.uniform() * group.order())];
        const Eigen::Matrix3d rg = spinlab::so3_image(g);
        const Eigen::Matrix3d rh = spinlab::so3_image(h);
        CHECK((rg.transpose() * rg - Eigen::Matrix3d::Identity()).cwiseAbs().maxCoeff() <= 1e-10);
        CHECK(rg.determinant() == doctest::Approx(1.0).epsilon(1e-10));
        CHECK((spinlab::so3_image(g * h) - rg * rh).cwiseAbs().maxCoeff() <= 1e-10);
        CHECK((spinlab::so3_image(-g) - rg).cwiseAbs().maxCoeff() <= 1e-10);
    }
}

TEST_CASE("family names parse and print") {
    using spinlab::FamilyTag;

    auto tet = spinlab::family_from_name("tetrahedral", std::nullopt);
    REQUIRE(tet.has_value());
    CHECK(tet->tag == FamilyTag::BinaryTetrahedral);
    CHECK(spinlab::family_from_name("binary_tetrahedral", std::nullopt).has_value());

    auto dih = spinlab::family_from_name("dihedral", 4);
    REQUIRE(dih.has_value());
    CHECK(dih->tag == FamilyTag::BinaryDihedral);
    CHECK(dih->n == 4);

    CHECK_FALSE(spinlab::family_from_name("dihedral", std::nullopt).has_value());
    CHECK_FALSE(spinlab::family_from_name("dihedral", 1).has_value());
    CHECK_FALSE(spinlab::family_from_name("hexagonal", std::nullopt).has_value());

    CHECK(spinlab::family_name(spinlab::binary_icosahedral_family()) == "binary_icosahedral");
    CHECK(spinlab::family_name(spinlab::cyclic_family(7)) == "cyclic");
}

TEST_CASE("cyclic groups are commutative and power-generated") {
    const BinaryGroup group = spinlab::generate_group(spinlab::cyclic_family(6));
    REQUIRE(group.order() == 6);
    for (const auto& g : group.elements) {
        for (const auto& h : group.elements) {
            CHECK(matrices_close(g * h, h * g, 1e-12));
        }
    }
}

}  // TEST_SUITE
