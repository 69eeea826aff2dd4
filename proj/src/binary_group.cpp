#include "spinlab/binary_group.hpp"

#include <array>
#include <cmath>
#include <numbers>

namespace spinlab {

namespace {

constexpr double kPi = std::numbers::pi;

void require_parameter(const GroupFamily& family) {
    if ((family.tag == FamilyTag::Cyclic || family.tag == FamilyTag::BinaryDihedral) &&
        family.n < 2) {
        throw UnsupportedFamily("family parameter must be at least 2, got " +
                                std::to_string(family.n));
    }
}

Eigen::Matrix2cd diag2(Complex a, Complex b) {
    Eigen::Matrix2cd m;
    m << a, Complex{0.0, 0.0}, Complex{0.0, 0.0}, b;
    return m;
}

}  // namespace

GroupFamily cyclic_family(int n) {
    GroupFamily f{FamilyTag::Cyclic, n};
    require_parameter(f);
    return f;
}

GroupFamily binary_dihedral_family(int n) {
    GroupFamily f{FamilyTag::BinaryDihedral, n};
    require_parameter(f);
    return f;
}

GroupFamily binary_tetrahedral_family() { return {FamilyTag::BinaryTetrahedral, 0}; }
GroupFamily binary_octahedral_family() { return {FamilyTag::BinaryOctahedral, 0}; }
GroupFamily binary_icosahedral_family() { return {FamilyTag::BinaryIcosahedral, 0}; }

std::string family_name(const GroupFamily& family) {
    switch (family.tag) {
        case FamilyTag::Cyclic: return "cyclic";
        case FamilyTag::BinaryDihedral: return "binary_dihedral";
        case FamilyTag::BinaryTetrahedral: return "binary_tetrahedral";
        case FamilyTag::BinaryOctahedral: return "binary_octahedral";
        case FamilyTag::BinaryIcosahedral: return "binary_icosahedral";
    }
    throw UnsupportedFamily("unknown family tag");
}

std::optional<GroupFamily> family_from_name(std::string_view name, std::optional<int> n) {
    const bool parameterized = (name == "cyclic" || name == "binary_dihedral" || name == "dihedral");
    if (parameterized) {
        if (!n.has_value() || *n < 2) return std::nullopt;
        if (name == "cyclic") return cyclic_family(*n);
        return binary_dihedral_family(*n);
    }
    if (name == "binary_tetrahedral" || name == "tetrahedral") return binary_tetrahedral_family();
    if (name == "binary_octahedral" || name == "octahedral") return binary_octahedral_family();
    if (name == "binary_icosahedral" || name == "icosahedral") return binary_icosahedral_family();
    return std::nullopt;
}

int expected_group_order(const GroupFamily& family) {
    require_parameter(family);
    switch (family.tag) {
        case FamilyTag::Cyclic: return family.n;
        case FamilyTag::BinaryDihedral: return 4 * family.n;
        case FamilyTag::BinaryTetrahedral: return 24;
        case FamilyTag::BinaryOctahedral: return 48;
        case FamilyTag::BinaryIcosahedral: return 120;
    }
    throw UnsupportedFamily("unknown family tag");
}

std::vector<Eigen::Matrix2cd> family_generators(const GroupFamily& family) {
    require_parameter(family);
    using std::polar;

    // Quaternion generators in their standard 2x2 complex form.
    const Complex e8 = polar(1.0, kPi / 4.0);  // primitive 8th root of unity
    Eigen::Matrix2cd flip;                     // the quaternion j
    flip << Complex{0.0, 0.0}, Complex{0.0, 1.0}, Complex{0.0, 1.0}, Complex{0.0, 0.0};

    switch (family.tag) {
        case FamilyTag::Cyclic: {
            const Complex w = polar(1.0, 2.0 * kPi / family.n);
            return {diag2(w, std::conj(w))};
        }
        case FamilyTag::BinaryDihedral: {
            const Complex w = polar(1.0, kPi / family.n);
            return {diag2(w, std::conj(w)), flip};
        }
        case FamilyTag::BinaryTetrahedral: {
            Eigen::Matrix2cd t;
            t << e8, e8 * e8 * e8, e8, std::conj(e8);
            t /= std::sqrt(2.0);
            const Complex i{0.0, 1.0};
            return {diag2(i, -i), flip, t};
        }
        case FamilyTag::BinaryOctahedral: {
            auto gens = family_generators(binary_tetrahedral_family());
            gens.push_back(diag2(e8, std::conj(e8)));
            return gens;
        }
        case FamilyTag::BinaryIcosahedral: {
            const Complex e5 = polar(1.0, 2.0 * kPi / 5.0);
            auto p = [&](int k) { return std::pow(e5, k); };
            Eigen::Matrix2cd a = diag2(p(3), p(2));
            Eigen::Matrix2cd b;
            b << -(p(1) - p(4)), p(2) - p(3), p(2) - p(3), p(1) - p(4);
            b /= std::sqrt(5.0);
            return {a, b};
        }
    }
    throw UnsupportedFamily("unknown family tag");
}

std::vector<Eigen::Matrix2cd> close_under_multiplication(
    const std::vector<Eigen::Matrix2cd>& generators, int expected_order, double tol) {
    std::vector<Eigen::Matrix2cd> elements;
    elements.push_back(Eigen::Matrix2cd::Identity());

    auto contains = [&](const Eigen::Matrix2cd& m) {
        for (const auto& e : elements) {
            if ((e - m).cwiseAbs().maxCoeff() <= tol) return true;
        }
        return false;
    };

    const std::size_t cap = 4 * static_cast<std::size_t>(expected_order);
    // Breadth-first closure: multiply every known element by every generator
    // until nothing new appears.
    for (std::size_t next = 0; next < elements.size(); ++next) {
        const Eigen::Matrix2cd current = elements[next];
        for (const auto& g : generators) {
            const Eigen::Matrix2cd candidate = current * g;
            if (!contains(candidate)) {
                elements.push_back(candidate);
                if (elements.size() > cap) {
                    throw ClosureOverflow("closure exceeded " + std::to_string(cap) +
                                          " elements; generators do not close");
                }
            }
        }
    }
    return elements;
}

BinaryGroup generate_group(const GroupFamily& family) {
    BinaryGroup group;
    group.family = family;
    group.elements =
        close_under_multiplication(family_generators(family), expected_group_order(family));
    const int expected = expected_group_order(family);
    if (group.order() != expected) {
        throw ClosureOverflow("closure produced " + std::to_string(group.order()) +
                              " elements, expected " + std::to_string(expected));
    }
    return group;
}

bool contains_element(const BinaryGroup& group, const Eigen::Matrix2cd& g, double tol) {
    for (const auto& e : group.elements) {
        if ((e - g).cwiseAbs().maxCoeff() <= tol) return true;
    }
    return false;
}

Eigen::Matrix3d so3_image(const Eigen::Matrix2cd& g) {
    std::array<Eigen::Matrix2cd, 3> sigma;
    sigma[0] << 0, 1, 1, 0;
    sigma[1] << Complex{0, 0}, Complex{0, -1}, Complex{0, 1}, Complex{0, 0};
    sigma[2] << 1, 0, 0, -1;

    Eigen::Matrix3d r;
    const Eigen::Matrix2cd gd = g.adjoint();
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            r(i, j) = 0.5 * (sigma[i] * g * sigma[j] * gd).trace().real();
        }
    }
    return r;
}

}  // namespace spinlab
