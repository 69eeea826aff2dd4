#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "spinlab/types.hpp"

namespace spinlab {

enum class FamilyTag {
    Cyclic,
    BinaryDihedral,
    BinaryTetrahedral,
    BinaryOctahedral,
    BinaryIcosahedral,
};

/// A finite subgroup family of SU(2). The parameter n is meaningful only for
/// the cyclic and binary dihedral families and must be >= 2 there.
struct GroupFamily {
    FamilyTag tag = FamilyTag::Cyclic;
    int n = 0;
};

GroupFamily cyclic_family(int n);
GroupFamily binary_dihedral_family(int n);
GroupFamily binary_tetrahedral_family();
GroupFamily binary_octahedral_family();
GroupFamily binary_icosahedral_family();

/// Canonical lowercase name: "cyclic", "binary_dihedral", ...
std::string family_name(const GroupFamily& family);

/// Accepts canonical names and the short aliases "dihedral", "tetrahedral",
/// "octahedral", "icosahedral". Returns nullopt for anything else or for a
/// missing/invalid parameter where one is required.
std::optional<GroupFamily> family_from_name(std::string_view name, std::optional<int> n);

int expected_group_order(const GroupFamily& family);

/// Standard generator matrices for the family, as elements of SU(2) (U(2)
/// with determinant one; the cyclic family uses diag(e^{2 pi i / n}, conj)).
std::vector<Eigen::Matrix2cd> family_generators(const GroupFamily& family);

/// Multiplicative closure of a generator list, deduplicated against tol in
/// max-norm. Throws ClosureOverflow once the element count passes four times
/// expected_order, which catches generators that do not close.
std::vector<Eigen::Matrix2cd> close_under_multiplication(
    const std::vector<Eigen::Matrix2cd>& generators, int expected_order, double tol = 1e-10);

struct BinaryGroup {
    GroupFamily family;
    std::vector<Eigen::Matrix2cd> elements;

    int order() const noexcept { return static_cast<int>(elements.size()); }
};

BinaryGroup generate_group(const GroupFamily& family);

bool contains_element(const BinaryGroup& group, const Eigen::Matrix2cd& g, double tol = 1e-8);

/// Rotation matrix of the image of g under the 2-to-1 covering SU(2)->SO(3):
/// R_ij = tr(sigma_i g sigma_j g^dagger) / 2.
Eigen::Matrix3d so3_image(const Eigen::Matrix2cd& g);

}  // namespace spinlab
