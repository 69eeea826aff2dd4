#include <doctest.h>

#include <json.hpp>

#include <cmath>
#include <complex>
#include <sstream>
#include <string>
#include <vector>

#include "spinlab/anticoherence.hpp"
#include "spinlab/binary_group.hpp"
#include "spinlab/construction.hpp"
#include "spinlab/designs.hpp"
#include "spinlab/joint_range.hpp"
#include "spinlab/majorana.hpp"
#include "spinlab/serialization.hpp"
#include "spinlab/spin.hpp"

namespace {

using nlohmann::json;
using spinlab::Complex;
using spinlab::SpinQuantum;
using spinlab::SpinState;

int count_lines(const std::string& text) {
    int lines = 0;
    for (char c : text) {
        if (c == '\n') ++lines;
    }
    return lines;
}

}  // namespace

TEST_SUITE("serialization") {

TEST_CASE("spin strings parse to doubled integers") {
    auto doubled = [](std::string_view text) {
        const auto parsed = spinlab::parse_spin(text);
        REQUIRE(parsed.has_value());
        return parsed->doubled;
    };
    CHECK(doubled("6") == 12);
    CHECK(doubled("0") == 0);
    CHECK(doubled("13/2") == 13);
    CHECK(doubled("1/2") == 1);

    for (std::string_view bad : {"", "x", "6/3", "1/2/3", "-1", "2.5", "1234567", "/2", "3/"}) {
        CAPTURE(bad);
        CHECK_FALSE(spinlab::parse_spin(bad).has_value());
    }
}

TEST_CASE("format and parse round trip every half step") {
    for (int doubled = 0; doubled <= 21; ++doubled) {
        const SpinQuantum s{doubled};
        const std::string text = spinlab::format_spin(s);
        const auto back = spinlab::parse_spin(text);
        REQUIRE(back.has_value());
        CHECK(back->doubled == doubled);
        if (doubled % 2 == 0) {
            CHECK(text.find('/') == std::string::npos);
        } else {
            CHECK(text.find("/2") != std::string::npos);
        }
    }
}

TEST_CASE("states round trip through JSON") {
    SpinState state{SpinQuantum{3}, Eigen::VectorXcd(4)};
    state.amps << Complex{0.5, 0.0}, Complex{0.0, -0.5}, Complex{0.5, 0.5}, Complex{-0.5, 0.0};

    const json j = spinlab::state_to_json(state);
    CHECK(j.at("doubled_spin") == 3);
    CHECK(j.at("amps").is_array());
    CHECK(j.at("amps").size() == 4);

    const SpinState back = spinlab::state_from_json(j);
    CHECK(back.s.doubled == 3);
    CHECK((back.amps - state.amps).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("state JSON validation catches shape lies") {
    json j = spinlab::state_to_json(spinlab::basis_state(SpinQuantum{2}, 0));
    j["doubled_spin"] = 4;
    CHECK_THROWS_AS(spinlab::state_from_json(j), spinlab::DimensionMismatch);

    json bad = j;
    bad["doubled_spin"] = 2;
    bad["amps"][0] = json::array({1.0});
    CHECK_THROWS_AS(spinlab::state_from_json(bad), spinlab::DimensionMismatch);
}

TEST_CASE("polynomials round trip and validate their degree") {
    spinlab::HomoPoly p{4, Eigen::VectorXcd::Zero(5)};
    p.coeffs[2] = Complex{1.0, -2.0};
    p.coeffs[0] = Complex{0.25, 0.0};

    const json j = spinlab::homo_poly_to_json(p);
    CHECK(j.at("degree") == 4);
    const spinlab::HomoPoly back = spinlab::homo_poly_from_json(j);
    CHECK(back.degree == 4);
    CHECK((back.coeffs - p.coeffs).cwiseAbs().maxCoeff() == 0.0);

    json mangled = j;
    mangled["coeffs"].push_back(json::array({0.0, 0.0}));
    CHECK_THROWS_AS(spinlab::homo_poly_from_json(mangled), spinlab::DegreeMismatch);
}

TEST_CASE("groups round trip with their full element list") {
    const auto group = spinlab::generate_group(spinlab::binary_dihedral_family(3));
    const json j = spinlab::group_to_json(group);
    CHECK(j.at("family") == "binary_dihedral");
    CHECK(j.at("n") == 3);
    CHECK(j.at("order") == 12);

    const auto back = spinlab::group_from_json(j);
    REQUIRE(back.order() == group.order());
    for (const auto& g : back.elements) {
        CHECK(spinlab::contains_element(group, g));
    }

    json truncated = j;
    truncated["elements"].erase(0);
    CHECK_THROWS_AS(spinlab::group_from_json(truncated), spinlab::ClosureOverflow);

    json renamed = j;
    renamed["family"] = "binary_hexahedral";
    CHECK_THROWS_AS(spinlab::group_from_json(renamed), spinlab::UnsupportedFamily);

    const auto tet = spinlab::generate_group(spinlab::binary_tetrahedral_family());
    CHECK(spinlab::group_to_json(tet).at("n").is_null());
}

TEST_CASE("subspaces round trip with certification metadata") {
    Eigen::MatrixXcd basis = Eigen::MatrixXcd::Zero(3, 2);
    basis(0, 0) = 1.0;
    basis(2, 1) = Complex{0.0, 1.0};
    spinlab::Subspace sub = spinlab::make_subspace(SpinQuantum{2}, basis);

    json without = spinlab::subspace_to_json(sub);
    CHECK(without.at("doubled_spin") == 2);
    CHECK(without.at("dim") == 2);
    CHECK(without.at("certified_order").is_null());

    sub.certified_order = 1;
    const json with = spinlab::subspace_to_json(sub);
    const auto back = spinlab::subspace_from_json(with);
    CHECK(back.dim() == 2);
    REQUIRE(back.certified_order.has_value());
    CHECK(*back.certified_order == 1);
    CHECK((back.basis - sub.basis).cwiseAbs().maxCoeff() == 0.0);

    json lying = with;
    lying["dim"] = 3;
    CHECK_THROWS_AS(spinlab::subspace_from_json(lying), spinlab::DimensionMismatch);
}

TEST_CASE("point sets round trip through JSON and CSV") {
    spinlab::PointSet set;
    set.points = {{1.0 / 3.0, 2.0 / 3.0, 2.0 / 3.0}, {0.0, 0.0, -1.0}};

    const json j = spinlab::points_to_json(set);
    CHECK(j.at("points").size() == 2);
    const auto back = spinlab::points_from_json(j);
    REQUIRE(back.size() == 2);
    CHECK((back.points[0] - set.points[0]).norm() == 0.0);

    const std::string csv = spinlab::points_to_csv(set);
    CHECK(csv.rfind("x,y,z\n", 0) == 0);
    CHECK(count_lines(csv) == 3);

    // 17 significant digits reproduce the double exactly on re-read.
    std::istringstream stream(csv);
    std::string line;
    std::getline(stream, line);
    std::getline(stream, line);
    const auto first_comma = line.find(',');
    CHECK(std::stod(line.substr(0, first_comma)) == 1.0 / 3.0);
}

TEST_CASE("design and construction reports serialize their key fields") {
    spinlab::PointSet oct;
    oct.points = {{1, 0, 0}, {-1, 0, 0}, {0, 1, 0}, {0, -1, 0}, {0, 0, 1}, {0, 0, -1}};
    const auto design = spinlab::design_order(oct, 4);
    const json dj = spinlab::design_report_to_json(design);
    CHECK(dj.at("order") == 3);
    CHECK(dj.at("residuals").size() == 4);

    const auto report = spinlab::build_anticoherent_subspace(
        spinlab::binary_tetrahedral_family(), SpinQuantum{12});
    const json rj = spinlab::construction_report_to_json(report);
    CHECK(rj.at("family") == "binary_tetrahedral");
    CHECK(rj.at("doubled_spin") == 12);
    CHECK(rj.at("dim") == 2);
    CHECK(rj.at("candidate_count") == 2);
    CHECK(rj.at("solutions").size() == 2);
    CHECK(rj.at("expected_order") == 2);
    CHECK(rj.at("certified_order").get<int>() >= 2);
    CHECK_FALSE(rj.at("subspace").is_null());

    const auto empty = spinlab::build_anticoherent_subspace(
        spinlab::binary_dihedral_family(2), SpinQuantum{2});
    const json ej = spinlab::construction_report_to_json(empty);
    CHECK(ej.at("dim") == 0);
    CHECK(ej.at("subspace").is_null());
}

TEST_CASE("scan and range tables carry their headers") {
    const auto reports = spinlab::scan_dimensions(spinlab::binary_dihedral_family(2),
                                                  SpinQuantum{2}, SpinQuantum{6});
    const std::string scan_csv = spinlab::scan_to_csv(reports);
    CHECK(scan_csv.rfind("family,s,candidates,dim,order\n", 0) == 0);
    CHECK(count_lines(scan_csv) == 1 + static_cast<int>(reports.size()));
    CHECK(scan_csv.find("binary_dihedral") != std::string::npos);
    CHECK(scan_csv.find("3/2") != std::string::npos);

    const auto sample = spinlab::sample_joint_range(SpinQuantum{2}, 10, 3);
    const std::string range_csv = spinlab::range_to_csv(sample);
    CHECK(range_csv.rfind("sx,sy,sz\n", 0) == 0);
    CHECK(count_lines(range_csv) == 11);
}

}  // TEST_SUITE
