#include "spinlab/serialization.hpp"

#include <cctype>
#include <cstdio>

namespace spinlab {

namespace {

using nlohmann::json;

json complex_to_json(Complex c) { return json::array({c.real(), c.imag()}); }

Complex complex_from_json(const json& j) {
    if (!j.is_array() || j.size() != 2) {
        throw DimensionMismatch("complex values are encoded as [re, im]");
    }
    return {j.at(0).get<double>(), j.at(1).get<double>()};
}

json amp_list_to_json(const Eigen::VectorXcd& v) {
    json list = json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i) list.push_back(complex_to_json(v(i)));
    return list;
}

Eigen::VectorXcd amp_list_from_json(const json& j) {
    if (!j.is_array()) {
        throw DimensionMismatch("amplitude list must be a JSON array");
    }
    Eigen::VectorXcd v(static_cast<Eigen::Index>(j.size()));
    for (std::size_t i = 0; i < j.size(); ++i) {
        v(static_cast<Eigen::Index>(i)) = complex_from_json(j.at(i));
    }
    return v;
}

std::string format_double(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

bool all_digits(std::string_view text) {
    if (text.empty()) return false;
    for (const char ch : text) {
        if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
    }
    return true;
}

}  // namespace

std::optional<SpinQuantum> parse_spin(std::string_view text) {
    const std::size_t slash = text.find('/');
    if (slash == std::string_view::npos) {
        if (!all_digits(text) || text.size() > 6) return std::nullopt;
        return SpinQuantum{2 * std::stoi(std::string(text))};
    }
    const std::string_view head = text.substr(0, slash);
    const std::string_view tail = text.substr(slash + 1);
    if (tail != "2" || !all_digits(head) || head.size() > 6) return std::nullopt;
    return SpinQuantum{std::stoi(std::string(head))};
}

std::string format_spin(SpinQuantum s) {
    if (s.is_integer()) return std::to_string(s.doubled / 2);
    return std::to_string(s.doubled) + "/2";
}

json homo_poly_to_json(const HomoPoly& p) {
    return {{"degree", p.degree}, {"coeffs", amp_list_to_json(p.coeffs)}};
}

HomoPoly homo_poly_from_json(const json& j) {
    HomoPoly p;
    p.degree = j.at("degree").get<int>();
    p.coeffs = amp_list_from_json(j.at("coeffs"));
    if (p.degree < 0 || p.coeffs.size() != p.degree + 1) {
        throw DegreeMismatch("coefficient count does not match the declared degree");
    }
    return p;
}

json group_to_json(const BinaryGroup& group) {
    json elements = json::array();
    for (const auto& g : group.elements) {
        elements.push_back(json::array({
            json::array({complex_to_json(g(0, 0)), complex_to_json(g(0, 1))}),
            json::array({complex_to_json(g(1, 0)), complex_to_json(g(1, 1))}),
        }));
    }
    const bool parameterized = group.family.tag == FamilyTag::Cyclic ||
                               group.family.tag == FamilyTag::BinaryDihedral;
    return {{"family", family_name(group.family)},
            {"n", parameterized ? json(group.family.n) : json(nullptr)},
            {"order", group.order()},
            {"elements", elements}};
}

BinaryGroup group_from_json(const json& j) {
    const std::string name = j.at("family").get<std::string>();
    std::optional<int> n;
    if (j.contains("n") && !j.at("n").is_null()) n = j.at("n").get<int>();
    const std::optional<GroupFamily> family = family_from_name(name, n);
    if (!family.has_value()) {
        throw UnsupportedFamily("unknown group family '" + name + "'");
    }

    BinaryGroup group;
    group.family = *family;
    for (const auto& element : j.at("elements")) {
        Eigen::Matrix2cd g;
        for (int r = 0; r < 2; ++r) {
            for (int c = 0; c < 2; ++c) {
                g(r, c) = complex_from_json(element.at(r).at(c));
            }
        }
        group.elements.push_back(g);
    }
    if (group.order() != j.at("order").get<int>()) {
        throw ClosureOverflow("element list length disagrees with the declared order");
    }
    return group;
}

json state_to_json(const SpinState& state) {
    return {{"doubled_spin", state.s.doubled}, {"amps", amp_list_to_json(state.amps)}};
}

SpinState state_from_json(const json& j) {
    SpinState state;
    state.s = SpinQuantum{j.at("doubled_spin").get<int>()};
    state.amps = amp_list_from_json(j.at("amps"));
    if (state.s.doubled < 0 || state.amps.size() != state.s.dimension()) {
        throw DimensionMismatch("amplitude count does not match doubled_spin");
    }
    return state;
}

json subspace_to_json(const Subspace& subspace) {
    json basis = json::array();
    for (int c = 0; c < subspace.dim(); ++c) {
        basis.push_back(state_to_json(subspace.column_state(c)));
    }
    return {{"doubled_spin", subspace.s.doubled},
            {"dim", subspace.dim()},
            {"basis", basis},
            {"certified_order", subspace.certified_order.has_value()
                                    ? json(*subspace.certified_order)
                                    : json(nullptr)}};
}

Subspace subspace_from_json(const json& j) {
    const SpinQuantum s{j.at("doubled_spin").get<int>()};
    const json& basis = j.at("basis");
    Eigen::MatrixXcd columns(s.dimension(), static_cast<Eigen::Index>(basis.size()));
    for (std::size_t c = 0; c < basis.size(); ++c) {
        const SpinState state = state_from_json(basis.at(c));
        if (!(state.s == s)) {
            throw DimensionMismatch("basis state spin disagrees with the subspace spin");
        }
        columns.col(static_cast<Eigen::Index>(c)) = state.amps;
    }
    if (j.at("dim").get<int>() != static_cast<int>(basis.size())) {
        throw DimensionMismatch("declared dim disagrees with the basis length");
    }
    Subspace subspace = make_subspace(s, std::move(columns));
    if (j.contains("certified_order") && !j.at("certified_order").is_null()) {
        subspace.certified_order = j.at("certified_order").get<int>();
    }
    return subspace;
}

json points_to_json(const PointSet& points) {
    json list = json::array();
    for (const auto& p : points.points) {
        list.push_back(json::array({p.x(), p.y(), p.z()}));
    }
    return {{"points", list}};
}

PointSet points_from_json(const json& j) {
    PointSet set;
    for (const auto& row : j.at("points")) {
        if (!row.is_array() || row.size() != 3) {
            throw DimensionMismatch("points are encoded as [x, y, z]");
        }
        set.points.emplace_back(row.at(0).get<double>(), row.at(1).get<double>(),
                                row.at(2).get<double>());
    }
    return set;
}

json design_report_to_json(const DesignReport& report) {
    json residuals = json::object();
    for (const auto& [degree, r] : report.residuals) {
        residuals[std::to_string(degree)] = r;
    }
    return {{"order", report.order}, {"residuals", residuals}};
}

json construction_report_to_json(const ConstructionReport& report) {
    json solutions = json::array();
    for (const auto& sol : report.solutions) {
        solutions.push_back(json::array({sol.u, sol.v, sol.w}));
    }
    json singular = json::array();
    for (Eigen::Index i = 0; i < report.singular_values.size(); ++i) {
        singular.push_back(report.singular_values(i));
    }
    json residuals = json::object();
    for (const auto& [t, r] : report.residuals) residuals[std::to_string(t)] = r;

    const bool parameterized = report.family.tag == FamilyTag::Cyclic ||
                               report.family.tag == FamilyTag::BinaryDihedral;
    return {{"family", family_name(report.family)},
            {"n", parameterized ? json(report.family.n) : json(nullptr)},
            {"doubled_spin", report.s.doubled},
            {"solutions", solutions},
            {"candidate_count", static_cast<int>(report.candidates.size())},
            {"singular_values", singular},
            {"dim", report.dim},
            {"residuals", residuals},
            {"certified_order", report.certified_order},
            {"expected_order", report.expected_order},
            {"subspace", report.subspace.has_value() ? subspace_to_json(*report.subspace)
                                                     : json(nullptr)}};
}

std::string points_to_csv(const PointSet& points) {
    std::string out = "x,y,z\n";
    for (const auto& p : points.points) {
        out += format_double(p.x()) + "," + format_double(p.y()) + "," +
               format_double(p.z()) + "\n";
    }
    return out;
}

std::string range_to_csv(const RangeSample& sample) {
    std::string out = "sx,sy,sz\n";
    for (Eigen::Index i = 0; i < sample.points.rows(); ++i) {
        out += format_double(sample.points(i, 0)) + "," + format_double(sample.points(i, 1)) +
               "," + format_double(sample.points(i, 2)) + "\n";
    }
    return out;
}

std::string scan_to_csv(const std::vector<ConstructionReport>& reports) {
    std::string out = "family,s,candidates,dim,order\n";
    for (const auto& report : reports) {
        out += family_name(report.family) + "," + format_spin(report.s) + "," +
               std::to_string(report.candidates.size()) + "," + std::to_string(report.dim) +
               "," + std::to_string(report.certified_order) + "\n";
    }
    return out;
}

}  // namespace spinlab
