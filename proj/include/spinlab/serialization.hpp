#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "spinlab/binary_group.hpp"
#include "spinlab/construction.hpp"
#include "spinlab/designs.hpp"
#include "spinlab/homo_poly.hpp"
#include "spinlab/joint_range.hpp"
#include "spinlab/majorana.hpp"

namespace spinlab {

// Spins travel as "6" or "13/2"; every JSON payload carries doubled_spin so
// half-integer values stay exact.
std::optional<SpinQuantum> parse_spin(std::string_view text);
std::string format_spin(SpinQuantum s);

nlohmann::json homo_poly_to_json(const HomoPoly& p);
HomoPoly homo_poly_from_json(const nlohmann::json& j);

nlohmann::json group_to_json(const BinaryGroup& group);
BinaryGroup group_from_json(const nlohmann::json& j);

nlohmann::json state_to_json(const SpinState& state);
SpinState state_from_json(const nlohmann::json& j);

nlohmann::json subspace_to_json(const Subspace& subspace);
Subspace subspace_from_json(const nlohmann::json& j);

nlohmann::json points_to_json(const PointSet& points);
PointSet points_from_json(const nlohmann::json& j);

nlohmann::json design_report_to_json(const DesignReport& report);

nlohmann::json construction_report_to_json(const ConstructionReport& report);

/// CSV with header "x,y,z", one point per row, 17 significant digits.
std::string points_to_csv(const PointSet& points);

/// CSV with header "sx,sy,sz", one sample per row.
std::string range_to_csv(const RangeSample& sample);

/// CSV with header "family,s,candidates,dim,order", one row per report.
std::string scan_to_csv(const std::vector<ConstructionReport>& reports);

}  // namespace spinlab
