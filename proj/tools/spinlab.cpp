// Command-line front end: construct, certify, scan, convert, and sample.
//
// Exit codes: 0 success, 2 validation error (bad flags, unparseable input,
// unsupported family), 3 certification failure (a demanded order or the
// family's expected order was not certified).

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "spinlab/construction.hpp"
#include "spinlab/designs.hpp"
#include "spinlab/joint_range.hpp"
#include "spinlab/serialization.hpp"

namespace {

constexpr int kExitValidation = 2;
constexpr int kExitCertification = 3;

struct ValidationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct CertificationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

spinlab::SpinQuantum parse_spin_or_fail(const std::string& text) {
    const auto spin = spinlab::parse_spin(text);
    if (!spin.has_value()) {
        throw ValidationError("cannot parse spin '" + text + "'; expected forms: 6 or 13/2");
    }
    return *spin;
}

spinlab::GroupFamily parse_family_or_fail(const std::string& name, std::optional<int> n) {
    const auto family = spinlab::family_from_name(name, n);
    if (!family.has_value()) {
        throw ValidationError("unsupported family '" + name +
                              "' (a parameterized family needs --n >= 2)");
    }
    return *family;
}

// Flag value if given, else SPINLAB_TOL, else the built-in default.
double resolve_tol(const std::optional<double>& flag, double fallback) {
    if (flag.has_value()) return *flag;
    if (const char* env = std::getenv("SPINLAB_TOL")) {
        try {
            return std::stod(env);
        } catch (const std::exception&) {
            throw ValidationError("SPINLAB_TOL is not a number: '" + std::string(env) + "'");
        }
    }
    return fallback;
}

nlohmann::json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw ValidationError("cannot open '" + path + "'");
    }
    return nlohmann::json::parse(in);
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) {
        throw ValidationError("cannot write '" + path + "'");
    }
    out << content;
}

int run_build(const std::string& family_name, std::optional<int> n, const std::string& spin_text,
              const std::string& out_path, const std::optional<double>& tol_flag) {
    const auto family = parse_family_or_fail(family_name, n);
    const auto spin = parse_spin_or_fail(spin_text);
    const double rank_tol = resolve_tol(tol_flag, spinlab::kRankTol);

    const auto report = spinlab::build_anticoherent_subspace(family, spin, rank_tol);
    write_file(out_path, spinlab::construction_report_to_json(report).dump(2) + "\n");

    std::cout << "family=" << spinlab::family_name(report.family)
              << " s=" << spinlab::format_spin(report.s)
              << " candidates=" << report.candidates.size() << " dim=" << report.dim
              << " order=" << report.certified_order << "\n";

    if (report.dim >= 1 && report.certified_order < report.expected_order) {
        throw CertificationError("certified order " + std::to_string(report.certified_order) +
                                 " is below the family's expected order " +
                                 std::to_string(report.expected_order));
    }
    return 0;
}

int run_check(const std::string& path, int t_max, const std::optional<double>& tol_flag,
              std::optional<int> require) {
    const double tol = resolve_tol(tol_flag, spinlab::kCertificationTol);
    const nlohmann::json input = load_json(path);

    nlohmann::json payload;
    int order = 0;
    if (input.contains("amps")) {
        const spinlab::SpinState state = spinlab::normalized(spinlab::state_from_json(input));
        order = spinlab::anticoherence_order(state, t_max, tol);

        nlohmann::json residuals = nlohmann::json::object();
        for (int t = 1; t <= t_max; ++t) {
            residuals[std::to_string(t)] = spinlab::state_residual(state, t);
        }
        const spinlab::PointSet points = spinlab::majorana_points(state);
        const spinlab::DesignReport design =
            spinlab::design_order(points, std::max(1, t_max), 1e-8);

        payload = {{"kind", "state"},
                   {"certified_order", order},
                   {"residuals", residuals},
                   {"majorana_points", spinlab::points_to_json(points).at("points")},
                   {"design", spinlab::design_report_to_json(design)}};
    } else {
        nlohmann::json subspace_json = input;
        if (input.contains("subspace")) {
            if (input.at("subspace").is_null()) {
                throw ValidationError("report has no subspace to check (dim 0)");
            }
            subspace_json = input.at("subspace");
        }
        if (!subspace_json.contains("basis")) {
            throw ValidationError("input is neither a state, a subspace, nor a report");
        }
        spinlab::Subspace subspace = spinlab::subspace_from_json(subspace_json);
        order = spinlab::subspace_order(subspace, t_max, tol);

        nlohmann::json residuals = nlohmann::json::object();
        for (const auto& [t, r] : spinlab::residual_profile(subspace, t_max)) {
            residuals[std::to_string(t)] = r;
        }
        payload = {{"kind", "subspace"},
                   {"dim", subspace.dim()},
                   {"certified_order", order},
                   {"residuals", residuals}};
    }

    std::cout << payload.dump(2) << "\n";
    if (require.has_value() && order < *require) {
        throw CertificationError("certified order " + std::to_string(order) +
                                 " is below the required order " + std::to_string(*require));
    }
    return 0;
}

int run_scan(const std::string& family_name, std::optional<int> n, const std::string& spin_min,
             const std::string& spin_max, const std::string& csv_path) {
    const auto family = parse_family_or_fail(family_name, n);
    const auto lo = parse_spin_or_fail(spin_min);
    const auto hi = parse_spin_or_fail(spin_max);
    if (hi < lo) {
        throw ValidationError("empty scan range: " + spin_min + " .. " + spin_max);
    }

    const auto reports = spinlab::scan_dimensions(family, lo, hi);
    write_file(csv_path, spinlab::scan_to_csv(reports));

    std::string nontrivial;
    int count = 0;
    for (const auto& report : reports) {
        if (report.dim >= 2) {
            if (!nontrivial.empty()) nontrivial += ",";
            nontrivial += spinlab::format_spin(report.s);
            ++count;
        }
    }
    std::cout << "nontrivial=" << nontrivial << " count=" << count << "\n";
    return 0;
}

int run_majorana(const std::optional<std::string>& state_path,
                 const std::optional<std::string>& points_path, const std::string& out_path,
                 const std::optional<std::string>& csv_path,
                 const std::optional<std::string>& spin_text) {
    if (state_path.has_value() == points_path.has_value()) {
        throw ValidationError("pass exactly one of --state or --points");
    }

    if (state_path.has_value()) {
        const spinlab::SpinState state =
            spinlab::normalized(spinlab::state_from_json(load_json(*state_path)));
        const spinlab::PointSet points = spinlab::majorana_points(state);
        write_file(out_path, spinlab::points_to_json(points).dump(2) + "\n");
        if (csv_path.has_value()) {
            write_file(*csv_path, spinlab::points_to_csv(points));
        }
        std::cout << "points=" << points.size() << "\n";
        return 0;
    }

    const spinlab::PointSet points = spinlab::points_from_json(load_json(*points_path));
    if (points.size() == 0) {
        throw ValidationError("point set is empty");
    }
    if (spin_text.has_value()) {
        const auto spin = parse_spin_or_fail(*spin_text);
        if (spin.doubled != points.size()) {
            throw ValidationError("point count " + std::to_string(points.size()) +
                                  " does not equal 2s = " + std::to_string(spin.doubled));
        }
    }
    const spinlab::SpinState state = spinlab::state_from_points(points);
    write_file(out_path, spinlab::state_to_json(state).dump(2) + "\n");
    std::cout << "doubled_spin=" << state.s.doubled << "\n";
    return 0;
}

int run_range(const std::string& spin_text, int count, std::uint64_t seed,
              const std::string& csv_path) {
    const auto spin = parse_spin_or_fail(spin_text);
    if (count < 1) {
        throw ValidationError("--count must be at least 1");
    }
    const spinlab::RangeSample sample = spinlab::sample_joint_range(spin, count, seed);
    write_file(csv_path, spinlab::range_to_csv(sample));
    std::cout << "max_norm=" << sample.points.rowwise().norm().maxCoeff() << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Anticoherent subspaces from Klein invariants: construction, certification, "
                 "Majorana conversion, and numerical-range sampling"};
    app.require_subcommand(1);

    std::string family, spin, spin_min, spin_max, out_path, csv_path, input_path;
    std::optional<int> n;
    std::optional<double> tol;
    std::optional<int> require;
    std::optional<std::string> state_path, points_path, csv_opt, spin_opt;
    int t_max = 6;
    int count = 1000;
    std::uint64_t seed = 0;

    auto* build = app.add_subcommand("build", "Construct and certify an anticoherent subspace");
    build->add_option("--family", family, "cyclic|dihedral|tetrahedral|octahedral|icosahedral")
        ->required();
    build->add_option("--n", n, "parameter for cyclic/dihedral families");
    build->add_option("--spin", spin, "spin as 6 or 13/2")->required();
    build->add_option("--out", out_path, "output path for the construction report JSON")
        ->required();
    build->add_option("--tol", tol, "rank tolerance (default 1e-9, or SPINLAB_TOL)");

    auto* check = app.add_subcommand("check", "Certify a state/subspace/report JSON file");
    check->add_option("input", input_path, "state, subspace, or construction report JSON")
        ->required();
    check->add_option("--t-max", t_max, "largest moment order to test (default 6)");
    check->add_option("--tol", tol, "certification tolerance (default 1e-10, or SPINLAB_TOL)");
    check->add_option("--require", require, "fail (exit 3) unless this order certifies");

    auto* scan = app.add_subcommand("scan", "Tabulate subspace dimensions over a spin range");
    scan->add_option("--family", family, "group family")->required();
    scan->add_option("--n", n, "parameter for cyclic/dihedral families");
    scan->add_option("--spin-min", spin_min, "lower end of the range")->required();
    scan->add_option("--spin-max", spin_max, "upper end of the range")->required();
    scan->add_option("--csv", csv_path, "output CSV path")->required();

    auto* majorana = app.add_subcommand("majorana", "Convert state to points or points to state");
    majorana->add_option("--state", state_path, "state JSON input (emits points)");
    majorana->add_option("--points", points_path, "points JSON input (emits a state)");
    majorana->add_option("--out", out_path, "output JSON path")->required();
    majorana->add_option("--csv", csv_opt, "also write points as CSV (state input only)");
    majorana->add_option("--spin", spin_opt, "validate the point count against 2s");

    auto* range = app.add_subcommand("range", "Sample the joint numerical range of (Sx,Sy,Sz)");
    range->add_option("--spin", spin, "spin as 6 or 13/2")->required();
    range->add_option("--count", count, "number of Haar samples (default 1000)");
    range->add_option("--seed", seed, "RNG seed (default 0)");
    range->add_option("--csv", csv_path, "output CSV path")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitValidation;
    }

    try {
        if (build->parsed()) return run_build(family, n, spin, out_path, tol);
        if (check->parsed()) return run_check(input_path, t_max, tol, require);
        if (scan->parsed()) return run_scan(family, n, spin_min, spin_max, csv_path);
        if (majorana->parsed()) {
            return run_majorana(state_path, points_path, out_path, csv_opt, spin_opt);
        }
        if (range->parsed()) return run_range(spin, count, seed, csv_path);
    } catch (const CertificationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCertification;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    }
    return kExitValidation;
}
