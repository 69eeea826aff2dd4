#include "spinlab/construction.hpp"

#include <algorithm>
#include <atomic>
#include <string>
#include <thread>

#include "spinlab/majorana.hpp"

namespace spinlab {

std::vector<DegreeSolution> degree_solutions(const std::array<int, 3>& degrees, int target) {
    const auto [d1, d2, d3] = degrees;
    if (d1 <= 0 || d2 <= 0 || d3 <= 0) {
        throw DegreeMismatch("invariant degrees must be positive");
    }
    std::vector<DegreeSolution> solutions;
    for (int u = 0; u * d1 <= target; ++u) {
        for (int v = 0; u * d1 + v * d2 <= target; ++v) {
            const int rest = target - u * d1 - v * d2;
            if (rest % d3 == 0) {
                solutions.push_back({u, v, rest / d3});
            }
        }
    }
    return solutions;
}

std::vector<Candidate> candidate_polynomials(const GroupFamily& family, SpinQuantum s) {
    const KleinTriple triple = klein_generators(family);
    const std::array<int, 3> degrees = klein_degrees(family);

    std::vector<Candidate> candidates;
    for (const DegreeSolution& sol : degree_solutions(degrees, s.doubled)) {
        Candidate c;
        c.exponents = sol;
        c.poly = hpoly_pow(triple.h1, sol.u) * hpoly_pow(triple.h2, sol.v) *
                 hpoly_pow(triple.h3, sol.w);
        candidates.push_back(std::move(c));
    }
    return candidates;
}

ConstructionReport build_anticoherent_subspace(const GroupFamily& family, SpinQuantum s,
                                               double rank_tol, double cert_tol,
                                               int order_margin) {
    ConstructionReport report;
    report.family = family;
    report.s = s;
    report.expected_order = expected_anticoherence_order(family);
    report.candidates = candidate_polynomials(family, s);
    for (const Candidate& c : report.candidates) report.solutions.push_back(c.exponents);

    std::vector<SpinState> states;
    states.reserve(report.candidates.size());
    for (const Candidate& c : report.candidates) {
        states.push_back(state_from_homogeneous(c.poly));
    }

    SpanResult span = span_subspace(s, states, rank_tol);
    report.singular_values = span.singular_values;
    report.dim = span.subspace.dim();
    if (report.dim == 0) {
        return report;
    }

    const int t_max = report.expected_order + order_margin;
    report.residuals = residual_profile(span.subspace, t_max);
    int certified = 0;
    for (int t = 1; t <= t_max; ++t) {
        if (report.residuals.at(t) > cert_tol) break;
        certified = t;
    }
    report.certified_order = certified;
    span.subspace.certified_order = certified;
    report.subspace = std::move(span.subspace);
    return report;
}

std::vector<ConstructionReport> scan_dimensions(const GroupFamily& family, SpinQuantum s_min,
                                                SpinQuantum s_max, double rank_tol,
                                                double cert_tol) {
    if (s_max < s_min) {
        throw DimensionMismatch("scan range is empty: 2s from " + std::to_string(s_min.doubled) +
                                " down to " + std::to_string(s_max.doubled));
    }
    const int count = s_max.doubled - s_min.doubled + 1;
    std::vector<ConstructionReport> reports(static_cast<std::size_t>(count));

    std::atomic<int> cursor{0};
    auto worker = [&] {
        for (;;) {
            const int i = cursor.fetch_add(1);
            if (i >= count) return;
            reports[static_cast<std::size_t>(i)] = build_anticoherent_subspace(
                family, SpinQuantum{s_min.doubled + i}, rank_tol, cert_tol, /*order_margin=*/0);
        }
    };

    const unsigned hardware = std::max(1u, std::thread::hardware_concurrency());
    const unsigned threads = std::min<unsigned>(hardware, static_cast<unsigned>(count));
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(threads);
        for (unsigned i = 0; i < threads; ++i) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    return reports;
}

}  // namespace spinlab
