/*
 * report_io.cpp
 */

#include "groupcent/report_io.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace groupcent {

GraphFingerprint fingerprint(const Graph &g) {
    return {g.num_vertices(), g.num_edges(), g.is_directed(), !g.has_unit_weights(),
            g.content_hash()};
}

void verify_report(const Graph &g, const RunReport &report) {
    if (report.objective == ObjectiveKind::harmonic) {
        const double fresh = group_harmonic(g, report.group).value;
        const double tol = 1e-12 * std::max(1.0, std::abs(fresh));
        if (std::abs(fresh - report.objective_value) > tol)
            throw std::logic_error("reported harmonic value does not match the group");
        return;
    }
    const std::uint64_t raw = group_farness_raw(g, report.group);
    if (!report.raw_farness || *report.raw_farness != raw)
        throw std::logic_error("reported raw farness does not match the group");
    const double fresh = report.objective == ObjectiveKind::closeness
                             ? closeness_from_raw(g.num_vertices(), raw)
                             : farness_from_raw(g.num_vertices(), raw);
    if (fresh != report.objective_value)
        throw std::logic_error("reported objective does not match the raw farness");
}

namespace {

std::string hex(std::uint64_t x) {
    char buf[24];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(x));
    return buf;
}

} // namespace

std::string report_json(const Graph &g, const RunReport &report) {
    verify_report(g, report);
    using nlohmann::ordered_json;
    ordered_json j;
    j["algorithm"] = report.algorithm;
    ordered_json group = ordered_json::array();
    for (Vertex v : report.group)
        group.push_back(g.label(v));
    j["group"] = group;
    j["objectiveKind"] = objective_name(report.objective);
    j["objectiveValue"] = report.objective_value;
    if (report.raw_farness)
        j["rawFarness"] = *report.raw_farness;
    j["iterations"] = report.iterations;
    j["swapsCommitted"] = report.swaps_committed;
    j["candidatesEvaluated"] = report.candidates_evaluated;
    j["traversalsPruned"] = report.traversals_pruned;
    j["wallTimeMillis"] = report.wall_time_ms;
    if (!report.init.empty())
        j["init"] = report.init;
    if (!report.swaps.empty()) {
        ordered_json swaps = ordered_json::array();
        for (const SwapRecord &s : report.swaps)
            swaps.push_back({g.label(s.removed), g.label(s.added)});
        j["swaps"] = swaps;
    }
    const AlgoConfig &c = report.config;
    j["config"] = {{"k", c.k},
                   {"eps", c.eps},
                   {"p", c.p},
                   {"trials", c.trials},
                   {"seed", c.seed},
                   {"workers", c.workers},
                   {"deterministic", c.deterministic},
                   {"pruning", c.pruning}};
    const GraphFingerprint f = fingerprint(g);
    j["graph"] = {{"n", f.n},
                  {"m", f.m},
                  {"directed", f.directed},
                  {"weighted", f.weighted},
                  {"contentHash", hex(f.content_hash)}};
    return j.dump();
}

std::string report_csv_header() {
    return "algorithm,k,objective_kind,objective_value,raw_farness,iterations,swaps_committed,"
           "candidates_evaluated,traversals_pruned,wall_time_ms,n,m,directed,weighted,"
           "content_hash,group";
}

std::string report_csv_row(const Graph &g, const RunReport &report) {
    verify_report(g, report);
    const GraphFingerprint f = fingerprint(g);
    std::ostringstream out;
    out.precision(17);
    out << report.algorithm << ',' << report.config.k << ',' << objective_name(report.objective)
        << ',' << report.objective_value << ',';
    if (report.raw_farness)
        out << *report.raw_farness;
    out << ',' << report.iterations << ',' << report.swaps_committed << ','
        << report.candidates_evaluated << ',' << report.traversals_pruned << ','
        << report.wall_time_ms << ',' << f.n << ',' << f.m << ',' << (f.directed ? 1 : 0) << ','
        << (f.weighted ? 1 : 0) << ',' << hex(f.content_hash) << ',';
    for (std::size_t i = 0; i < report.group.size(); ++i)
        out << (i ? " " : "") << g.label(report.group[i]);
    return out.str();
}

} // namespace groupcent
