/*
 * report_io.hpp
 *
 * JSON and CSV rendering of run reports. Every emit first recomputes the
 * objective from the reported group and refuses to print a mismatch.
 */

#pragma once

#include <string>
#include <vector>

#include "groupcent/report.hpp"

namespace groupcent {

struct GraphFingerprint {
    Vertex n = 0;
    std::uint64_t m = 0;
    bool directed = false;
    bool weighted = false;
    std::uint64_t content_hash = 0;
};

GraphFingerprint fingerprint(const Graph &g);

/// Throws std::logic_error when report.objective_value (or raw_farness) does
/// not match a recomputation on report.group: 1e-12 relative for values,
/// exact for raw farness.
void verify_report(const Graph &g, const RunReport &report);

/// Single-line JSON object. Vertices are printed as their labels.
std::string report_json(const Graph &g, const RunReport &report);

std::string report_csv_header();
std::string report_csv_row(const Graph &g, const RunReport &report);

} // namespace groupcent
