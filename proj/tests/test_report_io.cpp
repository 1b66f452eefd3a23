#include <gtest/gtest.h>

#include <json.hpp>

#include "groupcent/closeness.hpp"
#include "groupcent/harmonic.hpp"
#include "groupcent/report_io.hpp"
#include "test_support.hpp"

using namespace groupcent;
namespace t = groupcent::testing;

TEST(ReportJson, FieldsAndLabels) {
    const Graph g = parse_edge_list("10 20 2\n20 30 1\n30 40 1\n", {false, true});
    AlgoConfig cfg;
    cfg.k = 1;
    cfg.deterministic = true;
    const RunReport r = local_search_closeness(g, cfg);
    const auto j = nlohmann::json::parse(report_json(g, r));
    EXPECT_EQ(j["algorithm"], "ls-c");
    EXPECT_EQ(j["group"], nlohmann::json::array({20}));
    EXPECT_EQ(j["objectiveKind"], "closeness");
    EXPECT_EQ(j["rawFarness"], 5);
    EXPECT_DOUBLE_EQ(j["objectiveValue"].get<double>(), 0.8);
    EXPECT_EQ(j["graph"]["n"], 4);
    EXPECT_EQ(j["graph"]["weighted"], true);
    EXPECT_EQ(j["config"]["k"], 1);
    EXPECT_EQ(j["init"], "greedy");
    EXPECT_TRUE(j.contains("wallTimeMillis"));
    EXPECT_EQ(report_json(g, r).find('\n'), std::string::npos);
}

TEST(ReportJson, MismatchRefused) {
    const Graph g = t::graph_of(3, false, {{0, 1}, {1, 2}});
    AlgoConfig cfg;
    cfg.k = 1;
    RunReport r = greedy_harmonic(g, cfg);
    EXPECT_NO_THROW(verify_report(g, r));
    r.objective_value += 1e-6;
    EXPECT_THROW(report_json(g, r), std::logic_error);

    RunReport c = greedy_closeness(g, cfg);
    c.raw_farness = *c.raw_farness + 1;
    EXPECT_THROW(verify_report(g, c), std::logic_error);
}

TEST(ReportCsv, HeaderMatchesRow) {
    const Graph g = t::graph_of(3, false, {{0, 1}, {1, 2}});
    AlgoConfig cfg;
    cfg.k = 2;
    const RunReport r = greedy_harmonic(g, cfg);
    const std::string header = report_csv_header();
    const std::string row = report_csv_row(g, r);
    EXPECT_EQ(std::count(header.begin(), header.end(), ','),
              std::count(row.begin(), row.end(), ','));
    EXPECT_EQ(row.rfind("greedy-h,2,harmonic,", 0), 0u);
}

TEST(Fingerprint, ReflectsGraph) {
    const Graph g = t::graph_of(3, true, {{0, 1, 1}, {1, 2, 3}});
    const GraphFingerprint f = fingerprint(g);
    EXPECT_EQ(f.n, 3u);
    EXPECT_EQ(f.m, 2u);
    EXPECT_TRUE(f.directed);
    EXPECT_TRUE(f.weighted);
    EXPECT_EQ(f.content_hash, g.content_hash());
}
