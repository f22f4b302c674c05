#include <cstdlib>
#include <fstream>

#include <gtest/gtest.h>

#include "graph_source.hpp"
#include "suites.hpp"

using namespace thetakit::cli;

namespace {

TEST(Suites, NamesRoundTrip) {
    for (SuiteId id : kAllSuites) EXPECT_EQ(parse_suite(to_string(id)), id);
    EXPECT_FALSE(parse_suite("no-such-suite").has_value());
}

TEST(Suites, OptionsFromJson) {
    const auto o = suite_options_from_json({{"tol", 1e-4}, {"k_max", 2}});
    EXPECT_DOUBLE_EQ(o.tol, 1e-4);
    EXPECT_EQ(o.k_max, 2U);
    EXPECT_EQ(o.n_max, SuiteOptions{}.n_max);
    EXPECT_ANY_THROW(suite_options_from_json({{"tolerance", 1}}));
    EXPECT_ANY_THROW(suite_options_from_json(nlohmann::json::array()));
}

TEST(Suites, SrgNamedPasses) {
    const SuiteReport r = run_suite(SuiteId::srg_named, {});
    EXPECT_TRUE(r.passed());
    EXPECT_FALSE(r.rows.empty());
    const auto j = to_json(r);
    EXPECT_EQ(j["suite"], "srg-named");
    EXPECT_EQ(j["passed"], true);
    EXPECT_EQ(j["rows"].size(), r.rows.size());
}

TEST(Suites, ChangPasses) {
    const SuiteReport r = run_suite(SuiteId::chang, {});
    for (const auto& row : r.rows) EXPECT_EQ(row.status, RowStatus::pass) << row.item << " " << row.quantity;
}

TEST(Suites, CsvQuotesFields) {
    SuiteReport r;
    r.suite = "x";
    r.rows.push_back({"a,b", "say \"hi\"", "1", "1", 0, RowStatus::pass});
    const std::string csv = to_csv(r);
    EXPECT_NE(csv.find("\"a,b\""), std::string::npos);
    EXPECT_NE(csv.find("\"say \"\"hi\"\"\""), std::string::npos);
}

TEST(GraphSource, Errors) {
    EXPECT_THROW(load_graph({}), UsageError);
    EXPECT_THROW(load_graph({"petersen", "IheA@GUAo", std::nullopt}), UsageError);
    EXPECT_THROW(load_graph({std::nullopt, std::nullopt, "/nonexistent/edges.txt"}), UsageError);
}

TEST(GraphSource, Loads) {
    EXPECT_EQ(load_graph({"petersen", std::nullopt, std::nullopt}).graph.order(), 10U);
    EXPECT_EQ(load_graph({std::nullopt, "C~", std::nullopt}).graph.size(), 6U);
    const std::string path = ::testing::TempDir() + "thetakit_edges.txt";
    {
        std::ofstream f(path);
        f << "0 1\n1 2\n";
    }
    const auto g = load_graph({std::nullopt, std::nullopt, path}).graph;
    EXPECT_EQ(g.order(), 3U);
    EXPECT_EQ(g.size(), 2U);
}

TEST(ThreadCap, ParsesEnvironment) {
    ::unsetenv("THETA_TOOLKIT_THREADS");
    EXPECT_EQ(thread_cap(), 1U);
    ::setenv("THETA_TOOLKIT_THREADS", "4", 1);
    EXPECT_EQ(thread_cap(), 4U);
    ::setenv("THETA_TOOLKIT_THREADS", "0", 1);
    EXPECT_THROW(thread_cap(), UsageError);
    ::setenv("THETA_TOOLKIT_THREADS", "many", 1);
    EXPECT_THROW(thread_cap(), UsageError);
    ::unsetenv("THETA_TOOLKIT_THREADS");
}

}  // namespace
