#include <gtest/gtest.h>

#include "properties.hpp"

namespace {

void expect_clean(const props::Tally& t) {
    for (const auto& v : t.violations) ADD_FAILURE() << props::describe(v);
}

TEST(Properties, RandomGraphs) {
    const props::Tally t = props::random_graph_suite(500, 12, 20240601);
    EXPECT_EQ(t.graphs, 500U);
    expect_clean(t);
}

TEST(Properties, NamedGraphs) { expect_clean(props::named_graph_suite()); }

TEST(Properties, TriangleFree) {
    const auto s = props::triangle_free_suite(100, 40, 20, 7);
    EXPECT_EQ(s.tally.graphs, 100U);
    EXPECT_GT(s.alpha_checked, 20U);
    EXPECT_GE(s.min_theta_margin, -1e-3);
    expect_clean(s.tally);
}

}  // namespace
