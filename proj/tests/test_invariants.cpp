#include <cmath>
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "thetakit/errors.hpp"
#include "thetakit/families.hpp"
#include "thetakit/invariants.hpp"
#include "thetakit/structure.hpp"

using namespace thetakit;

namespace {

Graph fam(const char* spec) { return construct_family(parse_family(spec)); }

void expect_exact(const ExactOrBound& v, const Rational& expected) {
    EXPECT_TRUE(v.exact);
    EXPECT_EQ(v.value, expected);
    EXPECT_EQ(v.lower, expected);
    EXPECT_EQ(v.upper, expected);
}

TEST(Invariants, NamedGraphs) {
    const Graph p = fam("petersen");
    expect_exact(independence_number(p), 4);
    expect_exact(clique_number(p), 2);
    expect_exact(chromatic_number(p), 3);
    expect_exact(fractional_chromatic(p), Rational(5, 2));

    const Graph t = fam("tietze");
    expect_exact(independence_number(t), 5);
    expect_exact(clique_number(t), 3);
    expect_exact(chromatic_number(t), 3);
    expect_exact(fractional_chromatic(t), 3);

    const Graph grotzsch = mycielskian(fam("cycle:5"));
    expect_exact(chromatic_number(grotzsch), 4);
    expect_exact(fractional_chromatic(grotzsch), Rational(29, 10));
}

TEST(Invariants, WitnessesAreValid) {
    const Graph g = fam("kneser:7:2");
    const auto a = independence_number(g);
    ASSERT_EQ(a.witness.size(), 6U);
    for (std::size_t i = 0; i < a.witness.size(); ++i)
        for (std::size_t j = i + 1; j < a.witness.size(); ++j) EXPECT_FALSE(g.adjacent(a.witness[i], a.witness[j]));
    const auto chi = chromatic_number(g);
    ASSERT_EQ(chi.witness.size(), g.order());
    for (auto [u, v] : g.edges()) EXPECT_NE(chi.witness[u], chi.witness[v]);
}

TEST(Invariants, EdgeCases) {
    expect_exact(independence_number(Graph(0)), 0);
    expect_exact(chromatic_number(Graph(0)), 0);
    expect_exact(chromatic_number(fam("empty:5")), 1);
    expect_exact(fractional_chromatic(fam("empty:5")), 1);
    expect_exact(clique_number(fam("complete:7")), 7);
    expect_exact(chromatic_number(fam("complete:7")), 7);
}

TEST(Invariants, MatchBruteForceOnRandomGraphs) {
    std::mt19937_64 rng(41);
    for (int i = 0; i < 60; ++i) {
        const Graph g = oracle::random_graph(1 + i % 16, 0.2 + 0.01 * i, rng);
        EXPECT_EQ(independence_number(g).value, Rational(static_cast<long long>(oracle::alpha(g))));
        EXPECT_EQ(clique_number(g).value, Rational(static_cast<long long>(oracle::omega(g))));
        EXPECT_EQ(chromatic_number(g).value, Rational(static_cast<long long>(oracle::chromatic(g))));
    }
}

TEST(Invariants, CliqueStopAndBudget) {
    CliqueOptions o;
    o.stop_at = 3;
    const auto r = max_clique(fam("complete:10"), o);
    EXPECT_GE(r.witness.size(), 3U);
    EXPECT_LE(r.lower, r.upper);

    std::mt19937_64 rng(43);
    const Graph big = oracle::random_graph(400, 0.9, rng);
    const auto b = clique_number(big, Budget::milliseconds(20));
    EXPECT_LE(b.lower, b.upper);
    if (!b.exact) EXPECT_TRUE(b.budget_hit);
}

TEST(Invariants, LocalSearch) {
    const Graph g = complement(construct_family(family::HammingBand{5, 3, 5}));
    const Graph p = strong_product(g, g);
    const auto s = local_search_independent_set(p, 16, Budget::milliseconds(20000));
    EXPECT_GE(s.size(), 16U);
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j) EXPECT_FALSE(p.adjacent(s[i], s[j]));
}

TEST(Invariants, MaximalIndependentSetsMatchSubsetScan) {
    std::mt19937_64 rng(47);
    for (int i = 0; i < 20; ++i) {
        const Graph g = oracle::random_graph(1 + i % 11, 0.4, rng);
        const std::size_t n = g.order();
        std::size_t brute = 0;
        for (std::uint32_t s = 0; s < (1U << n); ++s) {
            bool independent = true, maximal = true;
            for (auto [u, v] : g.edges()) independent = independent && !(((s >> u) & 1U) && ((s >> v) & 1U));
            if (!independent) continue;
            for (std::size_t v = 0; v < n && maximal; ++v) {
                if ((s >> v) & 1U) continue;
                bool blocked = false;
                for (std::size_t u = 0; u < n; ++u) blocked = blocked || (((s >> u) & 1U) && g.adjacent(u, v));
                maximal = blocked;
            }
            brute += maximal;
        }
        EXPECT_EQ(maximal_independent_sets(g).size(), brute);
    }
    EXPECT_THROW(maximal_independent_sets(Graph(31)), SizeRefusal);
}

TEST(Invariants, FractionalChromaticVertexTransitive) {
    // chi_f = n / alpha on vertex-transitive graphs.
    expect_exact(fractional_chromatic(fam("cycle:5")), Rational(5, 2));
    expect_exact(fractional_chromatic(fam("cycle:7")), Rational(7, 3));
    expect_exact(fractional_chromatic(fam("kneser:6:2")), 3);
    expect_exact(fractional_chromatic(fam("paley:13")), Rational(13, 3));
    expect_exact(fractional_chromatic(fam("shrikhande")), 4);
}

TEST(Permanent, AgainstPermutationSum) {
    std::mt19937_64 rng(53);
    std::bernoulli_distribution coin(0.6);
    for (std::size_t side = 1; side <= 8; ++side) {
        std::vector<std::uint8_t> m(side * side);
        for (auto& x : m) x = coin(rng);
        EXPECT_EQ(permanent(m, side), oracle::permanent(m, side));
    }
    std::vector<std::uint8_t> ones(100, 1);
    EXPECT_EQ(permanent(ones, 10), 3628800);
    EXPECT_EQ(adjacency_permanent(fam("cycle:5")), 2);
    EXPECT_EQ(adjacency_permanent(fam("cycle:4")), 4);
    EXPECT_EQ(adjacency_permanent(fam("complete:6")), 265);
    EXPECT_EQ(permanent({}, 0), 1);
    std::vector<std::uint8_t> huge(29 * 29, 1);
    EXPECT_THROW(permanent(huge, 29), SizeRefusal);
}

TEST(Permanent, LargeAllOnesStaysExact) {
    // 20! does not fit in 64 bits.
    std::vector<std::uint8_t> ones(400, 1);
    BigInt f = 1;
    for (int i = 2; i <= 20; ++i) f *= i;
    EXPECT_EQ(permanent(ones, 20), f);
}

TEST(Capacity, Pentagon) {
    const auto r = capacity_report(fam("cycle:5"), 2);
    ASSERT_EQ(r.rows.size(), 2U);
    EXPECT_EQ(r.rows[0].alpha.value, 2);
    EXPECT_EQ(r.rows[1].alpha.value, 5);
    EXPECT_NEAR(r.lower, std::sqrt(5.0), 1e-9);
    EXPECT_NEAR(r.upper, std::sqrt(5.0), 1e-3);
    EXPECT_EQ(r.witness_k, 2U);
    EXPECT_TRUE(r.self_complementary);
    EXPECT_TRUE(r.self_complementary_upper.has_value());
}

TEST(SplitJoin, PetersenWithItself) {
    const Graph p = fam("petersen");
    const NsNnsReport r = ns_nns_invariant_report(p, p, Budget::milliseconds(60000));
    EXPECT_TRUE(r.complete);
    EXPECT_TRUE(r.all_hold());
    ASSERT_TRUE(r.per_g1.has_value());
    EXPECT_GT(*r.per_g1, 0);
    EXPECT_TRUE(r.alpha_equals_theta_g2);
    EXPECT_FALSE(r.rows.empty());
}

TEST(SplitJoin, CliqueAndChromaticAdd) {
    for (SplitJoinKind kind : {SplitJoinKind::NS, SplitJoinKind::NNS}) {
        const Graph g1 = fam("cycle:5"), g2 = fam("complete:3");
        const Graph s = split_join(kind, g1, g2);
        EXPECT_EQ(s.order(), 2 * g1.order() + g2.order());
        EXPECT_EQ(oracle::omega(s), oracle::omega(g1) + oracle::omega(g2));
        EXPECT_EQ(oracle::chromatic(s), oracle::chromatic(g1) + oracle::chromatic(g2));
    }
}

TEST(Bounds, ShearerRecurrence) {
    EXPECT_EQ(shearer_f(0), 1);
    EXPECT_EQ(shearer_f(1), Rational(1, 2));
    EXPECT_EQ(shearer_f(2), Rational(2, 5));
    EXPECT_EQ(shearer_f(3), Rational(17, 50));
    for (std::size_t k = 1; k < 30; ++k) EXPECT_LT(shearer_f(k), shearer_f(k - 1));
}

TEST(Bounds, PirotSereni) {
    const auto ps = pirot_sereni_bound(3);
    EXPECT_GT(ps.value, 1);
    EXPECT_LT(ps.value, 4);
    EXPECT_GE(ps.k, 1U);
    EXPECT_GT(ps.lambda, 0);
    EXPECT_LE(pirot_sereni_bound(3, 64).value, pirot_sereni_bound(3, 1).value);
}

TEST(Bounds, NumericAnchors) {
    const BoundReport h = bound_library(fam("hanoi3:3"));
    EXPECT_NEAR(h.find("galtman_chi_v")->value, 2.4677, 1e-4);
    EXPECT_NEAR(h.find("guo_sapiro_chi_f")->value, 2.4334, 1e-4);
    const BoundReport w = bound_library(fam("windmill:5:8"));
    EXPECT_NEAR(w.find("galtman_chi_v")->value, 2.6893, 1e-4);
    EXPECT_NEAR(w.find("guo_sapiro_chi_f")->value, 3.7259, 1e-4);
    const BoundReport p = bound_library(fam("petersen"));
    EXPECT_NEAR(p.find("inertial_chi_f")->value, 2.5, 1e-9);
    EXPECT_EQ(p.find("shearer_alpha")->detail, "17/5");
}

TEST(Bounds, PreconditionsAreReported) {
    const BoundReport r = bound_library(fam("complete:4"));
    const BoundEntry* s = r.find("shearer_alpha");
    ASSERT_NE(s, nullptr);
    EXPECT_FALSE(s->applicable);
    EXPECT_FALSE(s->detail.empty());
    EXPECT_EQ(r.find("no_such_bound"), nullptr);
    EXPECT_EQ(r.find("alpha_from_theta"), nullptr);
    EXPECT_NE(bound_library(fam("complete:4"), ThetaPair{1, 4}).find("alpha_from_theta"), nullptr);
}

TEST(MaxCut, AgainstExhaustiveSearch) {
    const MaxCut p = max_cut_exact(fam("petersen"), 2.5);
    EXPECT_EQ(p.value, 12U);
    EXPECT_DOUBLE_EQ(p.surplus, 4.5);
    ASSERT_TRUE(p.surplus_bound.has_value());
    EXPECT_NEAR(*p.surplus_bound, 15 / (std::numbers::pi * 1.5), 1e-9);
    EXPECT_EQ(p.surplus_bound_holds, true);
    std::mt19937_64 rng(59);
    for (int i = 0; i < 15; ++i) {
        const Graph g = oracle::random_graph(2 + i, 0.5, rng);
        const MaxCut c = max_cut_exact(g);
        EXPECT_EQ(c.value, oracle::max_cut(g));
        std::size_t crossing = 0;
        std::vector<bool> side(g.order(), false);
        for (auto v : c.side) side[v] = true;
        for (auto [u, v] : g.edges()) crossing += side[u] != side[v];
        EXPECT_EQ(crossing, c.value);
    }
    EXPECT_THROW(max_cut_exact(Graph(25)), SizeRefusal);
}

TEST(Invariants, Json) {
    const auto j = to_json(independence_number(fam("petersen")));
    EXPECT_EQ(j["value"], "4");
    EXPECT_EQ(j["exact"], true);
    const auto b = to_json(bound_library(fam("petersen")));
    EXPECT_TRUE(b.is_object() || b.is_array());
}

}  // namespace
