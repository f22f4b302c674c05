#include <random>
#include <sstream>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "thetakit/errors.hpp"
#include "thetakit/families.hpp"
#include "thetakit/graph_io.hpp"
#include "thetakit/invariants.hpp"
#include "thetakit/isomorphism.hpp"
#include "thetakit/structure.hpp"

using namespace thetakit;

namespace {

Graph fam(const char* spec) { return construct_family(parse_family(spec)); }

std::size_t binom(std::size_t n, std::size_t k) {
    std::size_t r = 1;
    for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

TEST(Graph, EdgeListConstructor) {
    const std::vector<Edge> e{{0, 1}, {1, 2}, {1, 0}};
    const Graph g(4, e);
    EXPECT_EQ(g.order(), 4U);
    EXPECT_EQ(g.size(), 2U);
    EXPECT_TRUE(g.adjacent(1, 0));
    EXPECT_FALSE(g.adjacent(0, 2));
    EXPECT_EQ(g.degree(1), 2U);
    EXPECT_EQ(g.edges(), (std::vector<Edge>{{0, 1}, {1, 2}}));
    const std::vector<Edge> loop{{2, 2}};
    EXPECT_THROW(Graph(3, loop), ParameterError);
    const std::vector<Edge> out{{0, 3}};
    EXPECT_THROW(Graph(3, out), ParameterError);
}

TEST(Graph, ComplementIsAnInvolution) {
    std::mt19937_64 rng(3);
    for (int i = 0; i < 20; ++i) {
        const Graph g = oracle::random_graph(1 + i % 13, 0.4, rng);
        const Graph c = complement(g);
        const std::size_t n = g.order();
        EXPECT_EQ(c.size() + g.size(), n * (n - 1) / 2);
        EXPECT_EQ(complement(c).edges(), g.edges());
    }
}

TEST(Graph, ProductAndCompositionCounts) {
    std::mt19937_64 rng(5);
    for (int i = 0; i < 10; ++i) {
        const Graph g = oracle::random_graph(2 + i % 5, 0.5, rng), h = oracle::random_graph(3 + i % 4, 0.5, rng);
        const std::size_t ng = g.order(), nh = h.order(), mg = g.size(), mh = h.size();
        const Graph p = strong_product(g, h);
        EXPECT_EQ(p.order(), ng * nh);
        EXPECT_EQ(p.size(), ng * mh + nh * mg + 2 * mg * mh);
        EXPECT_EQ(disjoint_union(g, h).size(), mg + mh);
        EXPECT_EQ(join(g, h).size(), mg + mh + ng * nh);
    }
}

TEST(Graph, LineGraphAndMycielskian) {
    const Graph l = line_graph(fam("complete:4"));
    EXPECT_EQ(l.order(), 6U);
    EXPECT_EQ(l.size(), 12U);
    const Graph grotzsch = mycielskian(fam("cycle:5"));
    EXPECT_EQ(grotzsch.order(), 11U);
    EXPECT_EQ(grotzsch.size(), 20U);
    EXPECT_TRUE(structure_report(grotzsch).triangle_free);
    EXPECT_EQ(oracle::chromatic(grotzsch), 4U);
}

TEST(Graph, SeidelSwitchIsAnInvolution) {
    const Graph g = fam("petersen");
    VertexSet s(10);
    s.set(0);
    s.set(3);
    s.set(7);
    const Graph once = seidel_switch(g, s);
    EXPECT_NE(once.edges(), g.edges());
    EXPECT_EQ(seidel_switch(once, s).edges(), g.edges());
    EXPECT_EQ(seidel_switch(g, VertexSet(10)).edges(), g.edges());
}

TEST(Graph, InducedSubgraph) {
    const Graph g = fam("petersen");
    const std::vector<std::size_t> outer{0, 1, 2, 3, 4};
    const Graph h = induced_subgraph(g, outer);
    EXPECT_EQ(h.order(), 5U);
    EXPECT_LE(h.size(), 5U);
}

TEST(Families, Counts) {
    EXPECT_EQ(fam("complete:6").size(), 15U);
    EXPECT_EQ(fam("empty:6").size(), 0U);
    EXPECT_EQ(fam("cycle:9").size(), 9U);
    EXPECT_EQ(fam("path:9").size(), 8U);
    EXPECT_EQ(fam("star:5").size(), 5U);
    EXPECT_EQ(fam("multipartite:2:3:4").size(), 2U * 3 + 2 * 4 + 3 * 4);
    EXPECT_EQ(fam("tietze").order(), 12U);
    EXPECT_EQ(fam("tietze").size(), 18U);
    EXPECT_EQ(fam("hanoi3:3").order(), 27U);
    EXPECT_EQ(fam("windmill:4:5").order(), 16U);
    for (auto [n, k] : {std::pair<std::size_t, std::size_t>{5, 2}, {7, 3}, {8, 3}}) {
        const Graph g = construct_family(family::Kneser{n, k});
        EXPECT_EQ(g.order(), binom(n, k));
        EXPECT_EQ(g.degree(0), binom(n - k, k));
    }
    const Graph h = construct_family(family::HammingBand{6, 2, 4});
    EXPECT_EQ(h.order(), 64U);
    EXPECT_EQ(h.degree(0), binom(6, 2) + binom(6, 3) + binom(6, 4));
}

TEST(Families, StronglyRegularMembers) {
    EXPECT_EQ(classify_srg(fam("petersen")), (SrgParams{10, 3, 0, 1}));
    EXPECT_EQ(classify_srg(fam("shrikhande")), (SrgParams{16, 6, 2, 2}));
    EXPECT_EQ(classify_srg(fam("paley:13")), (SrgParams{13, 6, 2, 3}));
    EXPECT_EQ(classify_srg(fam("symplectic:2:2")), (SrgParams{15, 6, 1, 3}));
    for (std::size_t n = 3; n <= 7; ++n) {
        const auto nn = static_cast<std::int64_t>(n);
        EXPECT_EQ(classify_srg(construct_family(family::LatinSquare{3, n})),
                  (SrgParams{nn * nn, 3 * (nn - 1), nn, 6}));
    }
    EXPECT_FALSE(classify_srg(fam("tietze")).has_value());
}

TEST(Families, ParseRoundTrip) {
    for (const char* s : {"complete:5", "kneser:7:3", "hamming-band:5:3:5", "windmill:3:8", "hanoi3:2", "paley:17",
                          "latin-square:3:5", "symplectic:2:3", "tietze", "shrikhande", "multipartite:1:2:3"}) {
        const FamilySpec spec = parse_family(s);
        EXPECT_EQ(construct_family(parse_family(family_name(spec))).edges(), construct_family(spec).edges()) << s;
    }
    EXPECT_THROW(parse_family("nope:3"), ParameterError);
    EXPECT_THROW(parse_family("cycle"), ParameterError);
    EXPECT_THROW(parse_family("cycle:x"), ParameterError);
    EXPECT_THROW(fam("paley:7"), ParameterError);
    EXPECT_THROW(fam("kneser:3:2"), ParameterError);
}

TEST(GraphIo, KnownGraph6Strings) {
    EXPECT_EQ(encode_graph6(Graph(0)), "?");
    // Outer 5-cycle, spokes, inner pentagram; our own labelling differs.
    const Graph petersen = decode_graph6("IheA@GUAo");
    EXPECT_EQ(petersen.size(), 15U);
    EXPECT_TRUE(is_isomorphic(petersen, fam("petersen")));
    EXPECT_EQ(encode_graph6(fam("complete:4")), "C~");
    EXPECT_EQ(decode_graph6(">>graph6<<C~\n").size(), 6U);
}

TEST(GraphIo, Graph6RoundTrip) {
    std::mt19937_64 rng(11);
    for (std::size_t n : {0, 1, 2, 7, 30, 62, 63, 64, 100}) {
        const Graph g = oracle::random_graph(n, 0.3, rng);
        const Graph back = decode_graph6(encode_graph6(g));
        EXPECT_EQ(back.order(), n);
        EXPECT_EQ(back.edges(), g.edges());
    }
}

TEST(GraphIo, Graph6Errors) {
    EXPECT_THROW(decode_graph6("C"), ParseError);
    EXPECT_THROW(decode_graph6("C~~"), ParseError);
    EXPECT_THROW(decode_graph6("C\x01"), ParseError);
}

TEST(GraphIo, EdgeListRoundTrip) {
    const Graph g = fam("petersen");
    std::stringstream ss;
    write_edge_list(ss, g);
    EXPECT_EQ(read_edge_list(ss).edges(), g.edges());

    std::istringstream with_count("# n = 6\n0 1\n# comment\n2 3\n");
    const Graph h = read_edge_list(with_count);
    EXPECT_EQ(h.order(), 6U);
    EXPECT_EQ(h.size(), 2U);
    std::istringstream bad("0 x\n");
    EXPECT_THROW(read_edge_list(bad), ParseError);
}

TEST(Structure, Report) {
    const auto p = structure_report(fam("petersen"));
    EXPECT_EQ(p.girth, 5U);
    EXPECT_TRUE(p.regular);
    EXPECT_TRUE(p.triangle_free);
    EXPECT_FALSE(p.bipartite);
    EXPECT_TRUE(p.connected);
    EXPECT_EQ(p.num_edges, 15U);

    const auto forest = structure_report(fam("star:4"));
    EXPECT_FALSE(forest.girth.has_value());
    EXPECT_TRUE(forest.bipartite);

    const Graph two = disjoint_union(fam("cycle:4"), fam("complete:3"));
    const auto s = structure_report(two);
    EXPECT_EQ(s.components, 2U);
    EXPECT_EQ(s.num_triangles, 1U);
    EXPECT_EQ(girth(two), 3U);
    EXPECT_EQ(connected_components(two), (std::vector<std::size_t>{0, 0, 0, 0, 1, 1, 1}));
}

TEST(Isomorphism, RelabellingsAreFound) {
    std::mt19937_64 rng(17);
    for (int i = 0; i < 30; ++i) {
        const Graph g = oracle::random_graph(4 + i % 12, 0.5, rng);
        const auto perm = oracle::random_permutation(g.order(), rng);
        const Graph h = permute(g, perm);
        const auto r = find_isomorphism(g, h);
        ASSERT_TRUE(r.isomorphic());
        for (auto [u, v] : g.edges()) EXPECT_TRUE(h.adjacent(r.witness[u], r.witness[v]));
        EXPECT_EQ(invariant_hash(g), invariant_hash(h));
    }
}

TEST(Isomorphism, DistinguishesCospectralPair) {
    const Graph star = fam("star:4");
    const Graph c4k1 = disjoint_union(fam("cycle:4"), fam("empty:1"));
    EXPECT_FALSE(is_isomorphic(star, c4k1));
    EXPECT_FALSE(is_isomorphic(fam("shrikhande"), construct_family(family::LatinSquare{2, 4})));
}

TEST(Isomorphism, Symmetry) {
    const auto p = symmetry_report(fam("petersen"));
    EXPECT_EQ(p.vertex_transitive, true);
    EXPECT_EQ(p.edge_transitive, true);
    EXPECT_EQ(p.self_complementary, false);
    EXPECT_EQ(symmetry_report(fam("paley:13")).self_complementary, true);
    EXPECT_EQ(symmetry_report(fam("cycle:5")).self_complementary, true);
    const auto t = symmetry_report(fam("tietze"));
    EXPECT_EQ(t.edge_transitive, false);
    EXPECT_EQ(t.vertex_transitive, false);
}

}  // namespace
