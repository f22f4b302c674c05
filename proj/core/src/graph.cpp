#include "thetakit/graph.hpp"

#include <algorithm>
#include <string>

#include "thetakit/errors.hpp"

namespace thetakit {

Graph::Graph(std::size_t n, std::span<const Edge> edges) : Graph(n) {
    GraphBuilder b(std::move(*this));
    for (auto [i, j] : edges) b.add_edge(i, j);
    *this = std::move(b).build();
}

std::size_t Graph::size() const {
    std::size_t total = 0;
    for (std::size_t i = 0; i < n_; ++i) total += degree(i);
    return total / 2;
}

std::size_t Graph::degree(std::size_t i) const {
    std::size_t d = 0;
    for (Word w : row(i)) d += static_cast<std::size_t>(std::popcount(w));
    return d;
}

std::vector<std::size_t> Graph::degrees() const {
    std::vector<std::size_t> d(n_);
    for (std::size_t i = 0; i < n_; ++i) d[i] = degree(i);
    return d;
}

std::size_t Graph::max_degree() const {
    std::size_t m = 0;
    for (std::size_t i = 0; i < n_; ++i) m = std::max(m, degree(i));
    return m;
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    for (std::size_t i = 0; i < n_; ++i) {
        VertexSet r = neighbors(i);
        for (std::size_t j = r.next(i + 1); j < n_; j = r.next(j + 1)) out.emplace_back(i, j);
    }
    return out;
}

Eigen::MatrixXd Graph::adjacency_matrix() const {
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(n_), static_cast<Eigen::Index>(n_));
    for (auto [i, j] : edges()) {
        a(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = 1.0;
        a(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(i)) = 1.0;
    }
    return a;
}

void GraphBuilder::check(std::size_t i, std::size_t j) const {
    if (i >= g_.n_ || j >= g_.n_)
        throw ParameterError("edge endpoint out of range: {" + std::to_string(i) + ", " + std::to_string(j) +
                             "} with n = " + std::to_string(g_.n_));
    if (i == j) throw ParameterError("self-loop at vertex " + std::to_string(i));
}

void GraphBuilder::put(std::size_t i, std::size_t j, bool on) {
    Word& a = g_.bits_[i * g_.stride_ + j / kWordBits];
    Word& b = g_.bits_[j * g_.stride_ + i / kWordBits];
    Word ma = Word{1} << (j % kWordBits);
    Word mb = Word{1} << (i % kWordBits);
    if (on) {
        a |= ma;
        b |= mb;
    } else {
        a &= ~ma;
        b &= ~mb;
    }
}

GraphBuilder& GraphBuilder::add_edge(std::size_t i, std::size_t j) {
    check(i, j);
    put(i, j, true);
    return *this;
}

GraphBuilder& GraphBuilder::remove_edge(std::size_t i, std::size_t j) {
    check(i, j);
    put(i, j, false);
    return *this;
}

GraphBuilder& GraphBuilder::toggle_edge(std::size_t i, std::size_t j) {
    check(i, j);
    put(i, j, !g_.adjacent(i, j));
    return *this;
}

Graph complement(const Graph& g) {
    const std::size_t n = g.order();
    GraphBuilder b(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (!g.adjacent(i, j)) b.add_edge(i, j);
    return std::move(b).build();
}

Graph strong_product(const Graph& g, const Graph& h) {
    const std::size_t ng = g.order(), nh = h.order();
    GraphBuilder b(ng * nh);
    for (std::size_t i = 0; i < ng; ++i)
        for (std::size_t k = i; k < ng; ++k) {
            if (k != i && !g.adjacent(i, k)) continue;
            for (std::size_t j = 0; j < nh; ++j)
                for (std::size_t l = 0; l < nh; ++l) {
                    if (j != l && !h.adjacent(j, l)) continue;
                    std::size_t u = i * nh + j, v = k * nh + l;
                    if (u < v) b.add_edge(u, v);
                }
        }
    return std::move(b).build();
}

Graph compose(ComposeKind kind, const Graph& g, const Graph& h) {
    const std::size_t ng = g.order(), nh = h.order();
    GraphBuilder b(ng + nh);
    for (auto [i, j] : g.edges()) b.add_edge(i, j);
    for (auto [i, j] : h.edges()) b.add_edge(ng + i, ng + j);
    if (kind == ComposeKind::join)
        for (std::size_t i = 0; i < ng; ++i)
            for (std::size_t j = 0; j < nh; ++j) b.add_edge(i, ng + j);
    return std::move(b).build();
}

Graph split_join(SplitJoinKind kind, const Graph& g1, const Graph& g2) {
    const std::size_t n1 = g1.order(), n2 = g2.order();
    GraphBuilder b(2 * n1 + n2);
    for (auto [i, j] : g1.edges()) b.add_edge(i, j);
    for (auto [i, j] : g2.edges()) b.add_edge(2 * n1 + i, 2 * n1 + j);
    for (std::size_t i = 0; i < n1; ++i)
        for (std::size_t j = 0; j < n1; ++j) {
            if (i == j) continue;
            bool linked = kind == SplitJoinKind::NS ? g1.adjacent(i, j) : !g1.adjacent(i, j);
            if (linked) b.add_edge(i, n1 + j);
        }
    for (std::size_t i = 0; i < n1; ++i)
        for (std::size_t j = 0; j < n2; ++j) b.add_edge(i, 2 * n1 + j);
    return std::move(b).build();
}

Graph line_graph(const Graph& g) {
    const auto e = g.edges();
    GraphBuilder b(e.size());
    for (std::size_t a = 0; a < e.size(); ++a)
        for (std::size_t c = a + 1; c < e.size(); ++c) {
            auto [p, q] = e[a];
            auto [r, s] = e[c];
            if (p == r || p == s || q == r || q == s) b.add_edge(a, c);
        }
    return std::move(b).build();
}

Graph mycielskian(const Graph& g) {
    const std::size_t n = g.order();
    GraphBuilder b(2 * n + 1);
    for (auto [v, w] : g.edges()) {
        b.add_edge(v, w);
        b.add_edge(v, n + w);
        b.add_edge(w, n + v);
    }
    for (std::size_t v = 0; v < n; ++v) b.add_edge(2 * n, n + v);
    return std::move(b).build();
}

Graph seidel_switch(const Graph& g, const VertexSet& s) {
    if (s.size() != g.order()) throw ParameterError("switching set must cover the vertex range of the graph");
    GraphBuilder b(g);
    for (std::size_t i = 0; i < g.order(); ++i)
        for (std::size_t j = i + 1; j < g.order(); ++j)
            if (s.test(i) != s.test(j)) b.toggle_edge(i, j);
    return std::move(b).build();
}

Graph induced_subgraph(const Graph& g, std::span<const std::size_t> vertices) {
    GraphBuilder b(vertices.size());
    for (std::size_t a = 0; a < vertices.size(); ++a)
        for (std::size_t c = a + 1; c < vertices.size(); ++c)
            if (g.adjacent(vertices[a], vertices[c])) b.add_edge(a, c);
    return std::move(b).build();
}

Graph permute(const Graph& g, std::span<const std::size_t> perm) {
    if (perm.size() != g.order()) throw ParameterError("permutation length must equal the vertex count");
    GraphBuilder b(g.order());
    for (auto [i, j] : g.edges()) b.add_edge(perm[i], perm[j]);
    return std::move(b).build();
}

}  // namespace thetakit
