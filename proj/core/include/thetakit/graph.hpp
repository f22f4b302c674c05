#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "thetakit/vertex_set.hpp"

namespace thetakit {

using Edge = std::pair<std::size_t, std::size_t>;

class GraphBuilder;

// Simple undirected graph on vertices 0..n-1, stored as adjacency bit-rows.
// Immutable once built; build through GraphBuilder or the edge-list constructor.
class Graph {
public:
    Graph() = default;
    explicit Graph(std::size_t n) : n_(n), stride_(words_for(n)), bits_(n * stride_, 0) {}
    // Throws ParameterError on self-loops or out-of-range endpoints. Duplicate edges are merged.
    Graph(std::size_t n, std::span<const Edge> edges);

    std::size_t order() const { return n_; }
    std::size_t size() const;  // edge count

    bool adjacent(std::size_t i, std::size_t j) const {
        return (bits_[i * stride_ + j / kWordBits] >> (j % kWordBits)) & 1U;
    }
    std::span<const Word> row(std::size_t i) const { return {bits_.data() + i * stride_, stride_}; }
    VertexSet neighbors(std::size_t i) const { return VertexSet(n_, row(i)); }
    std::size_t degree(std::size_t i) const;
    std::vector<std::size_t> degrees() const;
    std::size_t max_degree() const;

    // Edges (i, j) with i < j in lexicographic order.
    std::vector<Edge> edges() const;
    Eigen::MatrixXd adjacency_matrix() const;

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    friend class GraphBuilder;

    std::size_t n_ = 0;
    std::size_t stride_ = 0;
    std::vector<Word> bits_;
};

class GraphBuilder {
public:
    explicit GraphBuilder(std::size_t n) : g_(n) {}
    explicit GraphBuilder(Graph g) : g_(std::move(g)) {}

    std::size_t order() const { return g_.n_; }
    bool adjacent(std::size_t i, std::size_t j) const { return g_.adjacent(i, j); }
    GraphBuilder& add_edge(std::size_t i, std::size_t j);
    GraphBuilder& remove_edge(std::size_t i, std::size_t j);
    GraphBuilder& toggle_edge(std::size_t i, std::size_t j);

    Graph build() && { return std::move(g_); }
    Graph build() const& { return g_; }

private:
    void check(std::size_t i, std::size_t j) const;
    void put(std::size_t i, std::size_t j, bool on);

    Graph g_;
};

Graph complement(const Graph& g);

// Vertex (i, j) of the product gets index i * h.order() + j.
Graph strong_product(const Graph& g, const Graph& h);

enum class ComposeKind { disjoint_union, join };
// Vertices of g keep 0..n_g-1; vertices of h follow.
Graph compose(ComposeKind kind, const Graph& g, const Graph& h);
inline Graph disjoint_union(const Graph& g, const Graph& h) { return compose(ComposeKind::disjoint_union, g, h); }
inline Graph join(const Graph& g, const Graph& h) { return compose(ComposeKind::join, g, h); }

enum class SplitJoinKind { NS, NNS };
// Vertex order: g1 originals, their copies, then g2. The copy of v is joined to the
// neighbours (NS) or the non-neighbours (NNS) of v in g1; originals are joined to all of g2.
Graph split_join(SplitJoinKind kind, const Graph& g1, const Graph& g2);

// One vertex per edge, in the order returned by Graph::edges().
Graph line_graph(const Graph& g);

// Vertex v of level 0 keeps index v, level 1 gets n + v, the apex gets 2n.
Graph mycielskian(const Graph& g);

// Complements every pair with exactly one endpoint in s.
Graph seidel_switch(const Graph& g, const VertexSet& s);

Graph induced_subgraph(const Graph& g, std::span<const std::size_t> vertices);

// Relabels so that vertex v of g becomes perm[v].
Graph permute(const Graph& g, std::span<const std::size_t> perm);

}  // namespace thetakit
