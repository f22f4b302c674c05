#include "thetakit/structure.hpp"

#include <algorithm>
#include <limits>
#include <queue>

namespace thetakit {

std::size_t count_triangles(const Graph& g) {
    std::size_t t = 0;
    for (auto [i, j] : g.edges()) {
        auto ri = g.row(i), rj = g.row(j);
        // Count common neighbours above j so each triangle is seen once.
        VertexSet common(g.order(), ri);
        common &= VertexSet(g.order(), rj);
        for (std::size_t k = common.next(j + 1); k < g.order(); k = common.next(k + 1)) ++t;
    }
    return t;
}

std::vector<std::size_t> connected_components(const Graph& g) {
    const std::size_t n = g.order();
    constexpr auto unset = std::numeric_limits<std::size_t>::max();
    std::vector<std::size_t> comp(n, unset);
    std::size_t next = 0;
    for (std::size_t s = 0; s < n; ++s) {
        if (comp[s] != unset) continue;
        std::vector<std::size_t> stack{s};
        comp[s] = next;
        while (!stack.empty()) {
            auto v = stack.back();
            stack.pop_back();
            VertexSet nb = g.neighbors(v);
            for (auto w = nb.first(); w < n; w = nb.next(w + 1))
                if (comp[w] == unset) {
                    comp[w] = next;
                    stack.push_back(w);
                }
        }
        ++next;
    }
    return comp;
}

std::optional<std::size_t> girth(const Graph& g) {
    const std::size_t n = g.order();
    constexpr auto unset = std::numeric_limits<std::size_t>::max();
    std::size_t best = unset;
    std::vector<std::size_t> dist(n), parent(n);
    for (std::size_t s = 0; s < n; ++s) {
        std::fill(dist.begin(), dist.end(), unset);
        dist[s] = 0;
        parent[s] = unset;
        std::queue<std::size_t> q;
        q.push(s);
        while (!q.empty()) {
            auto v = q.front();
            q.pop();
            if (2 * dist[v] + 1 >= best) break;
            VertexSet nb = g.neighbors(v);
            for (auto w = nb.first(); w < n; w = nb.next(w + 1)) {
                if (dist[w] == unset) {
                    dist[w] = dist[v] + 1;
                    parent[w] = v;
                    q.push(w);
                } else if (parent[v] != w) {
                    best = std::min(best, dist[v] + dist[w] + 1);
                }
            }
        }
    }
    if (best == unset) return std::nullopt;
    return best;
}

bool is_bipartite(const Graph& g) {
    const std::size_t n = g.order();
    std::vector<int> side(n, -1);
    for (std::size_t s = 0; s < n; ++s) {
        if (side[s] >= 0) continue;
        side[s] = 0;
        std::vector<std::size_t> stack{s};
        while (!stack.empty()) {
            auto v = stack.back();
            stack.pop_back();
            VertexSet nb = g.neighbors(v);
            for (auto w = nb.first(); w < n; w = nb.next(w + 1)) {
                if (side[w] < 0) {
                    side[w] = 1 - side[v];
                    stack.push_back(w);
                } else if (side[w] == side[v]) {
                    return false;
                }
            }
        }
    }
    return true;
}

StructureReport structure_report(const Graph& g) {
    StructureReport r;
    r.degrees = g.degrees();
    r.regular = std::adjacent_find(r.degrees.begin(), r.degrees.end(), std::not_equal_to<>()) == r.degrees.end();
    r.bipartite = is_bipartite(g);
    r.num_triangles = count_triangles(g);
    r.triangle_free = r.num_triangles == 0;
    auto comp = connected_components(g);
    r.components = comp.empty() ? 0 : *std::max_element(comp.begin(), comp.end()) + 1;
    r.connected = r.components <= 1;
    r.num_edges = g.size();
    r.girth = girth(g);
    return r;
}

std::optional<SrgParams> classify_srg(const Graph& g) {
    const std::size_t n = g.order();
    if (n < 3) return std::nullopt;
    const std::size_t d = g.degree(0);
    for (std::size_t v = 1; v < n; ++v)
        if (g.degree(v) != d) return std::nullopt;
    if (d == 0 || d == n - 1) return std::nullopt;
    std::optional<std::size_t> lambda, mu;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            auto c = intersection_count(g.row(i), g.row(j));
            auto& slot = g.adjacent(i, j) ? lambda : mu;
            if (!slot) slot = c;
            else if (*slot != c) return std::nullopt;
        }
    if (!lambda || !mu) return std::nullopt;
    return SrgParams{static_cast<std::int64_t>(n), static_cast<std::int64_t>(d), static_cast<std::int64_t>(*lambda),
                     static_cast<std::int64_t>(*mu)};
}

}  // namespace thetakit
