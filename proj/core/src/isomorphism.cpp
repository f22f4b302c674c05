#include "thetakit/isomorphism.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

#include "thetakit/errors.hpp"

namespace thetakit {

namespace {

using Adjacency = std::vector<std::vector<int>>;

Adjacency adjacency_lists(const Graph& g) {
    Adjacency a(g.order());
    for (auto [i, j] : g.edges()) {
        a[i].push_back(static_cast<int>(j));
        a[j].push_back(static_cast<int>(i));
    }
    return a;
}

// Colours shared by both graphs; colour ids are assigned from sorted signatures, so they
// do not depend on vertex labels.
struct Colouring {
    std::vector<int> g, h;
    int classes = 0;
};

// Per-vertex signature: sorted (adjacent, common-neighbour count) pairs against all other vertices.
std::vector<std::vector<int>> pair_signatures(const Graph& g) {
    const std::size_t n = g.order();
    std::vector<std::vector<int>> sig(n);
    for (std::size_t i = 0; i < n; ++i) {
        sig[i].reserve(n);
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            auto c = static_cast<int>(intersection_count(g.row(i), g.row(j)));
            sig[i].push_back(g.adjacent(i, j) ? -1 - c : c);
        }
        std::sort(sig[i].begin(), sig[i].end());
    }
    return sig;
}

// Relabels signatures to dense ids in sorted order. Returns false if the class sizes differ.
template <class Sig>
bool assign(const std::vector<Sig>& sg, const std::vector<Sig>& sh, Colouring& c) {
    std::map<Sig, std::pair<int, int>> ids;
    for (const auto& s : sg) ++ids[s].first;
    for (const auto& s : sh) --ids[s].first;
    int next = 0;
    for (auto& [sig, slot] : ids) {
        if (slot.first != 0) return false;
        slot.second = next++;
    }
    for (std::size_t v = 0; v < sg.size(); ++v) c.g[v] = ids[sg[v]].second;
    for (std::size_t v = 0; v < sh.size(); ++v) c.h[v] = ids[sh[v]].second;
    c.classes = next;
    return true;
}

bool refine(const Adjacency& ag, const Adjacency& ah, Colouring& c) {
    const std::size_t n = ag.size();
    std::vector<std::vector<int>> sg(n), sh(n);
    while (true) {
        for (std::size_t v = 0; v < n; ++v) {
            sg[v].assign(1, c.g[v]);
            for (int w : ag[v]) sg[v].push_back(c.g[static_cast<std::size_t>(w)]);
            std::sort(sg[v].begin() + 1, sg[v].end());
            sh[v].assign(1, c.h[v]);
            for (int w : ah[v]) sh[v].push_back(c.h[static_cast<std::size_t>(w)]);
            std::sort(sh[v].begin() + 1, sh[v].end());
        }
        int before = c.classes;
        if (!assign(sg, sh, c)) return false;
        if (c.classes == before) return true;
    }
}

void individualize(Colouring& c, std::size_t v, std::size_t u) {
    c.g[v] = c.classes;
    c.h[u] = c.classes;
    ++c.classes;
}

class IsoSearch {
public:
    IsoSearch(const Graph& g, const Graph& h, const Budget& budget)
        : g_(g), h_(h), ag_(adjacency_lists(g)), ah_(adjacency_lists(h)), budget_(budget) {}

    SearchOutcome run(Colouring c, std::vector<std::size_t>& witness) {
        if (!refine(ag_, ah_, c)) return SearchOutcome::absent;
        return search(c, witness);
    }

private:
    SearchOutcome search(const Colouring& c, std::vector<std::size_t>& witness) {
        if ((++nodes_ & 63U) == 0 && budget_.expired()) return SearchOutcome::budget_exhausted;
        const std::size_t n = c.g.size();
        if (static_cast<std::size_t>(c.classes) == n) {
            witness.assign(n, 0);
            std::vector<std::size_t> by_colour(n);
            for (std::size_t u = 0; u < n; ++u) by_colour[static_cast<std::size_t>(c.h[u])] = u;
            for (std::size_t v = 0; v < n; ++v) witness[v] = by_colour[static_cast<std::size_t>(c.g[v])];
            for (auto [i, j] : g_.edges())
                if (!h_.adjacent(witness[i], witness[j])) return SearchOutcome::absent;
            return SearchOutcome::found;
        }
        // Smallest colour with more than one member; branch on its first g-vertex.
        std::vector<int> size(static_cast<std::size_t>(c.classes), 0);
        for (int col : c.g) ++size[static_cast<std::size_t>(col)];
        int target = 0;
        while (size[static_cast<std::size_t>(target)] < 2) ++target;
        std::size_t v = static_cast<std::size_t>(std::find(c.g.begin(), c.g.end(), target) - c.g.begin());
        for (std::size_t u = 0; u < n; ++u) {
            if (c.h[u] != target) continue;
            Colouring next = c;
            individualize(next, v, u);
            if (!refine(ag_, ah_, next)) continue;
            auto r = search(next, witness);
            if (r != SearchOutcome::absent) return r;
        }
        return SearchOutcome::absent;
    }

    const Graph& g_;
    const Graph& h_;
    Adjacency ag_, ah_;
    const Budget& budget_;
    std::size_t nodes_ = 0;
};

std::optional<Colouring> initial_colouring(const Graph& g, const Graph& h) {
    Colouring c;
    c.g.assign(g.order(), 0);
    c.h.assign(h.order(), 0);
    if (!assign(pair_signatures(g), pair_signatures(h), c)) return std::nullopt;
    return c;
}

struct UnionFind {
    std::vector<std::size_t> parent;
    explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), std::size_t{0}); }
    std::size_t find(std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

}  // namespace

IsomorphismResult find_isomorphism(const Graph& g, const Graph& h, const std::vector<Edge>& pins,
                                   const Budget& budget) {
    IsomorphismResult result;
    if (g.order() != h.order() || g.size() != h.size()) return result;
    auto c = initial_colouring(g, h);
    if (!c) return result;
    for (auto [v, u] : pins) {
        if (v >= g.order() || u >= h.order()) throw ParameterError("pinned vertex out of range");
        if (c->g[v] != c->h[u]) return result;
        individualize(*c, v, u);
    }
    IsoSearch search(g, h, budget);
    result.outcome = search.run(*c, result.witness);
    if (!result.isomorphic()) result.witness.clear();
    return result;
}

std::uint64_t invariant_hash(const Graph& g) {
    auto c = initial_colouring(g, g);
    auto adj = adjacency_lists(g);
    refine(adj, adj, *c);
    // Quotient matrix of the stable colouring, in canonical colour order.
    const auto k = static_cast<std::size_t>(c->classes);
    std::vector<std::uint64_t> cells(k * (k + 1), 0);
    for (std::size_t v = 0; v < g.order(); ++v) {
        auto cv = static_cast<std::size_t>(c->g[v]);
        ++cells[cv * (k + 1)];
        for (int w : adj[v]) ++cells[cv * (k + 1) + 1 + static_cast<std::size_t>(c->g[static_cast<std::size_t>(w)])];
    }
    std::uint64_t hash = 1469598103934665603ULL ^ g.order();
    for (auto x : cells) hash = (hash ^ x) * 1099511628211ULL;
    return hash;
}

SymmetryReport symmetry_report(const Graph& g, const Budget& budget) {
    SymmetryReport r;
    const std::size_t n = g.order();
    std::vector<std::vector<std::size_t>> automorphisms;

    // Vertex orbits, merging with every automorphism found.
    UnionFind orbit(n);
    bool vt_known = true, vt = true;
    for (std::size_t v = 1; v < n && vt; ++v) {
        if (orbit.find(v) == orbit.find(0)) continue;
        auto res = find_isomorphism(g, g, {{0, v}}, budget);
        if (res.outcome == SearchOutcome::budget_exhausted) {
            vt_known = false;
            break;
        }
        if (!res.isomorphic()) {
            vt = false;
            break;
        }
        for (std::size_t x = 0; x < n; ++x) orbit.unite(x, res.witness[x]);
        automorphisms.push_back(std::move(res.witness));
    }
    if (vt_known) r.vertex_transitive = vt;

    const auto edges = g.edges();
    UnionFind edge_orbit(edges.size());
    std::map<Edge, std::size_t> edge_index;
    for (std::size_t e = 0; e < edges.size(); ++e) edge_index[edges[e]] = e;
    auto absorb = [&](const std::vector<std::size_t>& perm) {
        for (std::size_t e = 0; e < edges.size(); ++e) {
            auto [a, b] = edges[e];
            Edge img{std::min(perm[a], perm[b]), std::max(perm[a], perm[b])};
            edge_orbit.unite(e, edge_index.at(img));
        }
    };
    for (const auto& p : automorphisms) absorb(p);
    bool et_known = true, et = true;
    for (std::size_t e = 1; e < edges.size() && et; ++e) {
        if (edge_orbit.find(e) == edge_orbit.find(0)) continue;
        auto [a0, b0] = edges[0];
        auto [a, b] = edges[e];
        auto res = find_isomorphism(g, g, {{a0, a}, {b0, b}}, budget);
        if (res.outcome == SearchOutcome::absent) res = find_isomorphism(g, g, {{a0, b}, {b0, a}}, budget);
        if (res.outcome == SearchOutcome::budget_exhausted) {
            et_known = false;
            break;
        }
        if (!res.isomorphic()) {
            et = false;
            break;
        }
        absorb(res.witness);
    }
    if (et_known) r.edge_transitive = et;

    auto sc = find_isomorphism(g, complement(g), {}, budget);
    if (sc.outcome != SearchOutcome::budget_exhausted) r.self_complementary = sc.isomorphic();
    return r;
}

}  // namespace thetakit
