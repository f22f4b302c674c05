#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "thetakit/budget.hpp"
#include "thetakit/graph.hpp"

namespace thetakit {

enum class SearchOutcome { found, absent, budget_exhausted };

struct IsomorphismResult {
    SearchOutcome outcome = SearchOutcome::absent;
    std::vector<std::size_t> witness;  // vertex v of g maps to witness[v] of h
    bool isomorphic() const { return outcome == SearchOutcome::found; }
};

// Individualization-refinement backtracking. Each pair in `pins` forces g-vertex first onto
// h-vertex second. A returned witness has been checked edge by edge.
IsomorphismResult find_isomorphism(const Graph& g, const Graph& h, const std::vector<Edge>& pins = {},
                                   const Budget& budget = Budget::unlimited());

inline bool is_isomorphic(const Graph& g, const Graph& h) { return find_isomorphism(g, h).isomorphic(); }

// Equal for isomorphic graphs; built from a canonically numbered stable colouring.
std::uint64_t invariant_hash(const Graph& g);

struct SymmetryReport {
    std::optional<bool> vertex_transitive;  // empty when the budget ran out
    std::optional<bool> edge_transitive;
    std::optional<bool> self_complementary;
};

SymmetryReport symmetry_report(const Graph& g, const Budget& budget = Budget::unlimited());

}  // namespace thetakit
