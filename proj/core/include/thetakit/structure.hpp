#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "thetakit/graph.hpp"
#include "thetakit/srg_params.hpp"

namespace thetakit {

struct StructureReport {
    std::optional<std::size_t> girth;  // empty for forests
    std::vector<std::size_t> degrees;
    bool regular = false;
    bool bipartite = false;
    bool triangle_free = false;
    bool connected = false;
    std::size_t components = 0;
    std::size_t num_edges = 0;
    std::size_t num_triangles = 0;
};

StructureReport structure_report(const Graph& g);

std::size_t count_triangles(const Graph& g);
// Component index per vertex, numbered in order of smallest member.
std::vector<std::size_t> connected_components(const Graph& g);
std::optional<std::size_t> girth(const Graph& g);
bool is_bipartite(const Graph& g);

// Parameters when g is regular, neither complete nor edgeless, with constant common-neighbour
// counts on adjacent and on nonadjacent pairs.
std::optional<SrgParams> classify_srg(const Graph& g);

}  // namespace thetakit
