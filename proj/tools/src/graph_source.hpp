#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "thetakit/graph.hpp"

namespace thetakit::cli {

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Exactly one of the three fields must be set.
struct GraphSource {
    std::optional<std::string> family;  // "name:arg1:arg2"
    std::optional<std::string> graph6;
    std::optional<std::string> edges;   // path to an edge-list file
};

struct LoadedGraph {
    Graph graph;
    std::string id;
};

// Throws UsageError when zero or several sources are given, or the file cannot be read.
LoadedGraph load_graph(const GraphSource& src);

// THETA_TOOLKIT_THREADS, defaulting to 1. Throws UsageError on a non-positive or malformed value.
unsigned thread_cap();

}  // namespace thetakit::cli
