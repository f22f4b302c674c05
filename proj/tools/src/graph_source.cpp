#include "graph_source.hpp"

#include <charconv>
#include <cstdlib>
#include <fstream>

#include "thetakit/families.hpp"
#include "thetakit/graph_io.hpp"

namespace thetakit::cli {

LoadedGraph load_graph(const GraphSource& src) {
    const int given = static_cast<int>(src.family.has_value()) + static_cast<int>(src.graph6.has_value()) +
                      static_cast<int>(src.edges.has_value());
    if (given != 1) throw UsageError("give exactly one of --family, --graph6, --edges");
    if (src.family) {
        const FamilySpec spec = parse_family(*src.family);
        return {construct_family(spec), family_name(spec)};
    }
    if (src.graph6) return {decode_graph6(*src.graph6), *src.graph6};
    std::ifstream in(*src.edges);
    if (!in) throw UsageError("cannot read " + *src.edges);
    return {read_edge_list(in), *src.edges};
}

unsigned thread_cap() {
    const char* env = std::getenv("THETA_TOOLKIT_THREADS");
    if (!env || !*env) return 1;
    unsigned v = 0;
    const std::string_view s(env);
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || p != s.data() + s.size() || v == 0)
        throw UsageError("THETA_TOOLKIT_THREADS must be a positive integer");
    return v;
}

}  // namespace thetakit::cli
