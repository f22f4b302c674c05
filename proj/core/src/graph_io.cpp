#include "thetakit/graph_io.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>

#include "thetakit/errors.hpp"

namespace thetakit {

namespace {

constexpr std::string_view kHeader = ">>graph6<<";

std::size_t value_at(std::string_view s, std::size_t pos) {
    if (pos >= s.size()) throw ParseError("graph6 string truncated", pos);
    auto c = static_cast<unsigned char>(s[pos]);
    if (c < 63 || c > 126) throw ParseError("graph6 byte out of range", pos);
    return c - 63U;
}

}  // namespace

Graph decode_graph6(std::string_view text) {
    std::size_t base = 0;
    if (text.substr(0, kHeader.size()) == kHeader) base = kHeader.size();
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
    if (base >= text.size()) throw ParseError("empty graph6 string", base);

    std::size_t pos = base;
    std::size_t n = 0;
    if (value_at(text, pos) < 63) {
        n = value_at(text, pos++);
    } else if (pos + 1 < text.size() && value_at(text, pos + 1) == 63) {
        pos += 2;
        for (int k = 0; k < 6; ++k) n = (n << 6) | value_at(text, pos++);
    } else {
        ++pos;
        for (int k = 0; k < 3; ++k) n = (n << 6) | value_at(text, pos++);
        if (n < 63) throw ParseError("graph6 long header encodes a short vertex count", base);
    }
    if (n > 100000) throw ParseError("graph6 vertex count too large", base);

    const std::size_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
    const std::size_t bytes = (bits + 5) / 6;
    if (text.size() - pos != bytes)
        throw ParseError("graph6 body length " + std::to_string(text.size() - pos) + " does not match expected " +
                             std::to_string(bytes),
                         pos);

    GraphBuilder b(n);
    std::size_t k = 0;
    for (std::size_t j = 1; j < n; ++j)
        for (std::size_t i = 0; i < j; ++i, ++k) {
            std::size_t byte = pos + k / 6;
            if ((value_at(text, byte) >> (5 - k % 6)) & 1U) b.add_edge(i, j);
        }
    for (; k < bytes * 6; ++k)
        if ((value_at(text, pos + k / 6) >> (5 - k % 6)) & 1U) throw ParseError("nonzero graph6 padding bit", pos + k / 6);
    return std::move(b).build();
}

std::string encode_graph6(const Graph& g) {
    const std::size_t n = g.order();
    std::string out;
    if (n < 63) {
        out.push_back(static_cast<char>(n + 63));
    } else if (n <= 258047) {
        out.push_back(126);
        for (int s = 12; s >= 0; s -= 6) out.push_back(static_cast<char>(((n >> s) & 63U) + 63));
    } else {
        out.push_back(126);
        out.push_back(126);
        for (int s = 30; s >= 0; s -= 6) out.push_back(static_cast<char>(((n >> s) & 63U) + 63));
    }
    unsigned acc = 0;
    int filled = 0;
    for (std::size_t j = 1; j < n; ++j)
        for (std::size_t i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.adjacent(i, j) ? 1U : 0U);
            if (++filled == 6) {
                out.push_back(static_cast<char>(acc + 63));
                acc = 0;
                filled = 0;
            }
        }
    if (filled) out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
    return out;
}

Graph read_edge_list(std::istream& in) {
    std::vector<Edge> edges;
    std::size_t declared = 0, max_vertex = 0, line_no = 0, offset = 0;
    bool have_declared = false, have_edge = false;
    std::string line;
    while (std::getline(in, line)) {
        ++line_no;
        const std::size_t line_start = offset;
        offset += line.size() + 1;
        auto hash = line.find('#');
        if (hash != std::string::npos) {
            std::istringstream comment(line.substr(hash + 1));
            std::string key, eq;
            std::size_t value = 0;
            if (comment >> key >> eq >> value && key == "n" && eq == "=") {
                declared = value;
                have_declared = true;
            }
            line.resize(hash);
        }
        std::istringstream fields(line);
        long long u = 0, v = 0;
        if (!(fields >> u)) continue;
        std::string extra;
        if (!(fields >> v) || (fields >> extra) || u < 0 || v < 0)
            throw ParseError("edge list line " + std::to_string(line_no) + " is not a 'u v' pair", line_start);
        edges.emplace_back(static_cast<std::size_t>(u), static_cast<std::size_t>(v));
        max_vertex = std::max({max_vertex, edges.back().first, edges.back().second});
        have_edge = true;
    }
    std::size_t n = have_declared ? declared : (have_edge ? max_vertex + 1 : 0);
    if (have_edge && max_vertex >= n) throw ParseError("edge endpoint exceeds declared vertex count", offset);
    return Graph(n, edges);
}

void write_edge_list(std::ostream& out, const Graph& g) {
    out << "# n = " << g.order() << '\n';
    for (auto [i, j] : g.edges()) out << i << ' ' << j << '\n';
}

}  // namespace thetakit
