#include "thetakit/families.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cctype>
#include <charconv>
#include <numeric>

#include "thetakit/errors.hpp"

namespace thetakit {

bool is_prime(std::size_t q) {
    if (q < 2) return false;
    for (std::size_t p = 2; p * p <= q; ++p)
        if (q % p == 0) return false;
    return true;
}

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};

void require(bool ok, const char* what) {
    if (!ok) throw ParameterError(what);
}

Graph make_complete(std::size_t n) {
    GraphBuilder b(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) b.add_edge(i, j);
    return std::move(b).build();
}

Graph make_cycle(std::size_t n) {
    require(n >= 3, "Cycle requires n >= 3");
    GraphBuilder b(n);
    for (std::size_t i = 0; i < n; ++i) b.add_edge(i, (i + 1) % n);
    return std::move(b).build();
}

Graph make_path(std::size_t n) {
    GraphBuilder b(n);
    for (std::size_t i = 0; i + 1 < n; ++i) b.add_edge(i, i + 1);
    return std::move(b).build();
}

Graph make_multipartite(const std::vector<std::size_t>& parts) {
    std::size_t n = std::accumulate(parts.begin(), parts.end(), std::size_t{0});
    std::vector<std::size_t> part_of;
    for (std::size_t p = 0; p < parts.size(); ++p) part_of.insert(part_of.end(), parts[p], p);
    GraphBuilder b(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (part_of[i] != part_of[j]) b.add_edge(i, j);
    return std::move(b).build();
}

Graph make_star(std::size_t leaves) {
    GraphBuilder b(leaves + 1);
    for (std::size_t i = 1; i <= leaves; ++i) b.add_edge(0, i);
    return std::move(b).build();
}

// k-subsets of {0..n-1} in lexicographic order, adjacent when disjoint.
Graph make_kneser(std::size_t n, std::size_t k) {
    require(k >= 1 && n >= 2 * k, "Kneser requires n >= 2k >= 2");
    require(n <= 30, "Kneser requires n <= 30");
    std::vector<std::uint32_t> subsets;
    std::vector<std::size_t> idx(k);
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    while (true) {
        std::uint32_t mask = 0;
        for (auto i : idx) mask |= 1U << i;
        subsets.push_back(mask);
        std::size_t pos = k;
        while (pos > 0 && idx[pos - 1] == n - k + pos - 1) --pos;
        if (pos == 0) break;
        ++idx[pos - 1];
        for (std::size_t i = pos; i < k; ++i) idx[i] = idx[i - 1] + 1;
    }
    GraphBuilder b(subsets.size());
    for (std::size_t a = 0; a < subsets.size(); ++a)
        for (std::size_t c = a + 1; c < subsets.size(); ++c)
            if ((subsets[a] & subsets[c]) == 0) b.add_edge(a, c);
    return std::move(b).build();
}

Graph make_paley(std::size_t q) {
    require(is_prime(q) && q % 4 == 1, "Paley requires q prime with q = 1 mod 4");
    std::vector<bool> residue(q, false);
    for (std::size_t x = 1; x < q; ++x) residue[(x * x) % q] = true;
    GraphBuilder b(q);
    for (std::size_t i = 0; i < q; ++i)
        for (std::size_t j = i + 1; j < q; ++j)
            if (residue[j - i]) b.add_edge(i, j);
    return std::move(b).build();
}

Graph make_hamming_band(std::size_t len, std::size_t lo, std::size_t hi) {
    require(1 <= lo && lo <= hi && hi <= len, "HammingBand requires 1 <= dL <= dH <= l");
    require(len <= 16, "HammingBand requires l <= 16");
    std::size_t n = std::size_t{1} << len;
    GraphBuilder b(n);
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = x + 1; y < n; ++y) {
            auto d = static_cast<std::size_t>(std::popcount(x ^ y));
            if (lo <= d && d <= hi) b.add_edge(x, y);
        }
    return std::move(b).build();
}

// Cell (i, j) has index i * n + j; squares L_a(i, j) = a * i + j mod n for a = 1..m-2.
// These are mutually orthogonal for prime n; a single square works for any n.
Graph make_latin_square(std::size_t m, std::size_t n) {
    require(m <= 3 || is_prime(n), "LatinSquare with m > 3 requires n prime");
    require(2 <= m && m <= n + 1, "LatinSquare requires 2 <= m <= n + 1");
    GraphBuilder b(n * n);
    for (std::size_t u = 0; u < n * n; ++u)
        for (std::size_t v = u + 1; v < n * n; ++v) {
            std::size_t i1 = u / n, j1 = u % n, i2 = v / n, j2 = v % n;
            bool adj = i1 == i2 || j1 == j2;
            for (std::size_t a = 1; !adj && a + 2 <= m; ++a) adj = (a * i1 + j1) % n == (a * i2 + j2) % n;
            if (adj) b.add_edge(u, v);
        }
    return std::move(b).build();
}

// Projective points of GF(q)^{2n} with first nonzero coordinate 1, in lexicographic order;
// adjacent when the standard alternating form sum x_{2i} y_{2i+1} - x_{2i+1} y_{2i} vanishes.
Graph make_symplectic(std::size_t n, std::size_t q) {
    require(n >= 1, "Symplectic requires n >= 1");
    require(is_prime(q), "Symplectic requires q prime");
    const std::size_t dim = 2 * n;
    std::size_t total = 1;
    for (std::size_t i = 0; i < dim; ++i) {
        total *= q;
        require(total <= 4'000'000, "Symplectic requires q^{2n} <= 4e6");
    }
    std::vector<std::vector<std::size_t>> points;
    std::vector<std::size_t> x(dim, 0);
    for (std::size_t code = 1; code < total; ++code) {
        std::size_t c = code;
        for (std::size_t i = dim; i-- > 0;) {
            x[i] = c % q;
            c /= q;
        }
        auto lead = std::find_if(x.begin(), x.end(), [](std::size_t v) { return v != 0; });
        if (*lead == 1) points.push_back(x);
    }
    require(points.size() <= 4000, "Symplectic requires at most 4000 projective points");
    GraphBuilder b(points.size());
    for (std::size_t a = 0; a < points.size(); ++a)
        for (std::size_t c = a + 1; c < points.size(); ++c) {
            std::size_t form = 0;
            for (std::size_t i = 0; i < n; ++i) {
                form += points[a][2 * i] * points[c][2 * i + 1];
                form += (q - points[a][2 * i + 1]) * points[c][2 * i];
            }
            if (form % q == 0) b.add_edge(a, c);
        }
    return std::move(b).build();
}

// Hub 0, then n blades of k-1 vertices each.
Graph make_windmill(std::size_t k, std::size_t n) {
    require(k >= 2 && n >= 1, "Windmill requires k >= 2 and n >= 1");
    GraphBuilder b(1 + n * (k - 1));
    for (std::size_t blade = 0; blade < n; ++blade) {
        std::size_t base = 1 + blade * (k - 1);
        for (std::size_t i = 0; i < k - 1; ++i) {
            b.add_edge(0, base + i);
            for (std::size_t j = i + 1; j < k - 1; ++j) b.add_edge(base + i, base + j);
        }
    }
    return std::move(b).build();
}

// State index sum_d peg(d) 3^d with disk 0 the smallest. Disk d may move from peg p to peg r
// exactly when every smaller disk sits on the third peg.
Graph make_hanoi3(std::size_t n) {
    require(n >= 1 && n <= 9, "Hanoi3 requires 1 <= n <= 9");
    std::size_t total = 1;
    for (std::size_t i = 0; i < n; ++i) total *= 3;
    GraphBuilder b(total);
    std::vector<std::size_t> pow3(n + 1, 1);
    for (std::size_t i = 1; i <= n; ++i) pow3[i] = pow3[i - 1] * 3;
    for (std::size_t s = 0; s < total; ++s)
        for (std::size_t d = 0; d < n; ++d) {
            std::size_t p = (s / pow3[d]) % 3;
            for (std::size_t r = 0; r < 3; ++r) {
                if (r == p) continue;
                std::size_t other = 3 - p - r;
                bool free = true;
                for (std::size_t e = 0; e < d && free; ++e) free = (s / pow3[e]) % 3 == other;
                if (!free) continue;
                std::size_t t = s - p * pow3[d] + r * pow3[d];
                if (s < t) b.add_edge(s, t);
            }
        }
    return std::move(b).build();
}

// Petersen with vertex 0 replaced by a triangle; surviving Petersen vertices shift down by one,
// the triangle takes 9, 10, 11 and its corners attach to the former neighbours of 0 in order.
Graph make_tietze() {
    Graph p = make_kneser(5, 2);
    GraphBuilder b(12);
    for (auto [i, j] : p.edges())
        if (i != 0) b.add_edge(i - 1, j - 1);
    auto nb = p.neighbors(0).members();
    for (std::size_t t = 0; t < 3; ++t) {
        b.add_edge(9 + t, nb[t] - 1);
        b.add_edge(9 + t, 9 + (t + 1) % 3);
    }
    return std::move(b).build();
}

// Cayley graph on Z4 x Z4, (a, b) -> 4a + b.
Graph make_shrikhande() {
    const std::array<std::pair<int, int>, 6> gens{{{1, 0}, {3, 0}, {0, 1}, {0, 3}, {1, 1}, {3, 3}}};
    GraphBuilder b(16);
    for (int a = 0; a < 4; ++a)
        for (int c = 0; c < 4; ++c)
            for (auto [x, y] : gens) {
                auto u = static_cast<std::size_t>(4 * a + c);
                auto v = static_cast<std::size_t>(4 * ((a + x) % 4) + (c + y) % 4);
                if (u < v) b.add_edge(u, v);
            }
    return std::move(b).build();
}

std::vector<std::size_t> parse_args(std::string_view rest, std::string_view text) {
    std::vector<std::size_t> out;
    while (!rest.empty()) {
        auto colon = rest.find(':');
        auto tok = rest.substr(0, colon);
        std::size_t v = 0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
        if (ec != std::errc{} || ptr != tok.data() + tok.size() || tok.empty())
            throw ParameterError("bad family argument '" + std::string(tok) + "' in '" + std::string(text) + "'");
        out.push_back(v);
        if (colon == std::string_view::npos) break;
        rest.remove_prefix(colon + 1);
    }
    return out;
}

}  // namespace

Graph construct_family(const FamilySpec& spec) {
    using namespace family;
    return std::visit(
        overloaded{
            [](const Complete& f) { return make_complete(f.n); },
            [](const Empty& f) { return Graph(f.n); },
            [](const Cycle& f) { return make_cycle(f.n); },
            [](const Path& f) { return make_path(f.n); },
            [](const CompleteMultipartite& f) { return make_multipartite(f.parts); },
            [](const Star& f) { return make_star(f.leaves); },
            [](const Kneser& f) { return make_kneser(f.n, f.k); },
            [](const Paley& f) { return make_paley(f.q); },
            [](const HammingBand& f) { return make_hamming_band(f.length, f.d_low, f.d_high); },
            [](const LatinSquare& f) { return make_latin_square(f.m, f.n); },
            [](const Symplectic& f) { return make_symplectic(f.n, f.q); },
            [](const Windmill& f) { return make_windmill(f.k, f.n); },
            [](const Hanoi3& f) { return make_hanoi3(f.n); },
            [](const Tietze&) { return make_tietze(); },
            [](const Shrikhande&) { return make_shrikhande(); },
        },
        spec);
}

FamilySpec parse_family(std::string_view text) {
    auto colon = text.find(':');
    std::string name(text.substr(0, colon));
    std::transform(name.begin(), name.end(), name.begin(), [](unsigned char c) { return std::tolower(c); });
    std::replace(name.begin(), name.end(), '_', '-');
    auto args = colon == std::string_view::npos ? std::vector<std::size_t>{} : parse_args(text.substr(colon + 1), text);
    auto want = [&](std::size_t count) {
        if (args.size() != count)
            throw ParameterError("family '" + name + "' takes " + std::to_string(count) + " argument(s)");
    };
    using namespace family;
    if (name == "complete") return want(1), FamilySpec{Complete{args[0]}};
    if (name == "empty") return want(1), FamilySpec{Empty{args[0]}};
    if (name == "cycle") return want(1), FamilySpec{Cycle{args[0]}};
    if (name == "path") return want(1), FamilySpec{Path{args[0]}};
    if (name == "multipartite" || name == "complete-multipartite") {
        if (args.empty()) throw ParameterError("family 'multipartite' needs at least one part size");
        return FamilySpec{CompleteMultipartite{args}};
    }
    if (name == "star") return want(1), FamilySpec{Star{args[0]}};
    if (name == "kneser") return want(2), FamilySpec{Kneser{args[0], args[1]}};
    if (name == "petersen") return want(0), FamilySpec{Kneser{5, 2}};
    if (name == "paley") return want(1), FamilySpec{Paley{args[0]}};
    if (name == "hamming-band") return want(3), FamilySpec{HammingBand{args[0], args[1], args[2]}};
    if (name == "latin-square" || name == "latin") return want(2), FamilySpec{LatinSquare{args[0], args[1]}};
    if (name == "symplectic") return want(2), FamilySpec{Symplectic{args[0], args[1]}};
    if (name == "windmill") return want(2), FamilySpec{Windmill{args[0], args[1]}};
    if (name == "hanoi3" || name == "hanoi") return want(1), FamilySpec{Hanoi3{args[0]}};
    if (name == "tietze") return want(0), FamilySpec{Tietze{}};
    if (name == "shrikhande") return want(0), FamilySpec{Shrikhande{}};
    throw ParameterError("unknown family '" + name + "'");
}

std::string family_name(const FamilySpec& spec) {
    using namespace family;
    auto s = [](std::size_t v) { return std::to_string(v); };
    return std::visit(
        overloaded{
            [&](const Complete& f) { return "complete:" + s(f.n); },
            [&](const Empty& f) { return "empty:" + s(f.n); },
            [&](const Cycle& f) { return "cycle:" + s(f.n); },
            [&](const Path& f) { return "path:" + s(f.n); },
            [&](const CompleteMultipartite& f) {
                std::string out = "multipartite";
                for (auto p : f.parts) out += ":" + s(p);
                return out;
            },
            [&](const Star& f) { return "star:" + s(f.leaves); },
            [&](const Kneser& f) { return "kneser:" + s(f.n) + ":" + s(f.k); },
            [&](const Paley& f) { return "paley:" + s(f.q); },
            [&](const HammingBand& f) {
                return "hamming-band:" + s(f.length) + ":" + s(f.d_low) + ":" + s(f.d_high);
            },
            [&](const LatinSquare& f) { return "latin-square:" + s(f.m) + ":" + s(f.n); },
            [&](const Symplectic& f) { return "symplectic:" + s(f.n) + ":" + s(f.q); },
            [&](const Windmill& f) { return "windmill:" + s(f.k) + ":" + s(f.n); },
            [&](const Hanoi3& f) { return "hanoi3:" + s(f.n); },
            [&](const Tietze&) { return std::string("tietze"); },
            [&](const Shrikhande&) { return std::string("shrikhande"); },
        },
        spec);
}

}  // namespace thetakit
