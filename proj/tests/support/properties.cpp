#include "properties.hpp"

#include <cmath>
#include <random>
#include <sstream>

#include "oracles.hpp"
#include "thetakit/families.hpp"
#include "thetakit/graph_io.hpp"
#include "thetakit/invariants.hpp"
#include "thetakit/isomorphism.hpp"
#include "thetakit/spectral.hpp"
#include "thetakit/structure.hpp"
#include "thetakit/theta.hpp"

namespace props {

using namespace thetakit;

void Tally::merge(const Tally& other) {
    graphs += other.graphs;
    checks += other.checks;
    violations.insert(violations.end(), other.violations.begin(), other.violations.end());
}

namespace {

class Recorder {
public:
    Recorder(Tally& t, const Graph& g) : t_(t), g6_(encode_graph6(g)) {}

    void check(const std::string& name, bool ok, double lhs = 0, double rhs = 0) {
        ++t_.checks;
        if (!ok) t_.violations.push_back({g6_, name, lhs, rhs});
    }
    void le(const std::string& name, double a, double b, double tol) { check(name, a <= b + tol, a, b); }
    void near(const std::string& name, double a, double b, double tol) { check(name, std::fabs(a - b) <= tol, a, b); }

private:
    Tally& t_;
    std::string g6_;
};

double as_double(const BigInt& v) { return v.convert_to<double>(); }

void check_spectral(const Graph& g, Recorder& rec) {
    const std::size_t n = g.order();
    const auto m = static_cast<long long>(g.size());
    const auto tri = static_cast<long long>(oracle::triangles(g));

    const IntPolynomial pa = char_poly_exact(g, MatrixKind::A);
    const auto& c = pa.coeffs();
    rec.check("A polynomial is monic and integral", pa.denominator() == 1 && c.size() == n + 1 && c[n] == 1);
    if (c.size() == n + 1) {
        if (n >= 1) rec.check("A: x^(n-1) coefficient is minus the trace", c[n - 1] == 0, as_double(c[n - 1]), 0);
        if (n >= 2) rec.check("A: x^(n-2) coefficient is minus the edge count", c[n - 2] == -m, as_double(c[n - 2]), -m);
        if (n >= 3)
            rec.check("A: x^(n-3) coefficient is minus twice the triangle count", c[n - 3] == -2 * tri, as_double(c[n - 3]),
                      -2.0 * tri);
    }
    for (MatrixKind kind : {MatrixKind::L, MatrixKind::Q}) {
        const IntPolynomial pk = char_poly_exact(g, kind);
        const auto& ck = pk.coeffs();
        if (n >= 1 && ck.size() == n + 1)
            rec.check(std::string(to_string(kind)) + ": trace equals the degree sum", ck[n - 1] == -2 * m,
                      as_double(ck[n - 1]), -2.0 * m);
    }
    for (MatrixKind kind : kAllMatrixKinds) {
        const IntPolynomial p = char_poly_exact(g, kind);
        const auto num = oracle::char_poly_numeric(g, kind);
        double scale = 1, worst = 0;
        for (std::size_t i = 0; i < num.size(); ++i) scale = std::max(scale, std::fabs(num[i]));
        for (std::size_t i = 0; i < num.size(); ++i) {
            const double exact = i < p.coeffs().size() ? as_double(p.coeffs()[i]) / as_double(p.denominator()) : 0;
            worst = std::max(worst, std::fabs(exact - num[i]));
        }
        rec.le(std::string(to_string(kind)) + ": exact polynomial matches the eigenvalues", worst, 1e-6 * scale, 0);
    }

    const double trees = as_double(count_spanning_trees(g));
    rec.near("spanning trees match the reduced Laplacian determinant", trees, oracle::spanning_trees_numeric(g),
             1e-6 * std::max(1.0, trees));
    if (n >= 1) {
        const auto mu = eigenvalues(g, MatrixKind::L);
        double prod = 1;
        for (std::size_t i = 1; i < mu.size(); ++i) prod *= mu[i];
        rec.near("spanning trees match the Laplacian eigenvalue product", trees, prod / static_cast<double>(n),
                 1e-6 * std::max(1.0, trees));
    }

    std::mt19937_64 rng(n * 1000003 + static_cast<std::size_t>(m));
    const auto perm = oracle::random_permutation(n, rng);
    const Graph h = permute(g, perm);
    rec.check("isomorphic to a relabelling", is_isomorphic(g, h));
    rec.check("polynomial invariant under relabelling", char_poly_exact(h, MatrixKind::A) == pa);
}

}  // namespace

Tally check_graph(const Graph& g, const Graph& partner, const Options& opt) {
    Tally t;
    t.graphs = 1;
    Recorder rec(t, g);
    const std::size_t n = g.order();
    if (n == 0) return t;
    const double nn = static_cast<double>(n);
    const double tol = opt.sdp_tol;
    const Graph c = complement(g);

    const auto a = static_cast<double>(oracle::alpha(g));
    const auto w = static_cast<double>(oracle::omega(g));
    const auto chi = static_cast<double>(oracle::chromatic(g));
    const auto chi_c = static_cast<double>(oracle::chromatic(c));

    const ExactOrBound lib_a = independence_number(g), lib_w = clique_number(g), lib_chi = chromatic_number(g);
    rec.check("independence number matches exhaustive search", lib_a.exact && to_double(lib_a.value) == a,
              to_double(lib_a.value), a);
    rec.check("clique number matches exhaustive search", lib_w.exact && to_double(lib_w.value) == w, to_double(lib_w.value),
              w);
    rec.check("chromatic number matches exhaustive search", lib_chi.exact && to_double(lib_chi.value) == chi,
              to_double(lib_chi.value), chi);

    const ExactOrBound f = fractional_chromatic(g), fc = fractional_chromatic(c);
    rec.check("fractional chromatic number certified", f.exact && fc.exact);
    const double chi_f = to_double(f.value), chi_fc = to_double(fc.value);

    const double th = lovasz_theta(g).value, thp = schrijver_theta(g).value;
    const double thc = lovasz_theta(c).value, thpc = schrijver_theta(c).value;
    rec.le("alpha <= theta'", a, thp, tol);
    rec.le("theta' <= theta", thp, th, tol);
    rec.le("theta <= chi_f(complement)", th, chi_fc, tol);
    rec.le("chi_f(complement) <= chi(complement)", chi_fc, chi_c, 0);
    rec.le("omega <= chi_v", w, thpc, tol);
    rec.le("chi_v <= chi_sv", thpc, thc, tol);
    rec.le("chi_sv <= chi_f", thc, chi_f, tol);
    rec.le("chi_f <= chi", chi_f, chi, 0);
    rec.le("n <= theta * theta(complement)", nn, th * thc, tol);
    rec.near("primal and dual theta agree", th, lovasz_theta_dual(g).value, tol);

    const double th_h = lovasz_theta(partner).value;
    rec.near("theta adds over disjoint union", lovasz_theta(disjoint_union(g, partner)).value, th + th_h, tol);
    if (n <= opt.product_n_max && partner.order() <= opt.product_n_max)
        rec.near("theta multiplies over strong product", lovasz_theta(strong_product(g, partner)).value, th * th_h,
                 opt.product_tol);

    check_spectral(g, rec);

    std::optional<double> per;
    if (n <= 9) {
        const BigInt p = oracle::adjacency_permanent(g);
        rec.check("permanent matches permutation sum", adjacency_permanent(g) == p, as_double(adjacency_permanent(g)),
                  as_double(p));
        per = as_double(p);
    }
    const double cut = static_cast<double>(oracle::max_cut(g));
    const MaxCut mc = max_cut_exact(g, thpc);
    rec.check("max cut matches exhaustive search", static_cast<double>(mc.value) == cut, static_cast<double>(mc.value), cut);
    const double surplus = cut - static_cast<double>(g.size()) / 2;

    const BoundReport rep = bound_library(g, ThetaPair{th, thc});
    for (const auto& e : rep.entries) {
        if (!e.applicable) continue;
        std::optional<double> exact;
        double slack = 1e-7 * std::max(1.0, std::fabs(e.value));
        switch (e.target) {
            case BoundTarget::alpha: exact = a; break;
            case BoundTarget::omega: exact = w; break;
            case BoundTarget::chi: exact = chi; break;
            case BoundTarget::chi_f: exact = chi_f; break;
            case BoundTarget::chi_v: exact = thpc, slack = tol; break;
            case BoundTarget::theta: exact = th, slack = tol; break;
            case BoundTarget::surplus: exact = surplus; break;
            case BoundTarget::permanent: exact = per; break;
        }
        if (!exact) continue;
        if (e.id.ends_with("_from_theta")) slack = std::max(slack, tol);
        if (e.side == BoundSide::lower) rec.le("bound " + e.id + " below the exact value", e.value, *exact, slack);
        else rec.le("bound " + e.id + " above the exact value", *exact, e.value, slack);
    }
    return t;
}

Tally random_graph_suite(std::size_t count, std::size_t n_max, std::uint64_t seed, const Options& options) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> order(1, n_max);
    std::uniform_real_distribution<double> density(0.1, 0.9);
    Tally all;
    Graph partner = construct_family(family::Cycle{5});
    for (std::size_t i = 0; i < count; ++i) {
        const std::size_t n = order(rng);
        const Graph g = oracle::random_graph(n, density(rng), rng);
        all.merge(check_graph(g, partner, options));
        partner = g;
    }
    return all;
}

Tally named_graph_suite(const Options& options) {
    const char* specs[] = {"cycle:5",  "cycle:7",     "petersen", "complete:4",   "multipartite:3:3", "path:5",
                           "star:4",   "kneser:6:2",  "paley:13", "tietze",       "shrikhande",       "hanoi3:2",
                           "windmill:3:4", "empty:3", "complete:5", "hamming-band:4:2:3"};
    Tally all;
    const Graph partner = construct_family(family::Cycle{5});
    for (const char* s : specs) all.merge(check_graph(construct_family(parse_family(s)), partner, options));

    Tally cayley;
    for (std::size_t n = 1; n <= 8; ++n) {
        const Graph k = construct_family(family::Complete{n});
        Recorder rec(cayley, k);
        const BigInt expected = n == 1 ? BigInt(1) : boost::multiprecision::pow(BigInt(n), static_cast<unsigned>(n - 2));
        rec.check("spanning trees of K_n equal n^(n-2)", count_spanning_trees(k) == expected, as_double(count_spanning_trees(k)),
                  as_double(expected));
    }
    all.merge(cayley);
    return all;
}

TriangleFreeSummary triangle_free_suite(std::size_t count, std::size_t n_max, std::size_t alpha_n_max,
                                        std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0, 1);
    TriangleFreeSummary out;
    out.min_theta_margin = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < count; ++i) {
        Graph g;
        if (i % 2 == 0) {
            std::uniform_int_distribution<std::size_t> half(2, n_max / 2);
            g = oracle::random_bipartite_double(half(rng), 0.2 + 0.5 * unit(rng), 0.5 + 0.5 * unit(rng), rng);
        } else {
            std::uniform_int_distribution<std::size_t> order(4, n_max);
            g = oracle::random_triangle_free(order(rng), rng);
        }
        Tally t;
        t.graphs = 1;
        Recorder rec(t, g);
        const double nn = static_cast<double>(g.order());
        rec.check("graph is triangle-free", structure_report(g).triangle_free);
        const double th = lovasz_theta(g).value;
        const double floor_value = std::pow(nn, 2.0 / 3.0) / 16;
        out.min_theta_margin = std::min(out.min_theta_margin, th - floor_value);
        rec.le("n^(2/3)/16 <= theta", floor_value, th, 1e-3);
        const BoundReport rep = bound_library(g);
        const BoundEntry* shearer = rep.find("shearer_alpha");
        rec.check("triangle-free bounds applicable", shearer && shearer->applicable);
        if (g.order() <= alpha_n_max) {
            const auto a = static_cast<double>(oracle::alpha(g));
            rec.le("Shearer bound <= alpha", shearer ? shearer->value : 0, a, 1e-9);
            rec.le("alpha <= theta", a, th, 1e-3);
            const ExactOrBound f = fractional_chromatic(g);
            const BoundEntry* ps = rep.find("pirot_sereni_chi_f");
            if (f.exact && ps && ps->applicable) rec.le("chi_f <= Pirot-Sereni bound", to_double(f.value), ps->value, 1e-9);
            ++out.alpha_checked;
        }
        out.tally.merge(t);
    }
    return out;
}

std::string describe(const Violation& v) {
    std::ostringstream os;
    os << v.property << " on " << v.graph6 << ": " << v.lhs << " vs " << v.rhs;
    return os.str();
}

}  // namespace props
