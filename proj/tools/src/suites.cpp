#include "suites.hpp"

#include <chrono>
#include <cmath>
#include <numbers>
#include <sstream>

#include "thetakit/families.hpp"
#include "thetakit/invariants.hpp"
#include "thetakit/isomorphism.hpp"
#include "thetakit/spectral.hpp"
#include "thetakit/srg.hpp"
#include "thetakit/structure.hpp"
#include "thetakit/theta.hpp"

namespace thetakit::cli {

using thetakit::to_string;

namespace {

std::string num(double v) {
    std::ostringstream os;
    os.precision(8);
    os << v;
    return os.str();
}

std::string params_str(const SrgParams& p) {
    std::ostringstream os;
    os << p;
    return os.str();
}

class Recorder {
public:
    explicit Recorder(SuiteReport& r) : r_(r) {}

    void close(std::string item, std::string quantity, double expected, double observed, double tol) {
        const bool ok = std::isfinite(observed) && std::fabs(observed - expected) <= tol;
        r_.rows.push_back({std::move(item), std::move(quantity), num(expected), num(observed), tol,
                           ok ? RowStatus::pass : RowStatus::fail});
    }
    void exact(std::string item, std::string quantity, const std::string& expected, const std::string& observed) {
        r_.rows.push_back({std::move(item), std::move(quantity), expected, observed, 0,
                           expected == observed ? RowStatus::pass : RowStatus::fail});
    }
    void exact(std::string item, std::string quantity, long long expected, const Rational& observed) {
        exact(std::move(item), std::move(quantity), std::to_string(expected), to_string(observed));
    }
    void flag(std::string item, std::string quantity, bool expected, bool observed) {
        exact(std::move(item), std::move(quantity), expected ? "true" : "false", observed ? "true" : "false");
    }
    // An integer invariant that must have been computed exactly.
    void invariant(std::string item, std::string quantity, long long expected, const ExactOrBound& v) {
        if (!v.exact) {
            r_.rows.push_back({std::move(item), std::move(quantity), std::to_string(expected),
                               "[" + to_string(v.lower) + ", " + to_string(v.upper) + "]", 0, RowStatus::inconclusive});
            return;
        }
        exact(std::move(item), std::move(quantity), expected, v.value);
    }
    void push(SuiteRow row) { r_.rows.push_back(std::move(row)); }

private:
    SuiteReport& r_;
};

double theta_of(const Graph& g) { return lovasz_theta(g).value; }

// --------------------------------------------------------------------------------------------

void latin_table(const SuiteOptions& opt, Recorder& rec) {
    for (std::int64_t n = 3; n <= static_cast<std::int64_t>(opt.n_max); ++n) {
        const std::string item = "complement of LSG(3," + std::to_string(n) + ")";
        const SrgParams expected{n * n, (n - 2) * (n - 1), (n - 3) * (n - 3) + 1, (n - 3) * (n - 2)};
        const SrgParams comp = srg_complement(*family_params(srg_family::LatinSquare{3, n}).params);
        rec.exact(item, "parameters", params_str(expected), params_str(comp));
        const QuadSurd th = srg_theta(comp).theta_g;
        rec.exact(item, "theta (closed form)", std::to_string(n), th.to_string());

        const auto un = static_cast<std::size_t>(n);
        const Graph lsg = construct_family(family::LatinSquare{3, un});
        const Graph c = complement(lsg);
        const auto cls = classify_srg(c);
        rec.exact(item, "constructed graph parameters", params_str(expected), cls ? params_str(*cls) : "not strongly regular");
        CliqueOptions co;
        co.budget = Budget::milliseconds(opt.budget_ms);
        co.stop_at = un;
        const ExactOrBound clique = max_clique(lsg, co);
        // An independent set of size n in the complement plus theta = n pins the capacity.
        const bool pinned = clique.witness.size() >= un && th == QuadSurd(Rational(n));
        rec.exact(item, "capacity", std::to_string(n), pinned ? std::to_string(n) : "unresolved");
        if (n * n <= 64) rec.close(item, "theta (SDP)", static_cast<double>(n), theta_of(c), opt.tol);
    }
}

void symplectic_table(const SuiteOptions& opt, Recorder& rec) {
    struct Row {
        std::int64_t n, q;
        SrgParams comp;
        std::int64_t capacity;
    };
    const Row rows[] = {
        {3, 2, {63, 32, 16, 16}, 7},
        {3, 3, {364, 243, 162, 162}, 13},
        {3, 4, {1365, 1024, 768, 768}, 21},
        {3, 5, {3906, 3125, 2500, 2500}, 31},
        {3, 7, {19608, 16807, 14406, 14406}, 57},
        {4, 2, {255, 128, 64, 64}, 15},
        {4, 3, {3280, 2187, 1458, 1458}, 40},
        {4, 4, {21845, 16384, 12288, 12288}, 85},
    };
    for (const auto& r : rows) {
        const std::string item = "complement of Sp(" + std::to_string(2 * r.n) + "," + std::to_string(r.q) + ")";
        const SrgParams comp = srg_complement(*family_params(srg_family::Symplectic{r.n, r.q}).params);
        rec.exact(item, "parameters", params_str(r.comp), params_str(comp));
        std::int64_t formula = 1, qn = 1;
        for (std::int64_t i = 0; i < r.n; ++i) qn *= r.q;
        formula = (qn - 1) / (r.q - 1);
        rec.exact(item, "(q^n - 1)/(q - 1)", std::to_string(r.capacity), std::to_string(formula));
        rec.exact(item, "theta (closed form)", std::to_string(r.capacity), srg_theta(comp).theta_g.to_string());
        if (comp.n <= 63) {
            const Graph sp = construct_family(family::Symplectic{static_cast<std::size_t>(r.n), static_cast<std::size_t>(r.q)});
            const Graph c = complement(sp);
            const auto cls = classify_srg(c);
            rec.exact(item, "constructed graph parameters", params_str(r.comp), cls ? params_str(*cls) : "not strongly regular");
            CliqueOptions co;
            co.budget = Budget::milliseconds(opt.budget_ms);
            co.stop_at = static_cast<std::size_t>(r.capacity);
            const auto clique = max_clique(sp, co);
            rec.exact(item, "independent set of size theta", std::to_string(r.capacity), std::to_string(clique.witness.size()));
            rec.close(item, "theta (SDP)", static_cast<double>(r.capacity), theta_of(c), opt.tol);
        }
    }
}

void chromatic_table(const SuiteOptions& opt, Recorder& rec) {
    struct Row {
        std::string name;
        FamilySpec spec;
        double value;
    };
    std::vector<Row> rows = {
        {"pentagon", family::Cycle{5}, std::sqrt(5.0)},
        {"Petersen", family::Kneser{5, 2}, 2.5},
        {"Shrikhande", family::Shrikhande{}, 4.0},
    };
    for (std::size_t n = 4; n <= 12; ++n)
        rows.push_back({"C" + std::to_string(n), family::Cycle{n},
                        n % 2 == 0 ? 2.0 : 1.0 + 1.0 / std::cos(std::numbers::pi / static_cast<double>(n))});
    for (auto [n, k] : {std::pair<std::size_t, std::size_t>{5, 2}, {6, 2}, {7, 2}, {7, 3}, {8, 3}})
        rows.push_back({"Kneser(" + std::to_string(n) + "," + std::to_string(k) + ")", family::Kneser{n, k},
                        static_cast<double>(n) / static_cast<double>(k)});
    for (std::size_t q : {5, 13, 17, 29})
        rows.push_back({"Paley(" + std::to_string(q) + ")", family::Paley{q}, std::sqrt(static_cast<double>(q))});
    for (const auto& r : rows) {
        const Graph g = construct_family(r.spec);
        rec.close(r.name, "chi_v", r.value, vector_chromatic(g).value, opt.tol);
        rec.close(r.name, "chi_sv", r.value, strict_vector_chromatic(g).value, opt.tol);
    }
}

void schrijver_table(const SuiteOptions& opt, Recorder& rec) {
    struct Row {
        std::size_t ell, lo, hi;
        Rational chi_v, chi_sv;
    };
    const Row rows[] = {
        {4, 2, 2, 4, 4},
        {4, 2, 3, 6, 6},
        {4, 2, 4, 8, 8},
        {4, 3, 4, Rational(8, 3), Rational(8, 3)},
        {5, 2, 5, 16, 16},
        {5, 3, 4, 4, 4},
        {5, 3, 5, 4, Rational(16, 3)},
        {5, 4, 5, Rational(8, 3), Rational(8, 3)},
        {6, 2, 5, Rational(80, 3), Rational(80, 3)},
        {6, 2, 6, 32, 32},
        {6, 3, 6, 8, 8},
        {6, 4, 6, 4, Rational(16, 3)},
        {6, 5, 6, Rational(12, 5), Rational(12, 5)},
        {7, 3, 7, 16, 16},
        {7, 4, 7, 8, 8},
        {7, 5, 7, 3, Rational(32, 9)},
        {7, 6, 7, Rational(12, 5), Rational(12, 5)},
    };
    for (const auto& r : rows) {
        if (r.ell > opt.ell_max) continue;
        const std::string item =
            "H(" + std::to_string(r.ell) + "," + std::to_string(r.lo) + "," + std::to_string(r.hi) + ")";
        const Graph h = construct_family(family::HammingBand{r.ell, r.lo, r.hi});
        rec.close(item, "chi_v", to_double(r.chi_v), vector_chromatic(h).value, opt.tol);
        rec.close(item, "chi_sv", to_double(r.chi_sv), strict_vector_chromatic(h).value, opt.tol);
    }
}

void counterexample(const SuiteOptions& opt, Recorder& rec) {
    const std::string item = "complement of H(5,3,5)";
    const Graph g = complement(construct_family(family::HammingBand{5, 3, 5}));
    const double tp = schrijver_theta(g).value;
    rec.close(item, "theta'", 4.0, tp, opt.tol);
    rec.close(item, "theta", 16.0 / 3.0, theta_of(g), opt.tol);
    rec.invariant(item, "alpha", 4, independence_number(g, Budget::milliseconds(opt.budget_ms)));

    const Graph p = strong_product(g, g);
    const auto set = local_search_independent_set(p, 20, Budget::milliseconds(opt.budget_ms), opt.seed,
                                                  std::numeric_limits<std::size_t>::max());
    bool independent = true;
    for (std::size_t i = 0; i < set.size(); ++i)
        for (std::size_t j = i + 1; j < set.size(); ++j) independent = independent && !p.adjacent(set[i], set[j]);
    const std::string prod = item + " squared (strong product)";
    if (independent && set.size() >= 20) {
        rec.push({prod, "independent set size", ">= 20", std::to_string(set.size()), 0, RowStatus::pass});
        const double root = std::sqrt(static_cast<double>(set.size()));
        rec.push({item, "capacity lower bound exceeds theta'", "> " + num(tp), num(root), 0,
                  root > tp + 1e-3 ? RowStatus::pass : RowStatus::fail});
    } else {
        rec.push({prod, "independent set size", ">= 20", std::to_string(set.size()) + (independent ? "" : " (not independent)"),
                  0, independent ? RowStatus::inconclusive : RowStatus::fail});
    }
}

IntPolynomial distinguished_poly() {
    // x^10 - 20x^8 - 16x^7 + 110x^6 + 136x^5 - 180x^4 - 320x^3 + 9x^2 + 200x + 80
    return IntPolynomial({80, 200, 9, -320, -180, 136, 110, -16, -20, 0, 1});
}

void nics_construction(const SuiteOptions& opt, Recorder& rec) {
    const NicsSearch search = enumerate_and_find_nics(10, 4, MatrixKind::A, Budget::milliseconds(opt.budget_ms * 10));
    const IntPolynomial target = distinguished_poly();
    const NicsGroup* group = nullptr;
    for (const auto& grp : search.groups)
        if (grp.poly == target && grp.graphs.size() == 2) group = &grp;
    rec.exact("4-regular graphs on 10 vertices", "pair with the distinguished polynomial", "found",
              group ? "found" : "missing");
    if (!group) return;
    Graph g2 = group->graphs[0], h2 = group->graphs[1];
    if (theta_of(g2) > theta_of(h2)) std::swap(g2, h2);
    rec.close("G2", "theta", 3.23607, theta_of(g2), opt.tol);
    rec.close("H2", "theta", 3.26880, theta_of(h2), opt.tol);
    rec.close("G2", "theta of complement", 3.19656, theta_of(complement(g2)), opt.tol);
    rec.close("H2", "theta of complement", 3.13198, theta_of(complement(h2)), opt.tol);

    for (std::size_t k = 1; k <= opt.k_max; ++k) {
        const Graph g1 = k == 1 ? construct_family(family::Complete{2}) : construct_family(family::Cycle{k + 1});
        const Graph a = split_join(SplitJoinKind::NS, g1, g2), b = split_join(SplitJoinKind::NS, g1, h2);
        const std::string item = "k=" + std::to_string(k);
        for (MatrixKind kind : kAllMatrixKinds)
            rec.flag(item, std::string(to_string(kind)) + "-cospectral", true,
                     char_poly_exact(a, kind) == char_poly_exact(b, kind));
        rec.flag(item, "isomorphic", false, is_isomorphic(a, b));
        const auto kk = static_cast<long long>(k);
        const Budget budget = Budget::milliseconds(opt.budget_ms);
        for (const auto* x : {&a, &b}) {
            const std::string side = item + (x == &a ? " G" : " H");
            rec.invariant(side, "alpha", kk + 4, independence_number(*x, budget));
            rec.invariant(side, "omega", 5, clique_number(*x, budget));
            rec.invariant(side, "chi", k % 2 == 1 ? 6 : 7, chromatic_number(*x, budget));
        }
        const double ta = theta_of(a), tb = theta_of(b);
        rec.close(item + " G", "theta", static_cast<double>(k) + 4.23607, ta, opt.tol);
        rec.close(item + " H", "theta", static_cast<double>(k) + 4.26880, tb, opt.tol);
        rec.close(item, "theta gap", 0.0327, tb - ta, opt.tol);
    }
}

void chang(const SuiteOptions& opt, Recorder& rec) {
    const Graph k8 = construct_family(family::Complete{8});
    const auto edges = k8.edges();
    auto switched = [&](std::vector<Edge> cut) {
        VertexSet s(edges.size());
        for (auto e : cut) s.set(static_cast<std::size_t>(std::find(edges.begin(), edges.end(), e) - edges.begin()));
        return seidel_switch(line_graph(k8), s);
    };
    const std::vector<std::pair<std::string, Graph>> graphs = {
        {"L(K8)", line_graph(k8)},
        {"Chang 4K2", switched({{0, 1}, {2, 3}, {4, 5}, {6, 7}})},
        {"Chang C3+C5", switched({{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {3, 7}})},
        {"Chang C8", switched({{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {0, 7}})},
    };
    const SrgParams chang_params{28, 12, 6, 4};
    const SrgTheta closed = srg_theta(chang_params);
    rec.exact("srg(28,12,6,4)", "theta (closed form)", "4", closed.theta_g.to_string());
    rec.exact("srg(28,12,6,4)", "theta of complement (closed form)", "7", closed.theta_comp.to_string());
    const IntPolynomial p0 = char_poly_exact(graphs[0].second, MatrixKind::A);
    for (std::size_t i = 0; i < graphs.size(); ++i) {
        const auto& [name, g] = graphs[i];
        const auto cls = classify_srg(g);
        rec.exact(name, "parameters", params_str(chang_params), cls ? params_str(*cls) : "not strongly regular");
        rec.flag(name, "A-cospectral with L(K8)", true, char_poly_exact(g, MatrixKind::A) == p0);
        rec.close(name, "theta", 4.0, theta_of(g), opt.tol);
        rec.close(name, "theta of complement", 7.0, theta_of(complement(g)), opt.tol);
        for (std::size_t j = i + 1; j < graphs.size(); ++j)
            rec.flag(name + " vs " + graphs[j].first, "isomorphic", false, is_isomorphic(g, graphs[j].second));
    }
}

void tietze(const SuiteOptions& opt, Recorder& rec) {
    const std::string item = "Tietze";
    const Graph g = construct_family(family::Tietze{});
    const auto ev = eigenvalues(g, MatrixKind::A);
    rec.close(item, "smallest adjacency eigenvalue", -2.30278, ev.back(), 1e-5);
    const double d = 3, n = 12;
    rec.close(item, "spectral theta upper bound", 5.21110, -n * ev.back() / (d - ev.back()), 1e-5);
    const double th = theta_of(g);
    rec.close(item, "theta", 5.0, th, opt.tol);
    const Budget budget = Budget::milliseconds(opt.budget_ms);
    const ExactOrBound a = independence_number(g, budget);
    rec.invariant(item, "alpha", 5, a);
    rec.invariant(item, "omega", 3, clique_number(g, budget));
    rec.invariant(item, "chi", 3, chromatic_number(g, budget));
    const bool pinned = a.exact && a.value == 5 && std::fabs(th - 5) <= opt.tol;
    rec.exact(item, "capacity", "5", pinned ? "5" : "unresolved");
    rec.flag(item, "strongly regular", false, classify_srg(g).has_value());
    const auto sym = symmetry_report(g, budget);
    if (sym.edge_transitive) rec.flag(item, "edge-transitive", false, *sym.edge_transitive);
    else rec.push({item, "edge-transitive", "false", "unresolved", 0, RowStatus::inconclusive});
}

void hanoi_windmill(const SuiteOptions& opt, Recorder& rec) {
    const double bound_tol = 1e-4;
    struct Row {
        std::string name;
        FamilySpec spec;
        long long chi;
        double galtman, guo_sapiro;
        bool sdp, lp;
    };
    const Row rows[] = {
        {"Hanoi3(3)", family::Hanoi3{3}, 3, 2.4677, 2.4334, true, true},
        {"Hanoi3(4)", family::Hanoi3{4}, 3, 2.4927, 2.4048, true, false},
        {"Hanoi3(5)", family::Hanoi3{5}, 3, 2.4984, 2.3957, false, false},
        {"W(2,8)", family::Windmill{2, 8}, 2, 2.0, 2.0, true, true},
        {"W(3,8)", family::Windmill{3, 8}, 3, 2.2832, 2.3450, true, true},
        {"W(4,8)", family::Windmill{4, 8}, 4, 2.5, 3.0, true, true},
        {"W(5,8)", family::Windmill{5, 8}, 5, 2.6893, 3.7259, true, false},
    };
    for (const auto& r : rows) {
        const Graph g = construct_family(r.spec);
        const BoundReport b = bound_library(g);
        rec.close(r.name, "1 - lambda_1/lambda_n", r.galtman, b.find("galtman_chi_v")->value, bound_tol);
        rec.close(r.name, "1 + max(s+/s-, s-/s+)", r.guo_sapiro, b.find("guo_sapiro_chi_f")->value, bound_tol);
        const Budget budget = Budget::milliseconds(opt.budget_ms);
        rec.invariant(r.name, "chi", r.chi, chromatic_number(g, budget));
        rec.invariant(r.name, "omega", r.chi, clique_number(g, budget));
        if (r.sdp) rec.close(r.name, "theta of complement", static_cast<double>(r.chi), theta_of(complement(g)), opt.tol);
        if (r.lp) {
            const ExactOrBound f = fractional_chromatic(g, budget);
            if (f.exact) rec.exact(r.name, "chi_f", r.chi, f.value);
            else rec.push({r.name, "chi_f", std::to_string(r.chi), to_string(f.value), 0, RowStatus::inconclusive});
        }
    }
}

void srg_named(const SuiteOptions&, Recorder& rec) {
    struct Row {
        std::string name;
        SrgParams p;
        QuadSurd theta_comp;
        std::optional<QuadSurd> theta;
    };
    const Row rows[] = {
        {"pentagon", {5, 2, 0, 1}, QuadSurd::sqrt(5), QuadSurd::sqrt(5)},
        {"Petersen", {10, 3, 0, 1}, Rational(5, 2), Rational(4)},
        {"Shrikhande", {16, 6, 2, 2}, Rational(4), Rational(4)},
        {"Schlaefli", {27, 16, 10, 8}, Rational(9), Rational(3)},
        {"Chang", {28, 12, 6, 4}, Rational(7), Rational(4)},
        {"Hoffman-Singleton", {50, 7, 0, 1}, Rational(10, 3), std::nullopt},
        {"Sims-Gewirtz", {56, 10, 0, 2}, Rational(7, 2), std::nullopt},
        {"Gritsenko", {65, 32, 15, 16}, QuadSurd::sqrt(65), std::nullopt},
        {"Mesner", {77, 16, 0, 4}, Rational(11, 3), std::nullopt},
        {"Brouwer-Haemers", {81, 20, 1, 6}, Rational(27, 7), std::nullopt},
        {"Higman-Sims", {100, 22, 0, 6}, Rational(15, 4), std::nullopt},
        {"Hall-Janko", {100, 36, 14, 12}, Rational(10), Rational(10)},
        {"Cameron", {231, 30, 9, 3}, Rational(11), std::nullopt},
        {"Mathon-Rosa", {280, 117, 44, 52}, Rational(10), std::nullopt},
        {"Janko-Kharaghani-Tonchev", {324, 153, 72, 72}, Rational(18), std::nullopt},
    };
    for (const auto& r : rows) {
        const std::string item = r.name + " " + params_str(r.p);
        rec.flag(item, "feasible", true, srg_feasible(r.p).feasible);
        const SrgTheta th = srg_theta(r.p);
        rec.exact(item, "chi_v = chi_sv = theta of complement", r.theta_comp.to_string(), th.theta_comp.to_string());
        const SrgVectorChromatic vc = srg_vector_chromatic(r.p);
        rec.exact(item, "vector chromatic number", r.theta_comp.to_string(), vc.chi_g.to_string());
        if (r.theta) rec.exact(item, "theta", r.theta->to_string(), th.theta_g.to_string());
    }
}

}  // namespace

std::string_view to_string(SuiteId id) {
    switch (id) {
        case SuiteId::latin_table: return "latin-table";
        case SuiteId::symplectic_table: return "symplectic-table";
        case SuiteId::chromatic_table: return "chromatic-table";
        case SuiteId::schrijver_table: return "schrijver-table";
        case SuiteId::counterexample: return "counterexample";
        case SuiteId::nics_construction: return "nics-construction";
        case SuiteId::chang: return "chang";
        case SuiteId::tietze: return "tietze";
        case SuiteId::hanoi_windmill: return "hanoi-windmill";
        case SuiteId::srg_named: return "srg-named";
    }
    return "?";
}

std::optional<SuiteId> parse_suite(std::string_view text) {
    for (SuiteId id : kAllSuites)
        if (to_string(id) == text) return id;
    return std::nullopt;
}

SuiteOptions suite_options_from_json(const nlohmann::json& j, SuiteOptions base) {
    if (!j.is_object()) throw std::invalid_argument("suite configuration must be a JSON object");
    for (const auto& [key, value] : j.items()) {
        if (key == "tol") base.tol = value.get<double>();
        else if (key == "budget_ms") base.budget_ms = value.get<std::int64_t>();
        else if (key == "n_max") base.n_max = value.get<std::size_t>();
        else if (key == "k_max") base.k_max = value.get<std::size_t>();
        else if (key == "ell_max") base.ell_max = value.get<std::size_t>();
        else if (key == "seed") base.seed = value.get<std::uint64_t>();
        else throw std::invalid_argument("unknown suite configuration key: " + key);
    }
    return base;
}

bool SuiteReport::passed() const {
    return std::all_of(rows.begin(), rows.end(), [](const SuiteRow& r) { return r.status == RowStatus::pass; });
}

SuiteReport run_suite(SuiteId id, const SuiteOptions& options) {
    const auto start = std::chrono::steady_clock::now();
    SuiteReport report;
    report.suite = std::string(to_string(id));
    Recorder rec(report);
    switch (id) {
        case SuiteId::latin_table: latin_table(options, rec); break;
        case SuiteId::symplectic_table: symplectic_table(options, rec); break;
        case SuiteId::chromatic_table: chromatic_table(options, rec); break;
        case SuiteId::schrijver_table: schrijver_table(options, rec); break;
        case SuiteId::counterexample: counterexample(options, rec); break;
        case SuiteId::nics_construction: nics_construction(options, rec); break;
        case SuiteId::chang: chang(options, rec); break;
        case SuiteId::tietze: tietze(options, rec); break;
        case SuiteId::hanoi_windmill: hanoi_windmill(options, rec); break;
        case SuiteId::srg_named: srg_named(options, rec); break;
    }
    report.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return report;
}

namespace {

std::string_view status_name(RowStatus s) {
    switch (s) {
        case RowStatus::pass: return "pass";
        case RowStatus::fail: return "fail";
        case RowStatus::inconclusive: return "inconclusive";
    }
    return "?";
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

}  // namespace

nlohmann::json to_json(const SuiteReport& r) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& row : r.rows)
        rows.push_back({{"item", row.item},
                        {"quantity", row.quantity},
                        {"expected", row.expected},
                        {"observed", row.observed},
                        {"tolerance", row.tolerance},
                        {"status", std::string(status_name(row.status))}});
    return {{"schema", "1"}, {"suite", r.suite}, {"passed", r.passed()}, {"rows", rows}};
}

std::string to_csv(const SuiteReport& r) {
    std::ostringstream os;
    os << "suite,item,quantity,expected,observed,tolerance,status\n";
    for (const auto& row : r.rows)
        os << csv_field(r.suite) << ',' << csv_field(row.item) << ',' << csv_field(row.quantity) << ','
           << csv_field(row.expected) << ',' << csv_field(row.observed) << ',' << row.tolerance << ','
           << status_name(row.status) << '\n';
    return os.str();
}

}  // namespace thetakit::cli
