#include "thetakit/theta.hpp"

#include <chrono>
#include <cmath>

#include "thetakit/errors.hpp"
#include "thetakit/isomorphism.hpp"
#include "thetakit/spectral.hpp"
#include "thetakit/srg.hpp"
#include "thetakit/structure.hpp"

namespace thetakit {

namespace {

constexpr double kSqrt2 = 1.41421356237309504880;
constexpr std::int64_t kSnapDenominator = 64;
constexpr double kSnapTolerance = 1e-5;

bool is_complete(const Graph& g) { return 2 * g.size() == g.order() * (g.order() - 1); }

using Triplets = std::vector<Eigen::Triplet<double>>;

ThetaValue exact_value(double value, Formulation f, Eigen::MatrixXd certificate) {
    ThetaValue v;
    v.value = value;
    v.formulation = f;
    v.certificate = std::move(certificate);
    v.rational = snap_rational(value, kSnapDenominator, kSnapTolerance);
    return v;
}

ThetaValue run_theta(const Graph& g, bool nonnegative, const ThetaSettings& settings) {
    const std::size_t n = g.order();
    if (n == 0) throw ParameterError("theta needs at least one vertex");
    const auto nd = static_cast<double>(n);
    const Formulation f = nonnegative ? Formulation::theta_prime : Formulation::theta;
    if (g.size() == 0) return exact_value(nd, f, Eigen::MatrixXd::Constant(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n), 1.0 / nd));
    if (is_complete(g)) return exact_value(1.0, f, Eigen::MatrixXd::Identity(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n)) / nd);

    auto start = std::chrono::steady_clock::now();
    ConicProblem p = theta_problem(g, nonnegative);
    ConicSolution sol = solve(p, settings.solver);
    ThetaValue v;
    v.value = sol.objective;
    v.formulation = f;
    v.status = sol.status;
    v.residuals = sol.residuals;
    v.iterations = sol.iterations;
    const auto len = static_cast<Eigen::Index>(svec_size(n));
    v.certificate = smat(sol.x.tail(len), n);
    v.rational = snap_rational(v.value, kSnapDenominator, kSnapTolerance);
    if (!nonnegative && settings.srg_cross_check)
        if (auto params = classify_srg(g)) v.closed_form = srg_theta(*params).theta_g.to_double();
    v.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return v;
}

}  // namespace

std::string_view to_string(Formulation f) {
    switch (f) {
        case Formulation::theta: return "theta";
        case Formulation::theta_prime: return "theta_prime";
        case Formulation::chi_v: return "chi_v";
        case Formulation::chi_sv: return "chi_sv";
        case Formulation::closed_form_srg: return "closed_form_srg";
        case Formulation::spectral_equality: return "spectral_equality";
        case Formulation::dual_form: return "dual_form";
    }
    return "?";
}

ConicProblem theta_problem(const Graph& g, bool nonnegative) {
    const std::size_t n = g.order();
    const auto edges = g.edges();
    std::vector<Edge> non_edges;
    if (nonnegative)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (!g.adjacent(i, j)) non_edges.emplace_back(i, j);

    ConicProblem p;
    p.sense = Sense::maximize;
    p.cone.nonneg_dim = non_edges.size();
    p.cone.psd_sides = {n};
    const std::size_t off = non_edges.size();
    const auto dim = static_cast<Eigen::Index>(p.cone.dimension());
    const auto rows = static_cast<Eigen::Index>(1 + edges.size() + non_edges.size());

    p.c = Eigen::VectorXd::Zero(dim);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i <= j; ++i)
            p.c(static_cast<Eigen::Index>(off + svec_index(i, j))) = i == j ? 1.0 : kSqrt2;

    Triplets t;
    Eigen::Index r = 0;
    for (std::size_t i = 0; i < n; ++i) t.emplace_back(r, static_cast<Eigen::Index>(off + svec_index(i, i)), 1.0);
    ++r;
    for (auto [i, j] : edges) t.emplace_back(r++, static_cast<Eigen::Index>(off + svec_index(i, j)), 1.0);
    for (std::size_t k = 0; k < non_edges.size(); ++k, ++r) {
        auto [i, j] = non_edges[k];
        t.emplace_back(r, static_cast<Eigen::Index>(off + svec_index(i, j)), 1.0 / kSqrt2);
        t.emplace_back(r, static_cast<Eigen::Index>(k), -1.0);
    }
    p.A.resize(rows, dim);
    p.A.setFromTriplets(t.begin(), t.end());
    p.b = Eigen::VectorXd::Zero(rows);
    p.b(0) = 1.0;
    return p;
}

ThetaValue lovasz_theta(const Graph& g, const ThetaSettings& settings) { return run_theta(g, false, settings); }

ThetaValue schrijver_theta(const Graph& g, const ThetaSettings& settings) { return run_theta(g, true, settings); }

ThetaValue vector_chromatic(const Graph& g, const ThetaSettings& settings) {
    if (g.size() == 0) return exact_value(1.0, Formulation::chi_v, {});
    ThetaValue v = schrijver_theta(complement(g), settings);
    v.formulation = Formulation::chi_v;
    return v;
}

ThetaValue strict_vector_chromatic(const Graph& g, const ThetaSettings& settings) {
    if (g.size() == 0) return exact_value(1.0, Formulation::chi_sv, {});
    ThetaValue v = lovasz_theta(complement(g), settings);
    v.formulation = Formulation::chi_sv;
    return v;
}

ThetaValue lovasz_theta_dual(const Graph& g, const ThetaSettings& settings) {
    const std::size_t n = g.order();
    if (n == 0) throw ParameterError("theta needs at least one vertex");
    auto start = std::chrono::steady_clock::now();
    std::vector<Edge> non_edges;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (!g.adjacent(i, j)) non_edges.emplace_back(i, j);

    // Variables: t (free), slack z_i >= 0, svec(Y).
    ConicProblem p;
    p.sense = Sense::minimize;
    p.cone.zero_dim = 1;
    p.cone.nonneg_dim = n;
    p.cone.psd_sides = {n};
    const std::size_t off = 1 + n;
    const auto dim = static_cast<Eigen::Index>(p.cone.dimension());
    const auto rows = static_cast<Eigen::Index>(non_edges.size() + n);
    p.c = Eigen::VectorXd::Zero(dim);
    p.c(0) = 1.0;
    p.b = Eigen::VectorXd::Zero(rows);
    Triplets t;
    Eigen::Index r = 0;
    for (auto [i, j] : non_edges) {
        t.emplace_back(r, static_cast<Eigen::Index>(off + svec_index(i, j)), 1.0 / kSqrt2);
        p.b(r++) = -1.0;
    }
    for (std::size_t i = 0; i < n; ++i, ++r) {
        t.emplace_back(r, static_cast<Eigen::Index>(off + svec_index(i, i)), 1.0);
        t.emplace_back(r, static_cast<Eigen::Index>(1 + i), 1.0);
        t.emplace_back(r, 0, -1.0);
    }
    p.A.resize(rows, dim);
    p.A.setFromTriplets(t.begin(), t.end());

    ConicSolution sol = solve(p, settings.solver);
    ThetaValue v;
    v.value = 1.0 + sol.objective;
    v.formulation = Formulation::dual_form;
    v.status = sol.status;
    v.residuals = sol.residuals;
    v.iterations = sol.iterations;
    v.certificate = smat(sol.x.tail(static_cast<Eigen::Index>(svec_size(n))), n);
    v.rational = snap_rational(v.value, kSnapDenominator, kSnapTolerance);
    v.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return v;
}

SpectralThetaBounds theta_spectral_bounds(const Graph& g, const Budget& budget) {
    const std::size_t n = g.order();
    if (n == 0 || g.size() == 0) throw ParameterError("spectral theta bounds need a nonempty graph");
    if (is_complete(g)) throw ParameterError("spectral theta bounds need a noncomplete graph");
    const std::size_t d0 = g.degree(0);
    for (std::size_t v = 1; v < n; ++v)
        if (g.degree(v) != d0) throw ParameterError("spectral theta bounds need a regular graph");

    const auto ev = eigenvalues(g, MatrixKind::A);
    const double nn = static_cast<double>(n), d = static_cast<double>(d0);
    const double l2 = ev[1], ln = ev.back();

    SpectralThetaBounds r;
    r.theta_g = {(nn - d + l2) / (1 + l2), -nn * ln / (d - ln), {}};
    r.theta_comp = {1 - d / ln, nn * (1 + l2) / (nn - d + l2), {}};

    const bool srg = classify_srg(g).has_value();
    const SymmetryReport sym = symmetry_report(g, budget);
    const SymmetryReport sym_c = symmetry_report(complement(g), budget);
    const bool vt = sym.vertex_transitive.value_or(false);
    const bool et = sym.edge_transitive.value_or(false);
    const bool et_c = sym_c.edge_transitive.value_or(false);

    auto flag = [](BoundInterval& b, const char* side, bool srg_case, bool sym_case, const char* sym_text) {
        if (srg_case) b.attained.push_back(std::string(side) + ": strongly regular");
        else if (sym_case) b.attained.push_back(std::string(side) + ": " + sym_text);
    };
    flag(r.theta_g, "lower", srg, vt && et_c, "complement vertex- and edge-transitive");
    flag(r.theta_g, "upper", srg, et, "edge-transitive");
    flag(r.theta_comp, "lower", srg, vt && et, "vertex- and edge-transitive");
    flag(r.theta_comp, "upper", srg, et_c, "complement edge-transitive");
    r.chi_v_bounds = r.theta_comp;
    return r;
}

bool ConsistencyReport::all_ok() const {
    for (const auto& c : checks)
        if (!c.ok) return false;
    return true;
}

ConsistencyReport theta_consistency_report(const Graph& g, const Graph& partner, const Budget& budget,
                                           const ThetaSettings& settings) {
    ConsistencyReport rep;
    auto stop = [&] {
        if (!budget.expired()) return false;
        rep.complete = false;
        return true;
    };
    const double n = static_cast<double>(g.order());
    const double th = lovasz_theta(g, settings).value;
    if (stop()) return rep;
    const double th_c = lovasz_theta(complement(g), settings).value;
    rep.checks.push_back({"theta(G) theta(complement) >= n", th * th_c, n, th * th_c >= n - 1e-3});
    if (stop()) return rep;

    const double th_h = lovasz_theta(partner, settings).value;
    if (stop()) return rep;
    const double th_sum = lovasz_theta(disjoint_union(g, partner), settings).value;
    rep.checks.push_back({"theta(G + H) = theta(G) + theta(H)", th_sum, th + th_h, std::fabs(th_sum - th - th_h) <= 1e-3});
    if (stop()) return rep;

    if (g.order() * partner.order() <= 64) {
        const double th_prod = lovasz_theta(strong_product(g, partner), settings).value;
        rep.checks.push_back(
            {"theta(G x H) = theta(G) theta(H)", th_prod, th * th_h, std::fabs(th_prod - th * th_h) <= 1e-2});
        if (stop()) return rep;
    }

    const double th_dual = lovasz_theta_dual(g, settings).value;
    rep.checks.push_back({"primal form = dual form", th, th_dual, std::fabs(th - th_dual) <= 1e-3});

    if (g.size() > 0) {
        auto ev = eigenvalues(g, MatrixKind::A);
        const double lower = 1 - ev.front() / ev.back();
        rep.checks.push_back({"1 - lambda_1 / lambda_n <= theta(complement)", lower, th_c, lower <= th_c + 1e-3});
    }
    return rep;
}

ConsistencyReport theta_consistency_report(const Graph& g, const Budget& budget, const ThetaSettings& settings) {
    return theta_consistency_report(g, g, budget, settings);
}

nlohmann::json to_json(const ThetaValue& v, std::string_view graph_id) {
    nlohmann::json j = {{"graph_id", std::string(graph_id)},
                        {"formulation", std::string(to_string(v.formulation))},
                        {"value", v.value},
                        {"rational_snap", nullptr},
                        {"status", std::string(to_string(v.status))},
                        {"iterations", v.iterations},
                        {"residuals", {{"primal", v.residuals.primal}, {"dual", v.residuals.dual}, {"gap", v.residuals.gap}}}};
    if (v.rational) j["rational_snap"] = to_string(*v.rational);
    if (v.closed_form) j["closed_form"] = *v.closed_form;
    return j;
}

}  // namespace thetakit
