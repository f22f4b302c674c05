#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "graph_source.hpp"
#include "suites.hpp"
#include "thetakit/errors.hpp"
#include "thetakit/graph_io.hpp"
#include "thetakit/invariants.hpp"
#include "thetakit/isomorphism.hpp"
#include "thetakit/spectral.hpp"
#include "thetakit/structure.hpp"
#include "thetakit/theta.hpp"

namespace tk = thetakit;
using namespace thetakit::cli;
using nlohmann::json;

namespace {

struct Flags {
    GraphSource source, other;
    std::string format = "json";
    std::string out;
    std::string config;
    std::string suite;
    SuiteOptions suite_options;
    std::size_t k_max = 3;
};

void add_source(CLI::App& cmd, GraphSource& src, const std::string& prefix = "") {
    cmd.add_option("--" + prefix + "family", src.family, "family spec, e.g. kneser:5:2");
    cmd.add_option("--" + prefix + "graph6", src.graph6, "graph6 string");
    cmd.add_option("--" + prefix + "edges", src.edges, "edge-list file");
}

void add_budget(CLI::App& cmd, Flags& f) {
    cmd.add_option("--budget-ms", f.suite_options.budget_ms, "time budget for heavy computations")
        ->check(CLI::PositiveNumber);
    cmd.add_option("--seed", f.suite_options.seed, "random seed");
}

// Flattens nested objects and arrays into "path,value" rows.
void flatten(const json& j, const std::string& path, std::ostream& os) {
    if (j.is_object()) {
        for (const auto& [k, v] : j.items()) flatten(v, path.empty() ? k : path + "." + k, os);
    } else if (j.is_array()) {
        for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], path + "." + std::to_string(i), os);
    } else {
        os << path << ',' << (j.is_string() ? j.get<std::string>() : j.dump()) << '\n';
    }
}

void emit(const Flags& f, const std::string& text) {
    if (f.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream os(f.out);
    if (!os) throw UsageError("cannot write " + f.out);
    os << text;
}

void emit_json(const Flags& f, json j) {
    if (f.format == "csv") {
        std::ostringstream os;
        os << "key,value\n";
        flatten(j, "", os);
        emit(f, os.str());
    } else {
        j["schema"] = "1";
        emit(f, j.dump(2) + "\n");
    }
}

tk::Budget budget_of(const Flags& f) { return tk::Budget::milliseconds(f.suite_options.budget_ms); }

int run_construct(const Flags& f) {
    const LoadedGraph lg = load_graph(f.source);
    if (f.format == "graph6") {
        emit(f, tk::encode_graph6(lg.graph) + "\n");
    } else if (f.format == "edges") {
        std::ostringstream os;
        tk::write_edge_list(os, lg.graph);
        emit(f, os.str());
    } else {
        json edges = json::array();
        for (auto [i, j] : lg.graph.edges()) edges.push_back({i, j});
        emit_json(f, {{"graph", lg.id}, {"n", lg.graph.order()}, {"edges", edges},
                      {"graph6", tk::encode_graph6(lg.graph)}});
    }
    return 0;
}

int run_invariants(const Flags& f) {
    const LoadedGraph lg = load_graph(f.source);
    const tk::Graph& g = lg.graph;
    const tk::Budget budget = budget_of(f);
    const auto s = tk::structure_report(g);
    json j = {{"graph", lg.id},
              {"n", g.order()},
              {"edges", s.num_edges},
              {"regular", s.regular},
              {"bipartite", s.bipartite},
              {"triangle_free", s.triangle_free},
              {"connected", s.connected},
              {"girth", s.girth ? json(*s.girth) : json(nullptr)}};
    j["alpha"] = tk::to_json(tk::independence_number(g, budget));
    j["omega"] = tk::to_json(tk::clique_number(g, budget));
    j["chi"] = tk::to_json(tk::chromatic_number(g, budget));
    if (g.order() <= 30) j["chi_f"] = tk::to_json(tk::fractional_chromatic(g, budget));
    std::optional<tk::ThetaPair> pair;
    if (g.order() > 0) {
        pair = tk::ThetaPair{tk::lovasz_theta(g).value, tk::lovasz_theta(tk::complement(g)).value};
        j["theta"] = pair->theta_g;
        j["theta_complement"] = pair->theta_comp;
    }
    j["bounds"] = tk::to_json(tk::bound_library(g, pair));
    emit_json(f, j);
    return 0;
}

int run_theta(const Flags& f) {
    const LoadedGraph lg = load_graph(f.source);
    const tk::Graph& g = lg.graph;
    const tk::Graph c = tk::complement(g);
    const auto th = tk::lovasz_theta(g), tp = tk::schrijver_theta(g);
    const auto cth = tk::lovasz_theta(c), ctp = tk::schrijver_theta(c);
    json j = {{"graph", lg.id},
              {"theta", th.value},
              {"theta_prime", tp.value},
              {"theta_complement", cth.value},
              {"theta_prime_complement", ctp.value},
              {"chi_v", ctp.value},
              {"chi_sv", cth.value}};
    j["solves"] = {tk::to_json(th, lg.id), tk::to_json(tp, lg.id), tk::to_json(cth, "complement"),
                   tk::to_json(ctp, "complement")};
    emit_json(f, j);
    return 0;
}

int run_spectra(const Flags& f) {
    const LoadedGraph lg = load_graph(f.source);
    json kinds = json::array();
    for (tk::MatrixKind k : tk::kAllMatrixKinds) kinds.push_back(tk::spectrum_json(lg.graph, k));
    emit_json(f, {{"graph", lg.id}, {"spectra", kinds}});
    return 0;
}

int run_cospectral(const Flags& f) {
    const LoadedGraph a = load_graph(f.source), b = load_graph(f.other);
    json kinds = json::object();
    for (const auto& e : tk::cospectral(a.graph, b.graph, tk::kAllMatrixKinds))
        kinds[std::string(tk::to_string(e.kind))] = e.cospectral;
    const auto iso = tk::find_isomorphism(a.graph, b.graph, {}, budget_of(f));
    json isomorphic = nullptr;
    if (iso.outcome != tk::SearchOutcome::budget_exhausted) isomorphic = iso.isomorphic();
    emit_json(f, {{"graph", a.id}, {"other", b.id}, {"cospectral", kinds}, {"isomorphic", isomorphic}});
    return 0;
}

int run_capacity(const Flags& f) {
    const LoadedGraph lg = load_graph(f.source);
    json j = tk::to_json(tk::capacity_report(lg.graph, f.k_max, budget_of(f)));
    j["graph"] = lg.id;
    emit_json(f, j);
    return 0;
}

int run_reproduce(const Flags& f) {
    SuiteOptions opt = f.suite_options;
    if (!f.config.empty()) {
        std::ifstream in(f.config);
        if (!in) throw UsageError("cannot read " + f.config);
        try {
            opt = suite_options_from_json(json::parse(in), opt);
        } catch (const std::exception& e) {
            throw UsageError(f.config + ": " + e.what());
        }
    }
    std::vector<SuiteId> ids;
    if (f.suite == "all") {
        ids.assign(kAllSuites.begin(), kAllSuites.end());
    } else if (auto id = parse_suite(f.suite)) {
        ids.push_back(*id);
    } else {
        throw UsageError("unknown suite: " + f.suite);
    }
    bool ok = true;
    std::string text;
    json reports = json::array();
    for (SuiteId id : ids) {
        const SuiteReport r = run_suite(id, opt);
        ok = ok && r.passed();
        if (f.format == "csv") text += to_csv(r);
        else reports.push_back(to_json(r));
        for (const auto& row : r.rows)
            if (row.status != RowStatus::pass)
                std::cerr << r.suite << ": " << row.item << " / " << row.quantity << ": expected " << row.expected
                          << ", observed " << row.observed << '\n';
    }
    if (f.format == "csv") emit(f, text);
    else emit(f, (reports.size() == 1 ? reports[0] : json{{"schema", "1"}, {"suites", reports}}).dump(2) + "\n");
    return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Lovasz theta, spectra and graph invariants"};
    app.require_subcommand(1);
    Flags f;

    auto* construct = app.add_subcommand("construct", "build a graph and print it");
    add_source(*construct, f.source);
    construct->add_option("--format", f.format)->check(CLI::IsMember({"json", "csv", "graph6", "edges"}));

    auto* invariants = app.add_subcommand("invariants", "clique, independence and chromatic numbers, bounds");
    auto* theta = app.add_subcommand("theta", "theta and theta' of a graph and its complement");
    auto* spectra = app.add_subcommand("spectra", "spectra and characteristic polynomials");
    auto* cospec = app.add_subcommand("cospectral", "compare two graphs spectrally and up to isomorphism");
    auto* capacity = app.add_subcommand("capacity", "Shannon capacity bounds from strong powers");
    auto* reproduce = app.add_subcommand("reproduce", "rerun a table or example and compare");

    for (auto* cmd : {invariants, theta, spectra, cospec, capacity}) add_source(*cmd, f.source);
    add_source(*cospec, f.other, "other-");
    for (auto* cmd : {invariants, theta, spectra, cospec, capacity, reproduce}) {
        cmd->add_option("--format", f.format)->check(CLI::IsMember({"json", "csv"}));
        add_budget(*cmd, f);
    }
    for (auto* cmd : {construct, invariants, theta, spectra, cospec, capacity, reproduce})
        cmd->add_option("--out", f.out, "output file");
    capacity->add_option("--k-max", f.k_max, "largest strong power")->check(CLI::Range(1, 8));

    std::vector<std::string> suite_names{"all"};
    for (SuiteId id : kAllSuites) suite_names.emplace_back(to_string(id));
    reproduce->add_option("suite", f.suite)->required()->check(CLI::IsMember(suite_names));
    reproduce->add_option("--tol", f.suite_options.tol, "tolerance for SDP values")->check(CLI::PositiveNumber);
    reproduce->add_option("--k-max", f.suite_options.k_max, "largest k for nics-construction");
    reproduce->add_option("--n-max", f.suite_options.n_max, "largest n for latin-table")->check(CLI::Range(3, 16));
    reproduce->add_option("--ell-max", f.suite_options.ell_max, "largest length for schrijver-table");
    reproduce->add_option("--config", f.config, "JSON file with suite options");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        thread_cap();
        if (*construct) return run_construct(f);
        if (*invariants) return run_invariants(f);
        if (*theta) return run_theta(f);
        if (*spectra) return run_spectra(f);
        if (*cospec) return run_cospectral(f);
        if (*capacity) return run_capacity(f);
        if (*reproduce) return run_reproduce(f);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const tk::ParameterError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const tk::ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 2;
}
