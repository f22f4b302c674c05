#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "thetakit/budget.hpp"
#include "thetakit/graph.hpp"
#include "thetakit/numeric.hpp"

namespace thetakit {

struct ExactOrBound {
    Rational value;  // exact value, or the best value found
    bool exact = false;
    Rational lower, upper;
    double elapsed_ms = 0;
    bool budget_hit = false;
    std::vector<std::size_t> witness;  // sorted vertex set, or one colour per vertex for chi
    std::string note;
};

struct CliqueOptions {
    Budget budget = Budget::unlimited();
    std::optional<std::size_t> stop_at;  // return as soon as a clique of this size is found
    std::uint64_t seed = 1;              // drives the warm-start local search
};

// Bitset branch and bound with greedy colouring bounds, vertices taken in descending degree,
// warm-started by local search.
ExactOrBound max_clique(const Graph& g, const CliqueOptions& options = {});
ExactOrBound clique_number(const Graph& g, const Budget& budget = Budget::unlimited());
ExactOrBound independence_number(const Graph& g, const Budget& budget = Budget::unlimited());

// Iterated local search with (1,2)-swaps and forced insertions. Returns the largest independent
// set found, sorted. Stops at `target`, on budget expiry or after `max_rounds` perturbations.
std::vector<std::size_t> local_search_independent_set(const Graph& g, std::size_t target, const Budget& budget,
                                                      std::uint64_t seed = 1, std::size_t max_rounds = 200000);

// DSATUR branch and bound with a clique lower bound; witness is the colouring.
ExactOrBound chromatic_number(const Graph& g, const Budget& budget = Budget::unlimited());

// Bron-Kerbosch with pivoting. SizeRefusal above 30 vertices.
std::vector<VertexSet> maximal_independent_sets(const Graph& g);

// Covering LP over maximal independent sets, solved with the conic solver and certified by exact
// rational primal and dual solutions. Witness lists the independent sets' indices in the support.
ExactOrBound fractional_chromatic(const Graph& g, const Budget& budget = Budget::unlimited());

struct CapacityRow {
    std::size_t k = 0;
    ExactOrBound alpha;  // independence number of the k-th strong power
    double root = 0;     // alpha^(1/k) from the best value found
};

struct CapacityReport {
    double lower = 0;
    std::size_t witness_k = 1, witness_size = 0;
    double upper = 0;  // theta
    bool self_complementary = false;
    std::optional<double> self_complementary_upper;  // 16 n^((alpha-1)/(alpha+1))
    std::vector<CapacityRow> rows;
};

// Strong powers above 4096 vertices are skipped.
CapacityReport capacity_report(const Graph& g, std::size_t k_max, const Budget& budget = Budget::unlimited());

// Exact permanent of a 0/1 matrix given row-major. Ryser's formula in Gray-code order; SizeRefusal above side 28.
BigInt permanent(std::span<const std::uint8_t> entries, std::size_t side);
BigInt adjacency_permanent(const Graph& g);

struct JoinRelation {
    std::string name;
    double lhs = 0, rhs = 0;
    bool equality_claimed = false;  // "=" rather than ">="
    bool holds = false;
};

struct NsNnsReport {
    std::optional<BigInt> per_g1, per_g1_complement;
    bool alpha_equals_theta_g2 = false;
    bool ns_theta_certified = false, nns_theta_certified = false;
    bool ns_alpha_certified = false, nns_alpha_certified = false;
    std::vector<JoinRelation> rows;
    bool complete = true;
    bool all_hold() const;
};

NsNnsReport ns_nns_invariant_report(const Graph& g1, const Graph& g2, const Budget& budget = Budget::unlimited());

enum class BoundTarget { alpha, omega, chi, chi_f, chi_v, theta, surplus, permanent };
enum class BoundSide { lower, upper };

struct BoundEntry {
    std::string id;
    BoundTarget target = BoundTarget::alpha;
    BoundSide side = BoundSide::lower;
    double value = 0;
    bool applicable = false;
    std::string detail;  // violated precondition, or the minimizer for optimized bounds
};

struct BoundReport {
    std::vector<BoundEntry> entries;
    const BoundEntry* find(std::string_view id) const;
};

struct ThetaPair {
    double theta_g = 0, theta_comp = 0;
};

BoundReport bound_library(const Graph& g, std::optional<ThetaPair> theta = std::nullopt);

// f(0) = 1, f(k) = (1 + (k^2 - k) f(k-1)) / (k^2 + 1).
Rational shearer_f(std::size_t k);

struct PirotSereni {
    double value = 0;  // the bound on the fractional chromatic number
    std::size_t k = 0;
    double lambda = 0;
};
// Minimum over k <= k_max of a golden-section search for lambda in (0, 8].
PirotSereni pirot_sereni_bound(std::size_t max_degree, std::size_t k_max = 64);

struct MaxCut {
    std::size_t value = 0;
    double surplus = 0;  // value - |E| / 2
    std::vector<std::size_t> side;  // one side of a best cut
    std::optional<double> surplus_bound;  // |E| / (pi (chi_v - 1)) when chi_v is supplied
    std::optional<bool> surplus_bound_holds;
};

// Exhaustive over 2^(n-1) bipartitions; SizeRefusal above 24 vertices.
MaxCut max_cut_exact(const Graph& g, std::optional<double> chi_v = std::nullopt);

std::string_view to_string(BoundTarget t);
nlohmann::json to_json(const ExactOrBound& v);
nlohmann::json to_json(const BoundReport& r);
nlohmann::json to_json(const CapacityReport& r);

}  // namespace thetakit
