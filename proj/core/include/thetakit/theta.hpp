#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>
#include <nlohmann/json.hpp>

#include "thetakit/budget.hpp"
#include "thetakit/conic.hpp"
#include "thetakit/graph.hpp"
#include "thetakit/numeric.hpp"

namespace thetakit {

enum class Formulation { theta, theta_prime, chi_v, chi_sv, closed_form_srg, spectral_equality, dual_form };

std::string_view to_string(Formulation f);

struct ThetaValue {
    double value = 0;
    Formulation formulation = Formulation::theta;
    SolveStatus status = SolveStatus::optimal;
    Residuals residuals;
    std::size_t iterations = 0;
    double elapsed_ms = 0;
    Eigen::MatrixXd certificate;          // B for the primal forms, Y for the dual form
    std::optional<Rational> rational;     // p/q with q <= 64 when within 1e-5
    std::optional<double> closed_form;    // strongly regular inputs only
    bool converged() const { return status == SolveStatus::optimal; }
};

struct ThetaSettings {
    ConicSettings solver{};
    bool srg_cross_check = true;
};

// Maximize <J, B> over B psd, trace 1, B_ij = 0 on edges.
ConicProblem theta_problem(const Graph& g, bool nonnegative);

ThetaValue lovasz_theta(const Graph& g, const ThetaSettings& settings = {});
// Adds B >= 0 entrywise.
ThetaValue schrijver_theta(const Graph& g, const ThetaSettings& settings = {});
// Schrijver theta of the complement; 1 for edgeless graphs.
ThetaValue vector_chromatic(const Graph& g, const ThetaSettings& settings = {});
// Lovasz theta of the complement; 1 for edgeless graphs.
ThetaValue strict_vector_chromatic(const Graph& g, const ThetaSettings& settings = {});
// 1 + min max_i Y_ii over Y psd with Y_ij = -1 on non-adjacent pairs. Used as a cross-check.
ThetaValue lovasz_theta_dual(const Graph& g, const ThetaSettings& settings = {});

struct BoundInterval {
    double lower = 0, upper = 0;
    std::vector<std::string> attained;  // which sides are certified tight, and why
};

struct SpectralThetaBounds {
    BoundInterval theta_g;       // bounds on theta(G)
    BoundInterval theta_comp;    // bounds on theta(complement)
    BoundInterval chi_v_bounds;  // bounds on the vector chromatic number of G
};

// Regular, noncomplete, nonempty graphs only (ParameterError otherwise). Symmetry detection
// for the equality flags is limited by the budget.
SpectralThetaBounds theta_spectral_bounds(const Graph& g, const Budget& budget = Budget::milliseconds(10000));

struct ConsistencyCheck {
    std::string name;
    double lhs = 0, rhs = 0;
    bool ok = false;
};

struct ConsistencyReport {
    std::vector<ConsistencyCheck> checks;
    bool complete = true;  // false when the budget stopped evaluation early
    bool all_ok() const;
};

// theta(G) theta(complement) >= n; additivity over disjoint union with `partner`; factorization
// over the strong product with `partner` (skipped above 64 product vertices); primal against
// dual form; 1 - lambda_1/lambda_n <= theta(complement).
ConsistencyReport theta_consistency_report(const Graph& g, const Graph& partner,
                                           const Budget& budget = Budget::unlimited(),
                                           const ThetaSettings& settings = {});
ConsistencyReport theta_consistency_report(const Graph& g, const Budget& budget = Budget::unlimited(),
                                           const ThetaSettings& settings = {});

nlohmann::json to_json(const ThetaValue& v, std::string_view graph_id);

}  // namespace thetakit
