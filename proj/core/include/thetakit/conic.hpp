#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/SparseCore>
#include <nlohmann/json.hpp>

namespace thetakit {

// Cone of the primal variable, in this order:
//   zero_dim     coordinates whose dual slack is pinned to zero (free primal variables),
//   nonneg_dim   entrywise nonnegative coordinates,
//   psd_sides    one symmetric block per entry, stored as svec (side * (side + 1) / 2 coordinates).
struct ConeSpec {
    std::size_t zero_dim = 0;
    std::size_t nonneg_dim = 0;
    std::vector<std::size_t> psd_sides;

    std::size_t dimension() const;
    friend bool operator==(const ConeSpec&, const ConeSpec&) = default;
};

enum class Sense { minimize, maximize };

using SparseRows = Eigen::SparseMatrix<double, Eigen::RowMajor>;

// optimize c'x  subject to  A x = b,  x in cone.
struct ConicProblem {
    Eigen::VectorXd c;
    SparseRows A;
    Eigen::VectorXd b;
    ConeSpec cone;
    Sense sense = Sense::minimize;

    // Throws ParameterError on inconsistent dimensions.
    void validate() const;
};

enum class SolveStatus { optimal, max_iters, infeasible_detected };

std::string_view to_string(SolveStatus status);

struct Residuals {
    double primal = 0;  // |Ax - b| / (1 + |b|)
    double dual = 0;    // |A'y + s - c| / (1 + |c|)
    double gap = 0;     // |c'x - b'y| / (1 + |c'x| + |b'y|)
};

struct ConicSolution {
    Eigen::VectorXd x, y, s;
    double objective = 0;       // c'x in the caller's sense
    double dual_objective = 0;  // b'y in the caller's sense
    SolveStatus status = SolveStatus::max_iters;
    Residuals residuals;
    std::size_t iterations = 0;
};

struct ConicSettings {
    double eps = 1e-7;
    std::size_t max_iters = 200000;
    double scale = 1.0;  // initial penalty parameter
};

// Dual alternating-direction augmented Lagrangian iteration. A A' is factored once after row
// equilibration; every iteration is two sparse products, two triangular solves and one
// eigendecomposition per PSD block. Deterministic for identical inputs.
ConicSolution solve(const ConicProblem& p, const ConicSettings& settings = {});

// Frobenius-nearest PSD matrix: negative eigenvalues clipped to zero.
Eigen::MatrixXd project_psd(const Eigen::MatrixXd& m);

// Symmetric vectorization: column-major upper triangle (j = 0..side-1, i = 0..j), off-diagonal
// entries scaled by sqrt(2) so that svec(X)'svec(Y) = trace(XY).
constexpr std::size_t svec_size(std::size_t side) { return side * (side + 1) / 2; }
constexpr std::size_t svec_index(std::size_t i, std::size_t j) {
    if (i > j) return svec_index(j, i);
    return j * (j + 1) / 2 + i;
}
Eigen::VectorXd svec(const Eigen::MatrixXd& m);
Eigen::MatrixXd smat(const Eigen::Ref<const Eigen::VectorXd>& v, std::size_t side);

// {"c": [...], "A": [[row], ...], "b": [...], "cone": {"zero": z, "nonneg": l, "psd": [s, ...]},
//  "sense": "min" | "max"}
nlohmann::json to_json(const ConicProblem& p);
ConicProblem conic_problem_from_json(const nlohmann::json& j);

}  // namespace thetakit
