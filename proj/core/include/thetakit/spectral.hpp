#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>
#include <nlohmann/json.hpp>

#include "thetakit/budget.hpp"
#include "thetakit/graph.hpp"
#include "thetakit/numeric.hpp"

namespace thetakit {

// Adjacency, Laplacian D - A, signless Laplacian D + A, normalized Laplacian I - D^-1/2 A D^-1/2.
// In the normalized Laplacian an isolated vertex gets diagonal entry 0.
enum class MatrixKind { A, L, Q, NormL };

inline constexpr MatrixKind kAllMatrixKinds[] = {MatrixKind::A, MatrixKind::L, MatrixKind::Q, MatrixKind::NormL};

std::string_view to_string(MatrixKind kind);
std::optional<MatrixKind> parse_matrix_kind(std::string_view text);

Eigen::MatrixXd graph_matrix(const Graph& g, MatrixKind kind);

// Descending for A and Q, ascending for L and NormL.
std::vector<double> eigenvalues(const Graph& g, MatrixKind kind);

struct SpectrumReport {
    std::vector<double> adjacency;     // descending
    std::vector<double> laplacian;     // ascending
    std::vector<double> signless;      // descending
    std::vector<double> normalized;    // ascending
};

SpectrumReport spectrum_report(const Graph& g);

// Polynomial with coefficients numerator[i] / denominator for x^i. Kept in lowest terms with a
// positive denominator, so equality of values is equality of representations.
class IntPolynomial {
public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<BigInt> coeffs, BigInt denominator = 1);

    const std::vector<BigInt>& coeffs() const { return coeffs_; }
    const BigInt& denominator() const { return denominator_; }
    std::size_t degree() const { return coeffs_.empty() ? 0 : coeffs_.size() - 1; }

    double evaluate(double x) const;
    Rational evaluate(const Rational& x) const;
    // Multiplicity of r as a root; zero when p(r) != 0.
    std::size_t root_multiplicity(const Rational& r) const;
    std::string to_string() const;  // e.g. "x^3 - 3x - 2"

    friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

private:
    std::vector<BigInt> coeffs_;
    BigInt denominator_ = 1;
};

// Exact characteristic polynomial det(xI - M). For A, L, Q the coefficients are integers; for
// NormL the polynomial is det(xD - L)/det(D) on the non-isolated vertices times x^(isolated).
IntPolynomial char_poly_exact(const Graph& g, MatrixKind kind);

struct CospectralEntry {
    MatrixKind kind;
    bool cospectral;
};

std::vector<CospectralEntry> cospectral(const Graph& g, const Graph& h, std::span<const MatrixKind> kinds);
bool cospectral(const Graph& g, const Graph& h, MatrixKind kind);

// Pairwise nonisomorphic graphs that share one characteristic polynomial.
struct NicsGroup {
    IntPolynomial poly;
    std::vector<Graph> graphs;
};

struct NicsSearch {
    std::vector<Graph> classes;    // every graph found, one per isomorphism class
    std::vector<NicsGroup> groups;  // in order of first appearance among classes
    std::size_t pair_count = 0;
    bool complete = true;          // false when the budget ran out
};

// All graphs on n vertices (n <= 7), or all d-regular graphs (n <= 12), up to isomorphism.
// Throws SizeRefusal beyond those sizes.
std::vector<Graph> enumerate_graphs(std::size_t n, std::optional<std::size_t> degree,
                                    const Budget& budget = Budget::unlimited(), bool* complete = nullptr);

NicsSearch enumerate_and_find_nics(std::size_t n, std::optional<std::size_t> degree, MatrixKind kind,
                                   const Budget& budget = Budget::unlimited());

struct InertiaEnergy {
    std::size_t n_plus = 0, n_zero = 0, n_minus = 0;
    double s_plus = 0, s_minus = 0;  // sums of squared positive / negative adjacency eigenvalues
};

// Counts are exact (sign changes of the integer characteristic polynomial, which is real-rooted).
InertiaEnergy inertia_and_energies(const Graph& g);

// Matrix-tree theorem on the Laplacian with the first row and column removed.
BigInt count_spanning_trees(const Graph& g);

// Number of walks of length `length` from i to j.
BigInt walk_count(const Graph& g, std::size_t i, std::size_t j, std::size_t length);

// Adjacency spectrum of the line graph against the signless Laplacian spectrum shifted by -2.
bool line_graph_spectrum_check(const Graph& g, double tol = 1e-8);

nlohmann::json to_json(const IntPolynomial& p);
nlohmann::json spectrum_json(const Graph& g, MatrixKind kind);

}  // namespace thetakit
