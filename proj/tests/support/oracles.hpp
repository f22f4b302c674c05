#pragma once

// Brute-force reference implementations. Deliberately naive: they share no code with the
// library's search routines and are only meant for small inputs.

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "thetakit/graph.hpp"
#include "thetakit/numeric.hpp"
#include "thetakit/spectral.hpp"

namespace oracle {

using thetakit::BigInt;
using thetakit::Graph;

// Exhaustive branching on the lowest vertex; n <= 40.
std::size_t alpha(const Graph& g);
std::size_t omega(const Graph& g);
// Smallest k for which backtracking finds a proper k-colouring.
std::size_t chromatic(const Graph& g);
std::size_t triangles(const Graph& g);
// Sum over all permutations; side <= 10.
BigInt permanent(const std::vector<std::uint8_t>& m, std::size_t side);
BigInt adjacency_permanent(const Graph& g);
// Every bipartition; n <= 20.
std::size_t max_cut(const Graph& g);
// Coefficients of prod (x - lambda_i) from floating-point eigenvalues, lowest degree first.
std::vector<double> char_poly_numeric(const Graph& g, thetakit::MatrixKind kind);
// Determinant of the reduced Laplacian in floating point.
double spanning_trees_numeric(const Graph& g);

Graph random_graph(std::size_t n, double p, std::mt19937_64& rng);
// Bipartite double cover of a random graph on m vertices, then each edge kept with probability keep.
Graph random_bipartite_double(std::size_t m, double p, double keep, std::mt19937_64& rng);
// Random edge order, each edge added unless it closes a triangle.
Graph random_triangle_free(std::size_t n, std::mt19937_64& rng);
std::vector<std::size_t> random_permutation(std::size_t n, std::mt19937_64& rng);

}  // namespace oracle
