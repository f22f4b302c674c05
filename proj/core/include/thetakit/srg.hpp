#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

#include "thetakit/numeric.hpp"
#include "thetakit/srg_params.hpp"

namespace thetakit {

struct SrgFeasibility {
    bool feasible = false;
    std::vector<std::string> violations;
};

// Counting identity (n-d-1) mu = d (d-lambda-1), 0 < d < n-1, and nonnegative integral
// eigenvalue multiplicities (automatically balanced for conference parameters).
SrgFeasibility srg_feasible(const SrgParams& p);

// Eigenvalues d (multiplicity 1), r > s with multiplicities m_r, m_s.
struct SrgSpectrum {
    std::int64_t d = 0;
    QuadSurd r, s;
    std::int64_t m_r = 0, m_s = 0;
    bool conference = false;
};

// Throws ParameterError for infeasible parameters (as do the other closed forms below).
SrgSpectrum srg_spectrum(const SrgParams& p);

// (n, n-d-1, n-2d+mu-2, n-2d+lambda).
SrgParams srg_complement(const SrgParams& p);

// sqrt((lambda-mu)^2 + 4(d-mu)).
QuadSurd srg_t(const SrgParams& p);

struct SrgTheta {
    QuadSurd theta_g;     // n (t + mu - lambda) / (2d + t + mu - lambda)
    QuadSurd theta_comp;  // 1 + 2d / (t + mu - lambda)
};

SrgTheta srg_theta(const SrgParams& p);

// Bounds implied by the closed forms through the sandwich theorem; integer entries are exact.
struct SrgBounds {
    BigInt alpha_upper;         // floor(theta(G))
    QuadSurd alpha_f_lower;     // theta(G)
    BigInt omega_upper;         // 1 + floor(2d / (t + mu - lambda))
    QuadSurd omega_f_lower;     // theta(complement)
    BigInt chi_lower;           // 1 + ceil(2d / (t + mu - lambda))
    QuadSurd chi_f_lower;       // theta(complement)
    BigInt chi_comp_lower;      // ceil(theta(G))
    QuadSurd chi_f_comp_lower;  // theta(G)
};

SrgBounds srg_bounds(const SrgParams& p);

// Vector and strict vector chromatic numbers coincide for these graphs.
struct SrgVectorChromatic {
    QuadSurd chi_g;     // 1 + 2d / (t + mu - lambda)
    QuadSurd chi_comp;  // n / chi_g
};

SrgVectorChromatic srg_vector_chromatic(const SrgParams& p);

namespace srg_family {
struct LatinSquare { std::int64_t m, n; };  // 2 <= m <= n + 1
struct Symplectic { std::int64_t n, q; };   // q a prime power
struct Conference { std::int64_t n; };      // n = 1 mod 4
struct Paley { std::int64_t q; };           // q a prime power, q = 1 mod 4
}  // namespace srg_family

using SrgFamily = std::variant<srg_family::LatinSquare, srg_family::Symplectic, srg_family::Conference, srg_family::Paley>;

// For LatinSquare with m = n + 1 the graph is complete: params is empty and complete_order = n^2.
struct SrgFamilyParams {
    std::optional<SrgParams> params;
    std::int64_t complete_order = 0;
};

SrgFamilyParams family_params(const SrgFamily& family);

bool is_prime_power(std::int64_t q);
bool sum_two_squares(std::int64_t n);
// Existence of a self-complementary vertex-transitive graph on n vertices.
bool sc_vt_exists(std::int64_t n);

// n!^(2n) / n^(n^2) <= L(n) <= prod_k (k!)^(n/k). The upper side is irrational in general; it is
// returned as its exact ceiling together with a decimal rendering.
struct LatinCountBounds {
    Rational lower;
    BigInt upper_ceil;
    bool upper_is_integer = false;
    std::string upper_decimal;
};

LatinCountBounds latin_square_count_bounds(std::int64_t n);

nlohmann::json to_json(const SrgParams& p);
nlohmann::json srg_summary_json(const SrgParams& p);
std::string srg_table_csv(std::span<const SrgParams> rows);

}  // namespace thetakit
