#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "thetakit/graph.hpp"

namespace thetakit {

namespace family {
struct Complete { std::size_t n; };
struct Empty { std::size_t n; };
struct Cycle { std::size_t n; };
struct Path { std::size_t n; };
struct CompleteMultipartite { std::vector<std::size_t> parts; };
struct Star { std::size_t leaves; };
struct Kneser { std::size_t n, k; };
struct Paley { std::size_t q; };
struct HammingBand { std::size_t length, d_low, d_high; };
struct LatinSquare { std::size_t m, n; };
struct Symplectic { std::size_t n, q; };
struct Windmill { std::size_t k, n; };
struct Hanoi3 { std::size_t n; };
struct Tietze {};
struct Shrikhande {};
}  // namespace family

using FamilySpec =
    std::variant<family::Complete, family::Empty, family::Cycle, family::Path, family::CompleteMultipartite,
                 family::Star, family::Kneser, family::Paley, family::HammingBand, family::LatinSquare,
                 family::Symplectic, family::Windmill, family::Hanoi3, family::Tietze, family::Shrikhande>;

// Throws ParameterError naming the violated constraint.
Graph construct_family(const FamilySpec& spec);

// "name:arg1:arg2", e.g. "kneser:5:2", "hamming-band:5:3:5", "multipartite:2:3:3", "petersen".
FamilySpec parse_family(std::string_view text);
std::string family_name(const FamilySpec& spec);

inline Graph petersen() { return construct_family(family::Kneser{5, 2}); }

bool is_prime(std::size_t q);

}  // namespace thetakit
