#pragma once

#include <cstdint>
#include <ostream>

namespace thetakit {

// Parameters (n, d, lambda, mu) of a strongly regular graph.
struct SrgParams {
    std::int64_t n = 0, d = 0, lambda = 0, mu = 0;
    friend bool operator==(const SrgParams&, const SrgParams&) = default;
};

inline std::ostream& operator<<(std::ostream& os, const SrgParams& p) {
    return os << "srg(" << p.n << "," << p.d << "," << p.lambda << "," << p.mu << ")";
}

}  // namespace thetakit
