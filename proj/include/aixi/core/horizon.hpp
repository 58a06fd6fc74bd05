#ifndef AIXI_CORE_HORIZON_HPP
#define AIXI_CORE_HORIZON_HPP

#include <stdexcept>
#include <string>
#include <variant>

#include "aixi/core/rational.hpp"

namespace aixi {

// m_k = T
struct FixedLifetime {};

// m_k = min(k + m - 1, T); m = 1 is the greedy horizon.
struct MovingHorizon {
    int window = 1;
};

// m_k = min(k + ceil(beta k) - 1, T)
struct Proportional {
    Rational beta = 1;
};

using HorizonPolicy = std::variant<FixedLifetime, MovingHorizon, Proportional>;

struct OutOfLifetime : std::out_of_range {
    using std::out_of_range::out_of_range;
};

// Last cycle whose credit is optimized in cycle k of a lifetime T.
// Requires 1 <= k <= T; throws OutOfLifetime otherwise.
int horizon_end(const HorizonPolicy& policy, int k, int lifetime);

// "fixed", "moving:<m>" or "proportional:<beta>"
HorizonPolicy parse_horizon(const std::string& text);
std::string to_string(const HorizonPolicy& policy);

}  // namespace aixi

#endif  // AIXI_CORE_HORIZON_HPP
