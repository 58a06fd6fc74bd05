#include "aixi/core/horizon.hpp"

#include <algorithm>

#include "aixi/core/overloaded.hpp"

namespace aixi {

int horizon_end(const HorizonPolicy& policy, int k, int lifetime)
{
    if (k < 1 || k > lifetime)
        throw OutOfLifetime("cycle " + std::to_string(k) + " outside lifetime " + std::to_string(lifetime));
    return std::visit(overloaded{
                          [&](const FixedLifetime&) { return lifetime; },
                          [&](const MovingHorizon& p) {
                              if (p.window < 1) throw std::invalid_argument("moving horizon window must be >= 1");
                              return std::min(k + p.window - 1, lifetime);
                          },
                          [&](const Proportional& p) {
                              if (p.beta <= 0) throw std::invalid_argument("proportional beta must be positive");
                              mpz_class extra = ceil(p.beta * k);
                              if (extra >= lifetime) return lifetime;
                              return std::min(k + static_cast<int>(extra.get_si()) - 1, lifetime);
                          },
                      },
                      policy);
}

HorizonPolicy parse_horizon(const std::string& text)
{
    if (text == "fixed") return FixedLifetime{};
    auto colon = text.find(':');
    std::string kind = text.substr(0, colon);
    std::string arg = colon == std::string::npos ? "" : text.substr(colon + 1);
    if (kind == "moving" && !arg.empty()) {
        int m = std::stoi(arg);
        if (m < 1) throw std::invalid_argument("moving horizon window must be >= 1");
        return MovingHorizon{m};
    }
    if (kind == "proportional" && !arg.empty()) {
        Rational beta = parse_rational(arg);
        if (beta <= 0) throw std::invalid_argument("proportional beta must be positive");
        return Proportional{beta};
    }
    throw std::invalid_argument("unknown horizon '" + text + "'");
}

std::string to_string(const HorizonPolicy& policy)
{
    return std::visit(overloaded{
                          [](const FixedLifetime&) { return std::string("fixed"); },
                          [](const MovingHorizon& p) { return "moving:" + std::to_string(p.window); },
                          [](const Proportional& p) { return "proportional:" + to_string(p.beta); },
                      },
                      policy);
}

}  // namespace aixi
