#ifndef AIXI_CORE_RNG_HPP
#define AIXI_CORE_RNG_HPP

#include <cstdint>
#include <string_view>

#include "aixi/core/rational.hpp"

namespace aixi {

// Splittable counter-based generator. Draw i of a stream with key s is
// splitmix64(s + (i + 1) * golden), so any draw is reproducible from
// (seed, split path, counter) alone.
class CounterRng {
public:
    static constexpr std::string_view algorithm = "splitmix64-ctr";

    explicit CounterRng(std::uint64_t seed) : key_(seed) {}

    std::uint64_t next();

    // Independent child stream; does not advance this one.
    CounterRng split(std::uint64_t stream) const;

    // Uniform on [0, 1) with 53-bit resolution, as an exact dyadic rational.
    Rational uniform_rational();
    double uniform();

    // Uniform integer in [0, n).
    std::uint64_t below(std::uint64_t n);

    std::uint64_t key() const { return key_; }
    std::uint64_t counter() const { return counter_; }

private:
    std::uint64_t key_;
    std::uint64_t counter_ = 0;
};

std::uint64_t splitmix64(std::uint64_t x);

}  // namespace aixi

#endif  // AIXI_CORE_RNG_HPP
