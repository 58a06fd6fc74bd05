#include "aixi/core/rng.hpp"

#include <stdexcept>

namespace aixi {

namespace {
constexpr std::uint64_t golden = 0x9e3779b97f4a7c15ULL;
}

std::uint64_t splitmix64(std::uint64_t x)
{
    x += golden;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

std::uint64_t CounterRng::next()
{
    ++counter_;
    return splitmix64(key_ + counter_ * golden);
}

CounterRng CounterRng::split(std::uint64_t stream) const
{
    return CounterRng(splitmix64(key_ ^ splitmix64(stream + 0x632be59bd9b4e019ULL)));
}

Rational CounterRng::uniform_rational()
{
    std::uint64_t bits = next() >> 11;
    mpz_class num;
    mpz_import(num.get_mpz_t(), 1, 1, sizeof(bits), 0, 0, &bits);
    mpz_class den = 1;
    den <<= 53;
    Rational q(num, den);
    q.canonicalize();
    return q;
}

double CounterRng::uniform()
{
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
}

std::uint64_t CounterRng::below(std::uint64_t n)
{
    if (n == 0) throw std::invalid_argument("below(0)");
    // rejection sampling keeps the draw exactly uniform
    std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    for (;;) {
        std::uint64_t v = next();
        if (v < limit) return v % n;
    }
}

}  // namespace aixi
