#include "aixi/env/sample.hpp"

namespace aixi {

int sample_index(const Distribution& d, CounterRng& rng)
{
    Rational total = total_mass(d);
    if (total <= 0) throw EvidenceExhausted("cannot sample from a zero-mass conditional");
    Rational u = rng.uniform_rational() * total;
    Rational acc = 0;
    int last = -1;
    for (std::size_t i = 0; i < d.size(); ++i) {
        if (d[i] == 0) continue;
        acc += d[i];
        last = static_cast<int>(i);
        if (u < acc) return last;
    }
    return last;
}

Percept sample_percept(const Semimeasure& env, const History& h, Action y, CounterRng& rng)
{
    const auto& a = env.alphabet();
    return a.percept(sample_index(env.cond(h, y), rng));
}

}  // namespace aixi
