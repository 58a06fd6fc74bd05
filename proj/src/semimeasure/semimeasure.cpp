#include "aixi/semimeasure/semimeasure.hpp"

namespace aixi {

Rational Semimeasure::joint(const History& h) const
{
    Rational mass = prior_mass();
    History prefix;
    for (const auto& step : h.steps()) {
        if (mass == 0) return 0;
        Distribution d = cond(prefix, step.action);
        mass *= d[static_cast<std::size_t>(alphabet().index(step.percept))];
        prefix.push(step.action, step.percept);
    }
    return mass;
}

Distribution point_mass(const Alphabet& a, const Percept& x)
{
    Distribution d(static_cast<std::size_t>(a.num_percepts()), Rational(0));
    d[static_cast<std::size_t>(a.index(x))] = 1;
    return d;
}

}  // namespace aixi
