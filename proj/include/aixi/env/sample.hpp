#ifndef AIXI_ENV_SAMPLE_HPP
#define AIXI_ENV_SAMPLE_HPP

#include "aixi/core/rng.hpp"
#include "aixi/semimeasure/semimeasure.hpp"

namespace aixi {

// Draws x_k from the conditional by inverting its exact CDF at one uniform
// 53-bit dyadic draw. Sub-normalized conditionals are renormalized over their
// mass. Throws EvidenceExhausted on zero mass.
Percept sample_percept(const Semimeasure& env, const History& h, Action y, CounterRng& rng);

int sample_index(const Distribution& d, CounterRng& rng);

}  // namespace aixi

#endif  // AIXI_ENV_SAMPLE_HPP
