#ifndef AIXI_HARNESS_RUN_HPP
#define AIXI_HARNESS_RUN_HPP

#include "aixi/agent/policy.hpp"
#include "aixi/harness/config.hpp"
#include "aixi/metrics/runlog.hpp"
#include "aixi/semimeasure/mixture.hpp"

namespace aixi {

SemimeasurePtr build_env(const ExperimentConfig& cfg);

// "<spec> @ <K> + ..." into a mixture over the built environments.
MixtureModel parse_mixture(const std::string& text);

// The configured agent for the true environment mu. Throws
// std::invalid_argument when its model's alphabet differs from mu's.
PolicyPtr build_agent(const ExperimentConfig& cfg, const SemimeasurePtr& mu);

// T cycles of the interaction protocol: the agent writes y_k, the environment
// samples x_k from mu(h y_k .) with the run's counter RNG. Evidence
// exhaustion ends the run early and is recorded in the log status.
RunLog run_protocol(const Semimeasure& mu, Policy& agent, RunLogHeader header);

// Builds everything from the config, runs, and writes the CSV when `out` is
// set (inside output_dir()).
RunLog run(const ExperimentConfig& cfg);

}  // namespace aixi

#endif  // AIXI_HARNESS_RUN_HPP
