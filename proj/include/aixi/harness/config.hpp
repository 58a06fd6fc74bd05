#ifndef AIXI_HARNESS_CONFIG_HPP
#define AIXI_HARNESS_CONFIG_HPP

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "aixi/core/horizon.hpp"
#include "aixi/metrics/runlog.hpp"

namespace aixi {

// Flat settings of one run. Keys in the text form:
//   env              environment spec (see env/spec.hpp)
//   agent            aimu | aixi-mixture | aixi-program | greedy-fm | minimax |
//                    random | fixed:<digits> | bestvote
//   model            spec of the agent's model (aimu, greedy-fm, aixi-mixture);
//                    defaults to env
//   mixture          "<spec> @ <K> + <spec> @ <K> ..." for aixi-mixture
//   horizon          fixed | moving:<m> | proportional:<beta>
//   T                lifetime
//   seed             run seed
//   out              CSV log file (empty: none)
//   lbits, tsteps    best-vote pool bounds
//   class-max-len    transducer class bound in bits
//   class-max-states transducer class bound in states
//   arith            exact | float (number rendering in logs)
struct ExperimentConfig {
    std::string env = "heavenhell:i=1";
    std::string agent = "aimu";
    std::string model;
    std::string mixture;
    HorizonPolicy horizon = FixedLifetime{};
    int lifetime = 5;
    std::uint64_t seed = 0;
    std::string out;
    unsigned lbits = 10;
    std::uint64_t tsteps = 64;
    unsigned class_max_len = 11;
    int class_max_states = 2;
    Arith arith = Arith::Exact;
};

// Sets one key; throws std::invalid_argument for unknown keys or bad values.
void apply_setting(ExperimentConfig& cfg, const std::string& key, const std::string& value);

// "key = value" lines ('#' comments, blank lines) followed by "key=value"
// overrides; validates the result.
ExperimentConfig parse_config(const std::string& text, const std::vector<std::string>& overrides = {});

void validate(const ExperimentConfig& cfg);

std::string to_string(const ExperimentConfig& cfg);

// AIXI_LAB_OUT when set, else the given default.
std::filesystem::path output_dir(const std::filesystem::path& fallback = ".");

}  // namespace aixi

#endif  // AIXI_HARNESS_CONFIG_HPP
