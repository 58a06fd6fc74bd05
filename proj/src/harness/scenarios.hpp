#ifndef AIXI_HARNESS_SCENARIOS_HPP
#define AIXI_HARNESS_SCENARIOS_HPP

#include <string>

#include "aixi/core/horizon.hpp"
#include "aixi/harness/experiments.hpp"
#include "aixi/metrics/runlog.hpp"

namespace aixi::scenarios {

RunLogHeader header_for(const std::string& env, const std::string& agent, std::uint64_t seed, int lifetime,
                        const HorizonPolicy& horizon);

void greedy_fm_fails(Report& r);
void fmf_explores(Report& r);
void sp_identity(Report& r);
void heavenhell(Report& r);
void needle(Report& r);
void sg_minimax(Report& r);
void episodes(Report& r);
void convergence(Report& r);
void sp_bound(Report& r);
void bestvote_dominates(Report& r);
void delayed_switch(Report& r);
void ex_speedup(Report& r);
void conversion(Report& r);

}  // namespace aixi::scenarios

#endif  // AIXI_HARNESS_SCENARIOS_HPP
