#ifndef AIXI_AGENT_SPECIAL_HPP
#define AIXI_AGENT_SPECIAL_HPP

#include <optional>
#include <vector>

#include "aixi/env/fm.hpp"
#include "aixi/env/game.hpp"
#include "aixi/env/sequence.hpp"

namespace aixi {

// Deterministic predictor Theta_rho: the symbol whose conditional exceeds 1/2,
// or nullopt (refusal) when none does. Throws std::domain_error when the
// prefix has zero mass.
std::optional<int> sp_predict(const SequenceMeasure& rho, const Word& prefix);

// argmin_y sum_z z mu(h y z), lexicographically first.
Action greedy_fm_act(const FunctionClass& fc, const std::vector<Action>& ys, const std::vector<int>& zs);
Action greedy_fm_act(const FmEnvironment& env, const History& h);

// E[z_k] for the next output y
Rational expected_value(const FunctionClass& fc, const std::vector<Action>& ys, const std::vector<int>& zs, Action y);

// FM-mu action: argmin_{y_k} sum_{z_k} ... min_{y_T} sum_{z_T}
// (alpha_k z_k + ... + alpha_T z_T) mu(...), the k < current terms being
// constant. Also returns the minimal expected remaining weighted sum.
struct FmDecision {
    Action action = 0;
    Rational expected_cost;
};
FmDecision fm_optimal_act(const FunctionClass& fc, const std::vector<Rational>& alpha, const std::vector<Action>& ys,
                          const std::vector<int>& zs);

// Maximin move at the max node reached by `path`; throws std::invalid_argument
// at a terminal node or a min node.
Action minimax_move(const GameTree& tree, const std::vector<int>& path);

}  // namespace aixi

#endif  // AIXI_AGENT_SPECIAL_HPP
