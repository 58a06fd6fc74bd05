#ifndef AIXI_AGENT_EXPECTIMAX_HPP
#define AIXI_AGENT_EXPECTIMAX_HPP

#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "aixi/core/horizon.hpp"
#include "aixi/semimeasure/semimeasure.hpp"

namespace aixi {

// C*_{km} by the recursion
//   C*_{km}(yx_{<k}) = max_y sum_x [c(x) + C*_{k+1,m}(yx_{1:k})] rho(yx_{<k} y x),
//   C*_{m+1,m} = 0,
// summing only over percepts of positive mass. Memoized on (history, m).
class Expectimax {
public:
    explicit Expectimax(const Semimeasure& model) : model_(model) {}

    // C*_{km}(h) with k = |h| + 1; requires k <= m + 1.
    Rational value(const History& h, int m);

    // sum_x [c(x) + C*_{k+1,m}] rho(h y x)
    Rational action_value(const History& h, Action y, int m);

    // action values for every y, and the lexicographically first maximizer
    std::vector<Rational> action_values(const History& h, int m);
    Action best_action(const History& h, int m);

    std::size_t memo_size() const { return memo_.size(); }
    std::size_t nodes_expanded() const { return nodes_; }

private:
    const Semimeasure& model_;
    std::unordered_map<std::string, Rational> memo_;
    std::size_t nodes_ = 0;
};

// C*_{km}(h); throws std::invalid_argument unless k = |h| + 1 <= m + 1.
Rational expectimax_value(const Semimeasure& model, const History& h, int k, int m);

// Same value by backward induction over the explicit set of histories
// reachable from h (every history is its own state).
Rational backward_induction_value(const Semimeasure& model, const History& h, int m);

// The AI-rho agent: y_k = lexicographically first argmax of C*_{k m_k}(h y).
class ExpectimaxAgentCore {
public:
    ExpectimaxAgentCore(SemimeasurePtr model, HorizonPolicy horizon, int lifetime);

    Action act(const History& h) const;
    // value C*_{k m_k}(h) of the chosen action
    Rational value(const History& h) const;
    int horizon_end(int k) const;

    const Semimeasure& model() const { return *model_; }
    const HorizonPolicy& horizon() const { return horizon_; }
    int lifetime() const { return lifetime_; }

private:
    SemimeasurePtr model_;
    HorizonPolicy horizon_;
    int lifetime_;
};

// y_k for every horizon end m in [m_lo, m_hi]; the action if they all agree.
struct Stabilized {
    std::optional<Action> action;
    std::set<Action> witnessed;
};

Stabilized stabilized_act(const Semimeasure& model, const History& h, int m_lo, int m_hi);

}  // namespace aixi

#endif  // AIXI_AGENT_EXPECTIMAX_HPP
