#ifndef AIXI_AGENT_POLICY_HPP
#define AIXI_AGENT_POLICY_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "aixi/agent/expectimax.hpp"
#include "aixi/env/fm.hpp"
#include "aixi/env/game.hpp"

namespace aixi {

// A chronological agent: maps the completed history to the next action.
class Policy {
public:
    virtual ~Policy() = default;
    virtual Action act(const History& h) = 0;
    virtual std::string name() const = 0;

    // value attached to the last decision (C* for expectimax agents)
    virtual std::optional<Rational> last_value() const { return std::nullopt; }
    // posterior weights at the last decision, when the agent has a mixture
    virtual std::vector<Rational> last_weights() const { return {}; }
    // VM steps spent on the last decision
    virtual std::uint64_t last_steps() const { return 0; }
};

using PolicyPtr = std::shared_ptr<Policy>;

class ExpectimaxPolicy : public Policy {
public:
    ExpectimaxPolicy(SemimeasurePtr model, HorizonPolicy horizon, int lifetime, std::string id);
    Action act(const History& h) override;
    std::string name() const override { return id_; }
    std::optional<Rational> last_value() const override { return value_; }
    std::vector<Rational> last_weights() const override { return weights_; }

private:
    ExpectimaxAgentCore core_;
    std::string id_;
    std::optional<Rational> value_;
    std::vector<Rational> weights_;
};

class GreedyFmPolicy : public Policy {
public:
    explicit GreedyFmPolicy(std::shared_ptr<const FmEnvironment> env) : env_(std::move(env)) {}
    Action act(const History& h) override;
    std::string name() const override { return "greedy-fm"; }

private:
    std::shared_ptr<const FmEnvironment> env_;
};

// Plays the maximin move of the current round; episodes of `rounds` cycles
// restart at the root.
class MinimaxPolicy : public Policy {
public:
    explicit MinimaxPolicy(GameTree tree) : tree_(std::move(tree)) {}
    Action act(const History& h) override;
    std::string name() const override { return "minimax"; }

private:
    GameTree tree_;
};

// Action from a hash of (seed, history); the same history always gives the
// same action.
class RandomPolicy : public Policy {
public:
    RandomPolicy(int num_actions, std::uint64_t seed) : num_actions_(num_actions), seed_(seed) {}
    Action act(const History& h) override;
    std::string name() const override { return "random"; }

private:
    int num_actions_;
    std::uint64_t seed_;
};

// Plays the given action sequence cyclically.
class FixedPolicy : public Policy {
public:
    explicit FixedPolicy(std::vector<Action> seq);
    Action act(const History& h) override;
    std::string name() const override;

private:
    std::vector<Action> seq_;
};

}  // namespace aixi

#endif  // AIXI_AGENT_POLICY_HPP
