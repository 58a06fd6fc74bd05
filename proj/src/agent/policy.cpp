#include "aixi/agent/policy.hpp"

#include <stdexcept>

#include "aixi/agent/special.hpp"
#include "aixi/core/rng.hpp"
#include "aixi/semimeasure/mixture.hpp"

namespace aixi {

ExpectimaxPolicy::ExpectimaxPolicy(SemimeasurePtr model, HorizonPolicy horizon, int lifetime, std::string id)
    : core_(std::move(model), std::move(horizon), lifetime), id_(std::move(id))
{
}

Action ExpectimaxPolicy::act(const History& h)
{
    const int k = static_cast<int>(h.size()) + 1;
    Expectimax e(core_.model());
    const int m = core_.horizon_end(k);
    auto v = e.action_values(h, m);
    Action best = 0;
    for (Action y = 1; y < static_cast<Action>(v.size()); ++y)
        if (v[static_cast<std::size_t>(y)] > v[static_cast<std::size_t>(best)]) best = y;
    value_ = v[static_cast<std::size_t>(best)];
    if (auto* mix = dynamic_cast<const MixtureModel*>(&core_.model())) weights_ = mix->posterior_weights(h);
    return best;
}

Action GreedyFmPolicy::act(const History& h)
{
    return greedy_fm_act(*env_, h);
}

Action MinimaxPolicy::act(const History& h)
{
    const auto n = static_cast<std::size_t>(tree_.rounds());
    const std::size_t start = (h.size() / n) * n;
    std::vector<int> path;
    for (std::size_t i = start; i < h.size(); ++i) {
        path.push_back(h[i].action);
        path.push_back(h[i].percept.obs);
    }
    return minimax_move(tree_, path);
}

Action RandomPolicy::act(const History& h)
{
    std::uint64_t key = splitmix64(seed_);
    for (const auto& s : h.steps()) {
        key = splitmix64(key ^ static_cast<std::uint64_t>(s.action));
        key = splitmix64(key ^ (static_cast<std::uint64_t>(s.percept.credit) << 20) ^
                         (static_cast<std::uint64_t>(s.percept.obs) << 40));
    }
    CounterRng rng(key);
    return static_cast<Action>(rng.below(static_cast<std::uint64_t>(num_actions_)));
}

FixedPolicy::FixedPolicy(std::vector<Action> seq) : seq_(std::move(seq))
{
    if (seq_.empty()) throw std::invalid_argument("fixed policy needs at least one action");
}

Action FixedPolicy::act(const History& h)
{
    return seq_[h.size() % seq_.size()];
}

std::string FixedPolicy::name() const
{
    std::string s = "fixed:";
    for (Action y : seq_) s += std::to_string(y);
    return s;
}

}  // namespace aixi
