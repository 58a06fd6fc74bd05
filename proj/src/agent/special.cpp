#include "aixi/agent/special.hpp"

#include <stdexcept>

namespace aixi {

std::optional<int> sp_predict(const SequenceMeasure& rho, const Word& prefix)
{
    if (rho.joint(prefix) == 0) throw std::domain_error("sp_predict: prefix has zero mass");
    auto p = rho.cond(prefix);
    for (std::size_t s = 0; s < p.size(); ++s)
        if (2 * p[s] > 1) return static_cast<int>(s);
    return std::nullopt;
}

Rational expected_value(const FunctionClass& fc, const std::vector<Action>& ys, const std::vector<int>& zs, Action y)
{
    auto p = fc.cond(ys, zs, y);
    Rational e = 0;
    for (int z = 1; z <= fc.num_values; ++z) e += p[static_cast<std::size_t>(z - 1)] * z;
    return e;
}

Action greedy_fm_act(const FunctionClass& fc, const std::vector<Action>& ys, const std::vector<int>& zs)
{
    Action best = 0;
    Rational best_e = expected_value(fc, ys, zs, 0);
    for (Action y = 1; y < fc.num_actions; ++y) {
        Rational e = expected_value(fc, ys, zs, y);
        if (e < best_e) best_e = e, best = y;
    }
    return best;
}

Action greedy_fm_act(const FmEnvironment& env, const History& h)
{
    std::vector<Action> ys;
    for (const auto& s : h.steps()) ys.push_back(s.action);
    return greedy_fm_act(env.functions(), ys, env.values_of(h));
}

namespace {

Rational fm_cost(const FunctionClass& fc, const std::vector<Rational>& alpha, std::vector<Action>& ys, std::vector<int>& zs,
                 Action* argmin)
{
    const std::size_t k = ys.size();  // 0-based cycle about to be played
    if (k >= alpha.size()) return 0;
    Rational best;
    for (Action y = 0; y < fc.num_actions; ++y) {
        auto p = fc.cond(ys, zs, y);
        Rational c = 0;
        for (int z = 1; z <= fc.num_values; ++z) {
            const Rational& pz = p[static_cast<std::size_t>(z - 1)];
            if (pz == 0) continue;
            ys.push_back(y);
            zs.push_back(z);
            c += pz * (alpha[k] * z + fm_cost(fc, alpha, ys, zs, nullptr));
            ys.pop_back();
            zs.pop_back();
        }
        if (y == 0 || c < best) {
            best = c;
            if (argmin) *argmin = y;
        }
    }
    return best;
}

}  // namespace

FmDecision fm_optimal_act(const FunctionClass& fc, const std::vector<Rational>& alpha, const std::vector<Action>& ys,
                          const std::vector<int>& zs)
{
    if (ys.size() >= alpha.size()) throw std::invalid_argument("fm_optimal_act: lifetime exhausted");
    auto y_copy = ys;
    auto z_copy = zs;
    FmDecision d;
    d.expected_cost = fm_cost(fc, alpha, y_copy, z_copy, &d.action);
    return d;
}

Action minimax_move(const GameTree& tree, const std::vector<int>& path)
{
    if (path.size() % 2 != 0) throw std::invalid_argument("minimax_move: not the agent's turn");
    const GameNode& n = tree.node(path);
    if (n.leaf()) throw std::invalid_argument("minimax_move: terminal node");
    return maximin_move(n);
}

}  // namespace aixi
