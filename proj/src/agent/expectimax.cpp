#include "aixi/agent/expectimax.hpp"

#include <map>
#include <stdexcept>

namespace aixi {

Rational Expectimax::action_value(const History& h, Action y, int m)
{
    const auto& a = model_.alphabet();
    Distribution d = model_.cond(h, y);
    Rational v = 0;
    History next = h;
    for (int x = 0; x < static_cast<int>(d.size()); ++x) {
        const Rational& p = d[static_cast<std::size_t>(x)];
        if (p == 0) continue;
        next.push(y, a.percept(x));
        v += p * (a.credit_value(x) + value(next, m));
        next.pop();
    }
    return v;
}

Rational Expectimax::value(const History& h, int m)
{
    const int k = static_cast<int>(h.size()) + 1;
    if (k > m + 1) throw std::invalid_argument("expectimax: cycle beyond horizon end");
    if (k == m + 1) return 0;
    std::string key = history_key(h, model_.alphabet());
    key.append(reinterpret_cast<const char*>(&m), sizeof m);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    ++nodes_;
    Rational best;
    for (Action y = 0; y < model_.alphabet().num_actions(); ++y) {
        Rational v = action_value(h, y, m);
        if (y == 0 || v > best) best = v;
    }
    memo_.emplace(std::move(key), best);
    return best;
}

std::vector<Rational> Expectimax::action_values(const History& h, int m)
{
    const int k = static_cast<int>(h.size()) + 1;
    if (k > m) throw std::invalid_argument("expectimax: no action left before the horizon end");
    std::vector<Rational> v;
    for (Action y = 0; y < model_.alphabet().num_actions(); ++y) v.push_back(action_value(h, y, m));
    return v;
}

Action Expectimax::best_action(const History& h, int m)
{
    auto v = action_values(h, m);
    Action best = 0;
    for (Action y = 1; y < static_cast<Action>(v.size()); ++y)
        if (v[static_cast<std::size_t>(y)] > v[static_cast<std::size_t>(best)]) best = y;
    return best;
}

Rational expectimax_value(const Semimeasure& model, const History& h, int k, int m)
{
    if (k != static_cast<int>(h.size()) + 1) throw std::invalid_argument("expectimax: k must equal |h| + 1");
    if (k > m + 1) throw std::invalid_argument("expectimax: k beyond m + 1");
    Expectimax e(model);
    return e.value(h, m);
}

Rational backward_induction_value(const Semimeasure& model, const History& h, int m)
{
    const auto& a = model.alphabet();
    const int k0 = static_cast<int>(h.size()) + 1;
    if (k0 > m + 1) throw std::invalid_argument("backward induction: start beyond horizon end");
    // layer[d] holds the reachable histories of length |h| + d
    std::vector<std::vector<History>> layers{{h}};
    for (int k = k0; k <= m; ++k) {
        std::vector<History> next;
        for (const auto& s : layers.back())
            for (Action y = 0; y < a.num_actions(); ++y) {
                auto d = model.cond(s, y);
                for (int x = 0; x < a.num_percepts(); ++x)
                    if (d[static_cast<std::size_t>(x)] != 0) next.push_back(s.extended(y, a.percept(x)));
            }
        layers.push_back(std::move(next));
    }
    std::map<std::string, Rational> v;
    for (const auto& s : layers.back()) v[history_key(s, a)] = 0;
    for (int d = static_cast<int>(layers.size()) - 2; d >= 0; --d) {
        for (const auto& s : layers[static_cast<std::size_t>(d)]) {
            Rational best;
            for (Action y = 0; y < a.num_actions(); ++y) {
                auto p = model.cond(s, y);
                Rational q = 0;
                for (int x = 0; x < a.num_percepts(); ++x) {
                    if (p[static_cast<std::size_t>(x)] == 0) continue;
                    q += p[static_cast<std::size_t>(x)] *
                         (a.credit_value(x) + v.at(history_key(s.extended(y, a.percept(x)), a)));
                }
                if (y == 0 || q > best) best = q;
            }
            v[history_key(s, a)] = best;
        }
    }
    return v.at(history_key(h, a));
}

ExpectimaxAgentCore::ExpectimaxAgentCore(SemimeasurePtr model, HorizonPolicy horizon, int lifetime)
    : model_(std::move(model)), horizon_(std::move(horizon)), lifetime_(lifetime)
{
    if (lifetime_ < 0) throw std::invalid_argument("negative lifetime");
}

int ExpectimaxAgentCore::horizon_end(int k) const
{
    return aixi::horizon_end(horizon_, k, lifetime_);
}

Action ExpectimaxAgentCore::act(const History& h) const
{
    const int k = static_cast<int>(h.size()) + 1;
    Expectimax e(*model_);
    return e.best_action(h, horizon_end(k));
}

Rational ExpectimaxAgentCore::value(const History& h) const
{
    const int k = static_cast<int>(h.size()) + 1;
    Expectimax e(*model_);
    return e.value(h, horizon_end(k));
}

Stabilized stabilized_act(const Semimeasure& model, const History& h, int m_lo, int m_hi)
{
    const int k = static_cast<int>(h.size()) + 1;
    if (m_lo > m_hi || m_lo < k) throw std::invalid_argument("stabilized_act needs k <= m_lo <= m_hi");
    Stabilized s;
    Expectimax e(model);
    for (int m = m_lo; m <= m_hi; ++m) s.witnessed.insert(e.best_action(h, m));
    if (s.witnessed.size() == 1) s.action = *s.witnessed.begin();
    return s;
}

}  // namespace aixi
