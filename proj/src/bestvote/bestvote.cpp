#include "aixi/bestvote/bestvote.hpp"

#include <stdexcept>
#include <unordered_map>

namespace aixi {

RatedOutput VmProgram::run(const History& h) const
{
    VmResult r = program_.run(h, budget_);
    RatedOutput out;
    out.steps = r.steps;
    if (!r.halted) {
        out.timed_out = true;
        out.w = 0;
        out.y = 0;
        return out;
    }
    out.w = r.w;
    out.y = r.y;
    return out;
}

Rational estimate_credit(const ExtendedProgram& p, const History& h, const TransducerClass& cls, int k, int m)
{
    if (k != static_cast<int>(h.size()) + 1) throw std::invalid_argument("estimate_credit: k must equal |h| + 1");
    const auto& a = cls.alphabet();
    // p's action at each rollout history, shared across environments
    std::unordered_map<std::string, Action> actions;
    auto act = [&](const History& s) {
        auto key = history_key(s, a);
        if (auto it = actions.find(key); it != actions.end()) return it->second;
        Action y = p.action(s);
        actions.emplace(std::move(key), y);
        return y;
    };
    Rational total = 0;
    for (const auto& q : cls.programs()) {
        auto state = q.replay(h, a);
        if (!state) continue;
        History s = h;
        int st = *state;
        Rational c = 0;
        for (int i = k; i <= m; ++i) {
            Action y = act(s);
            const auto& row = q.row(st, y);
            Percept x = a.percept(row.percept);
            c += a.credit_value(x);
            s.push(y, x);
            st = row.next;
        }
        total += q.weight() * c;
    }
    return total;
}

Rational to_credit_grid(const Rational& w)
{
    const long den = 1L << 16;
    Rational g(floor(w * den), den);
    g.canonicalize();
    return g;
}

WrappedProgram::WrappedProgram(ExtendedProgramPtr inner, std::shared_ptr<const TransducerClass> cls,
                               HorizonPolicy horizon, int lifetime)
    : inner_(std::move(inner)), cls_(std::move(cls)), horizon_(std::move(horizon)), lifetime_(lifetime)
{
}

int WrappedProgram::horizon_end(int k) const
{
    return aixi::horizon_end(horizon_, k, lifetime_);
}

Rational WrappedProgram::estimate(const History& h) const
{
    const int k = static_cast<int>(h.size()) + 1;
    return estimate_credit(*inner_, h, *cls_, k, horizon_end(k));
}

RatedOutput WrappedProgram::run(const History& h) const
{
    RatedOutput out = inner_->run(h);
    if (out.timed_out) return out;
    Rational est = estimate(h);
    out.w = to_credit_grid(out.w < est ? out.w : est);
    return out;
}

Pool::Pool(std::shared_ptr<const TransducerClass> cls, HorizonPolicy horizon, int lifetime)
    : cls_(std::move(cls)), horizon_(std::move(horizon)), lifetime_(lifetime)
{
}

Pool Pool::build(unsigned max_len, std::uint64_t budget, std::shared_ptr<const TransducerClass> cls,
                 HorizonPolicy horizon, int lifetime)
{
    if (budget == 0) throw std::invalid_argument("pool step budget must be positive");
    const int num_actions = cls->alphabet().num_actions();
    Pool pool(std::move(cls), std::move(horizon), lifetime);
    pool.budget_ = budget;
    for (auto& prog : enumerate_programs(max_len, num_actions, &pool.examined_))
        pool.add(std::make_shared<VmProgram>(std::move(prog), budget));
    return pool;
}

void Pool::add(ExtendedProgramPtr inner)
{
    members_.push_back(std::make_shared<WrappedProgram>(std::move(inner), cls_, horizon_, lifetime_));
}

Selection Pool::select(const History& h) const
{
    Selection sel;
    sel.w = 0;
    for (std::size_t i = 0; i < members_.size(); ++i) {
        RatedOutput out = members_[i]->run(h);
        sel.steps += out.steps;
        if (sel.index < 0 || out.w > sel.w) {
            sel.index = static_cast<int>(i);
            sel.w = out.w;
            sel.y = out.y;
        }
        sel.claims.push_back(std::move(out.w));
    }
    return sel;
}

RatedOutput BestVoteProgram::run(const History& h) const
{
    Selection s = pool_->select(h);
    RatedOutput out;
    out.w = s.w;
    out.y = s.y;
    out.steps = s.steps;
    return out;
}

Action BestVotePolicy::act(const History& h)
{
    last_ = pool_->select(h);
    return last_.y;
}

OrderResult effective_compare(const ExtendedProgram& p, const ExtendedProgram& q, const std::vector<History>& histories)
{
    OrderResult r;
    for (std::size_t i = 0; i < histories.size(); ++i) {
        const History& full = histories[i];
        for (std::size_t n = 0; n <= full.size(); ++n) {
            History h = full.prefix(n);
            if (p.run(h).w < q.run(h).w) {
                r.holds = false;
                r.history = i;
                r.k = static_cast<int>(n) + 1;
                return r;
            }
        }
    }
    return r;
}

}  // namespace aixi
