#include "aixi/metrics/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "aixi/agent/expectimax.hpp"
#include "aixi/agent/special.hpp"

namespace aixi {

Predictor measure_predictor(SequenceMeasurePtr rho)
{
    return [rho](const Word& prefix) { return rho->cond(prefix); };
}

Predictor theta_predictor(SequenceMeasurePtr rho)
{
    return [rho](const Word& prefix) {
        std::vector<Rational> out(static_cast<std::size_t>(rho->num_symbols()), Rational(0));
        if (auto z = sp_predict(*rho, prefix)) out[static_cast<std::size_t>(*z)] = 1;
        return out;
    };
}

namespace {

void error_rec(const Predictor& rho, const SequenceMeasure& mu, int n, Word& prefix, const Rational& mass, Rational& acc)
{
    if (static_cast<int>(prefix.size()) >= n) return;
    auto d = mu.cond(prefix);
    std::vector<Rational> r;
    for (std::size_t x = 0; x < d.size(); ++x) {
        if (d[x] == 0) continue;
        if (r.empty()) r = rho(prefix);
        Rational m = mass * d[x];
        acc += m * (1 - r[x]);
        prefix.push_back(static_cast<int>(x));
        error_rec(rho, mu, n, prefix, m, acc);
        prefix.pop_back();
    }
}

void l2_rec(const MixtureModel& mix, const Semimeasure& mu, const std::vector<Action>& actions, int n, History& h,
            const Rational& mass, std::vector<Rational>& per_cycle)
{
    const int k = static_cast<int>(h.size()) + 1;
    if (k > n) return;
    const Action y = actions[static_cast<std::size_t>(k - 1)];
    auto dm = mu.cond(h, y);
    auto dx = mix.cond(h, y);
    const auto& a = mu.alphabet();
    for (std::size_t x = 0; x < dm.size(); ++x) {
        if (dm[x] == 0) continue;
        Rational m = mass * dm[x];
        Rational diff = dm[x] - dx[x];
        per_cycle[static_cast<std::size_t>(k - 1)] += m * diff * diff;
        h.push(y, a.percept(static_cast<int>(x)));
        l2_rec(mix, mu, actions, n, h, m, per_cycle);
        h.pop();
    }
}

Rational credit_rec(const Semimeasure& mu, const std::function<Action(const History&)>& policy, History& h, int m)
{
    if (static_cast<int>(h.size()) >= m) return 0;
    const Action y = policy(h);
    auto d = mu.cond(h, y);
    const auto& a = mu.alphabet();
    Rational s = 0;
    for (std::size_t x = 0; x < d.size(); ++x) {
        if (d[x] == 0) continue;
        const int xi = static_cast<int>(x);
        h.push(y, a.percept(xi));
        s += d[x] * (a.credit_value(xi) + credit_rec(mu, policy, h, m));
        h.pop();
    }
    return s;
}

}  // namespace

Rational expected_credit(const Semimeasure& mu, const std::function<Action(const History&)>& policy, const History& h,
                         int m)
{
    History s = h;
    return credit_rec(mu, policy, s, m);
}

Rational error_count(const Predictor& rho, const SequenceMeasure& mu, int n)
{
    if (n < 0) throw std::invalid_argument("error_count: negative n");
    Rational acc = 0;
    Word prefix;
    error_rec(rho, mu, n, prefix, Rational(1), acc);
    return acc;
}

SpExcess sp_excess_check(const Rational& e_rho, const Rational& e_xi, unsigned k_bits)
{
    SpExcess s;
    s.excess = e_xi - e_rho;
    s.h = std::log(2.0) * k_bits;
    s.bound = s.h + std::sqrt(4 * to_double(e_rho) * s.h + s.h * s.h);
    s.slack = s.bound - to_double(s.excess);
    return s;
}

L2Convergence l2_convergence(const MixtureModel& mix, std::size_t component, const std::vector<Action>& actions, int n)
{
    if (component >= mix.size()) throw std::out_of_range("l2_convergence: no such component");
    if (static_cast<int>(actions.size()) < n) throw std::invalid_argument("l2_convergence: too few actions");
    const auto& c = mix.components()[component];
    std::vector<Rational> per_cycle(static_cast<std::size_t>(n), Rational(0));
    History h;
    l2_rec(mix, *c.model, actions, n, h, Rational(1), per_cycle);
    L2Convergence out;
    out.lhs = 0;
    for (const auto& v : per_cycle) {
        out.lhs += v;
        out.partial.push_back(out.lhs);
    }
    out.rhs = 0.5 * std::log(2.0) * c.code_length;
    return out;
}

AgreementDeficit agreement_deficit(const RunLog& log, const Semimeasure& mu, const HorizonPolicy& horizon, int lifetime)
{
    const auto& a = mu.alphabet();
    for (const auto& c : log.cycles())
        if (!a.valid_action(c.action) || !a.valid(c.percept) || a.credit_value(c.percept) != c.credit)
            throw std::invalid_argument("agreement_deficit: log does not match the model alphabet");
    Expectimax e(mu);
    AgreementDeficit out;
    const History full = log.history();
    int count = 0;
    Rational gap = 0;
    for (std::size_t i = 0; i < full.size(); ++i) {
        const int k = static_cast<int>(i) + 1;
        History h = full.prefix(i);
        auto v = e.action_values(h, horizon_end(horizon, k, lifetime));
        std::size_t best = 0;
        for (std::size_t y = 1; y < v.size(); ++y)
            if (v[y] > v[best]) best = y;
        const auto chosen = static_cast<std::size_t>(full[i].action);
        if (v[chosen] < v[best]) ++count;
        gap += v[best] - v[chosen];
        out.count.push_back(count);
        out.gap.push_back(gap);
    }
    return out;
}

DetSpBound det_sp_bound_check(const RunLog& log, const TransducerClass& cls, const Transducer& q_true)
{
    bool member = false;
    for (const auto& q : cls.programs())
        if (q.bits() == q_true.bits()) member = true;
    if (!member) throw std::invalid_argument("det_sp_bound_check: generating program is not in the class");
    if (!q_true.replay(log.history(), cls.alphabet()))
        throw std::invalid_argument("det_sp_bound_check: log was not generated by the given program");
    DetSpBound out;
    for (const auto& c : log.cycles())
        if (c.credit == 0) ++out.errors;
    mpz_class inv = 1;
    inv <<= q_true.length();
    out.inv_alpha = Rational(inv);
    out.holds = out.errors < out.inv_alpha;
    return out;
}

std::vector<double> uniformity_ratios(const RunLog& log, const Semimeasure& mu, const Semimeasure& xi)
{
    const auto& a = mu.alphabet();
    if (!(a == xi.alphabet())) throw std::invalid_argument("uniformity_ratios: alphabets differ");
    const History full = log.history();
    std::vector<double> out;
    for (std::size_t i = 0; i < full.size(); ++i) {
        const History h = full.prefix(i);
        Rational worst = 0;
        for (Action y = 0; y < a.num_actions(); ++y) {
            auto dm = mu.cond(h, y);
            auto dx = xi.cond(h, y);
            for (std::size_t x = 0; x < dm.size(); ++x) worst = std::max(worst, Rational(abs(dm[x] - dx[x])));
        }
        const auto& s = full[i];
        const auto x = static_cast<std::size_t>(a.index(s.percept));
        const Rational here = abs(mu.cond(h, s.action)[x] - xi.cond(h, s.action)[x]);
        if (here == 0) out.push_back(worst == 0 ? 0.0 : std::numeric_limits<double>::infinity());
        else out.push_back(to_double(Rational(worst / here)));
    }
    return out;
}

int selection_switches(const RunLog& log)
{
    int n = 0;
    const auto& c = log.cycles();
    for (std::size_t i = 1; i < c.size(); ++i) n += c[i].selected != c[i - 1].selected ? 1 : 0;
    return n;
}

int needle_min_worst_errors(int n, int cycles)
{
    if (n < 1 || cycles < 0 || cycles > 5) throw std::invalid_argument("needle_min_worst_errors: bad size");
    // a deterministic policy is a map from the credits seen so far to the next
    // action; credit sequences are heap-indexed
    const int nodes = (1 << cycles) - 1;
    double count = std::pow(static_cast<double>(n), nodes);
    if (count > 1e8) throw std::length_error("needle_min_worst_errors: too many policies");
    std::vector<int> policy(static_cast<std::size_t>(nodes), 0);
    int best = cycles;
    while (true) {
        int worst = 0;
        for (int target = 0; target < n; ++target) {
            int node = 0, errors = 0;
            for (int k = 0; k < cycles; ++k) {
                const int c = policy[static_cast<std::size_t>(node)] == target ? 1 : 0;
                errors += 1 - c;
                node = 2 * node + 1 + c;
            }
            worst = std::max(worst, errors);
        }
        best = std::min(best, worst);
        int i = 0;
        while (i < nodes && ++policy[static_cast<std::size_t>(i)] == n) policy[static_cast<std::size_t>(i++)] = 0;
        if (i == nodes) break;
    }
    return best;
}

OrderResult order_compare(const std::function<Action(const History&)>& p,
                          const std::function<Action(const History&)>& q, const TransducerClass& cls,
                          const std::vector<History>& histories, const HorizonPolicy& horizon, int lifetime)
{
    auto as_program = [](const std::function<Action(const History&)>& f) {
        return NativeProgram("policy", [f](const History& h) {
            RatedOutput r;
            r.w = 0;
            r.y = f(h);
            return r;
        });
    };
    const NativeProgram pp = as_program(p);
    const NativeProgram qq = as_program(q);
    OrderResult r;
    for (std::size_t i = 0; i < histories.size(); ++i) {
        const History& full = histories[i];
        for (std::size_t n = 0; n <= full.size(); ++n) {
            const int k = static_cast<int>(n) + 1;
            if (k > lifetime) break;
            History h = full.prefix(n);
            const int m = horizon_end(horizon, k, lifetime);
            if (estimate_credit(pp, h, cls, k, m) < estimate_credit(qq, h, cls, k, m)) {
                r.holds = false;
                r.history = i;
                r.k = k;
                return r;
            }
        }
    }
    return r;
}

}  // namespace aixi
