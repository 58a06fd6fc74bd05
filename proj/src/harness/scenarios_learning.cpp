#include <cmath>
#include <sstream>
#include <unordered_map>

#include "aixi/agent/expectimax.hpp"
#include "aixi/agent/policy.hpp"
#include "aixi/bestvote/bestvote.hpp"
#include "aixi/core/rng.hpp"
#include "aixi/env/environments.hpp"
#include "aixi/env/spec.hpp"
#include "aixi/harness/run.hpp"
#include "aixi/metrics/metrics.hpp"
#include "aixi/semimeasure/chronologize.hpp"
#include "scenarios.hpp"

namespace aixi::scenarios {

namespace {

std::string fmt(double v)
{
    std::ostringstream s;
    s.precision(6);
    s << v;
    return s.str();
}

}  // namespace

void convergence(Report& r)
{
    std::vector<MixtureComponent> comps;
    for (const char* theta : {"1/4", "1/2", "3/4"})
        comps.push_back({std::make_shared<SpEnvironment>(std::make_shared<BernoulliSequence>(parse_rational(theta))), 2,
                         std::string("bernoulli:") + theta});
    const MixtureModel mix(comps);
    const int n = 10;
    const double tol = 1e-9;
    for (std::size_t c = 0; c < mix.size(); ++c) {
        double worst = 0;
        bool bounded = true, monotone = true;
        double rhs = 0;
        for (std::uint64_t seed = 1; seed <= 20; ++seed) {
            CounterRng rng(seed);
            std::vector<Action> actions;
            for (int k = 0; k < n; ++k) actions.push_back(static_cast<Action>(rng.below(2)));
            auto res = l2_convergence(mix, c, actions, n);
            rhs = res.rhs;
            worst = std::max(worst, to_double(res.lhs));
            bounded = bounded && to_double(res.lhs) <= res.rhs + tol;
            for (std::size_t i = 1; i < res.partial.size(); ++i) monotone = monotone && res.partial[i - 1] <= res.partial[i];
        }
        const std::string tag = mix.components()[c].id;
        {
            // uniformity along one sampled run, informational
            RandomPolicy rp(2, 1);
            RunLog log = run_protocol(*mix.components()[c].model, rp, header_for(tag, rp.name(), 1, n, FixedLifetime{}));
            double top = 0;
            for (double v : uniformity_ratios(log, *mix.components()[c].model, mix)) top = std::max(top, v);
            r.notes.push_back(tag + " max uniformity ratio over a " + std::to_string(n) + "-cycle run: " + fmt(top));
        }
        r.checks.push_back(check_true(tag + " max lhs over 20 action sequences", bounded, fmt(worst), "<= " + fmt(rhs)));
        r.checks.push_back(check_true(tag + " partial sums non-decreasing", monotone, monotone ? "yes" : "no", "yes"));
    }
}

void sp_bound(Report& r)
{
    // (a) mixture predictor against Theta_mu
    const std::vector<Rational> thetas = {Rational(1, 4), Rational(1, 2), Rational(3, 4)};
    const unsigned K = 2;
    auto xi = std::make_shared<SequenceMixture>(bernoulli_grid(thetas, K));
    for (const auto& th : thetas) {
        auto mu = std::make_shared<BernoulliSequence>(th);
        double min_slack = 1e300;
        std::string at;
        for (int n = 1; n <= 12; ++n) {
            Rational e_mu = error_count(theta_predictor(mu), *mu, n);
            Rational e_xi = error_count(theta_predictor(xi), *mu, n);
            auto s = sp_excess_check(e_mu, e_xi, K);
            if (s.slack < min_slack) min_slack = s.slack, at = "n=" + std::to_string(n);
        }
        r.checks.push_back(check_true("bernoulli:" + to_string(th) + " min slack over n<=12", min_slack >= 0,
                                      fmt(min_slack) + " at " + at, ">= 0"));
    }

    // (b) deterministic sequences, AI-xi over the transducer class with m_k = k
    const Alphabet a = binary_credit_alphabet(2);
    auto cls = std::make_shared<TransducerClass>(TransducerClass::enumerate(a, 14, 8));
    r.notes.push_back("class with l(q) <= 14: " + std::to_string(cls->size()) + " programs");
    using Row = Transducer::Row;
    // percept index = credit; the prediction y earns 1 when it equals z
    const Transducer zeros = Transducer::from_table(a, 1, {Row{0, 1}, Row{0, 0}});
    const Transducer alternating = Transducer::from_table(a, 2, {Row{1, 1}, Row{1, 0}, Row{0, 0}, Row{0, 1}});
    const int T = 20;
    for (const auto& [spec, q] : {std::pair{"sp:seq=0", zeros}, std::pair{"sp:seq=01", alternating}}) {
        auto mu = build_mu(parse_env_spec(spec));
        ExpectimaxPolicy agent(cls, MovingHorizon{1}, T, "aixi-program");
        RunLog log = run_protocol(*mu, agent, header_for(spec, agent.name(), 0, T, MovingHorizon{1}));
        auto res = det_sp_bound_check(log, *cls, q);
        r.checks.push_back(check_true(std::string(spec) + " errors < 2^l(q)", res.holds, std::to_string(res.errors),
                                      "< " + to_string(res.inv_alpha) + " (l=" + std::to_string(q.length()) + ")"));
    }
}

namespace {

// C_{km}(p | h) by re-simulating every q from its start state
Rational resimulated_estimate(const ExtendedProgram& p, const History& h, const TransducerClass& cls, int m)
{
    const auto& a = cls.alphabet();
    Rational total = 0;
    for (const auto& q : cls.programs()) {
        int state = 0;
        bool consistent = true;
        for (const auto& s : h.steps()) {
            const auto& row = q.row(state, s.action);
            if (row.percept != a.index(s.percept)) {
                consistent = false;
                break;
            }
            state = row.next;
        }
        if (!consistent) continue;
        History g = h;
        Rational c = 0;
        while (static_cast<int>(g.size()) < m) {
            const Action y = p.action(g);
            const auto& row = q.row(state, y);
            c += a.credit_value(row.percept);
            g.push(y, a.percept(row.percept));
            state = row.next;
        }
        total += q.weight() * c;
    }
    return total;
}

// memoizes run() per history
class CachedProgram : public ExtendedProgram {
public:
    CachedProgram(ExtendedProgramPtr inner, Alphabet a) : inner_(std::move(inner)), alphabet_(std::move(a)) {}
    RatedOutput run(const History& h) const override
    {
        auto key = history_key(h, alphabet_);
        if (auto it = cache_.find(key); it != cache_.end()) return it->second;
        return cache_.emplace(key, inner_->run(h)).first->second;
    }
    std::string id() const override { return inner_->id(); }

private:
    ExtendedProgramPtr inner_;
    Alphabet alphabet_;
    mutable std::unordered_map<std::string, RatedOutput> cache_;
};

}  // namespace

void bestvote_dominates(Report& r)
{
    const int T = 5;
    const unsigned lbits = 12;
    const std::uint64_t tsteps = 64;
    const Alphabet a = binary_credit_alphabet(2);
    auto cls = std::make_shared<const TransducerClass>(TransducerClass::enumerate(a, 11, 2));
    auto pool = std::make_shared<const Pool>(Pool::build(lbits, tsteps, cls, FixedLifetime{}, T));

    std::uint64_t decodable = 0;
    for (unsigned len = 1; len <= lbits; ++len)
        for (unsigned long long v = 0; v < (1ull << len); ++v)
            if (CvmProgram::decode(bits_of(v, len), a.num_actions())) ++decodable;
    r.checks.push_back(check_equal("pool size = decodable strings <= l", pool->size(), Rational(decodable)));
    r.checks.push_back(check_true("setup strings examined", pool->strings_examined() <= (2ull << lbits),
                                  std::to_string(pool->strings_examined()), "<= 2^(l+1)"));
    r.notes.push_back("pool " + std::to_string(pool->size()) + " programs, class " + std::to_string(cls->size()) +
                      " transducers, l=" + std::to_string(lbits) + " t=" + std::to_string(tsteps));

    long cycles = 0, invalid = 0, estimate_mismatch = 0, not_max = 0, over_budget = 0;
    std::vector<History> histories;
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        const std::string spec = "random:actions=2;obs=1;credits=0,1;seed=" + std::to_string(seed);
        auto mu = build_mu(parse_env_spec(spec));
        BestVotePolicy agent(pool);
        RunLog log = run_protocol(*mu, agent, header_for(spec, agent.name(), seed, T, FixedLifetime{}));
        const History full = log.history();
        // every prefix of a stored history is a decision point
        histories.push_back(full.prefix(full.size() - 1));
        for (std::size_t i = 0; i < full.size(); ++i) {
            ++cycles;
            const History h = full.prefix(i);
            const int m = T;
            Rational best;
            bool first = true;
            for (std::size_t j = 0; j < pool->size(); ++j) {
                const auto& member = pool->member(j);
                const RatedOutput out = member.run(h);
                const Rational est = resimulated_estimate(member, h, *cls, m);
                if (out.w > est) ++invalid;
                if (member.estimate(h) != est) ++estimate_mismatch;
                if (first || out.w > best) best = out.w;
                first = false;
            }
            const auto& rec = log.cycles()[i];
            if (!rec.value || *rec.value != best || pool->member(static_cast<std::size_t>(rec.selected)).run(h).w != best)
                ++not_max;
            if (rec.steps > pool->size() * tsteps) ++over_budget;
        }
    }
    r.checks.push_back(check_true("validity w_k <= C_km(p|h), all members and cycles", invalid == 0,
                                  std::to_string(invalid) + " violations in " + std::to_string(cycles) + " cycles", "0"));
    r.checks.push_back(check_true("incremental estimate = re-simulation", estimate_mismatch == 0,
                                  std::to_string(estimate_mismatch) + " mismatches", "0"));
    r.checks.push_back(check_true("selected w_k = pool maximum", not_max == 0, std::to_string(not_max) + " cycles off",
                                  "0"));
    r.checks.push_back(check_true("per-cycle VM steps <= |pool| t", over_budget == 0,
                                  std::to_string(over_budget) + " cycles over", "0"));

    const CachedProgram best(std::make_shared<BestVoteProgram>(pool), a);
    long dominated = 0;
    for (std::size_t j = 0; j < pool->size(); ++j)
        if (effective_compare(best, pool->member(j), histories).holds) ++dominated;
    r.checks.push_back(check_true("bestvote >=c every member on the run histories",
                                  dominated == static_cast<long>(pool->size()),
                                  std::to_string(dominated) + " of " + std::to_string(pool->size()), "all"));

    // (c) an AI-mu program joins the pool
    for (int i = 0; i <= 1; ++i) {
        auto mu = std::make_shared<HeavenHell>(i);
        auto core = std::make_shared<ExpectimaxAgentCore>(mu, FixedLifetime{}, T);
        Pool with_oracle = *pool;
        with_oracle.add(std::make_shared<NativeProgram>("aimu", [core](const History& h) {
            RatedOutput out;
            out.y = core->act(h);
            out.w = core->value(h);
            return out;
        }));
        const std::string spec = "heavenhell:i=" + std::to_string(i);
        BestVotePolicy bv(std::make_shared<const Pool>(with_oracle));
        ExpectimaxPolicy oracle(mu, FixedLifetime{}, T, "aimu");
        RunLog bv_log = run_protocol(*mu, bv, header_for(spec, bv.name(), 0, T, FixedLifetime{}));
        RunLog or_log = run_protocol(*mu, oracle, header_for(spec, oracle.name(), 0, T, FixedLifetime{}));
        std::string picks;
        for (const auto& c : bv_log.cycles())
            picks += (picks.empty() ? "" : " ") + with_oracle.member(static_cast<std::size_t>(c.selected)).id();
        r.checks.push_back(check_true(spec + " bestvote credit >= oracle - 1",
                                      bv_log.total_credit() >= or_log.total_credit() - 1,
                                      to_string(bv_log.total_credit()),
                                      ">= " + to_string(or_log.total_credit() - 1)));
        r.notes.push_back(spec + " selections: " + picks + " (" + std::to_string(selection_switches(bv_log)) +
                          " switches)");
    }
}

namespace {

int ceil_sqrt(int l)
{
    int r = 0;
    while (r * r < l) ++r;
    return r;
}

// total credit of an output sequence under the delayed-switch rule
int switch_credit(const std::vector<int>& y)
{
    const int T = static_cast<int>(y.size());
    int total = 0;
    for (int k = 1; k <= T; ++k) {
        if (y[static_cast<std::size_t>(k - 1)] != 1) continue;
        bool earned = false;
        for (int l = 1; !earned && k - l >= 1; ++l) {
            const int from = k - l - ceil_sqrt(l);
            if (from < 1) continue;
            bool zeros = true;
            for (int i = from; i <= k - l; ++i) zeros = zeros && y[static_cast<std::size_t>(i - 1)] == 0;
            earned = zeros;
        }
        total += earned ? 1 : 0;
    }
    return total;
}

}  // namespace

void delayed_switch(Report& r)
{
    for (int T : {6, 12}) {
        int best = 0;
        std::vector<int> y(static_cast<std::size_t>(T));
        for (unsigned long v = 0; v < (1ul << T); ++v) {
            for (int i = 0; i < T; ++i) y[static_cast<std::size_t>(i)] = static_cast<int>((v >> (T - 1 - i)) & 1u);
            best = std::max(best, switch_credit(y));
        }
        ExperimentConfig cfg;
        cfg.env = "delayed-switch";
        cfg.agent = "aimu";
        cfg.lifetime = T;
        RunLog log = run(cfg);
        std::string seq;
        for (const auto& c : log.cycles()) seq += std::to_string(c.action);
        r.checks.push_back(check_equal("T=" + std::to_string(T) + " AI-mu total = brute-force optimum",
                                       log.total_credit(), best));
        r.notes.push_back("T=" + std::to_string(T) + ": optimum " + std::to_string(best) + " (AI-mu plays " + seq +
                          "), closed form sqrt(T+1/4)-1/2 = " + fmt(std::sqrt(T + 0.25) - 0.5));
    }
}

void ex_speedup(Report& r)
{
    const int T = 20;
    const std::string examples = "3/4";
    auto wins_for = [&](int truth, std::string& detail) {
        int wins = 0;
        for (std::uint64_t seed = 1; seed <= 10; ++seed) {
            Rational c[2];
            for (int v = 0; v < 2; ++v) {
                const std::string p = v == 0 ? examples : "0";
                ExperimentConfig cfg;
                cfg.env = "ex:examples=" + p + ";truth=" + std::to_string(truth);
                cfg.model = "ex:examples=" + p + ";truth=mix";
                cfg.agent = "aixi-mixture";
                cfg.horizon = MovingHorizon{2};
                cfg.lifetime = T;
                cfg.seed = seed;
                c[v] = run(cfg).total_credit();
            }
            wins += c[0] > c[1] ? 1 : 0;
            detail += (detail.empty() ? "" : " ") + to_string(c[0]) + ":" + to_string(c[1]);
        }
        return wins;
    };
    // relation 0 is the one the credits-only agent's tie-breaking guesses
    // first, so it is learned without errors and cannot show a speedup
    const int truth = 1;
    std::string detail;
    const int wins = wins_for(truth, detail);
    r.checks.push_back(check_true("truth=1: seeds where examples beat credits-only by cycle 20", wins >= 8,
                                  std::to_string(wins) + " of 10", ">= 8 of 10"));
    r.notes.push_back("truth=1 credit with:without examples per seed: " + detail);
    for (int other : {0, 2, 3}) {
        std::string d;
        const int w = wins_for(other, d);
        r.notes.push_back("truth=" + std::to_string(other) + ": " + std::to_string(w) + " of 10 (" + d + ")");
    }
}

void conversion(Report& r)
{
    const Alphabet a = binary_credit_alphabet(2);
    const int t_max = 6;
    long tables = 0, semimeasure_violations = 0, monotone_violations = 0, sup_mismatches = 0, enumerated = 0;
    for (int idx = 0; idx < 100; ++idx) {
        const int depth = 1 + idx % 3;
        const bool from_semimeasure = idx % 2 == 0;
        CounterRng rng(1000 + static_cast<std::uint64_t>(idx));
        RandomEnvironment rho(a, 500 + static_cast<std::uint64_t>(idx), 6, Rational(1, 8));
        std::unordered_map<std::string, std::vector<Rational>> phi_table;
        std::vector<History> strings;
        for (int n = 0; n <= depth; ++n)
            for (auto& h : all_histories(a, n)) strings.push_back(std::move(h));
        for (const auto& s : strings) {
            std::vector<Rational> row(static_cast<std::size_t>(t_max) + 1);
            if (from_semimeasure) {
                // increasing lower approximations reaching rho(s) at t = tau
                const Rational target = rho.joint(s);
                const int tau = static_cast<int>(rng.below(static_cast<std::uint64_t>(t_max) + 1));
                for (int t = 0; t <= t_max; ++t)
                    row[static_cast<std::size_t>(t)] = t >= tau ? target : target * ratio(t + 1, tau + 1);
            } else {
                Rational v = Rational(static_cast<long>(rng.below(9)), 16);
                for (int t = 0; t <= t_max; ++t) {
                    row[static_cast<std::size_t>(t)] = v;
                    v += Rational(static_cast<long>(rng.below(5)), 16);
                }
            }
            phi_table.emplace(history_key(s, a), std::move(row));
        }
        EnumApproximator phi = [&](const History& s, int t) {
            return phi_table.at(history_key(s, a))[static_cast<std::size_t>(t)];
        };
        const ChronologizedTable out = chronologize(phi, a, depth, t_max);
        ++tables;
        for (int t = 0; t <= t_max; ++t) {
            if (out.value(History(), t) > 1) ++semimeasure_violations;
            for (const auto& s : strings) {
                if (t > 0 && out.value(s, t) < out.value(s, t - 1)) ++monotone_violations;
                if (static_cast<int>(s.size()) == depth) continue;
                for (Action y = 0; y < a.num_actions(); ++y) {
                    Rational sum = 0;
                    for (int x = 0; x < a.num_percepts(); ++x) sum += out.value(s.extended(y, a.percept(x)), t);
                    if (sum > out.value(s, t)) ++semimeasure_violations;
                }
            }
        }
        if (from_semimeasure) {
            ++enumerated;
            for (const auto& s : strings)
                if (out.value(s, t_max) != phi(s, t_max)) ++sup_mismatches;
        }
    }
    r.checks.push_back(check_true("semimeasure inequalities over " + std::to_string(tables) + " tables",
                                  semimeasure_violations == 0, std::to_string(semimeasure_violations) + " violations",
                                  "0"));
    r.checks.push_back(check_true("monotone in t", monotone_violations == 0,
                                  std::to_string(monotone_violations) + " violations", "0"));
    r.checks.push_back(check_true("supremum preserved for " + std::to_string(enumerated) + " semimeasure enumerations",
                                  sup_mismatches == 0, std::to_string(sup_mismatches) + " mismatches", "0"));
}

}  // namespace aixi::scenarios
