#include <functional>
#include <sstream>

#include "aixi/agent/expectimax.hpp"
#include "aixi/agent/policy.hpp"
#include "aixi/agent/special.hpp"
#include "aixi/core/rng.hpp"
#include "aixi/env/environments.hpp"
#include "aixi/env/fm.hpp"
#include "aixi/env/game.hpp"
#include "aixi/env/spec.hpp"
#include "aixi/harness/run.hpp"
#include "aixi/metrics/metrics.hpp"
#include "scenarios.hpp"

namespace aixi::scenarios {

RunLogHeader header_for(const std::string& env, const std::string& agent, std::uint64_t seed, int lifetime,
                        const HorizonPolicy& horizon)
{
    RunLogHeader hd;
    hd.env = env;
    hd.env_hash = fnv1a(env);
    hd.agent = agent;
    hd.seed = seed;
    hd.rng = std::string(CounterRng::algorithm);
    hd.lifetime = lifetime;
    hd.horizon = to_string(horizon);
    return hd;
}

namespace {

std::string actions_of(const RunLog& log)
{
    std::string s;
    for (const auto& c : log.cycles()) s += std::to_string(c.action);
    return s;
}

// deterministic environments: the percept with all the mass
Percept certain_percept(const Semimeasure& mu, const History& h, Action y)
{
    auto d = mu.cond(h, y);
    for (std::size_t x = 0; x < d.size(); ++x)
        if (d[x] == 1) return mu.alphabet().percept(static_cast<int>(x));
    throw std::logic_error("environment is not deterministic here");
}

}  // namespace

void greedy_fm_fails(Report& r)
{
    const auto fc = FunctionClass::all_functions(2, 4);
    // every f(y) is uniform on {1,2,3,4}
    const Rational mean(5, 2);
    r.checks.push_back(check_equal("<z1> for y=0", expected_value(fc, {}, {}, 0), mean));
    r.checks.push_back(check_equal("<z1> for y=1", expected_value(fc, {}, {}, 1), mean));

    ExperimentConfig cfg;
    cfg.env = "fm:actions=2;values=4;variant=fms;T=10;f=2,1";
    cfg.model = "fm:actions=2;values=4;variant=fms;T=10";
    cfg.agent = "greedy-fm";
    cfg.lifetime = 10;
    RunLog log = run(cfg);
    const int z1 = log.cycles().front().percept.obs + 1;
    r.checks.push_back(check_true("observed f(0) after y1=0", log.cycles().front().action == 0 && z1 == 2,
                                  "y1=" + std::to_string(log.cycles().front().action) + " z1=" + std::to_string(z1),
                                  "y1=0 z1=2"));
    r.checks.push_back(check_true("greedy actions over 10 cycles", actions_of(log) == "0000000000", actions_of(log),
                                  "0000000000"));
    r.checks.push_back(check_equal("<z> for y=1 after f(0)=2", expected_value(fc, {0}, {2}, 1), mean));
    cfg.agent = "fixed:1";
    r.notes.push_back("f(1)=1 is never tried: greedy total credit " + to_string(log.total_credit()) +
                      ", always y=1 would earn " + to_string(run(cfg).total_credit()));
}

namespace {

// Minimum over all deterministic 3-cycle policies of sum_f f(y_3), each
// policy a table: y_1, y_2(z_1), y_3(z_1, z_2).
long fmf_bruteforce_min(const FunctionClass& fc)
{
    const int nodes = 1 + 4 + 16;
    long best = -1;
    for (unsigned long p = 0; p < (1ul << nodes); ++p) {
        auto y = [p](int node) { return static_cast<int>((p >> node) & 1u); };
        long cost = 0;
        for (const auto& f : fc.values) {
            const int y1 = y(0);
            const int z1 = f[static_cast<std::size_t>(y1)];
            const int y2 = y(1 + (z1 - 1));
            const int z2 = f[static_cast<std::size_t>(y2)];
            const int y3 = y(5 + (z1 - 1) * 4 + (z2 - 1));
            cost += f[static_cast<std::size_t>(y3)];
        }
        if (best < 0 || cost < best) best = cost;
    }
    return best;
}

}  // namespace

void fmf_explores(Report& r)
{
    const int T = 3;
    auto mu = std::make_shared<FmEnvironment>(FunctionClass::all_functions(2, 4), fm_weights(FmVariant::Final, T));
    const Rational v = expectimax_value(*mu, History(), 1, T);

    ExpectimaxAgentCore aimu(mu, FixedLifetime{}, T);
    auto aimu_act = [&](const History& h) { return aimu.act(h); };
    auto greedy_act = [&](const History& h) { return greedy_fm_act(*mu, h); };
    const Rational v_aimu = expected_credit(*mu, aimu_act, History(), T);
    const Rational v_greedy = expected_credit(*mu, greedy_act, History(), T);

    const long best_sum = fmf_bruteforce_min(mu->functions());
    const Rational oracle = ratio(-best_sum, static_cast<long>(mu->functions().values.size()));

    r.checks.push_back(check_equal("C*_13 against policy enumeration", v, oracle));
    r.checks.push_back(check_equal("AI-mu policy expected credit", v_aimu, v));
    r.checks.push_back(check_true("AI-mu beats greedy", v_aimu > v_greedy,
                                  to_string(v_aimu) + " vs " + to_string(v_greedy), "strictly greater"));

    History h;
    h.push(0, mu->percept_for(1, 2));
    const Action explore = aimu.act(h);
    const Action lock = greedy_act(h);
    r.checks.push_back(check_true("after f(0)=2: AI-mu / greedy action", explore == 1 && lock == 0,
                                  std::to_string(explore) + " / " + std::to_string(lock), "1 / 0"));
    r.notes.push_back("expected final z: AI-mu " + to_string(-v_aimu) + ", greedy " + to_string(-v_greedy));
}

void sp_identity(Report& r)
{
    const int depth = 6;
    const std::vector<HorizonPolicy> horizons = {FixedLifetime{}, MovingHorizon{1}, MovingHorizon{3},
                                                 Proportional{Rational(1, 2)}};
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        auto seq = std::make_shared<RandomSequence>(seed);
        SpEnvironment mu(seq);
        const auto& a = mu.alphabet();
        long checked = 0, mismatches = 0, refusals = 0;
        for (const auto& hp : horizons) {
            Expectimax e(mu);
            for (int n = 0; n < depth; ++n)
                for (const auto& h : all_histories(a, n)) {
                    const int k = n + 1;
                    auto theta = sp_predict(*seq, SpEnvironment::sequence_of(h));
                    if (!theta) {
                        ++refusals;
                        continue;
                    }
                    ++checked;
                    if (e.best_action(h, horizon_end(hp, k, depth)) != *theta) ++mismatches;
                }
        }
        const std::string tag = "random:" + std::to_string(seed);
        r.checks.push_back(check_true(tag + " AI-mu = Theta_mu", mismatches == 0 && refusals == 0,
                                      std::to_string(mismatches) + " mismatches in " + std::to_string(checked),
                                      "0 mismatches"));
        std::string measured, expected;
        bool ok = true;
        for (int m = 1; m <= depth; ++m) {
            Rational c = expectimax_value(mu, History(), 1, m);
            Rational err = error_count(theta_predictor(seq), *seq, m);
            ok = ok && c + err == m;
            measured += (m > 1 ? " " : "") + to_string(c + err);
            expected += (m > 1 ? " " : "") + std::to_string(m);
        }
        r.checks.push_back(check_true(tag + " C*_1m + E_m for m=1..6", ok, measured, expected));
    }
}

void heavenhell(Report& r)
{
    const int T = 5;
    auto total = [&](int i, const std::string& agent) {
        ExperimentConfig cfg;
        cfg.env = "heavenhell:i=" + std::to_string(i);
        cfg.agent = agent;
        cfg.lifetime = T;
        return run(cfg).total_credit();
    };
    for (int i = 0; i <= 1; ++i)
        r.checks.push_back(check_equal("AI-mu_" + std::to_string(i) + " total credit", total(i, "aimu"), T));
    for (const std::string p : {"fixed:0", "fixed:1"}) {
        Rational c0 = total(0, p), c1 = total(1, p);
        r.checks.push_back(check_equal(p + " min over mu_0, mu_1", c0 < c1 ? c0 : c1, 0));
    }
    // a mu-independent agent: AI-xi over the transducer class
    ExperimentConfig cfg;
    cfg.agent = "aixi-program";
    cfg.lifetime = T;
    cfg.class_max_len = 11;
    Rational worst = -1;
    for (int i = 0; i <= 1; ++i) {
        cfg.env = "heavenhell:i=" + std::to_string(i);
        RunLog log = run(cfg);
        if (worst < 0 || log.total_credit() < worst) worst = log.total_credit();
        auto d = agreement_deficit(log, HeavenHell(i), FixedLifetime{}, T);
        r.notes.push_back("aixi-program on mu_" + std::to_string(i) + ": credit " + to_string(log.total_credit()) +
                          ", agreement deficit D_n=" + std::to_string(d.total()));
    }
    r.notes.push_back("aixi-program min over mu_0, mu_1: " + to_string(worst));
}

void needle(Report& r)
{
    const int n = 4;
    const int worst = needle_min_worst_errors(n, n - 1);
    r.checks.push_back(check_true("min over policies of worst-case errors (N=4)", worst >= n - 1, std::to_string(worst),
                                  ">= " + std::to_string(n - 1)));
    int enum_worst = 0;
    for (int target = 0; target < n; ++target) {
        ExperimentConfig cfg;
        cfg.env = "needle:n=4;target=" + std::to_string(target);
        cfg.agent = "fixed:0123";
        cfg.lifetime = n;
        RunLog log = run(cfg);
        int errors = 0;
        for (const auto& c : log.cycles()) errors += c.credit == 0 ? 1 : 0;
        enum_worst = std::max(enum_worst, errors);
    }
    r.checks.push_back(check_true("enumeration policy 0123 worst case over y*", enum_worst >= n - 1,
                                  std::to_string(enum_worst), ">= " + std::to_string(n - 1)));
}

namespace {

// plain minimax, independent of the environment code
int oracle_value(const GameNode& node, bool max_to_move)
{
    if (node.leaf()) return node.payoff;
    int best = max_to_move ? -2 : 2;
    for (const auto& c : node.children) {
        int v = oracle_value(c, !max_to_move);
        best = max_to_move ? std::max(best, v) : std::min(best, v);
    }
    return best;
}

int oracle_move(const GameNode& node)
{
    int best = 0, best_v = -2;
    for (std::size_t i = 0; i < node.children.size(); ++i) {
        int v = oracle_value(node.children[i], false);
        if (v > best_v) best_v = v, best = static_cast<int>(i);
    }
    return best;
}

int oracle_reply(const GameNode& node)
{
    int best = 0, best_v = 2;
    for (std::size_t i = 0; i < node.children.size(); ++i) {
        int v = oracle_value(node.children[i], true);
        if (v < best_v) best_v = v, best = static_cast<int>(i);
    }
    return best;
}

// Visits every history reachable by agent moves against the deterministic
// environment, up to `cycles` completed cycles.
void reachable(const Semimeasure& mu, History& h, int cycles, const std::function<void(const History&)>& visit)
{
    visit(h);
    if (static_cast<int>(h.size()) == cycles) return;
    for (Action y = 0; y < mu.alphabet().num_actions(); ++y) {
        h.push(y, certain_percept(mu, h, y));
        reachable(mu, h, cycles, visit);
        h.pop();
    }
}

}  // namespace

void sg_minimax(Report& r)
{
    const int rounds = 4;
    long nodes = 0, mismatches = 0, reply_mismatches = 0;
    long rep_nodes = 0, rep_mismatches = 0;
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        CounterRng rng(seed);
        GameTree tree = random_game_tree(rounds, 2, 2, rng);
        MinimaxGameEnvironment mu(tree);
        Expectimax e(mu);
        History h;
        reachable(mu, h, rounds - 1, [&](const History& s) {
            std::vector<int> path = MinimaxGameEnvironment::moves_of(s);
            const GameNode& node = tree.node(path);
            ++nodes;
            if (e.best_action(s, rounds) != oracle_move(node)) ++mismatches;
            if (!s.empty()) {
                std::vector<int> parent(path.begin(), path.end() - 1);
                if (path.back() != oracle_reply(tree.node(parent))) ++reply_mismatches;
            }
        });

        // two episodes, horizon of one episode length
        auto game = std::make_shared<MinimaxGameEnvironment>(tree);
        EpisodicEnvironment rep({game, game}, {rounds, rounds});
        ExpectimaxAgentCore agent(std::make_shared<EpisodicEnvironment>(rep), MovingHorizon{rounds}, 2 * rounds);
        History g;
        reachable(rep, g, 2 * rounds - 1, [&](const History& s) {
            const std::size_t start = (s.size() / rounds) * rounds;
            std::vector<int> path = MinimaxGameEnvironment::moves_of(s.slice(start, s.size()));
            ++rep_nodes;
            if (agent.act(s) != oracle_move(tree.node(path))) ++rep_mismatches;
        });
    }
    r.checks.push_back(check_true("opponent replies are minimax", reply_mismatches == 0,
                                  std::to_string(reply_mismatches) + " off", "0"));
    r.checks.push_back(check_true("AI-mu = minimax move at reachable nodes", mismatches == 0,
                                  std::to_string(mismatches) + " mismatches in " + std::to_string(nodes), "0"));
    r.checks.push_back(check_true("repeated game: AI-mu = per-episode minimax", rep_mismatches == 0,
                                  std::to_string(rep_mismatches) + " mismatches in " + std::to_string(rep_nodes), "0"));
}

void episodes(Report& r)
{
    const Alphabet a(2, 2, {0, 1});
    auto factor = [&](std::uint64_t seed) { return std::make_shared<RandomEnvironment>(a, seed); };
    auto episodic = [&](std::uint64_t s1, std::uint64_t s2) {
        return EpisodicEnvironment({factor(s1), factor(s2)}, {2, 2});
    };
    const EpisodicEnvironment base = episodic(11, 12);
    const EpisodicEnvironment other1 = episodic(13, 12);
    const EpisodicEnvironment other2 = episodic(11, 14);
    Expectimax eb(base), e1(other1), e2(other2);

    long changed = 0, horizon_dependent = 0, checked = 0;
    for (int n = 0; n < 4; ++n)
        for (const auto& h : all_histories(a, n)) {
            ++checked;
            const Action y = eb.best_action(h, 4);
            if (n < 2) {
                if (y != e2.best_action(h, 4)) ++changed;
                if (y != eb.best_action(h, 2)) ++horizon_dependent;
            } else if (y != e1.best_action(h, 4)) {
                ++changed;
            }
        }
    r.checks.push_back(check_true("actions invariant under the other episode's factor", changed == 0,
                                  std::to_string(changed) + " changes in " + std::to_string(checked), "0"));
    r.checks.push_back(check_true("episode-1 actions independent of m_k >= 2", horizon_dependent == 0,
                                  std::to_string(horizon_dependent) + " changes", "0"));

    // C*_{lm} at the start of episode 2 does not depend on its argument
    const auto starts = all_histories(a, 2);
    const Rational c34 = eb.value(starts.front(), 4);
    bool constant = true;
    for (const auto& h : starts) constant = constant && eb.value(h, 4) == c34;
    r.checks.push_back(check_true("C*_34 independent of episode-1 history", constant, constant ? "constant" : "varies",
                                  "constant"));
    long bad = 0, splits = 0;
    for (int n = 0; n < 2; ++n)
        for (const auto& h : all_histories(a, n)) {
            ++splits;
            if (eb.value(h, 4) != eb.value(h, 2) + c34) ++bad;
        }
    r.checks.push_back(check_true("C*_k4 = C*_k2 + C*_34", bad == 0,
                                  std::to_string(bad) + " violations in " + std::to_string(splits), "0"));
}

}  // namespace aixi::scenarios
