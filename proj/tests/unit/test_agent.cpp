#include <doctest.h>

#include <functional>

#include "aixi/agent/expectimax.hpp"
#include "aixi/agent/policy.hpp"
#include "aixi/agent/special.hpp"
#include "aixi/core/rng.hpp"
#include "aixi/env/environments.hpp"
#include "aixi/env/fm.hpp"
#include "aixi/env/game.hpp"
#include "aixi/env/sequence.hpp"
#include "aixi/env/spec.hpp"
#include "aixi/semimeasure/mixture.hpp"

using namespace aixi;

namespace {

// full-tree expansion without memo or mass pruning
Rational tree_value(const Semimeasure& rho, const History& h, int m)
{
    if (static_cast<int>(h.size()) >= m) return 0;
    const Alphabet& a = rho.alphabet();
    Rational best;
    for (Action y = 0; y < a.num_actions(); ++y) {
        const Distribution d = rho.cond(h, y);
        Rational v = 0;
        for (int x = 0; x < a.num_percepts(); ++x) {
            const Rational& p = d[static_cast<std::size_t>(x)];
            if (p == 0) continue;
            v += p * (a.credit_value(x) + tree_value(rho, h.extended(y, a.percept(x)), m));
        }
        if (y == 0 || v > best) best = v;
    }
    return best;
}

// sequence measure with both conditionals below 1/2
class Leaky : public SequenceMeasure {
public:
    std::vector<Rational> cond(const Word&) const override { return {ratio(2, 5), ratio(2, 5)}; }
    std::string name() const override { return "leaky"; }
};

int oracle_minimax(const GameNode& n, bool max_turn)
{
    if (n.leaf()) return n.payoff;
    int best = max_turn ? -2 : 2;
    for (const auto& c : n.children) {
        const int v = oracle_minimax(c, !max_turn);
        best = max_turn ? std::max(best, v) : std::min(best, v);
    }
    return best;
}

int oracle_move(const GameNode& n)
{
    int best = -2, move = 0;
    for (std::size_t i = 0; i < n.children.size(); ++i) {
        const int v = oracle_minimax(n.children[i], false);
        if (v > best) best = v, move = static_cast<int>(i);
    }
    return move;
}

}  // namespace

TEST_CASE("expectimax examples")
{
    const HeavenHell hh(1);
    History h;
    h.push(1, Percept{1, 0});
    CHECK(expectimax_value(hh, h, 2, 1) == 0);
    CHECK(expectimax_value(hh, History(), 1, 3) == 3);
    CHECK_THROWS(expectimax_value(hh, History(), 2, 3));
    CHECK_THROWS(expectimax_value(hh, h, 2, 0));

    ExpectimaxAgentCore agent(std::make_shared<HeavenHell>(1), FixedLifetime{}, 3);
    CHECK(agent.act(History()) == 1);
    CHECK(ExpectimaxAgentCore(std::make_shared<HeavenHell>(0), FixedLifetime{}, 3).act(History()) == 0);
    CHECK_THROWS_AS(agent.act(History(std::vector<Step>(3, Step{1, Percept{1, 0}}))), OutOfLifetime);

    // symmetric environment: lexicographic tie-break
    const auto coin = std::make_shared<SpEnvironment>(std::make_shared<BernoulliSequence>(ratio(1, 2)));
    CHECK(ExpectimaxAgentCore(coin, FixedLifetime{}, 3).act(History()) == 0);
}

TEST_CASE("expectimax equals full-tree expansion and backward induction")
{
    const std::vector<Alphabet> alphabets = {
        Alphabet(2, 1, {Rational(0), Rational(1)}),
        Alphabet(3, 1, {Rational(-1), Rational(0), Rational(1)}),
        Alphabet(2, 3, {Rational(0)}),
        Alphabet(3, 3, {ratio(1, 2)}),
        Alphabet(2, 2, {Rational(-1), ratio(1, 3)}),
    };
    std::uint64_t seed = 1;
    for (const auto& a : alphabets) {
        // |X| <= 3 keeps the brute force small; |X| = 4 only to depth 3
        const int T = a.num_percepts() <= 3 ? 4 : 3;
        for (int s = 0; s < 2; ++s, ++seed) {
            const RandomEnvironment rho(a, seed, 5, s == 1 ? ratio(1, 7) : Rational(0));
            CHECK(expectimax_value(rho, History(), 1, T) == tree_value(rho, History(), T));
            CHECK(backward_induction_value(rho, History(), 3) == tree_value(rho, History(), 3));
            for (const auto& h : all_histories(a, 1)) {
                CHECK(expectimax_value(rho, h, 2, T) == tree_value(rho, h, T));
                CHECK(backward_induction_value(rho, h, T) == tree_value(rho, h, T));
            }
        }
    }
}

TEST_CASE("action values and the lexicographically first maximizer")
{
    const Alphabet a(3, 1, {Rational(0), Rational(1)});
    for (std::uint64_t s = 1; s <= 20; ++s) {
        const RandomEnvironment rho(a, s);
        Expectimax ex(rho);
        const auto v = ex.action_values(History(), 2);
        Action first = 0;
        for (Action y = 1; y < 3; ++y)
            if (v[static_cast<std::size_t>(y)] > v[static_cast<std::size_t>(first)]) first = y;
        CHECK(ex.best_action(History(), 2) == first);
        CHECK(ex.value(History(), 2) == v[static_cast<std::size_t>(first)]);
    }
}

TEST_CASE("sp_predict")
{
    const BernoulliSequence b(ratio(7, 10));
    for (const Word& w : {Word{}, Word{0, 0}, Word{1, 0, 1}}) CHECK(sp_predict(b, w) == 1);
    const PeriodicSequence p(Word{0, 1});
    CHECK(sp_predict(p, Word{0, 1}) == 0);
    CHECK(sp_predict(p, Word{0}) == 1);
    CHECK_FALSE(sp_predict(Leaky(), Word{}).has_value());
    CHECK_THROWS_AS(sp_predict(p, Word{1}), std::domain_error);
}

TEST_CASE("SP reduction and the credit/error identity on small instances")
{
    for (std::uint64_t seed : {7, 8}) {
        auto seq = std::make_shared<RandomSequence>(seed);
        const SpEnvironment mu(seq);
        for (const HorizonPolicy& hp : std::vector<HorizonPolicy>{FixedLifetime{}, MovingHorizon{2}}) {
            const int T = 4;
            ExpectimaxAgentCore agent(std::make_shared<SpEnvironment>(seq), hp, T);
            for (int n = 0; n < T; ++n)
                for (const auto& h : all_histories(mu.alphabet(), n)) {
                    if (mu.joint(h) == 0) continue;
                    const auto theta = sp_predict(*seq, SpEnvironment::sequence_of(h));
                    REQUIRE(theta);
                    CHECK(agent.act(h) == *theta);
                }
        }
        // E_m: expected number of Theta errors, by enumerating sequences
        for (int m = 1; m <= 5; ++m) {
            Rational errors = 0;
            for (unsigned long bits = 0; bits < (1ul << m); ++bits) {
                Word z;
                for (int i = 0; i < m; ++i) z.push_back(static_cast<int>((bits >> i) & 1));
                int wrong = 0;
                for (int i = 0; i < m; ++i)
                    wrong += *sp_predict(*seq, Word(z.begin(), z.begin() + i)) != z[static_cast<std::size_t>(i)];
                errors += seq->joint(z) * wrong;
            }
            CHECK(expectimax_value(mu, History(), 1, m) + errors == m);
        }
    }
}

TEST_CASE("greedy FM on the sixteen-function instance")
{
    const FunctionClass fc = FunctionClass::all_functions(2, 4);
    CHECK(expected_value(fc, {}, {}, 0) == ratio(5, 2));
    CHECK(expected_value(fc, {}, {}, 1) == ratio(5, 2));
    CHECK(greedy_fm_act(fc, {}, {}) == 0);
    CHECK(expected_value(fc, {0}, {2}, 0) == 2);
    CHECK(expected_value(fc, {0}, {2}, 1) == ratio(5, 2));
    CHECK(greedy_fm_act(fc, {0}, {2}) == 0);

    FunctionClass known;
    known.num_actions = 2;
    known.num_values = 4;
    known.values = {{2, 1}};
    known.prior = {Rational(1)};
    CHECK(greedy_fm_act(known, {}, {}) == 1);
}

TEST_CASE("FM reduction: AI-mu plays the FM-optimal action")
{
    const FunctionClass fc = FunctionClass::all_functions(2, 4);
    for (FmVariant v : {FmVariant::Final, FmVariant::Sum, FmVariant::Exponential}) {
        const int T = 3;
        const auto alpha = fm_weights(v, T, ratio(1, 2));
        auto env = std::make_shared<FmEnvironment>(fc, alpha);
        ExpectimaxAgentCore agent(env, FixedLifetime{}, T);
        std::function<void(const History&)> walk = [&](const History& h) {
            if (static_cast<int>(h.size()) == T) return;
            std::vector<Action> ys;
            for (const auto& s : h.steps()) ys.push_back(s.action);
            const auto zs = env->values_of(h);
            const FmDecision d = fm_optimal_act(fc, alpha, ys, zs);
            CHECK(agent.act(h) == d.action);
            CHECK(agent.value(h) == -d.expected_cost);
            for (Action y = 0; y < 2; ++y)
                for (int z = 1; z <= 4; ++z) {
                    const History g = h.extended(y, env->percept_for(static_cast<int>(h.size()) + 1, z));
                    if (env->joint(g) != 0) walk(g);
                }
        };
        walk(History());
    }
}

TEST_CASE("minimax moves")
{
    const GameTree t = parse_game_tree("((1 -1) (0 0))");
    CHECK(minimax_move(t, {}) == 1);
    CHECK(minimax_move(parse_game_tree("((1 1) (1 1))"), {}) == 0);
    CHECK_THROWS(minimax_move(t, {0}));
    CHECK_THROWS(minimax_move(t, {0, 1}));

    CounterRng rng(77);
    for (int i = 0; i < 10; ++i) {
        const GameTree g = random_game_tree(2, 3, 2, rng);
        std::function<void(std::vector<int>)> walk = [&](std::vector<int> path) {
            if (static_cast<int>(path.size()) == 2 * g.rounds()) return;
            CHECK(minimax_move(g, path) == oracle_move(g.node(path)));
            for (int y = 0; y < g.num_moves(); ++y)
                for (int x = 0; x < g.num_replies(); ++x) {
                    auto next = path;
                    next.push_back(y);
                    next.push_back(x);
                    walk(next);
                }
        };
        walk({});
    }
}

TEST_CASE("SG reduction: AI-mu against a minimax opponent plays minimax")
{
    CounterRng rng(12);
    for (int i = 0; i < 3; ++i) {
        const GameTree g = random_game_tree(2, 2, 2, rng);
        auto mu = std::make_shared<MinimaxGameEnvironment>(g);
        ExpectimaxAgentCore agent(mu, FixedLifetime{}, g.rounds());
        History h;
        for (int r = 0; r < g.rounds(); ++r) {
            const auto path = MinimaxGameEnvironment::moves_of(h);
            const Action y = agent.act(h);
            CHECK(y == oracle_move(g.node(path)));
            CHECK(agent.value(h) == oracle_minimax(g.node(path), true));
            const Distribution d = mu->cond(h, y);
            int x = 0;
            while (d[static_cast<std::size_t>(x)] != 1) ++x;
            h.push(y, mu->alphabet().percept(x));
        }
    }
}

TEST_CASE("stabilized actions")
{
    // episodes of length 2: any horizon covering the episode gives one action
    const Alphabet a(2, 2, {Rational(0), Rational(1)});
    const EpisodicEnvironment ep({std::make_shared<RandomEnvironment>(a, 31), std::make_shared<RandomEnvironment>(a, 32)},
                                {2, 2});
    for (int n = 0; n <= 1; ++n)
        for (const auto& h : all_histories(a, n)) {
            const auto s = stabilized_act(ep, h, 2, 4);
            CHECK(s.action.has_value());
            CHECK(s.witnessed.size() == 1);
        }

    // sequence prediction: greedy already optimal
    const SpEnvironment sp(std::make_shared<RandomSequence>(4));
    for (int n = 0; n <= 2; ++n)
        for (const auto& h : all_histories(sp.alphabet(), n)) {
            if (sp.joint(h) == 0) continue;
            CHECK(stabilized_act(sp, h, n + 1, 6).action.has_value());
        }

    // delayed switch: the best action keeps moving as the horizon grows
    const DelayedSwitch ds;
    int unstable = 0;
    History zeros;
    for (int k = 1; k <= 6; ++k) {
        const auto s = stabilized_act(ds, zeros, k, 10);
        if (!s.action) {
            ++unstable;
            CHECK(s.witnessed == std::set<Action>{0, 1});
        }
        zeros.push(0, Percept{0, 0});
    }
    CHECK(unstable > 0);
}

TEST_CASE("simple policies")
{
    FixedPolicy f({0, 1, 2});
    History h;
    std::string seq;
    for (int k = 0; k < 5; ++k) {
        seq += std::to_string(f.act(h));
        h.push(0, Percept{0, 0});
    }
    CHECK(seq == "01201");
    CHECK_THROWS(FixedPolicy({}));

    RandomPolicy r(3, 5);
    CHECK(r.act(h) == r.act(h));
    for (const auto& g : all_histories(binary_credit_alphabet(2), 2)) {
        const Action y = r.act(g);
        CHECK(y >= 0);
        CHECK(y < 3);
    }

    const GameTree t = parse_game_tree("((1 -1) (0 0))");
    MinimaxPolicy mm(t);
    History g;
    CHECK(mm.act(g) == 1);
    g.push(1, Percept{1, 0});
    // next episode restarts at the root
    CHECK(mm.act(g) == 1);
}

TEST_CASE("expectimax policy reports value and posterior weights")
{
    std::vector<MixtureComponent> comps;
    comps.push_back({std::make_shared<HeavenHell>(0), 1, "hh0"});
    comps.push_back({std::make_shared<HeavenHell>(1), 1, "hh1"});
    ExpectimaxPolicy p(std::make_shared<MixtureModel>(comps), FixedLifetime{}, 3, "aixi-mixture");
    CHECK(p.act(History()) == 0);
    REQUIRE(p.last_value());
    CHECK(*p.last_value() == ratio(3, 2));
    CHECK(p.last_weights() == std::vector<Rational>{ratio(1, 2), ratio(1, 2)});
}
