#include <doctest.h>

#include <cmath>
#include <functional>

#include "aixi/core/rng.hpp"
#include "aixi/env/environments.hpp"
#include "aixi/env/ex.hpp"
#include "aixi/env/fm.hpp"
#include "aixi/env/game.hpp"
#include "aixi/env/sample.hpp"
#include "aixi/env/sequence.hpp"
#include "aixi/env/spec.hpp"

using namespace aixi;

namespace {

std::size_t histories_per_depth(const Alphabet& a)
{
    return static_cast<std::size_t>(a.num_actions() * a.num_percepts());
}

// Proper chronological measure: every conditional sums to one at histories of
// positive mass, for every pending action, so the marginal of x_{<n} never
// depends on y_n.
void check_proper(const Semimeasure& mu, int depth)
{
    const Alphabet& a = mu.alphabet();
    CHECK(mu.prior_mass() == 1);
    for (int d = 0; d <= depth; ++d)
        for (const auto& h : all_histories(a, d)) {
            const Rational mass = mu.joint(h);
            if (mass == 0) continue;
            for (Action y = 0; y < a.num_actions(); ++y) {
                const Distribution c = mu.cond(h, y);
                Rational sum = 0, joint_sum = 0;
                for (int x = 0; x < a.num_percepts(); ++x) {
                    CHECK(c[static_cast<std::size_t>(x)] >= 0);
                    sum += c[static_cast<std::size_t>(x)];
                    joint_sum += mu.joint(h.extended(y, a.percept(x)));
                }
                CHECK(sum == 1);
                CHECK(joint_sum == mass);
            }
        }
}

int depth_for(const Alphabet& a, std::size_t budget)
{
    int d = 0;
    std::size_t n = 1;
    while (d < 4 && n * histories_per_depth(a) <= budget) n *= histories_per_depth(a), ++d;
    return d;
}

bool point_mass_at(const Distribution& d, int x)
{
    for (std::size_t i = 0; i < d.size(); ++i)
        if (d[i] != (static_cast<int>(i) == x ? 1 : 0)) return false;
    return true;
}

// minimax over the tree with the first minimizer as reply
int oracle_value(const GameNode& n, bool max_turn)
{
    if (n.leaf()) return n.payoff;
    int best = max_turn ? -2 : 2;
    for (const auto& c : n.children) {
        const int v = oracle_value(c, !max_turn);
        best = max_turn ? std::max(best, v) : std::min(best, v);
    }
    return best;
}

}  // namespace

TEST_CASE("every built environment is a proper chronological measure")
{
    const std::vector<std::string> specs = {
        "sp:seq=0101",
        "sp:bernoulli=7/10",
        "sp:random=3",
        "heavenhell:i=0",
        "heavenhell:i=1",
        "needle:n=4;target=2",
        "delayed-switch",
        "game:rounds=2;moves=2;replies=2;seed=7",
        "repeated-game:rounds=1;moves=2;replies=2;seed=3;episodes=3",
        "fm:actions=2;values=4;variant=fmf;T=3",
        "fm:actions=2;values=4;variant=fms;T=3;drop-obs=1",
        "fm:actions=2;values=4;variant=fme;T=3;rho=1/3",
        "fm:actions=2;values=4;variant=fms;T=3;f=2,1",
        "ex:examples=3/4;truth=mix",
        "ex:examples=1;truth=2",
        "random:actions=2;obs=2;credits=-1,0,1;seed=5",
        "episodic:heavenhell:i=1@2|random:actions=2;obs=1;credits=0,1;seed=4@2",
    };
    for (const auto& s : specs) {
        CAPTURE(s);
        const auto mu = build_mu(parse_env_spec(s));
        check_proper(*mu, depth_for(mu->alphabet(), 25000));
    }
}

TEST_CASE("env spec text round trip and errors")
{
    for (const std::string s : {"heavenhell:i=1", "needle:n=4;target=2", "delayed-switch",
                                "episodic:heavenhell:i=1@2|needle:n=4;target=2@3"}) {
        const auto spec = parse_env_spec(s);
        CHECK(parse_env_spec(to_string(spec)).kind == spec.kind);
        CHECK(to_string(parse_env_spec(to_string(spec))) == to_string(spec));
    }
    CHECK_THROWS(build_mu(parse_env_spec("nowhere")));
    CHECK_THROWS(build_mu(parse_env_spec("heavenhell:i=2")));
    CHECK_THROWS(build_mu(parse_env_spec("heavenhell:i=1;colour=red")));
    CHECK_THROWS(build_mu(parse_env_spec("needle:n=4;target=4")));
    CHECK_THROWS(build_mu(parse_env_spec("ex:truth=9")));
    CHECK_THROWS(build_mu(parse_env_spec("fm:actions=2;values=4;f=2")));
    CHECK_THROWS(parse_env_spec("episodic:heavenhell:i=1"));
}

TEST_CASE("heaven and hell: c_k = delta(i, y_1) for every k")
{
    for (int i = 0; i <= 1; ++i) {
        const HeavenHell mu(i);
        const Alphabet& a = mu.alphabet();
        for (int d = 0; d <= 3; ++d)
            for (const auto& h : all_histories(a, d)) {
                if (mu.joint(h) == 0) continue;
                for (Action y = 0; y < 2; ++y) {
                    const Action first = h.empty() ? y : h[0].action;
                    const int credit = first == i ? 1 : 0;
                    CHECK(point_mass_at(mu.cond(h, y), a.index(Percept{a.credit_index(credit), 0})));
                }
            }
    }
}

TEST_CASE("sequence prediction over 0101: credit is delta(y_k, z_k)")
{
    const auto mu = build_mu(parse_env_spec("sp:seq=0101"));
    const Alphabet& a = mu->alphabet();
    CHECK(a.num_obs() == 1);
    const Word z = {0, 1, 0, 1, 0, 1};
    History h;
    for (int k = 0; k < 6; ++k) {
        for (Action y = 0; y < 2; ++y)
            CHECK(point_mass_at(mu->cond(h, y), a.index(Percept{y == z[static_cast<std::size_t>(k)] ? 1 : 0, 0})));
        const Action y = (k * 7) % 3 == 0 ? 1 : 0;
        h.push(y, Percept{y == z[static_cast<std::size_t>(k)] ? 1 : 0, 0});
        CHECK(SpEnvironment::sequence_of(h) == Word(z.begin(), z.begin() + k + 1));
    }
}

TEST_CASE("FM: sixteen equiprobable functions, joint masses by enumeration")
{
    const FunctionClass fc = FunctionClass::all_functions(2, 4);
    REQUIRE(fc.values.size() == 16);
    for (const auto& p : fc.prior) CHECK(p == ratio(1, 16));
    for (int y1 = 0; y1 < 2; ++y1)
        for (int z1 = 1; z1 <= 4; ++z1)
            for (int y2 = 0; y2 < 2; ++y2)
                for (int z2 = 1; z2 <= 4; ++z2) {
                    int count = 0;
                    for (int f0 = 1; f0 <= 4; ++f0)
                        for (int f1 = 1; f1 <= 4; ++f1) {
                            const int f[2] = {f0, f1};
                            count += (f[y1] == z1 && f[y2] == z2) ? 1 : 0;
                        }
                    CHECK(fc.joint({y1, y2}, {z1, z2}) == ratio(count, 16));
                }

    const FmEnvironment env(fc, fm_weights(FmVariant::Sum, 2));
    History h;
    h.push(0, env.percept_for(1, 3));
    h.push(1, env.percept_for(2, 2));
    CHECK(env.joint(h) == ratio(1, 16));
    CHECK(env.values_of(h) == std::vector<int>{3, 2});
    CHECK(env.alphabet().credit_value(env.percept_for(2, 2)) == -2);
    History again;
    again.push(0, env.percept_for(1, 3));
    again.push(0, env.percept_for(2, 2));
    CHECK(env.joint(again) == 0);
}

TEST_CASE("FM weights")
{
    CHECK(fm_weights(FmVariant::Final, 3) == std::vector<Rational>{0, 0, 1});
    CHECK(fm_weights(FmVariant::Sum, 2) == std::vector<Rational>{1, 1});
    CHECK(fm_weights(FmVariant::Exponential, 3, ratio(1, 3)) == std::vector<Rational>{ratio(1, 9), ratio(1, 3), 1});
}

TEST_CASE("needle: only the target earns credit")
{
    const Needle mu(4, 2);
    for (Action y = 0; y < 4; ++y)
        CHECK(point_mass_at(mu.cond(History(), y), mu.alphabet().index(Percept{y == 2 ? 1 : 0, 0})));
}

TEST_CASE("delayed switch credit rule")
{
    // l = 1 needs outputs k-2 .. k-1 zero
    CHECK(DelayedSwitch::credit({}, 1) == 0);
    CHECK(DelayedSwitch::credit({0}, 1) == 0);
    CHECK(DelayedSwitch::credit({0, 0}, 1) == 1);
    CHECK(DelayedSwitch::credit({0, 0, 1}, 1) == 0);
    CHECK(DelayedSwitch::credit({0, 0, 0, 1}, 1) == 1);
    CHECK(DelayedSwitch::credit({0, 0, 1, 1}, 1) == 0);
    CHECK(DelayedSwitch::credit({0, 0, 0, 1, 1}, 1) == 1);
    CHECK(DelayedSwitch::credit({0, 0}, 0) == 0);
}

TEST_CASE("minimax game: the opponent's reply is the first minimizer")
{
    CounterRng rng(5);
    for (int t = 0; t < 5; ++t) {
        const GameTree tree = random_game_tree(3, 2, 3, rng);
        const MinimaxGameEnvironment mu(tree);
        const Alphabet& a = mu.alphabet();
        std::function<void(const History&, int)> walk = [&](const History& h, int round) {
            if (round == tree.rounds()) return;
            for (Action y = 0; y < a.num_actions(); ++y) {
                auto path = MinimaxGameEnvironment::moves_of(h);
                path.push_back(y);
                const GameNode& min_node = tree.node(path);
                int reply = 0, best = 2;
                for (std::size_t r = 0; r < min_node.children.size(); ++r) {
                    const int v = oracle_value(min_node.children[r], true);
                    if (v < best) best = v, reply = static_cast<int>(r);
                }
                const Distribution d = mu.cond(h, y);
                int x = -1;
                for (std::size_t i = 0; i < d.size(); ++i)
                    if (d[i] == 1) x = static_cast<int>(i);
                REQUIRE(x >= 0);
                const Percept p = a.percept(x);
                CHECK(p.obs == reply);
                path.push_back(reply);
                const int payoff = round + 1 == tree.rounds() ? tree.node(path).payoff : 0;
                CHECK(a.credit_value(p) == payoff);
                walk(h.extended(y, p), round + 1);
            }
        };
        walk(History(), 0);
        CHECK(minimax_value(tree.root(), true) == oracle_value(tree.root(), true));
    }
}

TEST_CASE("game tree text format")
{
    const GameTree t = parse_game_tree("((1 -1) (0 0))");
    CHECK(t.rounds() == 1);
    CHECK(t.num_moves() == 2);
    CHECK(t.num_replies() == 2);
    CHECK(parse_game_tree(to_string(t)).root().children[0].children[1].payoff == -1);
    CHECK(minimax_value(t.root(), true) == 0);
    CHECK(maximin_move(t.root()) == 1);
    CHECK(minimax_reply(t.root().children[0]) == 1);
    CHECK_THROWS(parse_game_tree("((1 -1) (0))"));
    CHECK_THROWS(parse_game_tree("((1 2) (0 0))"));
    CHECK_THROWS(parse_game_tree("((1 -1) (0 0)"));
}

TEST_CASE("episodic joint factorizes over episodes")
{
    const Alphabet a(2, 2, {Rational(0), Rational(1)});
    auto f1 = std::make_shared<RandomEnvironment>(a, 21);
    auto f2 = std::make_shared<RandomEnvironment>(a, 22);
    const EpisodicEnvironment mu({f1, f2}, {2, 2});
    CHECK(mu.episode_of(1) == 0);
    CHECK(mu.episode_of(3) == 1);
    CHECK(mu.episode_start(1) == 3);
    for (int d = 0; d <= 4; ++d)
        for (const auto& h : all_histories(a, d)) {
            const std::size_t split = std::min<std::size_t>(2, h.size());
            CHECK(mu.joint(h) == f1->joint(h.prefix(split)) * f2->joint(h.slice(split, h.size())));
        }
}

TEST_CASE("EX presenter never shows wrong examples")
{
    const auto rel = standard_ex_relations();
    REQUIRE(rel.size() == 4);
    for (int j = 0; j < 4; ++j) {
        const ExEnvironment mu({rel[static_cast<std::size_t>(j)]}, {Rational(1)}, ratio(3, 4));
        const Alphabet& a = mu.alphabet();
        for (int d = 0; d <= 1; ++d)
            for (const auto& h : all_histories(a, d)) {
                if (mu.joint(h) == 0) continue;
                for (Action y = 0; y < a.num_actions(); ++y) {
                    const Distribution c = mu.cond(h, y);
                    for (int x = 0; x < a.num_percepts(); ++x) {
                        const Percept p = a.percept(x);
                        const int z = mu.object_of(p.obs), v = mu.property_of(p.obs);
                        if (v != mu.question_mark() && !rel[static_cast<std::size_t>(j)].contains(z, v))
                            CHECK(c[static_cast<std::size_t>(x)] == 0);
                    }
                }
            }
    }
    // candidates split 2/1/1 at every object
    for (int z = 0; z < 4; ++z) {
        std::vector<int> votes(3);
        for (const auto& r : rel)
            for (int v = 0; v < 3; ++v) votes[static_cast<std::size_t>(v)] += r.contains(z, v) ? 1 : 0;
        std::sort(votes.begin(), votes.end());
        CHECK(votes == std::vector<int>{1, 1, 2});
    }
}

TEST_CASE("sampling: point masses, frequencies and replay")
{
    const HeavenHell hh(1);
    for (std::uint64_t s = 0; s < 50; ++s) {
        CounterRng rng(s);
        CHECK(sample_percept(hh, History(), 1, rng) == Percept{1, 0});
    }

    const SpEnvironment coin(std::make_shared<BernoulliSequence>(ratio(1, 2)));
    int credited = 0;
    const int n = 10000;
    for (std::uint64_t s = 0; s < static_cast<std::uint64_t>(n); ++s) {
        CounterRng rng(s);
        credited += sample_percept(coin, History(), 1, rng).credit;
    }
    CHECK(std::abs(credited - n / 2) <= 3 * std::sqrt(n * 0.25));

    const auto mu = build_mu(parse_env_spec("random:actions=2;obs=2;credits=0,1;seed=9"));
    auto trajectory = [&](std::uint64_t seed) {
        CounterRng rng(seed);
        History h;
        for (int k = 0; k < 20; ++k) h.push(k % 2, sample_percept(*mu, h, k % 2, rng));
        return h;
    };
    CHECK(trajectory(4) == trajectory(4));
    CHECK_FALSE(trajectory(4) == trajectory(5));

    CounterRng rng(1);
    CHECK_THROWS_AS(sample_index(Distribution{0, 0}, rng), EvidenceExhausted);
    CHECK(sample_index(Distribution{0, ratio(1, 3)}, rng) == 1);
}
