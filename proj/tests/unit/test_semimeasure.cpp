#include <doctest.h>

#include <cmath>
#include <unordered_map>

#include "aixi/core/rng.hpp"
#include "aixi/env/environments.hpp"
#include "aixi/env/sequence.hpp"
#include "aixi/semimeasure/chronologize.hpp"
#include "aixi/semimeasure/mixture.hpp"
#include "aixi/semimeasure/transducer.hpp"

using namespace aixi;

namespace {

using Row = Transducer::Row;

// every history of depth <= n
std::vector<History> histories_upto(const Alphabet& a, int n)
{
    std::vector<History> out;
    for (int d = 0; d <= n; ++d)
        for (auto& h : all_histories(a, d)) out.push_back(std::move(h));
    return out;
}

void check_semimeasure(const Semimeasure& rho, int depth)
{
    const Alphabet& a = rho.alphabet();
    CHECK(rho.prior_mass() <= 1);
    for (const auto& h : histories_upto(a, depth)) {
        if (rho.joint(h) == 0) continue;
        for (Action y = 0; y < a.num_actions(); ++y) {
            const Distribution d = rho.cond(h, y);
            REQUIRE(static_cast<int>(d.size()) == a.num_percepts());
            Rational sum = 0;
            for (const auto& p : d) {
                CHECK(p >= 0);
                sum += p;
            }
            CHECK(sum <= 1);
            // joint factorization agrees with the conditional
            for (int x = 0; x < a.num_percepts(); ++x)
                CHECK(rho.joint(h.extended(y, a.percept(x))) == rho.joint(h) * d[static_cast<std::size_t>(x)]);
        }
    }
}

// Table-driven transducer semantics: all 1- and 2-state machines over two
// actions and two percepts, with their code lengths 2 + 2*1 and 3 + 4*2.
struct Machine {
    int states;
    int next[2][2];
    int out[2][2];
    Rational weight;
};

std::vector<Machine> all_small_machines()
{
    std::vector<Machine> out;
    for (int o = 0; o < 4; ++o) {
        Machine m{1, {{0, 0}, {0, 0}}, {{o & 1, (o >> 1) & 1}, {0, 0}}, ratio(1, 16)};
        out.push_back(m);
    }
    for (int code = 0; code < 256; ++code) {
        Machine m{2, {}, {}, ratio(1, 2048)};
        for (int s = 0; s < 2; ++s)
            for (int y = 0; y < 2; ++y) {
                const int row = (code >> (2 * (2 * s + y))) & 3;
                m.next[s][y] = row >> 1;
                m.out[s][y] = row & 1;
            }
        out.push_back(m);
    }
    return out;
}

bool machine_emits(const Machine& m, const History& h, int& state)
{
    state = 0;
    for (const auto& s : h.steps()) {
        if (m.out[state][s.action] != s.percept.credit) return false;
        state = m.next[state][s.action];
    }
    return true;
}

}  // namespace

TEST_CASE("program xi: two-program symmetry and elimination")
{
    const Alphabet a = binary_credit_alphabet(2);
    const Transducer emits0(a, 1, {Row{0, 0}, Row{0, 0}}, 3);
    const Transducer emits1(a, 1, {Row{0, 1}, Row{0, 1}}, 3);
    const TransducerClass cls(a, {emits0, emits1});
    CHECK(cls.cond(History(), 0) == Distribution{ratio(1, 2), ratio(1, 2)});
    History h;
    h.push(0, a.percept(0));
    CHECK(cls.cond(h, 0) == Distribution{Rational(1), Rational(0)});
    CHECK(cls.joint(h) == ratio(1, 8));
    History dead;
    dead.push(0, a.percept(0));
    dead.push(1, a.percept(1));
    CHECK_THROWS_AS(cls.cond(dead, 0), EvidenceExhausted);
}

TEST_CASE("program xi over l(q) <= 12 equals a table-driven brute-force sum")
{
    const Alphabet a = binary_credit_alphabet(2);
    const TransducerClass cls = TransducerClass::enumerate(a, 12, 8);
    const auto machines = all_small_machines();
    CHECK(cls.size() == machines.size());
    Rational kraft = 0;
    for (const auto& q : cls.programs()) kraft += q.weight();
    CHECK(kraft == ratio(4, 16) + ratio(256, 2048));
    CHECK(cls.prior_mass() == kraft);

    for (const auto& h : histories_upto(a, 3)) {
        Rational mass = 0;
        for (const auto& m : machines) {
            int st = 0;
            if (machine_emits(m, h, st)) mass += m.weight;
        }
        CHECK(cls.joint(h) == mass);
        if (mass == 0) {
            CHECK_THROWS_AS(cls.cond(h, 0), EvidenceExhausted);
            continue;
        }
        for (Action y = 0; y < 2; ++y) {
            Distribution want(2);
            for (const auto& m : machines) {
                int st = 0;
                if (machine_emits(m, h, st)) want[static_cast<std::size_t>(m.out[st][y])] += m.weight / mass;
            }
            CHECK(cls.cond(h, y) == want);
        }
    }
}

TEST_CASE("transducer code round trip and prefix-freeness")
{
    const Alphabet a = binary_credit_alphabet(2);
    const Transducer q = Transducer::from_table(a, 2, {Row{1, 1}, Row{1, 0}, Row{0, 0}, Row{0, 1}});
    CHECK(q.length() == 11);
    CHECK(q.bits().size() == 11);
    const auto back = Transducer::decode(q.bits(), a, 8);
    REQUIRE(back);
    CHECK(back->bits() == q.bits());
    for (int s = 0; s < 2; ++s)
        for (Action y = 0; y < 2; ++y) {
            CHECK(back->row(s, y).next == q.row(s, y).next);
            CHECK(back->row(s, y).percept == q.row(s, y).percept);
        }
    CHECK_FALSE(Transducer::decode(q.bits() + "0", a, 8));
    CHECK_FALSE(Transducer::decode(q.bits().substr(0, 10), a, 8));
    // no codeword is a proper prefix of another
    const auto cls = TransducerClass::enumerate(a, 12, 8);
    for (const auto& p : cls.programs())
        for (const auto& r : cls.programs())
            if (p.bits() != r.bits()) CHECK(r.bits().rfind(p.bits(), 0) != 0);

    const auto manifest = write_transducer_manifest(cls);
    const auto loaded = read_transducer_manifest("# comment\n" + manifest, a);
    REQUIRE(loaded.size() == cls.size());
    for (std::size_t i = 0; i < cls.size(); ++i) CHECK(loaded.programs()[i].bits() == cls.programs()[i].bits());
    CHECK_THROWS(read_transducer_manifest("ff\n", a));
}

TEST_CASE("semimeasure inequality, exhaustive to depth 4")
{
    const Alphabet a = binary_credit_alphabet(2);
    check_semimeasure(TransducerClass::enumerate(a, 11, 2), 4);
    check_semimeasure(RandomEnvironment(a, 3, 6, ratio(1, 5)), 4);
    const Alphabet b(2, 2, {Rational(0), Rational(1)});
    std::vector<MixtureComponent> comps;
    for (std::uint64_t s = 1; s <= 3; ++s)
        comps.push_back({std::make_shared<RandomEnvironment>(b, s, 6, ratio(static_cast<long>(s), 10)),
                         static_cast<unsigned>(s), "r" + std::to_string(s)});
    check_semimeasure(MixtureModel(comps), 3);
}

TEST_CASE("mixture dominance, exhaustive to depth 4")
{
    const Alphabet a = binary_credit_alphabet(2);
    std::vector<MixtureComponent> comps;
    comps.push_back({std::make_shared<RandomEnvironment>(a, 9), 1, "r9"});
    comps.push_back({std::make_shared<SpEnvironment>(std::make_shared<PeriodicSequence>(Word{0, 1})), 2, "p01"});
    comps.push_back({std::make_shared<RandomEnvironment>(a, 4, 3, ratio(1, 3)), 3, "r4"});
    const MixtureModel xi(comps);
    CHECK(xi.prior_mass() == ratio(7, 8));
    for (const auto& h : histories_upto(a, 4))
        for (const auto& c : comps) CHECK(xi.joint(h) >= pow2_neg(c.code_length) * c.model->joint(h));
}

TEST_CASE("mixture examples")
{
    const Alphabet a = binary_credit_alphabet(2);
    auto r = std::make_shared<RandomEnvironment>(a, 5);
    const MixtureModel single({{r, 0, "r"}});
    for (const auto& h : histories_upto(a, 2))
        for (Action y = 0; y < 2; ++y) CHECK(single.cond(h, y) == r->cond(h, y));

    auto zeros = std::make_shared<SpEnvironment>(std::make_shared<PeriodicSequence>(Word{0}));
    auto ones = std::make_shared<SpEnvironment>(std::make_shared<PeriodicSequence>(Word{1}));
    const MixtureModel two({{zeros, 1, "0"}, {ones, 1, "1"}});
    CHECK(two.posterior_weights(History()) == std::vector<Rational>{ratio(1, 2), ratio(1, 2)});
    History h;
    h.push(1, Percept{0, 0});  // predicted 1, wrong: z = 0
    CHECK(two.posterior_weights(h) == std::vector<Rational>{Rational(1), Rational(0)});

    // Bernoulli grid after z = 1, 1: posterior proportional to theta^2
    std::vector<MixtureComponent> grid;
    for (const auto& th : {ratio(1, 4), ratio(1, 2), ratio(3, 4)})
        grid.push_back({std::make_shared<SpEnvironment>(std::make_shared<BernoulliSequence>(th)), 2, to_string(th)});
    const MixtureModel bern(grid);
    History ones2;
    ones2.push(1, Percept{1, 0});
    ones2.push(1, Percept{1, 0});
    CHECK(bern.posterior_weights(ones2) == std::vector<Rational>{ratio(1, 14), ratio(4, 14), ratio(9, 14)});
    const Rational p1 = ratio(1, 14) * ratio(1, 4) + ratio(4, 14) * ratio(1, 2) + ratio(9, 14) * ratio(3, 4);
    CHECK(bern.cond(ones2, 1)[1] == p1);
    CHECK(bern.cond(ones2, 0)[0] == p1);

    const MixtureModel unequal({{zeros, 1, "0"}, {ones, 2, "1"}});
    CHECK(unequal.posterior_weights(History()) == std::vector<Rational>{ratio(2, 3), ratio(1, 3)});
}

TEST_CASE("true deterministic component's posterior never decreases on its own trajectory")
{
    const Alphabet a = binary_credit_alphabet(2);
    auto truth = std::make_shared<SpEnvironment>(std::make_shared<PeriodicSequence>(Word{0, 1, 1}));
    std::vector<MixtureComponent> comps;
    comps.push_back({std::make_shared<SpEnvironment>(std::make_shared<BernoulliSequence>(ratio(1, 2))), 1, "b"});
    comps.push_back({truth, 3, "truth"});
    comps.push_back({std::make_shared<SpEnvironment>(std::make_shared<PeriodicSequence>(Word{0})), 2, "zeros"});
    comps.push_back({std::make_shared<RandomEnvironment>(a, 8), 3, "r"});
    const MixtureModel xi(comps);
    for (int actions = 0; actions < 64; ++actions) {
        History h;
        Rational prev = xi.posterior_weights(h)[1];
        for (int k = 0; k < 6; ++k) {
            const Action y = (actions >> k) & 1;
            const Distribution d = truth->cond(h, y);
            const int x = d[0] == 1 ? 0 : 1;
            h.push(y, a.percept(x));
            const Rational w = xi.posterior_weights(h)[1];
            CHECK(w >= prev);
            prev = w;
            // a refuted component has weight exactly zero
            if (comps[2].model->joint(h) == 0) CHECK(xi.posterior_weights(h)[2] == 0);
        }
    }
}

TEST_CASE("mixture registry parsing")
{
    const auto rows = parse_mixture_registry("# id, K\nsp:seq=0, 2\n\nsp:seq=0,1 , 3\n");
    REQUIRE(rows.size() == 2);
    CHECK(rows[1].first == "sp:seq=0,1");
    CHECK(rows[1].second == 3);
    CHECK_THROWS(parse_mixture_registry("no-weight\n"));
}

TEST_CASE("entropy inequality on random distributions")
{
    CounterRng rng(17);
    for (int trial = 0; trial < 2000; ++trial) {
        const int n = 2 + static_cast<int>(rng.below(5));
        std::vector<double> y(static_cast<std::size_t>(n)), z(static_cast<std::size_t>(n));
        double sy = 0, sz = 0;
        for (int i = 0; i < n; ++i) {
            y[static_cast<std::size_t>(i)] = 1 + static_cast<double>(rng.below(20));
            z[static_cast<std::size_t>(i)] = 1 + static_cast<double>(rng.below(20));
            sy += y[static_cast<std::size_t>(i)];
            sz += z[static_cast<std::size_t>(i)];
        }
        const double zmass = 0.5 + rng.uniform() / 2;
        double lhs = 0, rhs = 0;
        for (int i = 0; i < n; ++i) {
            const double yi = y[static_cast<std::size_t>(i)] / sy;
            const double zi = z[static_cast<std::size_t>(i)] / sz * zmass;
            lhs += 2 * yi * (yi - zi) * (yi - zi);
            rhs += yi * std::log(yi / zi);
        }
        CHECK(lhs <= rhs + 1e-12);
    }
}

TEST_CASE("chronologize: zero in, zero out")
{
    const Alphabet a = binary_credit_alphabet(2);
    const auto out = chronologize([](const History&, int) { return Rational(0); }, a, 2, 4);
    for (const auto& s : out.strings())
        for (int t = 0; t <= 4; ++t) CHECK(out.value(s, t) == 0);
}

TEST_CASE("chronologize caps an over-full pair of leaves")
{
    const Alphabet a = binary_credit_alphabet(2);
    const EnumApproximator phi = [](const History& s, int) { return s.empty() ? Rational(1) : ratio(7, 10); };
    const auto out = chronologize(phi, a, 1, 3);
    for (int t = 0; t <= 3; ++t) {
        CHECK(out.value(History(), t) == 1);
        for (Action y = 0; y < 2; ++y) {
            const History x0 = History().extended(y, a.percept(0));
            const History x1 = History().extended(y, a.percept(1));
            // i = 1 keeps only x = 0; i >= 2 would sum to 7/5
            CHECK(out.value(x0, t) == (t >= 1 ? ratio(7, 10) : Rational(0)));
            CHECK(out.value(x1, t) == 0);
        }
    }
    CHECK(truncated(phi, History().extended(0, a.percept(1)), 1, a) == 0);
    CHECK(truncated(phi, History().extended(0, a.percept(1)), 2, a) == ratio(7, 10));
}

TEST_CASE("chronologize leaves a monotone semimeasure enumeration below itself")
{
    const Alphabet a = binary_credit_alphabet(2);
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        const RandomEnvironment rho(a, seed, 6, ratio(1, 10));
        CounterRng rng(seed);
        std::unordered_map<std::string, int> tau;
        const int t_max = 5;
        for (const auto& s : histories_upto(a, 2)) tau[history_key(s, a)] = static_cast<int>(rng.below(t_max + 1));
        const EnumApproximator phi = [&](const History& s, int t) {
            const int ts = tau.at(history_key(s, a));
            return t >= ts ? rho.joint(s) : rho.joint(s) * ratio(t, ts);
        };
        const auto out = chronologize(phi, a, 2, t_max);
        for (const auto& s : out.strings())
            for (int t = 0; t <= t_max; ++t) {
                CHECK(out.value(s, t) <= phi(s, t));
                if (s.empty()) CHECK(out.value(s, t) == phi(s, t));
            }
        for (const auto& s : out.strings()) CHECK(out.value(s, t_max) == rho.joint(s));
    }
}
