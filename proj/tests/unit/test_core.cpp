#include <doctest.h>

#include <set>

#include "aixi/core/alphabet.hpp"
#include "aixi/core/bits.hpp"
#include "aixi/core/history.hpp"
#include "aixi/core/horizon.hpp"
#include "aixi/core/rational.hpp"
#include "aixi/core/rng.hpp"

using namespace aixi;

namespace {

Alphabet abc() { return Alphabet(3, 2, {Rational(-1), Rational(0), ratio(1, 2)}); }

History random_history(CounterRng& rng, const Alphabet& a, int n)
{
    History h;
    for (int i = 0; i < n; ++i)
        h.push(static_cast<Action>(rng.below(static_cast<std::uint64_t>(a.num_actions()))),
               a.percept(static_cast<int>(rng.below(static_cast<std::uint64_t>(a.num_percepts())))));
    return h;
}

}  // namespace

TEST_CASE("horizon_end examples")
{
    CHECK(horizon_end(FixedLifetime{}, 3, 5) == 5);
    CHECK(horizon_end(MovingHorizon{1}, 7, 99) == 7);
    CHECK(horizon_end(Proportional{1}, 4, 99) == 7);
    CHECK(horizon_end(MovingHorizon{10}, 95, 99) == 99);
    // ceil(k/2) extra cycles
    CHECK(horizon_end(Proportional{ratio(1, 2)}, 5, 99) == 7);
}

TEST_CASE("horizon_end rejects cycles outside the lifetime")
{
    CHECK_THROWS_AS(horizon_end(FixedLifetime{}, 6, 5), OutOfLifetime);
    CHECK_THROWS_AS(horizon_end(MovingHorizon{2}, 0, 5), OutOfLifetime);
}

TEST_CASE("horizon_end stays within [k, T]")
{
    const std::vector<HorizonPolicy> policies = {FixedLifetime{},         MovingHorizon{1},  MovingHorizon{3},
                                                 Proportional{ratio(1, 3)}, Proportional{2}, Proportional{ratio(7, 4)}};
    for (const auto& p : policies)
        for (int T = 1; T <= 30; ++T)
            for (int k = 1; k <= T; ++k) {
                const int m = horizon_end(p, k, T);
                CHECK(k <= m);
                CHECK(m <= T);
            }
}

TEST_CASE("horizon text round trip")
{
    for (const std::string s : {"fixed", "moving:3", "proportional:1/2"}) CHECK(to_string(parse_horizon(s)) == s);
    CHECK_THROWS(parse_horizon("moving:0"));
    CHECK_THROWS(parse_horizon("forever"));
}

TEST_CASE("alphabet percept indexing")
{
    const Alphabet a = abc();
    CHECK(a.num_percepts() == 6);
    for (int i = 0; i < a.num_percepts(); ++i) CHECK(a.index(a.percept(i)) == i);
    CHECK(a.credit_value(Percept{2, 1}) == ratio(1, 2));
    CHECK(a.credit_index(Rational(0)) == 1);
    CHECK(a.credit_index(Rational(3)) == -1);
    CHECK(a.credit_bound() == 1);
    CHECK_THROWS(Alphabet(0, 1, {Rational(0)}));
    CHECK_THROWS(Alphabet(2, 1, {Rational(1), Rational(0)}));
}

TEST_CASE("history encoding examples")
{
    const Alphabet a(2, 1, {Rational(0), Rational(1)});
    CHECK(encode_history(History(), a).empty());
    CHECK(decode_history({}, a) == History());

    History h;
    h.push(0, Percept{1, 0});
    CHECK(encode_history_text(h, a) == "y:0 x:1/0");
    CHECK(decode_history_text("y:0 x:1/0", a) == h);

    CHECK_THROWS_AS(decode_history_text("x:1/0 y:0", a), ParseError);
    CHECK_THROWS_AS(decode_history_text("y:0", a), ParseError);
    CHECK_THROWS_AS(decode_history_text("y:2 x:1/0", a), ParseError);
    CHECK_THROWS_AS(decode_history_text("y:0 x:5/0", a), ParseError);
    try {
        decode_history_text("y:0 x:1/0 y:1 y:0", a);
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.position == 3);
    }
}

TEST_CASE("history encoding is a bijection on random histories")
{
    const Alphabet a = abc();
    CounterRng rng(42);
    std::set<std::string> texts;
    for (int i = 0; i < 300; ++i) {
        const History h = random_history(rng, a, static_cast<int>(rng.below(7)));
        const std::string text = encode_history_text(h, a);
        CHECK(decode_history_text(text, a) == h);
        CHECK(decode_history(encode_history(h, a), a) == h);
        texts.insert(text);
    }
    // distinct histories of length 2 encode distinctly
    std::set<std::string> two;
    const auto all = all_histories(a, 2);
    for (const auto& h : all) two.insert(encode_history_text(h, a));
    CHECK(two.size() == all.size());
    CHECK(all.size() == 18 * 18);
}

TEST_CASE("history prefix, slice and credit")
{
    const Alphabet a = abc();
    History h;
    h.push(0, Percept{0, 0});
    h.push(1, Percept{2, 1});
    h.push(2, Percept{2, 0});
    CHECK(h.prefix(2).size() == 2);
    CHECK(h.slice(1, 3)[0] == h[1]);
    CHECK(total_credit(h, a) == 0);
    CHECK(total_credit(h.slice(1, 3), a) == 1);
    CHECK(history_key(h, a) != history_key(h.prefix(2), a));
}

TEST_CASE("rationals parse and print canonically")
{
    CHECK(parse_rational("0.75") == ratio(3, 4));
    CHECK(parse_rational("-2/4") == ratio(-1, 2));
    CHECK(to_string(ratio(6, 4)) == "3/2");
    CHECK(to_string(ratio(-4, 2)) == "-2");
    CHECK(pow2_neg(3) == ratio(1, 8));
    CHECK(ceil(ratio(7, 2)) == 4);
    CHECK(floor(ratio(-7, 2)) == -4);
    CHECK_THROWS(parse_rational("1/0"));
    CHECK_THROWS(parse_rational("abc"));
}

TEST_CASE("counter rng is reproducible and splits independently")
{
    CounterRng a(7), b(7);
    for (int i = 0; i < 10; ++i) CHECK(a.next() == b.next());
    CounterRng c(7);
    const auto child = c.split(1);
    CHECK(c.counter() == 0);
    CHECK(CounterRng(7).split(1).key() == child.key());
    CHECK(CounterRng(7).split(2).key() != child.key());
    CounterRng d(3);
    for (int i = 0; i < 1000; ++i) {
        const Rational u = d.uniform_rational();
        CHECK(u >= 0);
        CHECK(u < 1);
        CHECK(d.below(5) < 5);
    }
    // draw i is a pure function of (key, i)
    CounterRng e(11);
    e.next();
    CHECK(e.next() == splitmix64(11 + 2 * 0x9e3779b97f4a7c15ull));
}

TEST_CASE("bit helpers")
{
    CHECK(bit_width_for(1) == 0);
    CHECK(bit_width_for(2) == 1);
    CHECK(bit_width_for(5) == 3);
    Bits b;
    append_bits(b, 5, 4);
    CHECK(b == "0101");
    std::size_t pos = 1;
    unsigned v = 0;
    CHECK(read_bits(b, pos, 3, v));
    CHECK(v == 5);
    CHECK_FALSE(read_bits(b, pos, 1, v));
    CHECK(bits_of(6, 5) == "00110");
    CHECK(bits_to_hex("101") == "a");
    CHECK(hex_to_bits("a") == "1010");
}
