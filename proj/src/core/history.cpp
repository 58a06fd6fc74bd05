#include "aixi/core/history.hpp"

#include <charconv>
#include <sstream>

namespace aixi {

History History::prefix(std::size_t n) const
{
    return slice(0, n);
}

History History::slice(std::size_t from, std::size_t to) const
{
    if (from > to || to > steps_.size()) throw std::out_of_range("history slice out of range");
    return History(std::vector<Step>(steps_.begin() + static_cast<std::ptrdiff_t>(from),
                                     steps_.begin() + static_cast<std::ptrdiff_t>(to)));
}

History History::extended(Action y, Percept x) const
{
    History h = *this;
    h.push(y, x);
    return h;
}

std::string history_key(const History& h, const Alphabet& a)
{
    std::string key;
    key.reserve(h.size() * 4);
    for (const auto& s : h.steps()) {
        int x = a.index(s.percept);
        key.push_back(static_cast<char>(s.action & 0xff));
        key.push_back(static_cast<char>((s.action >> 8) & 0xff));
        key.push_back(static_cast<char>(x & 0xff));
        key.push_back(static_cast<char>((x >> 8) & 0xff));
    }
    return key;
}

Rational total_credit(const History& h, const Alphabet& a)
{
    Rational c = 0;
    for (const auto& s : h.steps()) c += a.credit_value(s.percept);
    return c;
}

std::vector<History> all_histories(const Alphabet& a, int n)
{
    std::vector<History> level{History()};
    for (int d = 0; d < n; ++d) {
        std::vector<History> next;
        next.reserve(level.size() * static_cast<std::size_t>(a.num_actions() * a.num_percepts()));
        for (const auto& h : level)
            for (Action y = 0; y < a.num_actions(); ++y)
                for (int x = 0; x < a.num_percepts(); ++x) next.push_back(h.extended(y, a.percept(x)));
        level = std::move(next);
    }
    return level;
}

ParseError::ParseError(std::size_t pos, const std::string& what)
    : std::runtime_error("history token " + std::to_string(pos) + ": " + what), position(pos)
{
}

std::vector<std::string> encode_history(const History& h, const Alphabet& a)
{
    std::vector<std::string> words;
    words.reserve(2 * h.size());
    for (const auto& s : h.steps()) {
        words.push_back("y:" + std::to_string(s.action));
        words.push_back("x:" + to_string(a.credit_value(s.percept)) + "/" + std::to_string(s.percept.obs));
    }
    return words;
}

std::string encode_history_text(const History& h, const Alphabet& a)
{
    std::string out;
    for (const auto& w : encode_history(h, a)) {
        if (!out.empty()) out += ' ';
        out += w;
    }
    return out;
}

namespace {

bool parse_int(std::string_view s, int& out)
{
    if (s.empty()) return false;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    return ec == std::errc() && p == s.data() + s.size();
}

}  // namespace

History decode_history(const std::vector<std::string>& words, const Alphabet& a)
{
    History h;
    Action pending = 0;
    for (std::size_t i = 0; i < words.size(); ++i) {
        std::string_view w = words[i];
        bool want_action = i % 2 == 0;
        if (w.size() < 2 || w[1] != ':' || (w[0] != 'y' && w[0] != 'x'))
            throw ParseError(i, "malformed token '" + words[i] + "'");
        if (want_action && w[0] != 'y') throw ParseError(i, "percept before action");
        if (!want_action && w[0] != 'x') throw ParseError(i, "two actions without a percept");
        std::string_view body = w.substr(2);
        if (want_action) {
            if (!parse_int(body, pending) || !a.valid_action(pending))
                throw ParseError(i, "action outside alphabet: '" + words[i] + "'");
            continue;
        }
        auto slash = body.rfind('/');
        if (slash == std::string_view::npos) throw ParseError(i, "percept needs <credit>/<obs>");
        int obs = 0;
        if (!parse_int(body.substr(slash + 1), obs)) throw ParseError(i, "bad observation index");
        Rational credit;
        try {
            credit = parse_rational(body.substr(0, slash));
        } catch (const std::invalid_argument&) {
            throw ParseError(i, "bad credit value");
        }
        Percept x{a.credit_index(credit), obs};
        if (x.credit < 0 || !a.valid(x)) throw ParseError(i, "percept outside alphabet: '" + words[i] + "'");
        h.push(pending, x);
    }
    if (words.size() % 2 != 0) throw ParseError(words.size() - 1, "trailing action without percept");
    return h;
}

History decode_history_text(const std::string& text, const Alphabet& a)
{
    std::istringstream in(text);
    std::vector<std::string> words;
    for (std::string w; in >> w;) words.push_back(w);
    return decode_history(words, a);
}

}  // namespace aixi
