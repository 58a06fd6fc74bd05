#include "aixi/env/spec.hpp"

#include <set>
#include <stdexcept>

#include "aixi/env/environments.hpp"
#include "aixi/env/fm.hpp"
#include "aixi/env/game.hpp"

namespace aixi {

namespace {

std::string trim(const std::string& s)
{
    auto b = s.find_first_not_of(" \t");
    if (b == std::string::npos) return "";
    auto e = s.find_last_not_of(" \t");
    return s.substr(b, e - b + 1);
}

int to_int(const std::string& v, const std::string& key)
{
    try {
        std::size_t used = 0;
        int x = std::stoi(v, &used);
        if (used != v.size()) throw std::invalid_argument("");
        return x;
    } catch (const std::exception&) {
        throw std::invalid_argument("environment key '" + key + "' needs an integer, got '" + v + "'");
    }
}

void require_keys(const EnvSpec& s, const std::set<std::string>& allowed)
{
    for (const auto& [k, v] : s.params)
        if (!allowed.count(k)) throw std::invalid_argument("unknown key '" + k + "' for environment " + s.kind);
}

std::vector<std::string> split_list(const std::string& list)
{
    std::vector<std::string> out;
    std::size_t start = 0;
    for (;;) {
        auto comma = list.find(',', start);
        out.push_back(trim(list.substr(start, comma == std::string::npos ? std::string::npos : comma - start)));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return out;
}

GameTree game_from(const EnvSpec& s)
{
    if (s.has("tree")) return parse_game_tree(s.get("tree", ""));
    CounterRng rng(static_cast<std::uint64_t>(to_int(s.get("seed", "1"), "seed")));
    return random_game_tree(to_int(s.get("rounds", "2"), "rounds"), to_int(s.get("moves", "2"), "moves"),
                            to_int(s.get("replies", "2"), "replies"), rng);
}

}  // namespace

std::string EnvSpec::get(const std::string& key, const std::string& fallback) const
{
    auto it = params.find(key);
    return it == params.end() ? fallback : it->second;
}

EnvSpec parse_env_spec(const std::string& text)
{
    EnvSpec s;
    std::string t = trim(text);
    auto colon = t.find(':');
    s.kind = trim(t.substr(0, colon));
    if (s.kind.empty()) throw std::invalid_argument("empty environment spec");
    if (colon == std::string::npos) return s;
    std::string body = t.substr(colon + 1);
    if (s.kind == "episodic") {
        std::size_t start = 0;
        for (;;) {
            auto bar = body.find('|', start);
            std::string part = body.substr(start, bar == std::string::npos ? std::string::npos : bar - start);
            auto at = part.rfind('@');
            if (at == std::string::npos) throw std::invalid_argument("episodic factor needs <spec>@<length>");
            s.episodes.emplace_back(parse_env_spec(part.substr(0, at)), to_int(trim(part.substr(at + 1)), "length"));
            if (bar == std::string::npos) break;
            start = bar + 1;
        }
        return s;
    }
    std::size_t start = 0;
    while (start <= body.size()) {
        auto semi = body.find(';', start);
        std::string part = trim(body.substr(start, semi == std::string::npos ? std::string::npos : semi - start));
        if (!part.empty()) {
            auto eq = part.find('=');
            if (eq == std::string::npos) throw std::invalid_argument("environment parameter needs key=value: '" + part + "'");
            s.params[trim(part.substr(0, eq))] = trim(part.substr(eq + 1));
        }
        if (semi == std::string::npos) break;
        start = semi + 1;
    }
    return s;
}

std::string to_string(const EnvSpec& spec)
{
    std::string out = spec.kind;
    if (!spec.episodes.empty()) {
        out += ':';
        for (std::size_t i = 0; i < spec.episodes.size(); ++i) {
            if (i) out += '|';
            out += to_string(spec.episodes[i].first) + "@" + std::to_string(spec.episodes[i].second);
        }
        return out;
    }
    bool first = true;
    for (const auto& [k, v] : spec.params) {
        out += first ? ':' : ';';
        out += k + "=" + v;
        first = false;
    }
    return out;
}

std::vector<Relation> standard_ex_relations()
{
    // answer of relation j at object z
    const int table[4][4] = {{0, 0, 1, 2}, {1, 2, 1, 0}, {2, 0, 0, 1}, {0, 1, 2, 2}};
    std::vector<Relation> rs;
    for (int j = 0; j < 4; ++j) {
        Relation r;
        r.member.assign(4, std::vector<bool>(3, false));
        for (int z = 0; z < 4; ++z) r.member[static_cast<std::size_t>(z)][static_cast<std::size_t>(table[z][j])] = true;
        rs.push_back(std::move(r));
    }
    return rs;
}

SemimeasurePtr build_mu(const EnvSpec& s)
{
    if (s.kind == "sp") {
        require_keys(s, {"seq", "bernoulli", "random"});
        if (s.params.size() != 1) throw std::invalid_argument("sp needs exactly one of seq, bernoulli, random");
        if (s.has("seq")) {
            Word w;
            for (char c : s.get("seq", "")) {
                if (c != '0' && c != '1') throw std::invalid_argument("sp sequence must be binary");
                w.push_back(c - '0');
            }
            return std::make_shared<SpEnvironment>(std::make_shared<PeriodicSequence>(w));
        }
        if (s.has("bernoulli"))
            return std::make_shared<SpEnvironment>(std::make_shared<BernoulliSequence>(parse_rational(s.get("bernoulli", ""))));
        return std::make_shared<SpEnvironment>(
            std::make_shared<RandomSequence>(static_cast<std::uint64_t>(to_int(s.get("random", ""), "random"))));
    }
    if (s.kind == "heavenhell") {
        require_keys(s, {"i"});
        return std::make_shared<HeavenHell>(to_int(s.get("i", "1"), "i"));
    }
    if (s.kind == "needle") {
        require_keys(s, {"n", "target"});
        return std::make_shared<Needle>(to_int(s.get("n", "4"), "n"), to_int(s.get("target", "0"), "target"));
    }
    if (s.kind == "delayed-switch") {
        require_keys(s, {});
        return std::make_shared<DelayedSwitch>();
    }
    if (s.kind == "game" || s.kind == "repeated-game") {
        require_keys(s, {"tree", "rounds", "moves", "replies", "seed", "episodes"});
        auto game = std::make_shared<MinimaxGameEnvironment>(game_from(s));
        if (s.kind == "game") return game;
        int episodes = to_int(s.get("episodes", "2"), "episodes");
        if (episodes < 1) throw std::invalid_argument("repeated game needs at least one episode");
        return std::make_shared<EpisodicEnvironment>(std::vector<SemimeasurePtr>(static_cast<std::size_t>(episodes), game),
                                                     std::vector<int>(static_cast<std::size_t>(episodes), game->tree().rounds()));
    }
    if (s.kind == "fm") {
        require_keys(s, {"actions", "values", "variant", "T", "rho", "drop-obs", "f"});
        auto fc = FunctionClass::all_functions(to_int(s.get("actions", "2"), "actions"), to_int(s.get("values", "4"), "values"));
        if (s.has("f")) {
            // a single known function f(0),f(1),...
            std::vector<int> f;
            for (const auto& v : split_list(s.get("f", ""))) f.push_back(to_int(v, "f"));
            if (static_cast<int>(f.size()) != fc.num_actions) throw std::invalid_argument("f needs one value per action");
            fc.values = {f};
            fc.prior = {Rational(1)};
        }
        std::string v = s.get("variant", "fmf");
        FmVariant variant = v == "fmf" ? FmVariant::Final
                            : v == "fms" ? FmVariant::Sum
                            : v == "fme" ? FmVariant::Exponential
                                         : throw std::invalid_argument("FM variant must be fmf, fms or fme");
        auto alpha = fm_weights(variant, to_int(s.get("T", "3"), "T"), parse_rational(s.get("rho", "1/2")));
        return std::make_shared<FmEnvironment>(std::move(fc), std::move(alpha), s.get("drop-obs", "0") == "1");
    }
    if (s.kind == "ex") {
        require_keys(s, {"examples", "truth"});
        auto rel = standard_ex_relations();
        Rational p = parse_rational(s.get("examples", "3/4"));
        std::string truth = s.get("truth", "mix");
        if (truth == "mix") {
            std::vector<Rational> sigma(rel.size(), Rational(1, static_cast<long>(rel.size())));
            return std::make_shared<ExEnvironment>(std::move(rel), std::move(sigma), p);
        }
        int j = to_int(truth, "truth");
        if (j < 0 || j >= static_cast<int>(rel.size())) throw std::invalid_argument("EX truth index out of range");
        return std::make_shared<ExEnvironment>(std::vector<Relation>{rel[static_cast<std::size_t>(j)]},
                                               std::vector<Rational>{Rational(1)}, p);
    }
    if (s.kind == "random") {
        require_keys(s, {"actions", "obs", "credits", "seed"});
        std::vector<Rational> credits;
        for (const auto& v : split_list(s.get("credits", "0,1"))) credits.push_back(parse_rational(v));
        return std::make_shared<RandomEnvironment>(
            Alphabet(to_int(s.get("actions", "2"), "actions"), to_int(s.get("obs", "1"), "obs"), std::move(credits)),
            static_cast<std::uint64_t>(to_int(s.get("seed", "1"), "seed")));
    }
    if (s.kind == "episodic") {
        if (s.episodes.empty()) throw std::invalid_argument("episodic needs at least one factor");
        std::vector<SemimeasurePtr> factors;
        std::vector<int> lengths;
        for (const auto& [spec, len] : s.episodes) {
            factors.push_back(build_mu(spec));
            lengths.push_back(len);
        }
        return std::make_shared<EpisodicEnvironment>(std::move(factors), std::move(lengths));
    }
    throw std::invalid_argument("unknown environment kind '" + s.kind + "'");
}

}  // namespace aixi
