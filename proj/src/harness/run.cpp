#include "aixi/harness/run.hpp"

#include <fstream>
#include <stdexcept>

#include "aixi/bestvote/bestvote.hpp"
#include "aixi/core/rng.hpp"
#include "aixi/env/environments.hpp"
#include "aixi/env/sample.hpp"
#include "aixi/env/spec.hpp"
#include "aixi/semimeasure/transducer.hpp"

namespace aixi {

namespace {

std::string trim(const std::string& s)
{
    auto b = s.find_first_not_of(" \t");
    if (b == std::string::npos) return "";
    auto e = s.find_last_not_of(" \t");
    return s.substr(b, e - b + 1);
}

SemimeasurePtr model_of(const ExperimentConfig& cfg, const SemimeasurePtr& mu)
{
    return cfg.model.empty() ? mu : build_mu(parse_env_spec(cfg.model));
}

void check_alphabet(const Semimeasure& model, const Semimeasure& mu)
{
    if (!(model.alphabet() == mu.alphabet()))
        throw std::invalid_argument("agent model and environment have different alphabets");
}

const GameTree& game_of(const Semimeasure& mu)
{
    if (auto* g = dynamic_cast<const MinimaxGameEnvironment*>(&mu)) return g->tree();
    if (auto* e = dynamic_cast<const EpisodicEnvironment*>(&mu))
        if (auto* g = dynamic_cast<const MinimaxGameEnvironment*>(e->factors().front().get())) return g->tree();
    throw std::invalid_argument("minimax agent needs a game environment");
}

}  // namespace

SemimeasurePtr build_env(const ExperimentConfig& cfg)
{
    return build_mu(parse_env_spec(cfg.env));
}

MixtureModel parse_mixture(const std::string& text)
{
    std::vector<MixtureComponent> comps;
    std::size_t start = 0;
    for (;;) {
        auto plus = text.find('+', start);
        std::string part = trim(text.substr(start, plus == std::string::npos ? std::string::npos : plus - start));
        auto at = part.rfind('@');
        if (at == std::string::npos) throw std::invalid_argument("mixture entry needs <spec> @ <K>: '" + part + "'");
        std::string spec = trim(part.substr(0, at));
        std::string k = trim(part.substr(at + 1));
        unsigned bits = 0;
        try {
            std::size_t used = 0;
            bits = static_cast<unsigned>(std::stoul(k, &used));
            if (used != k.size()) throw std::invalid_argument("");
        } catch (const std::exception&) {
            throw std::invalid_argument("mixture code length must be an integer: '" + k + "'");
        }
        comps.push_back({build_mu(parse_env_spec(spec)), bits, spec});
        if (plus == std::string::npos) break;
        start = plus + 1;
    }
    return MixtureModel(std::move(comps));
}

PolicyPtr build_agent(const ExperimentConfig& cfg, const SemimeasurePtr& mu)
{
    const std::string& a = cfg.agent;
    if (a == "aimu") {
        auto model = model_of(cfg, mu);
        check_alphabet(*model, *mu);
        return std::make_shared<ExpectimaxPolicy>(model, cfg.horizon, cfg.lifetime, "aimu");
    }
    if (a == "aixi-mixture") {
        SemimeasurePtr model;
        if (!cfg.mixture.empty()) model = std::make_shared<MixtureModel>(parse_mixture(cfg.mixture));
        else if (!cfg.model.empty()) model = model_of(cfg, mu);
        else throw std::invalid_argument("aixi-mixture needs a mixture or a model");
        check_alphabet(*model, *mu);
        return std::make_shared<ExpectimaxPolicy>(model, cfg.horizon, cfg.lifetime, "aixi-mixture");
    }
    if (a == "aixi-program") {
        auto cls = std::make_shared<TransducerClass>(
            TransducerClass::enumerate(mu->alphabet(), cfg.class_max_len, cfg.class_max_states));
        return std::make_shared<ExpectimaxPolicy>(cls, cfg.horizon, cfg.lifetime, "aixi-program");
    }
    if (a == "greedy-fm") {
        auto fm = std::dynamic_pointer_cast<const FmEnvironment>(model_of(cfg, mu));
        if (!fm) throw std::invalid_argument("greedy-fm needs an fm model");
        check_alphabet(*fm, *mu);
        return std::make_shared<GreedyFmPolicy>(fm);
    }
    if (a == "minimax") return std::make_shared<MinimaxPolicy>(game_of(*mu));
    if (a == "random") return std::make_shared<RandomPolicy>(mu->alphabet().num_actions(), cfg.seed);
    if (a.rfind("fixed:", 0) == 0) {
        std::vector<Action> seq;
        for (char c : a.substr(6)) {
            if (c < '0' || c > '9') throw std::invalid_argument("fixed agent needs digits: '" + a + "'");
            seq.push_back(c - '0');
        }
        for (Action y : seq)
            if (!mu->alphabet().valid_action(y)) throw std::invalid_argument("fixed agent action out of range");
        return std::make_shared<FixedPolicy>(seq);
    }
    if (a == "bestvote") {
        auto cls = std::make_shared<const TransducerClass>(
            TransducerClass::enumerate(mu->alphabet(), cfg.class_max_len, cfg.class_max_states));
        auto pool = std::make_shared<const Pool>(Pool::build(cfg.lbits, cfg.tsteps, cls, cfg.horizon, cfg.lifetime));
        return std::make_shared<BestVotePolicy>(pool);
    }
    throw std::invalid_argument("unknown agent '" + a + "'");
}

RunLog run_protocol(const Semimeasure& mu, Policy& agent, RunLogHeader header)
{
    const int lifetime = header.lifetime;
    CounterRng rng = CounterRng(header.seed).split(1);
    const auto& a = mu.alphabet();
    RunLog log(std::move(header));
    History h;
    for (int k = 1; k <= lifetime; ++k) {
        const Action y = agent.act(h);
        if (!a.valid_action(y)) throw std::logic_error("agent produced an action outside Y");
        Percept x;
        try {
            x = sample_percept(mu, h, y, rng);
        } catch (const EvidenceExhausted& e) {
            log.abort("evidence exhausted at k=" + std::to_string(k) + ": " + e.what());
            break;
        }
        CycleRecord r;
        r.k = k;
        r.action = y;
        r.percept = x;
        r.credit = a.credit_value(x);
        r.value = agent.last_value();
        r.weights = agent.last_weights();
        r.steps = agent.last_steps();
        if (auto* bv = dynamic_cast<const BestVotePolicy*>(&agent)) r.selected = bv->last_selection().index;
        log.append(std::move(r));
        h.push(y, x);
    }
    return log;
}

RunLog run(const ExperimentConfig& cfg)
{
    validate(cfg);
    auto mu = build_env(cfg);
    auto agent = build_agent(cfg, mu);
    RunLogHeader hd;
    hd.env = to_string(parse_env_spec(cfg.env));
    hd.env_hash = fnv1a(hd.env);
    hd.agent = agent->name();
    hd.seed = cfg.seed;
    hd.rng = std::string(CounterRng::algorithm);
    hd.lifetime = cfg.lifetime;
    hd.horizon = to_string(cfg.horizon);
    hd.arith = cfg.arith;
    RunLog log = run_protocol(*mu, *agent, std::move(hd));
    if (!cfg.out.empty()) {
        auto path = output_dir() / cfg.out;
        if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
        std::ofstream f(path, std::ios::binary);
        if (!f) throw std::runtime_error("cannot write " + path.string());
        f << write_csv(log);
    }
    return log;
}

}  // namespace aixi
