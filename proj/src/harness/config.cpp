#include "aixi/harness/config.hpp"

#include <cstdlib>
#include <sstream>
#include <stdexcept>

#include "aixi/env/spec.hpp"

namespace aixi {

namespace {

std::string trim(const std::string& s)
{
    auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

template <typename T>
T to_number(const std::string& key, const std::string& v)
{
    try {
        std::size_t used = 0;
        long long x = std::stoll(v, &used);
        if (used != v.size() || x < 0) throw std::invalid_argument("");
        return static_cast<T>(x);
    } catch (const std::exception&) {
        throw std::invalid_argument("config key '" + key + "' needs a non-negative integer, got '" + v + "'");
    }
}

std::pair<std::string, std::string> split_setting(const std::string& line)
{
    auto eq = line.find('=');
    if (eq == std::string::npos) throw std::invalid_argument("expected key = value, got '" + line + "'");
    return {trim(line.substr(0, eq)), trim(line.substr(eq + 1))};
}

}  // namespace

void apply_setting(ExperimentConfig& cfg, const std::string& key, const std::string& value)
{
    if (key == "env") cfg.env = value;
    else if (key == "agent") cfg.agent = value;
    else if (key == "model") cfg.model = value;
    else if (key == "mixture") cfg.mixture = value;
    else if (key == "horizon") cfg.horizon = parse_horizon(value);
    else if (key == "T") cfg.lifetime = to_number<int>(key, value);
    else if (key == "seed") cfg.seed = to_number<std::uint64_t>(key, value);
    else if (key == "out") cfg.out = value;
    else if (key == "lbits") cfg.lbits = to_number<unsigned>(key, value);
    else if (key == "tsteps") cfg.tsteps = to_number<std::uint64_t>(key, value);
    else if (key == "class-max-len") cfg.class_max_len = to_number<unsigned>(key, value);
    else if (key == "class-max-states") cfg.class_max_states = to_number<int>(key, value);
    else if (key == "arith") cfg.arith = parse_arith(value);
    else throw std::invalid_argument("unknown config key '" + key + "'");
}

void validate(const ExperimentConfig& cfg)
{
    build_mu(parse_env_spec(cfg.env));
    if (!cfg.model.empty()) build_mu(parse_env_spec(cfg.model));
    static const char* agents[] = {"aimu", "aixi-mixture", "aixi-program", "greedy-fm", "minimax", "random", "bestvote"};
    bool known = cfg.agent.rfind("fixed:", 0) == 0;
    for (const char* a : agents) known = known || cfg.agent == a;
    if (!known) throw std::invalid_argument("unknown agent '" + cfg.agent + "'");
    if (cfg.agent == "bestvote" && cfg.tsteps == 0) throw std::invalid_argument("tsteps must be positive");
    if (cfg.class_max_states < 1) throw std::invalid_argument("class-max-states must be positive");
}

ExperimentConfig parse_config(const std::string& text, const std::vector<std::string>& overrides)
{
    ExperimentConfig cfg;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        try {
            auto [k, v] = split_setting(t);
            apply_setting(cfg, k, v);
        } catch (const std::invalid_argument& e) {
            throw std::invalid_argument("config line " + std::to_string(lineno) + ": " + e.what());
        }
    }
    for (const auto& o : overrides) {
        auto [k, v] = split_setting(o);
        apply_setting(cfg, k, v);
    }
    validate(cfg);
    return cfg;
}

std::string to_string(const ExperimentConfig& cfg)
{
    std::ostringstream out;
    out << "env = " << cfg.env << "\n"
        << "agent = " << cfg.agent << "\n";
    if (!cfg.model.empty()) out << "model = " << cfg.model << "\n";
    if (!cfg.mixture.empty()) out << "mixture = " << cfg.mixture << "\n";
    out << "horizon = " << to_string(cfg.horizon) << "\n"
        << "T = " << cfg.lifetime << "\n"
        << "seed = " << cfg.seed << "\n";
    if (!cfg.out.empty()) out << "out = " << cfg.out << "\n";
    out << "lbits = " << cfg.lbits << "\n"
        << "tsteps = " << cfg.tsteps << "\n"
        << "class-max-len = " << cfg.class_max_len << "\n"
        << "class-max-states = " << cfg.class_max_states << "\n"
        << "arith = " << to_string(cfg.arith) << "\n";
    return out.str();
}

std::filesystem::path output_dir(const std::filesystem::path& fallback)
{
    const char* env = std::getenv("AIXI_LAB_OUT");
    return env && *env ? std::filesystem::path(env) : fallback;
}

}  // namespace aixi
