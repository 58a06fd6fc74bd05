#include "aixi/semimeasure/mixture.hpp"

#include <sstream>
#include <stdexcept>

namespace aixi {

namespace {

Alphabet common_alphabet(const std::vector<MixtureComponent>& components)
{
    if (components.empty()) throw std::invalid_argument("mixture needs at least one component");
    for (const auto& c : components) {
        if (!c.model) throw std::invalid_argument("mixture component '" + c.id + "' has no model");
        if (!(c.model->alphabet() == components.front().model->alphabet()))
            throw std::invalid_argument("mixture component '" + c.id + "' has a different alphabet");
    }
    return components.front().model->alphabet();
}

}  // namespace

MixtureModel::MixtureModel(std::vector<MixtureComponent> components)
    : components_(std::move(components)), alphabet_(common_alphabet(components_))
{
    if (prior_mass() > 1) throw std::invalid_argument("mixture weights violate Kraft: sum 2^-K > 1");
}

Rational MixtureModel::prior_mass() const
{
    Rational s = 0;
    for (const auto& c : components_) s += pow2_neg(c.code_length);
    return s;
}

std::vector<Rational> MixtureModel::weighted_joints(const History& h) const
{
    std::vector<Rational> w;
    w.reserve(components_.size());
    for (const auto& c : components_) w.push_back(pow2_neg(c.code_length) * c.model->joint(h));
    return w;
}

Rational MixtureModel::joint(const History& h) const
{
    Rational s = 0;
    for (const auto& w : weighted_joints(h)) s += w;
    return s;
}

std::vector<Rational> MixtureModel::posterior_weights(const History& h) const
{
    std::vector<Rational> w = weighted_joints(h);
    Rational total = 0;
    for (const auto& v : w) total += v;
    if (total == 0) throw EvidenceExhausted("mixture: no component has mass on the history");
    for (auto& v : w) v /= total;
    return w;
}

Distribution MixtureModel::cond(const History& h, Action y) const
{
    std::vector<Rational> w = posterior_weights(h);
    Distribution out(static_cast<std::size_t>(alphabet_.num_percepts()), Rational(0));
    for (std::size_t i = 0; i < components_.size(); ++i) {
        if (w[i] == 0) continue;
        Distribution d = components_[i].model->cond(h, y);
        for (std::size_t x = 0; x < out.size(); ++x) out[x] += w[i] * d[x];
    }
    return out;
}

std::vector<std::pair<std::string, unsigned>> parse_mixture_registry(const std::string& text)
{
    std::vector<std::pair<std::string, unsigned>> rows;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        auto comma = line.rfind(',');
        if (comma == std::string::npos)
            throw std::invalid_argument("registry line " + std::to_string(lineno) + ": expected 'id, K'");
        std::string id = line.substr(first, comma - first);
        id.erase(id.find_last_not_of(" \t") + 1);
        std::string k = line.substr(comma + 1);
        int bits = 0;
        try {
            bits = std::stoi(k);
        } catch (const std::exception&) {
            throw std::invalid_argument("registry line " + std::to_string(lineno) + ": bad code length");
        }
        if (bits < 0 || id.empty())
            throw std::invalid_argument("registry line " + std::to_string(lineno) + ": bad row");
        rows.emplace_back(id, static_cast<unsigned>(bits));
    }
    return rows;
}

MixtureModel mixture_from_registry(const std::vector<std::pair<std::string, unsigned>>& rows,
                                   const std::function<SemimeasurePtr(const std::string&)>& resolve)
{
    std::vector<MixtureComponent> components;
    for (const auto& [id, k] : rows) components.push_back({resolve(id), k, id});
    return MixtureModel(std::move(components));
}

}  // namespace aixi
