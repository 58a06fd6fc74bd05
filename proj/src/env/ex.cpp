#include "aixi/env/ex.hpp"

#include <sstream>
#include <stdexcept>

#include "aixi/env/environments.hpp"

namespace aixi {

Relation Relation::parse(const std::string& text, int num_objects, int num_properties)
{
    Relation r;
    r.member.assign(static_cast<std::size_t>(num_objects), std::vector<bool>(static_cast<std::size_t>(num_properties)));
    std::istringstream in(text);
    for (std::string pair; in >> pair;) {
        auto colon = pair.find(':');
        if (colon == std::string::npos) throw std::invalid_argument("relation pair needs z:y, got '" + pair + "'");
        int z = std::stoi(pair.substr(0, colon));
        int y = std::stoi(pair.substr(colon + 1));
        if (z < 0 || z >= num_objects || y < 0 || y >= num_properties)
            throw std::invalid_argument("relation pair outside Z x V: '" + pair + "'");
        r.member[static_cast<std::size_t>(z)][static_cast<std::size_t>(y)] = true;
    }
    return r;
}

ExEnvironment::ExEnvironment(std::vector<Relation> relations, std::vector<Rational> sigma, Rational p_example)
    : relations_(std::move(relations)),
      sigma_(std::move(sigma)),
      p_example_(std::move(p_example)),
      alphabet_(relations_.empty() ? binary_credit_alphabet()
                                   : Alphabet(relations_.front().num_properties(),
                                              relations_.front().num_objects() *
                                                  (relations_.front().num_properties() + 1),
                                              {Rational(0), Rational(1)}))
{
    if (relations_.empty() || relations_.size() != sigma_.size())
        throw std::invalid_argument("EX needs one probability per relation");
    Rational total = 0;
    for (std::size_t i = 0; i < relations_.size(); ++i) {
        if (relations_[i].num_objects() != num_objects() || relations_[i].num_properties() != num_properties())
            throw std::invalid_argument("EX relations disagree on Z x V");
        if (sigma_[i] < 0) throw std::invalid_argument("negative relation probability");
        total += sigma_[i];
    }
    if (total != 1) throw std::invalid_argument("relation probabilities must sum to one");
    if (p_example_ < 0 || p_example_ > 1) throw std::invalid_argument("example probability outside [0, 1]");
}

Distribution ExEnvironment::cond_given(const Relation& r, const History& h, Action y) const
{
    Distribution d(static_cast<std::size_t>(alphabet_.num_percepts()), Rational(0));
    int credit = 0;
    if (!h.empty()) credit = r.contains(object_of(h[h.size() - 1].percept.obs), y) ? 1 : 0;
    const Rational pz(1, num_objects());
    for (int z = 0; z < num_objects(); ++z) {
        std::vector<int> answers;
        for (int v = 0; v < num_properties(); ++v)
            if (r.contains(z, v)) answers.push_back(v);
        Rational p_question = answers.empty() ? Rational(1) : 1 - p_example_;
        d[static_cast<std::size_t>(alphabet_.index({credit, encode_obs(z, question_mark())}))] += pz * p_question;
        for (int v : answers)
            d[static_cast<std::size_t>(alphabet_.index({credit, encode_obs(z, v)}))] +=
                pz * p_example_ / static_cast<long>(answers.size());
    }
    return d;
}

std::vector<Rational> ExEnvironment::relation_masses(const History& h) const
{
    std::vector<Rational> m(relations_.size());
    for (std::size_t i = 0; i < relations_.size(); ++i) {
        Rational p = sigma_[i];
        History prefix;
        for (const auto& s : h.steps()) {
            if (p == 0) break;
            p *= cond_given(relations_[i], prefix, s.action)[static_cast<std::size_t>(alphabet_.index(s.percept))];
            prefix.push(s.action, s.percept);
        }
        m[i] = p;
    }
    return m;
}

Distribution ExEnvironment::cond(const History& h, Action y) const
{
    auto masses = relation_masses(h);
    Rational total = 0;
    Distribution d(static_cast<std::size_t>(alphabet_.num_percepts()), Rational(0));
    for (std::size_t i = 0; i < relations_.size(); ++i) {
        if (masses[i] == 0) continue;
        auto c = cond_given(relations_[i], h, y);
        for (std::size_t j = 0; j < d.size(); ++j) d[j] += masses[i] * c[j];
        total += masses[i];
    }
    if (total == 0) throw EvidenceExhausted("EX history is impossible under every relation");
    for (auto& p : d) p /= total;
    return d;
}

}  // namespace aixi
