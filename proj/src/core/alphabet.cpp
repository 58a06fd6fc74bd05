#include "aixi/core/alphabet.hpp"

#include <algorithm>
#include <stdexcept>

namespace aixi {

Alphabet::Alphabet(int num_actions, int num_obs, std::vector<Rational> credits)
    : num_actions_(num_actions), num_obs_(num_obs), credits_(std::move(credits))
{
    if (num_actions_ <= 0) throw std::invalid_argument("alphabet: action set must be non-empty");
    if (num_obs_ <= 0) throw std::invalid_argument("alphabet: observation set must be non-empty");
    if (credits_.empty()) throw std::invalid_argument("alphabet: credit set must be non-empty");
    for (std::size_t i = 1; i < credits_.size(); ++i)
        if (!(credits_[i - 1] < credits_[i]))
            throw std::invalid_argument("alphabet: credits must be strictly increasing");
}

int Alphabet::credit_index(const Rational& value) const
{
    auto it = std::lower_bound(credits_.begin(), credits_.end(), value);
    if (it == credits_.end() || *it != value) return -1;
    return static_cast<int>(it - credits_.begin());
}

bool Alphabet::valid(const Percept& x) const
{
    return x.credit >= 0 && x.credit < num_credits() && x.obs >= 0 && x.obs < num_obs_;
}

Rational Alphabet::credit_bound() const
{
    Rational lo = abs(credits_.front());
    Rational hi = abs(credits_.back());
    return lo < hi ? hi : lo;
}

Rational total_mass(const Distribution& d)
{
    Rational s = 0;
    for (const auto& p : d) s += p;
    return s;
}

}  // namespace aixi
