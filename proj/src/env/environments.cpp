#include "aixi/env/environments.hpp"

#include <stdexcept>

#include "aixi/core/rng.hpp"

namespace aixi {

Alphabet binary_credit_alphabet(int num_actions)
{
    return Alphabet(num_actions, 1, {Rational(0), Rational(1)});
}

SpEnvironment::SpEnvironment(SequenceMeasurePtr measure)
    : measure_(std::move(measure)), alphabet_(binary_credit_alphabet())
{
    if (measure_->num_symbols() != 2) throw std::invalid_argument("sequence prediction needs a binary measure");
}

Word SpEnvironment::sequence_of(const History& h)
{
    Word z;
    z.reserve(h.size());
    for (const auto& s : h.steps()) z.push_back(s.percept.credit == 1 ? s.action : 1 - s.action);
    return z;
}

Distribution SpEnvironment::cond(const History& h, Action y) const
{
    auto p = measure_->cond(sequence_of(h));
    // percept index = credit index (single observation)
    return {p[static_cast<std::size_t>(1 - y)], p[static_cast<std::size_t>(y)]};
}

HeavenHell::HeavenHell(int i) : i_(i), alphabet_(binary_credit_alphabet())
{
    if (i != 0 && i != 1) throw std::invalid_argument("heaven/hell index must be 0 or 1");
}

Distribution HeavenHell::cond(const History& h, Action y) const
{
    Action first = h.empty() ? y : h[0].action;
    return point_mass(alphabet_, {first == i_ ? 1 : 0, 0});
}

Needle::Needle(int n, Action target) : target_(target), alphabet_(binary_credit_alphabet(n))
{
    if (target < 0 || target >= n) throw std::invalid_argument("needle target outside Y");
}

Distribution Needle::cond(const History&, Action y) const
{
    return point_mass(alphabet_, {y == target_ ? 1 : 0, 0});
}

DelayedSwitch::DelayedSwitch() : alphabet_(binary_credit_alphabet()) {}

int DelayedSwitch::credit(const std::vector<Action>& past, Action y)
{
    if (y == 0) return 0;
    // cycles are 1-based; past[i] is the output of cycle i + 1
    const long k = static_cast<long>(past.size()) + 1;
    for (long l = 1; l < k; ++l) {
        long r = 0;
        while (r * r < l) ++r;  // ceil(sqrt l)
        long from = k - l - r, to = k - l;
        if (from < 1) break;  // from only decreases as l grows
        bool zeros = true;
        for (long i = from; i <= to && zeros; ++i) zeros = past[static_cast<std::size_t>(i - 1)] == 0;
        if (zeros) return 1;
    }
    return 0;
}

Distribution DelayedSwitch::cond(const History& h, Action y) const
{
    std::vector<Action> past;
    for (const auto& s : h.steps()) past.push_back(s.action);
    return point_mass(alphabet_, {credit(past, y), 0});
}

RandomEnvironment::RandomEnvironment(Alphabet a, std::uint64_t seed, int max_weight, Rational deficit)
    : alphabet_(std::move(a)), seed_(seed), max_weight_(max_weight), deficit_(std::move(deficit))
{
    if (max_weight_ < 1) throw std::invalid_argument("random environment weight bound must be positive");
    if (deficit_ < 0 || deficit_ >= 1) throw std::invalid_argument("random environment deficit outside [0, 1)");
}

Distribution RandomEnvironment::cond(const History& h, Action y) const
{
    std::uint64_t key = splitmix64(seed_);
    for (const auto& s : h.steps()) {
        key = splitmix64(key + static_cast<std::uint64_t>(s.action) + 1);
        key = splitmix64(key + static_cast<std::uint64_t>(alphabet_.index(s.percept)) + 0x100);
    }
    CounterRng rng(splitmix64(key + static_cast<std::uint64_t>(y) + 0x10000));
    Distribution d(static_cast<std::size_t>(alphabet_.num_percepts()));
    Rational total = 0;
    for (auto& p : d) {
        p = static_cast<long>(1 + rng.below(static_cast<std::uint64_t>(max_weight_)));
        total += p;
    }
    for (auto& p : d) p = p / total * (1 - deficit_);
    return d;
}

EpisodicEnvironment::EpisodicEnvironment(std::vector<SemimeasurePtr> factors, std::vector<int> lengths)
    : factors_(std::move(factors)), lengths_(std::move(lengths))
{
    if (factors_.empty() || factors_.size() != lengths_.size())
        throw std::invalid_argument("episodic environment needs one length per factor");
    for (const auto& f : factors_)
        if (!(f->alphabet() == factors_.front()->alphabet()))
            throw std::invalid_argument("episodic factors disagree on the alphabet");
    for (int l : lengths_)
        if (l < 1) throw std::invalid_argument("episode lengths must be positive");
}

int EpisodicEnvironment::episode_start(int r) const
{
    int start = 1;
    for (int i = 0; i < r; ++i) start += lengths_[static_cast<std::size_t>(i)];
    return start;
}

int EpisodicEnvironment::episode_of(int k) const
{
    int end = 0;
    for (std::size_t r = 0; r < lengths_.size(); ++r) {
        end += lengths_[r];
        if (k <= end) return static_cast<int>(r);
    }
    return static_cast<int>(lengths_.size()) - 1;
}

Distribution EpisodicEnvironment::cond(const History& h, Action y) const
{
    const int k = static_cast<int>(h.size()) + 1;
    const int r = episode_of(k);
    const auto start = static_cast<std::size_t>(episode_start(r) - 1);
    return factors_[static_cast<std::size_t>(r)]->cond(h.slice(start, h.size()), y);
}

}  // namespace aixi
