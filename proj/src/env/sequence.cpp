#include "aixi/env/sequence.hpp"

#include <stdexcept>

#include "aixi/core/rng.hpp"

namespace aixi {

Rational SequenceMeasure::joint(const Word& z) const
{
    Rational p = 1;
    Word prefix;
    for (int s : z) {
        p *= cond(prefix)[static_cast<std::size_t>(s)];
        if (p == 0) break;
        prefix.push_back(s);
    }
    return p;
}

BernoulliSequence::BernoulliSequence(Rational theta) : theta_(std::move(theta))
{
    if (theta_ < 0 || theta_ > 1) throw std::invalid_argument("bernoulli parameter outside [0, 1]");
}

std::vector<Rational> BernoulliSequence::cond(const Word&) const
{
    return {1 - theta_, theta_};
}

PeriodicSequence::PeriodicSequence(Word word) : word_(std::move(word))
{
    if (word_.empty()) throw std::invalid_argument("periodic sequence needs a non-empty word");
    for (int s : word_)
        if (s != 0 && s != 1) throw std::invalid_argument("periodic sequence must be binary");
}

std::vector<Rational> PeriodicSequence::cond(const Word& prefix) const
{
    int next = word_[prefix.size() % word_.size()];
    std::vector<Rational> d(2, Rational(0));
    d[static_cast<std::size_t>(next)] = 1;
    return d;
}

std::string PeriodicSequence::name() const
{
    std::string s = "seq:";
    for (int b : word_) s += static_cast<char>('0' + b);
    return s;
}

RandomSequence::RandomSequence(std::uint64_t seed, int denominator) : seed_(seed), den_(denominator)
{
    if (den_ < 3) throw std::invalid_argument("random sequence denominator must be at least 3");
}

std::vector<Rational> RandomSequence::cond(const Word& prefix) const
{
    std::uint64_t h = splitmix64(seed_ ^ 0x5eedULL);
    for (int s : prefix) h = splitmix64(h + static_cast<std::uint64_t>(s) + 1);
    h = splitmix64(h + 0x9e37ULL * (prefix.size() + 1));
    std::uint64_t j = 1 + h % static_cast<std::uint64_t>(den_ - 1);
    if (2 * j == static_cast<std::uint64_t>(den_)) j = (j % static_cast<std::uint64_t>(den_ - 1)) + 1;
    Rational theta(static_cast<long>(j), den_);
    theta.canonicalize();
    return {1 - theta, theta};
}

SequenceMixture::SequenceMixture(std::vector<Component> components) : components_(std::move(components))
{
    if (components_.empty()) throw std::invalid_argument("empty sequence mixture");
    Rational kraft = 0;
    for (const auto& c : components_) {
        if (c.model->num_symbols() != components_[0].model->num_symbols())
            throw std::invalid_argument("sequence mixture components disagree on the alphabet");
        kraft += pow2_neg(c.code_length);
    }
    if (kraft > 1) throw std::invalid_argument("sequence mixture violates Kraft inequality");
}

int SequenceMixture::num_symbols() const
{
    return components_[0].model->num_symbols();
}

Rational SequenceMixture::mixture_joint(const Word& z) const
{
    Rational s = 0;
    for (const auto& c : components_) s += pow2_neg(c.code_length) * c.model->joint(z);
    return s;
}

std::vector<Rational> SequenceMixture::cond(const Word& prefix) const
{
    std::vector<Rational> d(static_cast<std::size_t>(num_symbols()), Rational(0));
    Rational total = 0;
    for (const auto& c : components_) {
        Rational w = pow2_neg(c.code_length) * c.model->joint(prefix);
        if (w == 0) continue;
        auto cc = c.model->cond(prefix);
        for (std::size_t i = 0; i < d.size(); ++i) d[i] += w * cc[i];
        total += w;
    }
    if (total == 0) throw std::domain_error("sequence mixture: prefix has zero mass");
    for (auto& p : d) p /= total;
    return d;
}

SequenceMixture bernoulli_grid(const std::vector<Rational>& thetas, unsigned code_length)
{
    std::vector<SequenceMixture::Component> cs;
    for (const auto& t : thetas) cs.push_back({std::make_shared<BernoulliSequence>(t), code_length});
    return SequenceMixture(std::move(cs));
}

}  // namespace aixi
