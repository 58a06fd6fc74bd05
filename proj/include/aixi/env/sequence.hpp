#ifndef AIXI_ENV_SEQUENCE_HPP
#define AIXI_ENV_SEQUENCE_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "aixi/core/rational.hpp"

namespace aixi {

using Word = std::vector<int>;

// Measure (or semimeasure) over sequences z_1 z_2 ... of symbols 0..n-1,
// given through its conditionals mu(z_{<k} z_k).
class SequenceMeasure {
public:
    virtual ~SequenceMeasure() = default;

    virtual int num_symbols() const { return 2; }
    virtual std::vector<Rational> cond(const Word& prefix) const = 0;
    virtual std::string name() const = 0;

    // mu(z_{1:n}); stops at the first zero factor.
    Rational joint(const Word& z) const;
};

using SequenceMeasurePtr = std::shared_ptr<const SequenceMeasure>;

// i.i.d. bits with P(z = 1) = theta.
class BernoulliSequence : public SequenceMeasure {
public:
    explicit BernoulliSequence(Rational theta);
    std::vector<Rational> cond(const Word& prefix) const override;
    std::string name() const override { return "bernoulli:" + to_string(theta_); }
    const Rational& theta() const { return theta_; }

private:
    Rational theta_;
};

// Point mass on the periodic continuation of a fixed word.
class PeriodicSequence : public SequenceMeasure {
public:
    explicit PeriodicSequence(Word word);
    std::vector<Rational> cond(const Word& prefix) const override;
    std::string name() const override;

private:
    Word word_;
};

// Random rational conditionals P(z_k = 1 | z_{<k}) = j/den, j drawn in
// 1..den-1 from a hash of (seed, prefix); never exactly 1/2 so the
// deterministic predictor is always defined.
class RandomSequence : public SequenceMeasure {
public:
    RandomSequence(std::uint64_t seed, int denominator = 16);
    std::vector<Rational> cond(const Word& prefix) const override;
    std::string name() const override { return "random:" + std::to_string(seed_); }

private:
    std::uint64_t seed_;
    int den_;
};

// sum_i 2^{-K_i} rho_i(z) without normalization.
class SequenceMixture : public SequenceMeasure {
public:
    struct Component {
        SequenceMeasurePtr model;
        unsigned code_length = 0;
    };

    explicit SequenceMixture(std::vector<Component> components);

    int num_symbols() const override;
    // xi(z_{<k} z_k) = xi(z_{1:k}) / xi(z_{<k})
    std::vector<Rational> cond(const Word& prefix) const override;
    std::string name() const override { return "mixture"; }

    Rational mixture_joint(const Word& z) const;
    const std::vector<Component>& components() const { return components_; }

private:
    std::vector<Component> components_;
};

// Bernoulli components for each theta, all with the same code length.
SequenceMixture bernoulli_grid(const std::vector<Rational>& thetas, unsigned code_length);

}  // namespace aixi

#endif  // AIXI_ENV_SEQUENCE_HPP
