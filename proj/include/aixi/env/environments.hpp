#ifndef AIXI_ENV_ENVIRONMENTS_HPP
#define AIXI_ENV_ENVIRONMENTS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "aixi/env/sequence.hpp"
#include "aixi/semimeasure/semimeasure.hpp"

namespace aixi {

// Y = C = {0, 1}, X' = {eps}
Alphabet binary_credit_alphabet(int num_actions = 2);

// Sequence prediction as an AI environment: y_k predicts z_k, the credit is
// c_k = delta(y_k, z_k) and the observation is empty. The true bits are
// recovered from the history as z_i = y_i when c_i = 1, else 1 - y_i.
class SpEnvironment : public Semimeasure {
public:
    explicit SpEnvironment(SequenceMeasurePtr measure);

    const Alphabet& alphabet() const override { return alphabet_; }
    Distribution cond(const History& h, Action y) const override;
    std::string name() const override { return "sp(" + measure_->name() + ")"; }

    const SequenceMeasure& measure() const { return *measure_; }
    static Word sequence_of(const History& h);

private:
    SequenceMeasurePtr measure_;
    Alphabet alphabet_;
};

// c_k = delta(i, y_1) for every k.
class HeavenHell : public Semimeasure {
public:
    explicit HeavenHell(int i);
    const Alphabet& alphabet() const override { return alphabet_; }
    Distribution cond(const History& h, Action y) const override;
    std::string name() const override { return "heavenhell:" + std::to_string(i_); }
    int heaven() const { return i_; }

private:
    int i_;
    Alphabet alphabet_;
};

// |Y| = N, only y* earns credit.
class Needle : public Semimeasure {
public:
    Needle(int n, Action target);
    const Alphabet& alphabet() const override { return alphabet_; }
    Distribution cond(const History& h, Action y) const override;
    std::string name() const override { return "needle:" + std::to_string(target_); }

private:
    Action target_;
    Alphabet alphabet_;
};

// Output 1 at cycle k earns 1 iff for some l >= 1 the outputs at cycles
// k-l-ceil(sqrt l) .. k-l all exist and are 0; output 0 earns 0.
class DelayedSwitch : public Semimeasure {
public:
    DelayedSwitch();
    const Alphabet& alphabet() const override { return alphabet_; }
    Distribution cond(const History& h, Action y) const override;
    std::string name() const override { return "delayed-switch"; }

    // credit of output y at cycle |past| + 1 given earlier outputs
    static int credit(const std::vector<Action>& past, Action y);

private:
    Alphabet alphabet_;
};

// Random rational conditionals drawn from a hash of (seed, history, y):
// integer weights in 1..max_weight, normalized. With `deficit` > 0 every
// conditional is scaled by 1 - deficit, giving a strict semimeasure.
class RandomEnvironment : public Semimeasure {
public:
    RandomEnvironment(Alphabet a, std::uint64_t seed, int max_weight = 6, Rational deficit = 0);
    const Alphabet& alphabet() const override { return alphabet_; }
    Distribution cond(const History& h, Action y) const override;
    std::string name() const override { return "random:" + std::to_string(seed_); }

private:
    Alphabet alphabet_;
    std::uint64_t seed_;
    int max_weight_;
    Rational deficit_;
};

// Independent episodes: factor r sees only the cycles of episode r. After
// the last episode the final factor keeps running on its own sub-history.
class EpisodicEnvironment : public Semimeasure {
public:
    EpisodicEnvironment(std::vector<SemimeasurePtr> factors, std::vector<int> lengths);
    const Alphabet& alphabet() const override { return factors_.front()->alphabet(); }
    Distribution cond(const History& h, Action y) const override;
    std::string name() const override { return "episodic"; }

    // episode index of cycle k (1-based) and the first cycle of that episode
    int episode_of(int k) const;
    int episode_start(int r) const;
    const std::vector<int>& lengths() const { return lengths_; }
    const std::vector<SemimeasurePtr>& factors() const { return factors_; }

private:
    std::vector<SemimeasurePtr> factors_;
    std::vector<int> lengths_;
};

}  // namespace aixi

#endif  // AIXI_ENV_ENVIRONMENTS_HPP
