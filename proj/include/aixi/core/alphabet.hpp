#ifndef AIXI_CORE_ALPHABET_HPP
#define AIXI_CORE_ALPHABET_HPP

#include <cstddef>
#include <vector>

#include "aixi/core/rational.hpp"

namespace aixi {

using Action = int;

// A percept x_k = c_k x'_k, stored as indices into the alphabet's credit and
// observation sets.
struct Percept {
    int credit = 0;
    int obs = 0;

    friend bool operator==(const Percept&, const Percept&) = default;
};

// Finite ordered action set Y, observation set X' and credit set C.
// Actions and observations are the indices 0..n-1; credits are rationals
// kept in strictly increasing order.
class Alphabet {
public:
    Alphabet(int num_actions, int num_obs, std::vector<Rational> credits);

    int num_actions() const { return num_actions_; }
    int num_obs() const { return num_obs_; }
    int num_credits() const { return static_cast<int>(credits_.size()); }
    const std::vector<Rational>& credits() const { return credits_; }

    // |X| = |C| * |X'|
    int num_percepts() const { return num_credits() * num_obs_; }

    int index(const Percept& x) const { return x.credit * num_obs_ + x.obs; }
    Percept percept(int index) const { return {index / num_obs_, index % num_obs_}; }

    const Rational& credit_value(const Percept& x) const { return credits_[static_cast<std::size_t>(x.credit)]; }
    const Rational& credit_value(int percept_index) const { return credit_value(percept(percept_index)); }

    // Index of a credit value; -1 when the value is not in C.
    int credit_index(const Rational& value) const;

    bool valid_action(Action y) const { return y >= 0 && y < num_actions_; }
    bool valid(const Percept& x) const;

    // B with C within [-B, B].
    Rational credit_bound() const;

    friend bool operator==(const Alphabet&, const Alphabet&) = default;

private:
    int num_actions_;
    int num_obs_;
    std::vector<Rational> credits_;
};

// Distribution over percept indices 0..|X|-1; entries sum to at most one.
using Distribution = std::vector<Rational>;

Rational total_mass(const Distribution& d);

}  // namespace aixi

#endif  // AIXI_CORE_ALPHABET_HPP
