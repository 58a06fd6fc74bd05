#ifndef AIXI_ENV_FM_HPP
#define AIXI_ENV_FM_HPP

#include <string>
#include <vector>

#include "aixi/semimeasure/semimeasure.hpp"

namespace aixi {

// Finite class of functions f: Y -> Z with prior probabilities; Z is the
// value set {1, ..., num_values}. values[f][y] = f(y).
struct FunctionClass {
    int num_actions = 0;
    int num_values = 0;
    std::vector<std::vector<int>> values;
    std::vector<Rational> prior;

    // Every function Y -> Z, equiprobable (|Z|^|Y| of them).
    static FunctionClass all_functions(int num_actions, int num_values);

    void validate() const;

    // mu^FM(y_1 z_1 ... y_n z_n) = sum of mu(f) over f with f(y_i) = z_i
    Rational joint(const std::vector<Action>& ys, const std::vector<int>& zs) const;

    // distribution of z_k = f(y) (index z - 1) given the observed pairs
    std::vector<Rational> cond(const std::vector<Action>& ys, const std::vector<int>& zs, Action y) const;
};

enum class FmVariant { Final, Sum, Exponential };

// alpha_k for k = 1..T: FMF (0, ..., 0, 1), FMS (1, ..., 1) and FME with
// alpha_k = rho^{T-k} for a rational 0 < rho < 1.
std::vector<Rational> fm_weights(FmVariant v, int lifetime, const Rational& rho = Rational(1, 2));

// mu^AI of the FM embedding: x'_k = z_k and c_k = -alpha_k z_k. With
// `drop_obs` the observation set collapses to {eps} and z_k is read back
// from the credit (needs every alpha_k != 0).
class FmEnvironment : public Semimeasure {
public:
    FmEnvironment(FunctionClass functions, std::vector<Rational> alpha, bool drop_obs = false);

    const Alphabet& alphabet() const override { return alphabet_; }
    Distribution cond(const History& h, Action y) const override;
    std::string name() const override { return "fm"; }

    const FunctionClass& functions() const { return functions_; }
    const std::vector<Rational>& alpha() const { return alpha_; }
    int lifetime() const { return static_cast<int>(alpha_.size()); }

    // z-values observed along h
    std::vector<int> values_of(const History& h) const;
    Percept percept_for(int k, int z) const;

private:
    FunctionClass functions_;
    std::vector<Rational> alpha_;
    bool drop_obs_;
    Alphabet alphabet_;
};

}  // namespace aixi

#endif  // AIXI_ENV_FM_HPP
