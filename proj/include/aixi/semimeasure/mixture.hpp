#ifndef AIXI_SEMIMEASURE_MIXTURE_HPP
#define AIXI_SEMIMEASURE_MIXTURE_HPP

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "aixi/semimeasure/semimeasure.hpp"

namespace aixi {

struct MixtureComponent {
    SemimeasurePtr model;
    // declared code length K_i in bits; prior weight 2^{-K_i}
    unsigned code_length = 0;
    std::string id;
};

// xi = sum_i 2^{-K_i} rho_i over a finite class. The normalizer is never
// applied, so xi(epsilon) = sum_i 2^{-K_i} <= 1.
class MixtureModel : public Semimeasure {
public:
    explicit MixtureModel(std::vector<MixtureComponent> components);

    const Alphabet& alphabet() const override { return alphabet_; }
    Distribution cond(const History& h, Action y) const override;
    Rational prior_mass() const override;
    Rational joint(const History& h) const override;
    std::string name() const override { return "mixture"; }

    // w_i(h) = 2^{-K_i} rho_i(h) / xi(h); sums to one.
    std::vector<Rational> posterior_weights(const History& h) const;

    // Unnormalized 2^{-K_i} rho_i(h) per component.
    std::vector<Rational> weighted_joints(const History& h) const;

    const std::vector<MixtureComponent>& components() const { return components_; }
    std::size_t size() const { return components_.size(); }

private:
    std::vector<MixtureComponent> components_;
    Alphabet alphabet_;
};

// Rows "component-id, K" (blank lines and '#' comments ignored). The id is
// everything before the last comma.
std::vector<std::pair<std::string, unsigned>> parse_mixture_registry(const std::string& text);

MixtureModel mixture_from_registry(const std::vector<std::pair<std::string, unsigned>>& rows,
                                   const std::function<SemimeasurePtr(const std::string&)>& resolve);

}  // namespace aixi

#endif  // AIXI_SEMIMEASURE_MIXTURE_HPP
