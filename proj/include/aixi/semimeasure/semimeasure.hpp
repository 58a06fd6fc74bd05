#ifndef AIXI_SEMIMEASURE_SEMIMEASURE_HPP
#define AIXI_SEMIMEASURE_SEMIMEASURE_HPP

#include <memory>
#include <stdexcept>
#include <string>

#include "aixi/core/alphabet.hpp"
#include "aixi/core/history.hpp"

namespace aixi {

// Thrown when a model assigns zero mass to the history it is conditioned on.
struct EvidenceExhausted : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Chronological semimeasure rho, accessed through its conditionals
// rho(yx_{<k} y_k x_k) for every percept x_k. Entries are non-negative and sum
// to at most one; proper environments sum to exactly one.
class Semimeasure {
public:
    virtual ~Semimeasure() = default;

    virtual const Alphabet& alphabet() const = 0;

    // Conditional distribution over percept indices given the completed
    // history h and the pending action y. Throws EvidenceExhausted when h has
    // zero mass under the model.
    virtual Distribution cond(const History& h, Action y) const = 0;

    // rho(epsilon) <= 1
    virtual Rational prior_mass() const { return 1; }

    // rho(yx_{1:n}) = rho(epsilon) * prod_k cond; stops at the first zero factor.
    virtual Rational joint(const History& h) const;

    virtual std::string name() const { return "model"; }
};

using SemimeasurePtr = std::shared_ptr<const Semimeasure>;

// Distribution with probability one on a single percept.
Distribution point_mass(const Alphabet& a, const Percept& x);

}  // namespace aixi

#endif  // AIXI_SEMIMEASURE_SEMIMEASURE_HPP
