#ifndef AIXI_ENV_EX_HPP
#define AIXI_ENV_EX_HPP

#include <string>
#include <vector>

#include "aixi/semimeasure/semimeasure.hpp"

namespace aixi {

// Relation R subset of Z x V with V = Y; member[z][y].
struct Relation {
    std::vector<std::vector<bool>> member;

    int num_objects() const { return static_cast<int>(member.size()); }
    int num_properties() const { return member.empty() ? 0 : static_cast<int>(member.front().size()); }
    bool contains(int z, int y) const { return member[static_cast<std::size_t>(z)][static_cast<std::size_t>(y)]; }

    // "z:y z:y ..." pairs
    static Relation parse(const std::string& text, int num_objects, int num_properties);
};

// Supervised learning from examples. Observation x'_k = (z_k, v_k) with
// v_k in V or '?', encoded as z * (|V| + 1) + v and v = |V| for '?'. The
// credit of cycle k + 1 is R(z_k, y_{k+1}); c_1 = 0.
//
// Presenter mu_R: z_k uniform on Z; with probability p_example v_k is drawn
// uniformly from {y : (z_k, y) in R} (when non-empty), otherwise v_k = '?'.
// The environment is the sigma-mixture of mu_R over the listed relations.
class ExEnvironment : public Semimeasure {
public:
    ExEnvironment(std::vector<Relation> relations, std::vector<Rational> sigma, Rational p_example);

    const Alphabet& alphabet() const override { return alphabet_; }
    Distribution cond(const History& h, Action y) const override;
    std::string name() const override { return "ex"; }

    int num_objects() const { return relations_.front().num_objects(); }
    int num_properties() const { return relations_.front().num_properties(); }
    int question_mark() const { return num_properties(); }
    int encode_obs(int z, int v) const { return z * (num_properties() + 1) + v; }
    int object_of(int obs) const { return obs / (num_properties() + 1); }
    int property_of(int obs) const { return obs % (num_properties() + 1); }

    const std::vector<Relation>& relations() const { return relations_; }

    // mu_R(h) sigma(R) for each relation
    std::vector<Rational> relation_masses(const History& h) const;

private:
    // mu_R(yx_{<k} y x) for one relation, as a full distribution
    Distribution cond_given(const Relation& r, const History& h, Action y) const;

    std::vector<Relation> relations_;
    std::vector<Rational> sigma_;
    Rational p_example_;
    Alphabet alphabet_;
};

}  // namespace aixi

#endif  // AIXI_ENV_EX_HPP
