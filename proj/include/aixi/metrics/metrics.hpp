#ifndef AIXI_METRICS_METRICS_HPP
#define AIXI_METRICS_METRICS_HPP

#include <functional>
#include <optional>
#include <vector>

#include "aixi/bestvote/bestvote.hpp"
#include "aixi/core/horizon.hpp"
#include "aixi/env/sequence.hpp"
#include "aixi/metrics/runlog.hpp"
#include "aixi/semimeasure/mixture.hpp"
#include "aixi/semimeasure/transducer.hpp"

namespace aixi {

// rho(x_{<k} x_k) for each symbol x_k, given the prefix x_{<k}.
using Predictor = std::function<std::vector<Rational>(const Word& prefix)>;

// The measure's own conditionals.
Predictor measure_predictor(SequenceMeasurePtr rho);
// Theta_rho: probability one on the symbol with conditional > 1/2; all zeros
// (a refusal, counted as an error) when there is none.
Predictor theta_predictor(SequenceMeasurePtr rho);

// E_{n rho} = sum_{k <= n} sum_{x_{1:k}} mu(x_{1:k}) (1 - rho(x_{<k} x_k)),
// by enumeration of every prefix of positive mu mass.
Rational error_count(const Predictor& rho, const SequenceMeasure& mu, int n);

struct SpExcess {
    Rational excess;  // E_xi - E_rho
    double h = 0;     // ln 2 * K
    double bound = 0; // H + sqrt(4 E_rho H + H^2)
    double slack = 0; // bound - excess
};

SpExcess sp_excess_check(const Rational& e_rho, const Rational& e_xi, unsigned k_bits);

struct L2Convergence {
    Rational lhs;
    double rhs = 0;
    // lhs after each cycle
    std::vector<Rational> partial;
};

// lhs = sum_{k <= n} sum_{x_{1:k}} mu(y x_{1:k}) (mu(yx_{<k} y x_k) - xi(yx_{<k} y x_k))^2
// for the fixed actions y_1..y_n, with mu the given component of the mixture;
// rhs = 1/2 ln 2 K_mu.
L2Convergence l2_convergence(const MixtureModel& mix, std::size_t component, const std::vector<Action>& actions, int n);

struct AgreementDeficit {
    // disagreements among cycles 1..k, and the summed value gap
    // C*_mu(best) - C_mu(chosen)
    std::vector<int> count;
    std::vector<Rational> gap;
    int total() const { return count.empty() ? 0 : count.back(); }
};

// Replays the logged history and compares each logged action with the
// AI-mu choice on the same prefix; a cycle disagrees when the logged action
// is not among the AI-mu maximizers.
AgreementDeficit agreement_deficit(const RunLog& log, const Semimeasure& mu, const HorizonPolicy& horizon, int lifetime);

// Per cycle k of the log: max over y', x' of |mu - xi|(yx_{<k} y' x')
// divided by |mu - xi|(yx_{<k} y_k x_k) at the logged step. +inf when only
// the denominator vanishes, 0 when both do.
std::vector<double> uniformity_ratios(const RunLog& log, const Semimeasure& mu, const Semimeasure& xi);

// Cycles whose selected pool index differs from the previous cycle's.
int selection_switches(const RunLog& log);

struct DetSpBound {
    int errors = 0;
    Rational inv_alpha;
    bool holds = false;
};

// Errors (zero-credit cycles) of a deterministic SP run against 1/alpha with
// alpha = 2^{-l(q_true)}. Throws std::invalid_argument unless q_true is a
// member of the class and generates the logged percepts.
DetSpBound det_sp_bound_check(const RunLog& log, const TransducerClass& cls, const Transducer& q_true);

// mu-expected credit of cycles |h|+1..m when the policy acts from h on.
Rational expected_credit(const Semimeasure& mu, const std::function<Action(const History&)>& policy, const History& h,
                         int m);

// Smallest worst-case error count over all deterministic policies on the
// needle class with N actions, counted over the first `cycles` cycles.
int needle_min_worst_errors(int n, int cycles);

// p >= p' under xi: C_{k m_k}(p | h) >= C_{k m_k}(p' | h) at every prefix of
// every history, rolling each policy out from h.
OrderResult order_compare(const std::function<Action(const History&)>& p,
                          const std::function<Action(const History&)>& q, const TransducerClass& cls,
                          const std::vector<History>& histories, const HorizonPolicy& horizon, int lifetime);

}  // namespace aixi

#endif  // AIXI_METRICS_METRICS_HPP
