#ifndef AIXI_SEMIMEASURE_CHRONOLOGIZE_HPP
#define AIXI_SEMIMEASURE_CHRONOLOGIZE_HPP

#include <functional>
#include <string>
#include <unordered_map>
#include <vector>

#include "aixi/core/history.hpp"

namespace aixi {

// Lower approximation phi(s, t) >= 0 of an enumerable function on
// action/percept strings; t is the recursion (time) parameter.
using EnumApproximator = std::function<Rational(const History& s, int t)>;

// phi-hat(s, t) for every string s of depth <= n and every 0 <= t <= t_max,
// built from phi by truncating percepts x_n >= t and then keeping, for each
// node, the largest phi'(s, i) (i <= t) whose sibling sum fits under the
// parent's value. The result is a chronological semimeasure for every t and
// non-decreasing in t.
class ChronologizedTable {
public:
    ChronologizedTable(const Alphabet& a, int depth, int t_max);

    const Alphabet& alphabet() const { return alphabet_; }
    int depth() const { return depth_; }
    int t_max() const { return t_max_; }

    const Rational& value(const History& s, int t) const;

    // All strings of depth <= n, shortest first.
    const std::vector<History>& strings() const { return strings_; }

private:
    friend ChronologizedTable chronologize(const EnumApproximator&, const Alphabet&, int, int);

    Alphabet alphabet_;
    int depth_;
    int t_max_;
    std::vector<History> strings_;
    std::unordered_map<std::string, std::vector<Rational>> table_;
};

// phi'(s, t): phi(s, t) when the last percept index is < t, else 0; phi'(eps, t) = phi(eps, t).
Rational truncated(const EnumApproximator& phi, const History& s, int t, const Alphabet& a);

ChronologizedTable chronologize(const EnumApproximator& phi, const Alphabet& a, int depth, int t_max);

}  // namespace aixi

#endif  // AIXI_SEMIMEASURE_CHRONOLOGIZE_HPP
