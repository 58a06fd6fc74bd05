#include "aixi/semimeasure/chronologize.hpp"

#include <stdexcept>

namespace aixi {

ChronologizedTable::ChronologizedTable(const Alphabet& a, int depth, int t_max)
    : alphabet_(a), depth_(depth), t_max_(t_max)
{
    if (depth < 0 || t_max < 0) throw std::invalid_argument("chronologize: negative depth or t");
}

const Rational& ChronologizedTable::value(const History& s, int t) const
{
    if (t < 0 || t > t_max_ || static_cast<int>(s.size()) > depth_)
        throw std::out_of_range("chronologized table: argument outside the table");
    return table_.at(history_key(s, alphabet_))[static_cast<std::size_t>(t)];
}

Rational truncated(const EnumApproximator& phi, const History& s, int t, const Alphabet& a)
{
    if (s.empty()) return phi(s, t);
    if (a.index(s[s.size() - 1].percept) < t) return phi(s, t);
    return 0;
}

ChronologizedTable chronologize(const EnumApproximator& phi, const Alphabet& a, int depth, int t_max)
{
    ChronologizedTable out(a, depth, t_max);
    const auto T = static_cast<std::size_t>(t_max) + 1;

    // empty string: largest phi'(eps, i) <= 1, with 0 when no i qualifies
    History eps;
    std::vector<Rational> root(T, Rational(0));
    for (std::size_t t = 0; t < T; ++t) {
        Rational best = 0;
        for (std::size_t i = 0; i <= t; ++i) {
            Rational v = truncated(phi, eps, static_cast<int>(i), a);
            if (v <= 1 && v > best) best = v;
        }
        root[t] = best;
    }
    out.table_.emplace(history_key(eps, a), std::move(root));
    out.strings_.push_back(eps);

    std::vector<History> level{eps};
    for (int n = 1; n <= depth; ++n) {
        std::vector<History> next;
        for (const auto& parent : level) {
            const auto& parent_vals = out.table_.at(history_key(parent, a));
            for (Action y = 0; y < a.num_actions(); ++y) {
                // phi'(parent y x, i) for every sibling x and every i
                std::vector<std::vector<Rational>> trunc(static_cast<std::size_t>(a.num_percepts()),
                                                         std::vector<Rational>(T));
                std::vector<Rational> sibling_sum(T, Rational(0));
                for (int x = 0; x < a.num_percepts(); ++x) {
                    History s = parent.extended(y, a.percept(x));
                    for (std::size_t i = 0; i < T; ++i) {
                        trunc[static_cast<std::size_t>(x)][i] = truncated(phi, s, static_cast<int>(i), a);
                        sibling_sum[i] += trunc[static_cast<std::size_t>(x)][i];
                    }
                }
                // the admissible i for (parent, y, t) do not depend on x, so all
                // siblings select values at the same i; taking the largest i keeps
                // the sibling sum under the parent
                for (int x = 0; x < a.num_percepts(); ++x) {
                    History s = parent.extended(y, a.percept(x));
                    std::vector<Rational> vals(T, Rational(0));
                    for (std::size_t t = 0; t < T; ++t) {
                        Rational best = 0;
                        for (std::size_t i = 0; i <= t; ++i)
                            if (sibling_sum[i] <= parent_vals[t] && trunc[static_cast<std::size_t>(x)][i] > best)
                                best = trunc[static_cast<std::size_t>(x)][i];
                        vals[t] = best;
                    }
                    out.table_.emplace(history_key(s, a), std::move(vals));
                    out.strings_.push_back(s);
                    next.push_back(std::move(s));
                }
            }
        }
        level = std::move(next);
    }
    return out;
}

}  // namespace aixi
