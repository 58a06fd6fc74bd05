#include "aixi/env/fm.hpp"

#include <algorithm>
#include <stdexcept>

namespace aixi {

FunctionClass FunctionClass::all_functions(int num_actions, int num_values)
{
    FunctionClass c;
    c.num_actions = num_actions;
    c.num_values = num_values;
    long count = 1;
    for (int i = 0; i < num_actions; ++i) count *= num_values;
    for (long code = 0; code < count; ++code) {
        std::vector<int> f(static_cast<std::size_t>(num_actions));
        long rest = code;
        // f(0) varies slowest
        for (int y = num_actions - 1; y >= 0; --y) {
            f[static_cast<std::size_t>(y)] = 1 + static_cast<int>(rest % num_values);
            rest /= num_values;
        }
        c.values.push_back(std::move(f));
        c.prior.push_back(Rational(1, count));
    }
    c.validate();
    return c;
}

void FunctionClass::validate() const
{
    if (num_actions < 1 || num_values < 1 || values.empty() || values.size() != prior.size())
        throw std::invalid_argument("function class is empty or malformed");
    Rational total = 0;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (values[i].size() != static_cast<std::size_t>(num_actions))
            throw std::invalid_argument("function table has the wrong arity");
        for (int z : values[i])
            if (z < 1 || z > num_values) throw std::invalid_argument("function value outside Z");
        if (prior[i] < 0) throw std::invalid_argument("negative function probability");
        total += prior[i];
    }
    if (total != 1) throw std::invalid_argument("function probabilities must sum to one");
}

Rational FunctionClass::joint(const std::vector<Action>& ys, const std::vector<int>& zs) const
{
    Rational s = 0;
    for (std::size_t f = 0; f < values.size(); ++f) {
        bool ok = true;
        for (std::size_t i = 0; i < ys.size() && ok; ++i) ok = values[f][static_cast<std::size_t>(ys[i])] == zs[i];
        if (ok) s += prior[f];
    }
    return s;
}

std::vector<Rational> FunctionClass::cond(const std::vector<Action>& ys, const std::vector<int>& zs, Action y) const
{
    std::vector<Rational> d(static_cast<std::size_t>(num_values), Rational(0));
    Rational total = 0;
    for (std::size_t f = 0; f < values.size(); ++f) {
        bool ok = true;
        for (std::size_t i = 0; i < ys.size() && ok; ++i) ok = values[f][static_cast<std::size_t>(ys[i])] == zs[i];
        if (!ok) continue;
        d[static_cast<std::size_t>(values[f][static_cast<std::size_t>(y)] - 1)] += prior[f];
        total += prior[f];
    }
    if (total == 0) throw EvidenceExhausted("no function is consistent with the observed values");
    for (auto& p : d) p /= total;
    return d;
}

std::vector<Rational> fm_weights(FmVariant v, int lifetime, const Rational& rho)
{
    if (lifetime < 1) throw std::invalid_argument("FM lifetime must be positive");
    std::vector<Rational> a(static_cast<std::size_t>(lifetime), Rational(0));
    switch (v) {
    case FmVariant::Final:
        a.back() = 1;
        break;
    case FmVariant::Sum:
        std::fill(a.begin(), a.end(), Rational(1));
        break;
    case FmVariant::Exponential: {
        if (rho <= 0 || rho >= 1) throw std::invalid_argument("FME decay must lie in (0, 1)");
        Rational w = 1;
        for (int k = lifetime - 1; k >= 0; --k) {
            a[static_cast<std::size_t>(k)] = w;
            w *= rho;
        }
        break;
    }
    }
    return a;
}

namespace {

Alphabet fm_alphabet(const FunctionClass& fc, const std::vector<Rational>& alpha, bool drop_obs)
{
    std::vector<Rational> credits;
    for (const auto& a : alpha)
        for (int z = 1; z <= fc.num_values; ++z) credits.push_back(-a * z);
    std::sort(credits.begin(), credits.end());
    credits.erase(std::unique(credits.begin(), credits.end()), credits.end());
    return Alphabet(fc.num_actions, drop_obs ? 1 : fc.num_values, std::move(credits));
}

}  // namespace

FmEnvironment::FmEnvironment(FunctionClass functions, std::vector<Rational> alpha, bool drop_obs)
    : functions_(std::move(functions)),
      alpha_(std::move(alpha)),
      drop_obs_(drop_obs),
      alphabet_(fm_alphabet(functions_, alpha_, drop_obs_))
{
    functions_.validate();
    if (alpha_.empty()) throw std::invalid_argument("FM needs at least one weight");
    for (const auto& a : alpha_) {
        if (a < 0) throw std::invalid_argument("FM weights must be non-negative");
        if (drop_obs_ && a == 0) throw std::invalid_argument("dropping x' needs every weight non-zero");
    }
}

Percept FmEnvironment::percept_for(int k, int z) const
{
    const Rational& a = alpha_[static_cast<std::size_t>(std::min(k, lifetime()) - 1)];
    return {alphabet_.credit_index(-a * z), drop_obs_ ? 0 : z - 1};
}

std::vector<int> FmEnvironment::values_of(const History& h) const
{
    std::vector<int> zs;
    for (std::size_t i = 0; i < h.size(); ++i) {
        const Percept& x = h[i].percept;
        if (!drop_obs_) {
            zs.push_back(x.obs + 1);
            continue;
        }
        const Rational& a = alpha_[std::min(i, alpha_.size() - 1)];
        Rational z = -alphabet_.credit_value(x) / a;
        zs.push_back(static_cast<int>(z.get_num().get_si()));
    }
    return zs;
}

Distribution FmEnvironment::cond(const History& h, Action y) const
{
    std::vector<Action> ys;
    for (const auto& s : h.steps()) ys.push_back(s.action);
    auto zs = values_of(h);
    const int k = static_cast<int>(h.size()) + 1;
    // percepts off the embedding (wrong credit for the value) have mass zero
    for (std::size_t i = 0; i < h.size(); ++i)
        if (!(h[i].percept == percept_for(static_cast<int>(i) + 1, zs[i])))
            throw EvidenceExhausted("FM history violates c_k = -alpha_k z_k");
    auto pz = functions_.cond(ys, zs, y);
    Distribution d(static_cast<std::size_t>(alphabet_.num_percepts()), Rational(0));
    for (int z = 1; z <= functions_.num_values; ++z)
        d[static_cast<std::size_t>(alphabet_.index(percept_for(k, z)))] += pz[static_cast<std::size_t>(z - 1)];
    return d;
}

}  // namespace aixi
