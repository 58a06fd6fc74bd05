#ifndef AIXI_BESTVOTE_BESTVOTE_HPP
#define AIXI_BESTVOTE_BESTVOTE_HPP

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "aixi/agent/policy.hpp"
#include "aixi/bestvote/cvm.hpp"
#include "aixi/semimeasure/transducer.hpp"

namespace aixi {

// Claimed credit w_k^p and action y_k^p for the current cycle.
struct RatedOutput {
    Rational w;
    Action y = 0;
    std::uint64_t steps = 0;
    bool timed_out = false;
};

// Extended chronological program p(yx_{<k}) = w_1 y_1 ... w_k y_k; only the
// current pair is exposed.
class ExtendedProgram {
public:
    virtual ~ExtendedProgram() = default;
    virtual RatedOutput run(const History& h) const = 0;
    // y_k^p alone; must agree with run(h).y
    virtual Action action(const History& h) const { return run(h).y; }
    virtual std::string id() const = 0;
};

using ExtendedProgramPtr = std::shared_ptr<const ExtendedProgram>;

// A CVM program with its step budget; a timeout gives (w = 0, y = 0).
class VmProgram : public ExtendedProgram {
public:
    VmProgram(CvmProgram program, std::uint64_t budget) : program_(std::move(program)), budget_(budget) {}
    RatedOutput run(const History& h) const override;
    std::string id() const override { return program_.bits().empty() ? "vm:" : "vm:" + program_.bits(); }
    const CvmProgram& program() const { return program_; }

private:
    CvmProgram program_;
    std::uint64_t budget_;
};

// Program given directly as a function, for injected reference policies.
class NativeProgram : public ExtendedProgram {
public:
    NativeProgram(std::string id, std::function<RatedOutput(const History&)> f) : id_(std::move(id)), f_(std::move(f)) {}
    RatedOutput run(const History& h) const override { return f_(h); }
    std::string id() const override { return id_; }

private:
    std::string id_;
    std::function<RatedOutput(const History&)> f_;
};

// C_{km}(p | yx_{<k}) = sum over q consistent with h of 2^{-l(q)} C_{km}(p, q),
// where C_{km}(p, q) is the credit of cycles k..m when p plays against q
// starting from h. Unnormalized; 0 when no q is consistent.
Rational estimate_credit(const ExtendedProgram& p, const History& h, const TransducerClass& cls, int k, int m);

// Floors to the claimed-credit grid 2^{-16}.
Rational to_credit_grid(const Rational& w);

// Validity wrapper: w := grid(min(w_raw, C_{k m_k}(p | h))) so that VA(p)
// holds by construction. Actions are those of the inner program.
class WrappedProgram : public ExtendedProgram {
public:
    WrappedProgram(ExtendedProgramPtr inner, std::shared_ptr<const TransducerClass> cls, HorizonPolicy horizon,
                   int lifetime);
    RatedOutput run(const History& h) const override;
    Action action(const History& h) const override { return inner_->action(h); }
    std::string id() const override { return inner_->id(); }

    // the raw claim before clamping
    RatedOutput raw(const History& h) const { return inner_->run(h); }
    Rational estimate(const History& h) const;
    int horizon_end(int k) const;

private:
    ExtendedProgramPtr inner_;
    std::shared_ptr<const TransducerClass> cls_;
    HorizonPolicy horizon_;
    int lifetime_;
};

struct Selection {
    Action y = 0;
    Rational w;
    // index into the pool, -1 for the empty pool
    int index = -1;
    std::vector<Rational> claims;
    std::uint64_t steps = 0;
};

// The pool of wrapped programs in selection order (ties go to the lower
// index). Enumerated VM programs come in code order; injected programs are
// appended after them.
class Pool {
public:
    Pool(std::shared_ptr<const TransducerClass> cls, HorizonPolicy horizon, int lifetime);

    // All CVM programs of length <= l with step budget t.
    static Pool build(unsigned max_len, std::uint64_t budget, std::shared_ptr<const TransducerClass> cls,
                      HorizonPolicy horizon, int lifetime);

    void add(ExtendedProgramPtr inner);
    std::size_t size() const { return members_.size(); }
    const WrappedProgram& member(std::size_t i) const { return *members_[i]; }
    std::uint64_t strings_examined() const { return examined_; }
    std::uint64_t budget() const { return budget_; }

    // Runs every member and picks the highest claim; the empty pool plays 0.
    Selection select(const History& h) const;

private:
    std::shared_ptr<const TransducerClass> cls_;
    HorizonPolicy horizon_;
    int lifetime_;
    std::vector<std::shared_ptr<WrappedProgram>> members_;
    std::uint64_t examined_ = 0;
    std::uint64_t budget_ = 0;
};

// p^best as an extended program: claims the pool maximum, plays its action.
class BestVoteProgram : public ExtendedProgram {
public:
    explicit BestVoteProgram(std::shared_ptr<const Pool> pool) : pool_(std::move(pool)) {}
    RatedOutput run(const History& h) const override;
    std::string id() const override { return "bestvote"; }

private:
    std::shared_ptr<const Pool> pool_;
};

class BestVotePolicy : public Policy {
public:
    explicit BestVotePolicy(std::shared_ptr<const Pool> pool) : pool_(std::move(pool)) {}
    Action act(const History& h) override;
    std::string name() const override { return "bestvote"; }
    std::optional<Rational> last_value() const override { return last_.w; }
    std::uint64_t last_steps() const override { return last_.steps; }
    const Selection& last_selection() const { return last_; }

private:
    std::shared_ptr<const Pool> pool_;
    Selection last_;
};

// p >=^c p': w_k >= w'_k at every prefix of every supplied history.
struct OrderResult {
    bool holds = true;
    // first violation: history index and cycle k
    std::size_t history = 0;
    int k = 0;
};

OrderResult effective_compare(const ExtendedProgram& p, const ExtendedProgram& q, const std::vector<History>& histories);

}  // namespace aixi

#endif  // AIXI_BESTVOTE_BESTVOTE_HPP
