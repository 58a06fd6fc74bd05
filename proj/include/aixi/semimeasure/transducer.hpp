#ifndef AIXI_SEMIMEASURE_TRANSDUCER_HPP
#define AIXI_SEMIMEASURE_TRANSDUCER_HPP

#include <optional>
#include <string>
#include <vector>

#include "aixi/core/bits.hpp"
#include "aixi/semimeasure/semimeasure.hpp"

namespace aixi {

// Deterministic finite-state environment program q: in state s, reading action
// y, it emits one percept and moves to the next state. Starts in state 0.
//
// Code: k ones then a zero (k states), followed by the transition table in
// row-major (state, action) order; each row is the next state in
// bit_width_for(k) bits and the percept index in bit_width_for(|X|) bits. The
// code is prefix-free, so sum_q 2^{-l(q)} <= 1 over any set of programs.
class Transducer {
public:
    struct Row {
        int next = 0;
        int percept = 0;
    };

    // Program with an explicit code length, used for hand-built classes.
    Transducer(const Alphabet& a, int num_states, std::vector<Row> table, unsigned code_length);

    // Encodes the table with the canonical code; length() == bits().size().
    static Transducer from_table(const Alphabet& a, int num_states, std::vector<Row> table);

    // Decodes a program that occupies exactly `bits`; nullopt if the string is
    // not a complete codeword or names an out-of-range state/percept.
    static std::optional<Transducer> decode(const Bits& bits, const Alphabet& a, int max_states);

    // Decodes the codeword at the start of `bits`, reporting how many bits it used.
    static std::optional<Transducer> decode_prefix(const Bits& bits, const Alphabet& a, int max_states,
                                                   std::size_t& consumed);

    int num_states() const { return num_states_; }
    unsigned length() const { return length_; }
    const Bits& bits() const { return bits_; }
    const Row& row(int state, Action y) const;
    Rational weight() const { return pow2_neg(length_); }

    // State after replaying h, or nullopt if some emitted percept differs from h.
    std::optional<int> replay(const History& h, const Alphabet& a) const;

private:
    int num_states_;
    int num_actions_;
    std::vector<Row> table_;
    unsigned length_;
    Bits bits_;
};

// Program-based xi over a finite class: xi(yx_{1:k}) = sum of 2^{-l(q)} over
// the programs q with q(y_{1:k}) = x_{1:k}.
class TransducerClass : public Semimeasure {
public:
    TransducerClass(Alphabet a, std::vector<Transducer> programs);

    // Every decodable transducer with l(q) <= max_len and at most max_states states.
    static TransducerClass enumerate(const Alphabet& a, unsigned max_len, int max_states = 8);

    const Alphabet& alphabet() const override { return alphabet_; }
    Distribution cond(const History& h, Action y) const override;
    Rational prior_mass() const override;
    Rational joint(const History& h) const override;
    std::string name() const override { return "program-xi"; }

    const std::vector<Transducer>& programs() const { return programs_; }
    std::size_t size() const { return programs_.size(); }

private:
    Alphabet alphabet_;
    std::vector<Transducer> programs_;
};

// Manifest: one hex-encoded codeword per line (trailing pad bits zero).
std::string write_transducer_manifest(const TransducerClass& c);
TransducerClass read_transducer_manifest(const std::string& text, const Alphabet& a, int max_states = 8);

}  // namespace aixi

#endif  // AIXI_SEMIMEASURE_TRANSDUCER_HPP
