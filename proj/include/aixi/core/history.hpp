#ifndef AIXI_CORE_HISTORY_HPP
#define AIXI_CORE_HISTORY_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "aixi/core/alphabet.hpp"

namespace aixi {

// One completed cycle: action y_k followed by percept x_k.
struct Step {
    Action action = 0;
    Percept percept;

    friend bool operator==(const Step&, const Step&) = default;
};

// Chronological record y_1 x_1 ... y_n x_n. The action of a cycle always
// precedes its percept, so a History only ever holds completed cycles; a
// pending action is passed separately where needed.
class History {
public:
    History() = default;
    explicit History(std::vector<Step> steps) : steps_(std::move(steps)) {}

    // number of completed cycles
    std::size_t size() const { return steps_.size(); }
    bool empty() const { return steps_.empty(); }

    const Step& operator[](std::size_t i) const { return steps_[i]; }
    const std::vector<Step>& steps() const { return steps_; }

    void push(Action y, Percept x) { steps_.push_back({y, x}); }
    void pop() { steps_.pop_back(); }

    // first n cycles
    History prefix(std::size_t n) const;
    // cycles [from, to)
    History slice(std::size_t from, std::size_t to) const;

    History extended(Action y, Percept x) const;

    friend bool operator==(const History&, const History&) = default;

private:
    std::vector<Step> steps_;
};

// Compact byte key for hashing histories (memo tables).
std::string history_key(const History& h, const Alphabet& a);

// Sum of credits c(x_k) over the whole history.
Rational total_credit(const History& h, const Alphabet& a);

// Every history over the alphabet with exactly n cycles, in lexicographic
// (action, percept) order.
std::vector<History> all_histories(const Alphabet& a, int n);

struct ParseError : std::runtime_error {
    ParseError(std::size_t position, const std::string& what);
    std::size_t position;
};

// Canonical text encoding: whitespace separated tokens "y:<idx>" and
// "x:<credit>/<obs-idx>", strictly alternating starting with an action.
std::vector<std::string> encode_history(const History& h, const Alphabet& a);
std::string encode_history_text(const History& h, const Alphabet& a);

// Inverse of encode_history. Throws ParseError naming the offending token.
History decode_history(const std::vector<std::string>& words, const Alphabet& a);
History decode_history_text(const std::string& text, const Alphabet& a);

}  // namespace aixi

#endif  // AIXI_CORE_HISTORY_HPP
