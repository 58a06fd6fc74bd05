#include "aixi/semimeasure/transducer.hpp"

#include <sstream>
#include <stdexcept>

namespace aixi {

namespace {

unsigned state_width(int num_states)
{
    return bit_width_for(static_cast<unsigned>(num_states));
}

unsigned percept_width(const Alphabet& a)
{
    return bit_width_for(static_cast<unsigned>(a.num_percepts()));
}

unsigned code_length(const Alphabet& a, int num_states)
{
    auto rows = static_cast<unsigned>(num_states * a.num_actions());
    return static_cast<unsigned>(num_states) + 1 + rows * (state_width(num_states) + percept_width(a));
}

Bits encode(const Alphabet& a, int num_states, const std::vector<Transducer::Row>& table)
{
    Bits b(static_cast<std::size_t>(num_states), '1');
    b.push_back('0');
    for (const auto& r : table) {
        append_bits(b, static_cast<unsigned>(r.next), state_width(num_states));
        append_bits(b, static_cast<unsigned>(r.percept), percept_width(a));
    }
    return b;
}

}  // namespace

Transducer::Transducer(const Alphabet& a, int num_states, std::vector<Row> table, unsigned code_len)
    : num_states_(num_states), num_actions_(a.num_actions()), table_(std::move(table)), length_(code_len)
{
    if (num_states_ < 1) throw std::invalid_argument("transducer needs at least one state");
    if (table_.size() != static_cast<std::size_t>(num_states_ * num_actions_))
        throw std::invalid_argument("transducer table has the wrong number of rows");
    for (const auto& r : table_)
        if (r.next < 0 || r.next >= num_states_ || r.percept < 0 || r.percept >= a.num_percepts())
            throw std::invalid_argument("transducer row out of range");
}

Transducer Transducer::from_table(const Alphabet& a, int num_states, std::vector<Row> table)
{
    Transducer t(a, num_states, std::move(table), code_length(a, num_states));
    t.bits_ = encode(a, num_states, t.table_);
    return t;
}

std::optional<Transducer> Transducer::decode_prefix(const Bits& bits, const Alphabet& a, int max_states,
                                                    std::size_t& consumed)
{
    std::size_t pos = 0;
    int k = 0;
    while (pos < bits.size() && bits[pos] == '1') {
        ++k;
        ++pos;
        if (k > max_states) return std::nullopt;
    }
    if (pos >= bits.size() || k == 0) return std::nullopt;
    ++pos;  // terminating zero
    std::vector<Row> table;
    for (int r = 0; r < k * a.num_actions(); ++r) {
        unsigned next = 0, percept = 0;
        if (!read_bits(bits, pos, state_width(k), next)) return std::nullopt;
        if (!read_bits(bits, pos, percept_width(a), percept)) return std::nullopt;
        if (next >= static_cast<unsigned>(k) || percept >= static_cast<unsigned>(a.num_percepts()))
            return std::nullopt;
        table.push_back({static_cast<int>(next), static_cast<int>(percept)});
    }
    consumed = pos;
    return from_table(a, k, std::move(table));
}

std::optional<Transducer> Transducer::decode(const Bits& bits, const Alphabet& a, int max_states)
{
    std::size_t used = 0;
    auto t = decode_prefix(bits, a, max_states, used);
    if (!t || used != bits.size()) return std::nullopt;
    return t;
}

const Transducer::Row& Transducer::row(int state, Action y) const
{
    return table_[static_cast<std::size_t>(state * num_actions_ + y)];
}

std::optional<int> Transducer::replay(const History& h, const Alphabet& a) const
{
    int s = 0;
    for (const auto& step : h.steps()) {
        const Row& r = row(s, step.action);
        if (r.percept != a.index(step.percept)) return std::nullopt;
        s = r.next;
    }
    return s;
}

TransducerClass::TransducerClass(Alphabet a, std::vector<Transducer> programs)
    : alphabet_(std::move(a)), programs_(std::move(programs))
{
    if (prior_mass() > 1) throw std::invalid_argument("transducer class violates Kraft inequality");
}

TransducerClass TransducerClass::enumerate(const Alphabet& a, unsigned max_len, int max_states)
{
    std::vector<Transducer> out;
    const unsigned long long limit = 1ull << 22;
    for (int k = 1; k <= max_states; ++k) {
        if (code_length(a, k) > max_len) break;
        const std::size_t rows = static_cast<std::size_t>(k * a.num_actions());
        const int radix = k * a.num_percepts();
        // mixed-radix counter over rows, last row fastest: this is the
        // lexicographic order of the codewords
        std::vector<int> digit(rows, 0);
        bool done = false;
        while (!done) {
            std::vector<Transducer::Row> table(rows);
            for (std::size_t r = 0; r < rows; ++r) table[r] = {digit[r] / a.num_percepts(), digit[r] % a.num_percepts()};
            out.push_back(Transducer::from_table(a, k, std::move(table)));
            if (out.size() > limit) throw std::length_error("transducer class too large to enumerate");
            std::size_t r = rows;
            for (;;) {
                if (r == 0) {
                    done = true;
                    break;
                }
                --r;
                if (++digit[r] < radix) break;
                digit[r] = 0;
            }
        }
    }
    return TransducerClass(a, std::move(out));
}

Rational TransducerClass::prior_mass() const
{
    Rational s = 0;
    for (const auto& q : programs_) s += q.weight();
    return s;
}

Rational TransducerClass::joint(const History& h) const
{
    Rational s = 0;
    for (const auto& q : programs_)
        if (q.replay(h, alphabet_)) s += q.weight();
    return s;
}

Distribution TransducerClass::cond(const History& h, Action y) const
{
    Distribution d(static_cast<std::size_t>(alphabet_.num_percepts()), Rational(0));
    Rational total = 0;
    for (const auto& q : programs_) {
        auto s = q.replay(h, alphabet_);
        if (!s) continue;
        Rational w = q.weight();
        d[static_cast<std::size_t>(q.row(*s, y).percept)] += w;
        total += w;
    }
    if (total == 0) throw EvidenceExhausted("program-xi: no program consistent with the history");
    for (auto& p : d) p /= total;
    return d;
}

std::string write_transducer_manifest(const TransducerClass& c)
{
    std::string out;
    for (const auto& q : c.programs()) {
        if (q.bits().empty()) throw std::invalid_argument("manifest needs encoded programs");
        out += bits_to_hex(q.bits());
        out += '\n';
    }
    return out;
}

TransducerClass read_transducer_manifest(const std::string& text, const Alphabet& a, int max_states)
{
    std::vector<Transducer> programs;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        auto last = line.find_last_not_of(" \t\r");
        Bits bits = hex_to_bits(line.substr(first, last - first + 1));
        std::size_t used = 0;
        auto q = Transducer::decode_prefix(bits, a, max_states, used);
        if (!q || bits.size() - used >= 4 || bits.find('1', used) != Bits::npos)
            throw std::invalid_argument("manifest line " + std::to_string(lineno) + ": not a transducer codeword");
        programs.push_back(std::move(*q));
    }
    return TransducerClass(a, std::move(programs));
}

}  // namespace aixi
