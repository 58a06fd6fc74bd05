#include "aixi/metrics/runlog.hpp"

#include <charconv>
#include <sstream>
#include <stdexcept>

namespace aixi {

namespace {

const char* const columns = "k,action,credit_index,credit,obs,value,weights,steps,selected";

std::string render(const Rational& q, Arith mode)
{
    if (mode == Arith::Exact) return to_string(q);
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof buf, to_double(q));
    return std::string(buf, res.ptr);
}

Rational parse_number(const std::string& s)
{
    try {
        return parse_rational(s);
    } catch (const std::invalid_argument&) {
        std::size_t used = 0;
        double d = std::stod(s, &used);
        if (used != s.size()) throw std::invalid_argument("not a number: '" + s + "'");
        return Rational(d);
    }
}

std::vector<std::string> split(const std::string& s, char sep)
{
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

std::string hex64(std::uint64_t v)
{
    static const char digits[] = "0123456789abcdef";
    std::string s(16, '0');
    for (int i = 15; i >= 0; --i, v >>= 4) s[static_cast<std::size_t>(i)] = digits[v & 15];
    return s;
}

}  // namespace

Arith parse_arith(const std::string& text)
{
    if (text == "exact") return Arith::Exact;
    if (text == "float") return Arith::Float;
    throw std::invalid_argument("arith must be exact or float, got '" + text + "'");
}

std::string to_string(Arith a)
{
    return a == Arith::Exact ? "exact" : "float";
}

void RunLog::append(CycleRecord r)
{
    if (r.k != static_cast<int>(cycles_.size()) + 1) throw std::invalid_argument("run log cycles must be appended in order");
    cycles_.push_back(std::move(r));
}

History RunLog::history() const
{
    History h;
    for (const auto& c : cycles_) h.push(c.action, c.percept);
    return h;
}

Rational RunLog::total_credit() const
{
    Rational s = 0;
    for (const auto& c : cycles_) s += c.credit;
    return s;
}

std::uint64_t fnv1a(std::string_view text)
{
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : text) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    return h;
}

std::string write_csv(const RunLog& log)
{
    const auto& hd = log.header();
    std::ostringstream out;
    out << "# env: " << hd.env << "\n"
        << "# env-hash: " << hex64(hd.env_hash) << "\n"
        << "# agent: " << hd.agent << "\n"
        << "# seed: " << hd.seed << "\n"
        << "# rng: " << hd.rng << "\n"
        << "# T: " << hd.lifetime << "\n"
        << "# horizon: " << hd.horizon << "\n"
        << "# arith: " << to_string(hd.arith) << "\n"
        << columns << "\n";
    for (const auto& c : log.cycles()) {
        out << c.k << ',' << c.action << ',' << c.percept.credit << ',' << render(c.credit, hd.arith) << ','
            << c.percept.obs << ',';
        if (c.value) out << render(*c.value, hd.arith);
        out << ',';
        for (std::size_t i = 0; i < c.weights.size(); ++i) {
            if (i) out << ';';
            out << render(c.weights[i], hd.arith);
        }
        out << ',' << c.steps << ',';
        if (c.selected >= 0) out << c.selected;
        out << "\n";
    }
    if (!log.status().empty()) out << "# status: " << log.status() << "\n";
    return out.str();
}

RunLog read_csv(const std::string& text)
{
    RunLogHeader hd;
    std::vector<CycleRecord> rows;
    std::string status;
    bool seen_columns = false;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    auto fail = [&](const std::string& what) {
        throw std::invalid_argument("run log line " + std::to_string(lineno) + ": " + what);
    };
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        if (line[0] == '#') {
            auto colon = line.find(": ");
            if (colon == std::string::npos) continue;
            std::string key = line.substr(2, colon - 2);
            std::string val = line.substr(colon + 2);
            try {
                if (key == "env") hd.env = val;
                else if (key == "env-hash") hd.env_hash = std::stoull(val, nullptr, 16);
                else if (key == "agent") hd.agent = val;
                else if (key == "seed") hd.seed = std::stoull(val);
                else if (key == "rng") hd.rng = val;
                else if (key == "T") hd.lifetime = std::stoi(val);
                else if (key == "horizon") hd.horizon = val;
                else if (key == "arith") hd.arith = parse_arith(val);
                else if (key == "status") status = val;
            } catch (const std::logic_error& e) {
                fail(std::string("bad header value: ") + e.what());
            }
            continue;
        }
        if (!seen_columns) {
            if (line != columns) fail("unexpected column header");
            seen_columns = true;
            continue;
        }
        auto f = split(line, ',');
        if (f.size() != 9) fail("expected 9 fields");
        try {
            CycleRecord c;
            c.k = std::stoi(f[0]);
            c.action = std::stoi(f[1]);
            c.percept.credit = std::stoi(f[2]);
            c.credit = parse_number(f[3]);
            c.percept.obs = std::stoi(f[4]);
            if (!f[5].empty()) c.value = parse_number(f[5]);
            if (!f[6].empty())
                for (const auto& w : split(f[6], ';')) c.weights.push_back(parse_number(w));
            c.steps = std::stoull(f[7]);
            c.selected = f[8].empty() ? -1 : std::stoi(f[8]);
            rows.push_back(std::move(c));
        } catch (const std::logic_error& e) {
            fail(e.what());
        }
    }
    if (!seen_columns) throw std::invalid_argument("run log has no column header");
    RunLog log(std::move(hd));
    for (auto& r : rows) log.append(std::move(r));
    if (!status.empty()) log.abort(status);
    return log;
}

}  // namespace aixi
