#include "aixi/harness/experiments.hpp"

#include <chrono>
#include <functional>
#include <iomanip>
#include <sstream>
#include <stdexcept>

#include "scenarios.hpp"

namespace aixi {

namespace {

struct Entry {
    const char* name;
    int criterion;
    const char* title;
    double limit;
    void (*fn)(Report&);
};

// time limits in seconds, per acceptance criterion
const Entry registry[] = {
    {"greedy-fm-fails", 1, "greedy FM locks in after f(0)=2", 1, scenarios::greedy_fm_fails},
    {"fmf-explores", 2, "FMF AI-mu explores and beats greedy", 10, scenarios::fmf_explores},
    {"sp-identity", 3, "SP reduction and C + E = m", 30, scenarios::sp_identity},
    {"heavenhell", 4, "heaven/hell credits", 1, scenarios::heavenhell},
    {"needle", 5, "needle class worst case", 1, scenarios::needle},
    {"sg-minimax", 6, "strategic games reduce to minimax", 60, scenarios::sg_minimax},
    {"episodes", 7, "factorizable environments", 10, scenarios::episodes},
    {"convergence", 8, "mu-expected squared distance bound", 60, scenarios::convergence},
    {"sp-bound", 9, "SP error bounds", 300, scenarios::sp_bound},
    {"bestvote-dominates", 10, "best-vote validity and dominance", 300, scenarios::bestvote_dominates},
    {"delayed-switch", 11, "delayed-switch optimum", 120, scenarios::delayed_switch},
    {"ex-speedup", 12, "examples speed up relation learning", 120, scenarios::ex_speedup},
    {"conversion", 13, "enumerable function to chronological semimeasure", 30, scenarios::conversion},
};

std::string csv_field(const std::string& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
    return out + "\"";
}

}  // namespace

Check check_equal(const std::string& metric, const Rational& measured, const Rational& expected)
{
    return {metric, to_string(measured), to_string(expected), measured == expected};
}

Check check_true(const std::string& metric, bool ok, const std::string& measured, const std::string& expected)
{
    return {metric, measured, expected, ok};
}

bool Report::checks_pass() const
{
    if (checks.empty()) return false;
    for (const auto& c : checks)
        if (!c.pass) return false;
    return true;
}

std::vector<std::string> experiment_names()
{
    std::vector<std::string> out;
    for (const auto& e : registry) out.emplace_back(e.name);
    return out;
}

Report run_experiment(const std::string& name)
{
    for (const auto& e : registry) {
        if (name != e.name) continue;
        Report r;
        r.name = e.name;
        r.criterion = e.criterion;
        r.title = e.title;
        r.time_limit = e.limit;
        auto t0 = std::chrono::steady_clock::now();
        e.fn(r);
        r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        return r;
    }
    throw std::invalid_argument("unknown experiment '" + name + "'");
}

std::string report_csv(const Report& r)
{
    std::ostringstream out;
    out << "criterion,experiment,metric,measured,expected,pass\n";
    for (const auto& c : r.checks)
        out << r.criterion << ',' << r.name << ',' << csv_field(c.metric) << ',' << csv_field(c.measured) << ','
            << csv_field(c.expected) << ',' << (c.pass ? "pass" : "fail") << "\n";
    std::ostringstream t;
    t << std::fixed << std::setprecision(3) << r.seconds;
    std::ostringstream lim;
    lim << "< " << r.time_limit;
    out << r.criterion << ',' << r.name << ",seconds," << t.str() << ',' << csv_field(lim.str()) << ','
        << (r.within_time() ? "pass" : "fail") << "\n";
    return out.str();
}

std::string report_text(const Report& r)
{
    std::ostringstream out;
    out << "[" << (r.passed() ? "PASS" : "FAIL") << "] " << r.criterion << " " << r.name << ": " << r.title << " ("
        << std::fixed << std::setprecision(2) << r.seconds << " s, limit " << std::setprecision(0) << r.time_limit
        << " s)\n";
    for (const auto& c : r.checks)
        out << "    " << (c.pass ? "ok  " : "FAIL") << " " << c.metric << ": " << c.measured << " (expected " << c.expected
            << ")\n";
    for (const auto& n : r.notes) out << "    note " << n << "\n";
    return out.str();
}

}  // namespace aixi
