#ifndef AIXI_HARNESS_EXPERIMENTS_HPP
#define AIXI_HARNESS_EXPERIMENTS_HPP

#include <string>
#include <vector>

#include "aixi/core/rational.hpp"

namespace aixi {

// One measured quantity against its expected value.
struct Check {
    std::string metric;
    std::string measured;
    std::string expected;
    bool pass = false;
};

Check check_equal(const std::string& metric, const Rational& measured, const Rational& expected);
Check check_true(const std::string& metric, bool ok, const std::string& measured, const std::string& expected);

struct Report {
    std::string name;
    int criterion = 0;
    std::string title;
    std::vector<Check> checks;
    // informational lines, never asserted
    std::vector<std::string> notes;
    double seconds = 0;
    double time_limit = 0;

    bool checks_pass() const;
    bool within_time() const { return seconds < time_limit; }
    bool passed() const { return checks_pass() && within_time(); }
};

// Registered names in criterion order.
std::vector<std::string> experiment_names();

// Runs a named scenario and times it; throws std::invalid_argument for an
// unknown name.
Report run_experiment(const std::string& name);

// rows "criterion,experiment,metric,measured,expected,pass"
std::string report_csv(const Report& r);
std::string report_text(const Report& r);

}  // namespace aixi

#endif  // AIXI_HARNESS_EXPERIMENTS_HPP
