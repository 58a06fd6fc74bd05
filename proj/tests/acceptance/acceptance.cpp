#include <chrono>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "aixi/harness/experiments.hpp"

// One PASS/FAIL line per criterion followed by its measured values; the
// whole registry must also finish within ten minutes.
int main()
{
    const auto t0 = std::chrono::steady_clock::now();
    int failed = 0;
    std::string summary;
    for (const auto& name : aixi::experiment_names()) {
        aixi::Report r;
        try {
            r = aixi::run_experiment(name);
        } catch (const std::exception& e) {
            r.name = name;
            r.checks.push_back({"completed", std::string("exception: ") + e.what(), "no exception", false});
        }
        std::cout << aixi::report_text(r) << std::flush;
        if (!r.passed()) ++failed;
        std::ostringstream line;
        line << (r.passed() ? "PASS" : "FAIL") << "  criterion " << std::setw(2) << r.criterion << "  " << r.name
             << "\n";
        summary += line.str();
    }
    const double total = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool in_time = total < 600;
    if (!in_time) ++failed;
    std::cout << "\n" << summary;
    std::cout << (in_time ? "PASS" : "FAIL") << "  registry total " << std::fixed << std::setprecision(1) << total
              << " s (limit 600 s)\n";
    std::cout << failed << " failed\n";
    return failed == 0 ? 0 : 1;
}
