#ifndef AIXI_METRICS_RUNLOG_HPP
#define AIXI_METRICS_RUNLOG_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "aixi/core/history.hpp"

namespace aixi {

enum class Arith { Exact, Float };

Arith parse_arith(const std::string& text);
std::string to_string(Arith a);

struct CycleRecord {
    int k = 0;
    Action action = 0;
    Percept percept;
    Rational credit;
    std::optional<Rational> value;
    std::vector<Rational> weights;
    std::uint64_t steps = 0;
    // pool index picked by a best-vote agent, -1 otherwise
    int selected = -1;

    friend bool operator==(const CycleRecord&, const CycleRecord&) = default;
};

struct RunLogHeader {
    std::string env;
    std::uint64_t env_hash = 0;
    std::string agent;
    std::uint64_t seed = 0;
    std::string rng;
    int lifetime = 0;
    std::string horizon;
    Arith arith = Arith::Exact;

    friend bool operator==(const RunLogHeader&, const RunLogHeader&) = default;
};

// Per-cycle record of one run. Append-only.
class RunLog {
public:
    RunLog() = default;
    explicit RunLog(RunLogHeader header) : header_(std::move(header)) {}

    const RunLogHeader& header() const { return header_; }
    const std::vector<CycleRecord>& cycles() const { return cycles_; }
    std::size_t size() const { return cycles_.size(); }

    void append(CycleRecord r);

    // empty when the run completed, otherwise the reason it stopped
    const std::string& status() const { return status_; }
    void abort(std::string reason) { status_ = std::move(reason); }

    History history() const;
    Rational total_credit() const;

    friend bool operator==(const RunLog&, const RunLog&) = default;

private:
    RunLogHeader header_;
    std::vector<CycleRecord> cycles_;
    std::string status_;
};

std::uint64_t fnv1a(std::string_view text);

// CSV with '#' header lines and the columns
//   k,action,credit_index,credit,obs,value,weights,steps,selected
// weights are ';' separated; in float mode numbers are written as decimals.
std::string write_csv(const RunLog& log);
RunLog read_csv(const std::string& text);

}  // namespace aixi

#endif  // AIXI_METRICS_RUNLOG_HPP
