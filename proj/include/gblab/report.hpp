#ifndef GBLAB_REPORT_HPP
#define GBLAB_REPORT_HPP

#include <chrono>
#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

namespace gblab::cli {

struct Check {
    std::string name;
    double measured = 0.0;
    double tolerance = 0.0;
    bool pass = false;
    double wall_time_s = 0.0;
    std::string note;
};

// Machine-readable run report: every executed check appears exactly once and
// the overall verdict is their conjunction. Deterministic for a fixed config
// up to the wall-time fields.
class Report {
public:
    Report(std::string command, nlohmann::ordered_json config_echo);

    // residual-style check: passes when measured <= tolerance
    void add_residual(const std::string& name, double measured, double tolerance,
                      double wall_time_s = 0.0, const std::string& note = {});
    // threshold-style check: passes when measured >= bound (e.g. convergence factors)
    void add_at_least(const std::string& name, double measured, double bound,
                      double wall_time_s = 0.0, const std::string& note = {});
    void add_info(const std::string& name, double value, const std::string& note = {});
    void add_failure(const std::string& name, const std::string& why);
    void add_warning(const std::string& message);
    void attach(const std::string& key, nlohmann::ordered_json payload);

    bool overall_pass() const;
    const std::vector<Check>& checks() const { return checks_; }
    const std::vector<std::string>& warnings() const { return warnings_; }

    nlohmann::ordered_json to_json() const;
    void print(std::ostream& os) const;

private:
    std::string command_;
    nlohmann::ordered_json config_echo_;
    std::vector<Check> checks_;
    std::vector<std::string> warnings_;
    nlohmann::ordered_json attachments_;
};

// Wall-clock helper for per-check timing.
class Stopwatch {
public:
    Stopwatch() : start_(std::chrono::steady_clock::now()) {}
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }
    double lap() {
        const double s = seconds();
        start_ = std::chrono::steady_clock::now();
        return s;
    }

private:
    std::chrono::steady_clock::time_point start_;
};

}  // namespace gblab::cli

#endif
