#include "gblab/report.hpp"

#include <cmath>
#include <limits>
#include <ostream>

#include "gblab/version.hpp"

namespace gblab::cli {

Report::Report(std::string command, nlohmann::ordered_json config_echo)
    : command_(std::move(command)), config_echo_(std::move(config_echo)) {}

void Report::add_residual(const std::string& name, double measured, double tolerance,
                          double wall_time_s, const std::string& note) {
    checks_.push_back({name, measured, tolerance,
                       std::isfinite(measured) && measured <= tolerance, wall_time_s, note});
}

void Report::add_at_least(const std::string& name, double measured, double bound,
                          double wall_time_s, const std::string& note) {
    std::string full_note = note.empty() ? "passes when measured >= bound"
                                         : note + "; passes when measured >= bound";
    checks_.push_back({name, measured, bound, std::isfinite(measured) && measured >= bound,
                       wall_time_s, full_note});
}

void Report::add_info(const std::string& name, double value, const std::string& note) {
    checks_.push_back({name, value, std::numeric_limits<double>::infinity(), true, 0.0,
                       note.empty() ? "informational" : note + "; informational"});
}

void Report::add_failure(const std::string& name, const std::string& why) {
    checks_.push_back({name, std::numeric_limits<double>::quiet_NaN(), 0.0, false, 0.0, why});
}

void Report::add_warning(const std::string& message) { warnings_.push_back(message); }

void Report::attach(const std::string& key, nlohmann::ordered_json payload) {
    attachments_[key] = std::move(payload);
}

bool Report::overall_pass() const {
    for (const Check& c : checks_) {
        if (!c.pass) return false;
    }
    return true;
}

nlohmann::ordered_json Report::to_json() const {
    nlohmann::ordered_json j;
    j["artifact"] = "gblab";
    j["version"] = GBLAB_VERSION;
    j["command"] = command_;
    j["overall_pass"] = overall_pass();
    j["checks"] = nlohmann::ordered_json::array();
    for (const Check& c : checks_) {
        nlohmann::ordered_json cj;
        cj["name"] = c.name;
        cj["measured"] = c.measured;
        cj["tolerance"] = c.tolerance;
        cj["pass"] = c.pass;
        cj["wall_time_s"] = c.wall_time_s;
        if (!c.note.empty()) cj["note"] = c.note;
        j["checks"].push_back(std::move(cj));
    }
    if (!warnings_.empty()) j["warnings"] = warnings_;
    if (!attachments_.empty()) j["details"] = attachments_;
    j["config"] = config_echo_;
    return j;
}

void Report::print(std::ostream& os) const {
    for (const Check& c : checks_) {
        os << (c.pass ? "[PASS] " : "[FAIL] ") << command_ << ": " << c.name
           << "  measured=" << c.measured << "  tolerance=" << c.tolerance;
        if (c.wall_time_s > 0.0) os << "  (" << c.wall_time_s << " s)";
        if (!c.note.empty()) os << "  -- " << c.note;
        os << '\n';
    }
    for (const std::string& w : warnings_) {
        os << "[WARN] " << command_ << ": " << w << '\n';
    }
    os << (overall_pass() ? "[PASS]" : "[FAIL]") << " " << command_ << ": overall" << '\n';
}

}  // namespace gblab::cli
