#include "ybe/report.hpp"

#include <sstream>

namespace ybe {

bool VerificationReport::all_pass() const {
    for (const auto& c : checks)
        if (c.status == CheckRecord::fail) return false;
    return true;
}

nlohmann::ordered_json VerificationReport::to_json() const {
    nlohmann::ordered_json j;
    j["suite"] = suite;
    j["seed"] = seed;
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& c : checks) {
        nlohmann::ordered_json cj;
        cj["name"] = c.name;
        cj["status"] = c.status == CheckRecord::pass
                           ? "pass"
                           : (c.status == CheckRecord::fail ? "fail" : "inconclusive");
        cj["residual"] = c.residual;
        cj["wall_ms"] = c.wall_ms;
        arr.push_back(cj);
    }
    j["checks"] = arr;
    j["ok"] = all_pass();
    return j;
}

std::string VerificationReport::to_text() const {
    std::ostringstream os;
    os << "suite: " << suite << " (seed " << seed << ")\n";
    for (const auto& c : checks) {
        const char* st = c.status == CheckRecord::pass
                             ? "PASS"
                             : (c.status == CheckRecord::fail ? "FAIL" : "INCONCLUSIVE");
        os << "  [" << st << "] " << c.name;
        if (!c.residual.empty()) os << "  (" << c.residual << ")";
        os << "\n";
    }
    os << (all_pass() ? "all checks passed" : "FAILURES present") << "\n";
    return os.str();
}

void VerificationReport::merge(const VerificationReport& other) {
    for (const auto& c : other.checks) checks.push_back(c);
}

void add_check(VerificationReport& r, const std::string& name, bool ok,
               const std::string& residual, long long wall_ms) {
    CheckRecord c;
    c.name = name;
    c.status = ok ? CheckRecord::pass : CheckRecord::fail;
    c.residual = residual;
    c.wall_ms = wall_ms;
    r.checks.push_back(std::move(c));
}

} // namespace ybe
