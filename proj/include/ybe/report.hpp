#pragma once

#include <string>
#include <vector>

#include "json.hpp"

namespace ybe {

// machine-readable verification record; exit status 0 iff all checks pass,
// inconclusive entries only come from the numeric probe
struct CheckRecord {
    std::string name;
    enum Status { pass, fail, inconclusive } status = pass;
    std::string residual;   // short summary of the residual / witness
    long long wall_ms = 0;
};

struct VerificationReport {
    std::string suite;
    unsigned long long seed = 0;
    std::vector<CheckRecord> checks;

    bool all_pass() const;
    int exit_code() const { return all_pass() ? 0 : 1; }
    nlohmann::ordered_json to_json() const;
    std::string to_text() const;
    void merge(const VerificationReport& other);
};

// helper used by every suite
void add_check(VerificationReport& r, const std::string& name, bool ok,
               const std::string& residual = "", long long wall_ms = 0);

} // namespace ybe
