/** \file    report.hpp
    \brief   Outcome of a single check and the bundle of checks produced by one run
*/
#pragma once
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace haantjes {

/** Result of one check.  residual is the max over samples of the normalized residual; pass means
    residual < threshold plus any extra condition of the check.  An expected-fail check is satisfied
    when the underlying check fails without an error; informational checks never affect the bundle. */
struct Check {
    std::string claim;
    std::string kind;
    bool pass = false;
    bool error = false;            ///< hard failure: exception or sample failures beyond the 1% budget
    bool expect_fail = false;
    bool informational = false;
    double residual = 0;
    double threshold = 0;
    std::size_t samples = 0;
    std::size_t failed_samples = 0;
    std::vector<std::string> notes;
    std::vector<std::pair<std::string, double>> values;

    bool satisfied() const { return informational || (!error && pass != expect_fail); }
    void note(std::string s) { notes.push_back(std::move(s)); }
    void set(const std::string& name, double v);
    /// value by name; NaN if absent
    double get(const std::string& name) const;
};

struct VerificationReport {
    std::string tool_version;
    std::string command;
    std::string system;
    std::uint64_t seed = 42;
    std::size_t samples = 100;
    double tol = 1e-8;
    std::vector<Check> claims;
    double wall_time = 0;

    bool pass() const;
};

const char* tool_version();

}  // namespace haantjes
