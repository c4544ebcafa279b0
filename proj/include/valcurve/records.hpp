#ifndef VALCURVE_RECORDS_HPP
#define VALCURVE_RECORDS_HPP

#include <algorithm>
#include <cstddef>
#include <sstream>
#include <string>
#include <vector>

namespace valcurve {

// One suite case result. The machine-readable line carries no timing so
// that identical configurations produce byte-identical output.
struct VerdictRecord {
    std::string suite;
    std::string case_id;
    std::string expected;
    std::string observed;
    bool pass = false;
    bool precision_failure = false;
    double ms = 0.0;

    static std::string sanitize(std::string s) {
        std::replace(s.begin(), s.end(), ' ', '_');
        std::replace(s.begin(), s.end(), '\n', '_');
        return s;
    }

    std::string record_line() const {
        std::ostringstream os;
        os << "suite=" << sanitize(suite) << " case=" << sanitize(case_id)
           << " expected=" << sanitize(expected) << " observed=" << sanitize(observed)
           << " pass=" << (pass ? "true" : "false");
        return os.str();
    }

    std::string human_line() const {
        std::ostringstream os;
        os << (pass ? "  ok  " : "FAIL  ") << suite << "/" << case_id;
        if (!pass) os << "  expected: " << expected << "  observed: " << observed;
        os << "  [" << ms << " ms]";
        return os.str();
    }
};

struct RunSummary {
    std::size_t total = 0;
    std::size_t passed = 0;
    std::size_t failed = 0;
    std::size_t precision_failures = 0;
};

inline RunSummary summarize(const std::vector<VerdictRecord>& records) {
    RunSummary s;
    s.total = records.size();
    for (const VerdictRecord& r : records) {
        if (r.pass)
            ++s.passed;
        else
            ++s.failed;
        if (r.precision_failure) ++s.precision_failures;
    }
    return s;
}

}  // namespace valcurve

#endif
