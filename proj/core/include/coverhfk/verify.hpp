#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace coverhfk::verify {

struct Options {
    std::int64_t max_p = 99;
    int m = 2;
    int jobs = 1;
};

struct Report {
    std::int64_t knots = 0;
    std::map<std::string, std::int64_t> checks;  // check name -> times run
    std::vector<std::string> failures;
    bool ok() const { return failures.empty(); }
};

/// Full invariant sweep over all normalized K(p, q), p odd <= max_p,
/// 0 < q < p coprime. Deterministic across jobs counts.
Report run_verification(const Options& opt);

std::string render(const Report& r);

}  // namespace coverhfk::verify
