#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace guechan {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct ValidationReport {
    std::vector<CheckResult> checks;
    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

// Full analytic-vs-MC validation at dimension n: Weingarten identities and
// Haar moments, SFF estimator agreement on a 64-point grid, channel and
// variance agreement, and the deterministic property suite. Bit-identical
// for identical (n, samples, seed).
ValidationReport run_validation(int n, long samples, std::uint64_t seed);

}  // namespace guechan
