#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gyro {

struct ClaimResult {
    int id = 0;
    std::string title;
    bool passed = false;
    std::string detail;  // filled on failure
};

// Runs every desk-scale claim the library reproduces, one result per claim.
std::vector<ClaimResult> run_all_claims();

// Pretty pass/fail table; returns true iff all claims passed.
bool print_claim_table(const std::vector<ClaimResult>& results, std::ostream& out);

}  // namespace gyro
