#pragma once

#include <string>
#include <vector>

#include "gyro/gyrogroup.hpp"

namespace gyro::catalog {

// An embedded copy of one printed table, validated at registry construction.
struct CatalogEntry {
    std::string key;
    GyroGroup group;
    std::string provenance;          // table citation
    std::vector<std::string> errata; // known print inconsistencies
    bool valid = true;               // false only for erratum-tolerant entries

    bool erratum_tolerant() const { return !errata.empty() && !valid; }
};

// Lookup by key; lookup_error listing available keys if unknown.
const CatalogEntry& get(const std::string& key);

const std::vector<CatalogEntry>& entries();
std::vector<std::string> keys();

// The 16-element 2-gyro-group G(4), embedded with row 1 corrected to the
// additive pattern (flagged in the entry's errata).
const GyroGroup& g4();

// Order-2n gyro-group on pairs (a,i): (a,0)+(b,j) = (a+b, j) and
// (a,1)+(b,j) = (a + (-b), 1-j).  Requires gyro-commutativity and the skew
// left loop property; throws structure_error naming the failed property.
// The result is validated before being returned.
GyroGroup dihedralize(const GyroGroup& g);

}  // namespace gyro::catalog
