#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lcd4/linear_code.hpp"

namespace lcd4::catalog {

// How a named code is produced: as (I_k | M) from an embedded matrix block,
// or by shortening/puncturing another catalog entry at a 1-based coordinate.
enum class Construction { explicit_matrix, shorten_of, puncture_of };

// A named code with everything the verifier must reproduce: dimensions,
// minimum weight, LCD status, and (where one is on record) the full weight
// enumerator.
struct Certificate {
    std::string name;
    Construction how = Construction::explicit_matrix;
    GF4Matrix block;         // A-part for explicit entries
    std::string base;        // source entry for derived ones
    int coordinate = 0;      // 1-based, for derived entries

    int n = 0;
    int k = 0;
    int d = 0;
    bool lcd = true;
    std::optional<WeightEnumerator> enumerator;
};

struct VerificationReport {
    std::string name;
    int n = 0;
    int k = 0;
    int d = 0;    // measured values
    bool lcd = false;
    std::optional<bool> enumerator_ok;  // empty when no enumerator is on record
    bool pass = false;
};

// All 18 entries: C14, C15, C17_1, C17_2, C19, C20, D12, D20, E9..E18.
const std::vector<Certificate>& certificates();
const Certificate& certificate(const std::string& name);  // throws std::invalid_argument

LinearCode build(const std::string& name);

// Recompute parameters, LCD status and enumerator for `code` and compare
// them against the certificate's expectations.  Mismatches land in the
// report; nothing throws.
VerificationReport verify_code_against(const Certificate& cert, const LinearCode& code);

VerificationReport verify(const std::string& name);
std::vector<VerificationReport> verify_all();

}  // namespace lcd4::catalog
