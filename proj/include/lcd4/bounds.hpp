#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lcd4/linear_code.hpp"

namespace lcd4 {

// Hamming bound for quaternary codes:
//   sum_{j <= floor((d-1)/2)} C(n,j) 3^j <= 4^(n-k).
// Exact in 128-bit arithmetic; lengths above 63 are out of range.
bool sphere_packing_ok(int n, int k, int d);

// Largest minimum weight of a Hermitian LCD [n, k] code for the three
// highest dimensions, as closed forms:
//   k = n-1: 1 for even n, 2 for odd n          (n >= 2)
//   k = n-2: 3 for n = 3, else 2                (n >= 3)
//   k = n-3: 3 for 4 <= n <= 18, else 2         (n >= 4)
int d4_dimension_n_minus_1(int n);
int d4_dimension_n_minus_2(int n);
int d4_dimension_n_minus_3(int n);

// The [n, n-i, 2] witness with every A-row equal to (1 1 0 ... 0): its rows
// pair to zero under the Hermitian product, so G conj(G)^T = I exactly and
// the code is LCD by inspection.  Requires 2 <= i < n.
LinearCode build_weight2_lcd(int n, int i);

// A bound on d4(n,k) or dQ(n,k) with its provenance.  Sources: "recorded"
// (quoted from earlier published tables), "search" (pinned by the exhaustive
// nonexistence runs in this repo), "closed-form", "sphere-packing".
struct BoundRecord {
    std::string kind;  // "d4" or "dQ"
    int n = 0;
    int k = 0;
    std::optional<int> lower;
    std::string witness;  // certificate name or construction note
    std::optional<int> upper;
    std::string source;
};

// The static bound table: recorded upper bounds and two-valued ranges for
// the parameter pairs this repo settles or narrows, plus the recorded small
// cases the closed forms lean on.
const std::vector<BoundRecord>& recorded_upper_bounds();

// Records matching one parameter pair (possibly empty).
std::vector<BoundRecord> bounds_for(int n, int k);

}  // namespace lcd4
