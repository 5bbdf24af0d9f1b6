#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "lcd4/gf4.hpp"
#include "lcd4/linear_code.hpp"

namespace lcd4 {

enum class SearchMode { exhaustive, first_hit };

struct SearchConfig {
    int n = 0;
    int k = 0;
    int d = 0;
    SearchMode mode = SearchMode::exhaustive;
    int parallel_width = 1;
    // Stop after this many visited nodes and report a resumable frontier;
    // 0 means unbounded.  Only meaningful with parallel_width == 1.
    uint64_t max_nodes = 0;
    // Stop once this many codes have been collected (0 = unlimited), again
    // with a resumable frontier.  Guards exhaustive runs at parameter points
    // whose full solution set is too large to hold.  parallel_width == 1 only.
    uint64_t max_found = 0;
};

// A legal row of the A-block: length n-k, weight >= d-1, leading nonzero
// symbol equal to 1.
struct RowCandidate {
    GF4Vector vector;

    bool operator==(const RowCandidate&) const = default;
};

struct SearchOutcome {
    std::vector<LinearCode> found;   // each (I_k | A), minimum weight >= d, Hermitian LCD
    uint64_t nodes_visited = 0;      // row placements examined at depths 2..k
    bool complete = false;           // whole tree traversed
    std::vector<int> frontier;       // resume point when stopped by max_nodes
};

// All legal rows in ascending lexicographic order (symbol order 0 < 1 < w < W,
// leftmost coordinate most significant).  The zero row is never included.
std::vector<RowCandidate> enumerate_rows(int n_minus_k, int d);

// The fixed opening row: n-k-d+1 zeros followed by d-1 ones.  Throws
// std::invalid_argument when n-k < d-1.
RowCandidate first_row(int n, int k, int d);

// True iff every nonzero combination lambda of the first m rows satisfies
// wt(lambda) + wt(lambda * R) >= d, i.e. the [n-k+m, m] code generated by
// (I_m | rows) has minimum weight at least d.
bool partial_min_weight_ok(const std::vector<RowCandidate>& rows, int m, int d);

// Depth-first construction of A row by row.  Row 1 is first_row; rows at
// depth i >= 2 run over candidates above (d >= 3) or not below (d <= 2) their
// predecessor; prefixes failing partial_min_weight_ok are pruned; at depth k
// a code is accepted iff it is Hermitian LCD (the weight condition is already
// guaranteed by the per-depth checks).  Exhaustive mode traverses everything;
// first_hit stops at the first acceptance.  Requires d >= 2.
SearchOutcome run_search(const SearchConfig& cfg);

// Continue an interrupted run from a saved frontier.  The frontier lists the
// candidate indices of the next node to examine, deepest last; its ancestors
// are re-validated, not re-counted.
SearchOutcome run_search(const SearchConfig& cfg, const std::vector<int>& frontier);

class CheckpointError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Checkpoint {
    int n = 0;
    int k = 0;
    int d = 0;
    std::vector<int> frontier;
};

// Checkpoint file: "lcd4-ckpt v1" header, then "n k d", then the frontier as
// space-separated indices on one line (empty line = completed search).
void write_checkpoint(const std::string& path, const SearchConfig& cfg,
                      const std::vector<int>& frontier);
Checkpoint read_checkpoint(const std::string& path);

}  // namespace lcd4
