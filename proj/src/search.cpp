#include "lcd4/search.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <sstream>
#include <thread>

#include "packed_gf4.hpp"

namespace lcd4 {
namespace {

using detail::Packed;
using detail::pack;
using detail::phermdot;
using detail::pscale;
using detail::pweight;
using detail::pxor;

void validate_config(const SearchConfig& cfg) {
    if (cfg.k < 2 || cfg.k >= cfg.n)
        throw std::invalid_argument("search: need 2 <= k < n");
    if (cfg.d < 2)
        throw std::invalid_argument("search: need d >= 2 (rows require a leading symbol)");
    if (cfg.n - cfg.k < cfg.d - 1)
        throw std::invalid_argument("search: condition on the opening row needs n-k >= d-1");
    if (cfg.n - cfg.k > 64)
        throw std::invalid_argument("search: n-k above the packed row limit of 64");
    if (cfg.parallel_width < 1)
        throw std::invalid_argument("search: parallel_width must be positive");
    if (cfg.parallel_width > 1 && (cfg.max_nodes > 0 || cfg.max_found > 0))
        throw std::invalid_argument("search: budgets require parallel_width == 1");
}

// Nonsingularity of G conj(G)^T for G = (I_k | A), i.e. of I_k + A conj(A)^T.
// Plain elimination over a k x k scratch of 2-bit symbols.
bool gram_nonsingular(const std::vector<Packed>& a_rows) {
    constexpr uint8_t MUL[16] = {0, 0, 0, 0, 0, 1, 2, 3, 0, 2, 3, 1, 0, 3, 1, 2};
    constexpr uint8_t INV[4] = {0, 1, 3, 2};
    int k = static_cast<int>(a_rows.size());
    std::vector<uint8_t> g(static_cast<size_t>(k) * static_cast<size_t>(k));
    for (int i = 0; i < k; ++i) {
        for (int j = 0; j < k; ++j) {
            uint8_t v = phermdot(a_rows[static_cast<size_t>(i)], a_rows[static_cast<size_t>(j)]).v;
            if (i == j) v ^= 1;
            g[static_cast<size_t>(i) * k + j] = v;
        }
    }
    for (int c = 0; c < k; ++c) {
        int pivot = -1;
        for (int r = c; r < k; ++r) {
            if (g[static_cast<size_t>(r) * k + c]) {
                pivot = r;
                break;
            }
        }
        if (pivot < 0) return false;
        if (pivot != c) {
            for (int j = c; j < k; ++j)
                std::swap(g[static_cast<size_t>(pivot) * k + j], g[static_cast<size_t>(c) * k + j]);
        }
        uint8_t piv_inv = INV[g[static_cast<size_t>(c) * k + c]];
        for (int r = c + 1; r < k; ++r) {
            uint8_t f = g[static_cast<size_t>(r) * k + c];
            if (!f) continue;
            uint8_t factor = MUL[f * 4 + piv_inv];
            for (int j = c; j < k; ++j)
                g[static_cast<size_t>(r) * k + j] ^=
                    MUL[factor * 4 + g[static_cast<size_t>(c) * k + j]];
        }
    }
    return true;
}

// Incremental bookkeeping behind the per-depth weight checks.  `table` holds
// one entry per combination lambda of the placed rows with coefficient weight
// 1 <= wt(lambda) <= d-2, storing that weight and the packed combination
// value.  A new row r is admissible iff for every table entry (and for the
// empty combination, which candidate filtering already covers)
//     wt(lambda) + 1 + wt(sum + c*r) >= d,
// which by scalar invariance only needs to be tested at c = 1.  Together
// with the checks made at shallower depths this certifies the full code's
// minimum weight >= d at depth k, so leaves only need the LCD test.
class ComboTable {
public:
    ComboTable(int d) : d_(d) {}

    bool row_ok(Packed r) const {
        int need = d_ - 1;
        for (const Entry& e : entries_)
            if (pweight(pxor(e.s, r)) < need - e.w) return false;
        return true;
    }

    void push_row(Packed r) {
        size_t before = entries_.size();
        Packed rw = pscale(GF4_OMEGA, r);
        Packed rW = pscale(GF4_OMEGA2, r);
        if (1 <= d_ - 2) {
            entries_.push_back({1, r});
            entries_.push_back({1, rw});
            entries_.push_back({1, rW});
        }
        for (size_t i = 0; i < before; ++i) {
            Entry e = entries_[i];
            if (e.w + 1 > d_ - 2) continue;
            entries_.push_back({e.w + 1, pxor(e.s, r)});
            entries_.push_back({e.w + 1, pxor(e.s, rw)});
            entries_.push_back({e.w + 1, pxor(e.s, rW)});
        }
        marks_.push_back(before);
    }

    void pop_row() {
        entries_.resize(marks_.back());
        marks_.pop_back();
    }

private:
    struct Entry {
        int w;
        Packed s;
    };
    int d_;
    std::vector<Entry> entries_;
    std::vector<size_t> marks_;
};

struct Prepared {
    std::vector<RowCandidate> cands;
    std::vector<Packed> packed;
    int step = 1;        // index gap to the previous row: 1 when rows must
                         // strictly increase (d >= 3), 0 when ties are legal
    int root_lo = 0;     // first candidate index for the second row
};

Prepared prepare(const SearchConfig& cfg) {
    Prepared p;
    p.cands = enumerate_rows(cfg.n - cfg.k, cfg.d);
    RowCandidate r1 = first_row(cfg.n, cfg.k, cfg.d);
    if (p.cands.empty() || !(p.cands.front() == r1))
        throw std::logic_error("search: opening row is not the smallest candidate");
    p.packed.reserve(p.cands.size());
    for (const RowCandidate& c : p.cands) p.packed.push_back(pack(c.vector));
    p.step = cfg.d >= 3 ? 1 : 0;
    p.root_lo = p.step;
    return p;
}

LinearCode assemble(const SearchConfig& cfg, const Prepared& p,
                    const std::vector<int>& row_indices) {
    GF4Matrix a(cfg.k, cfg.n - cfg.k);
    a.set_row(0, p.cands.front().vector);
    for (size_t t = 0; t < row_indices.size(); ++t)
        a.set_row(static_cast<int>(t) + 1,
                  p.cands[static_cast<size_t>(row_indices[t])].vector);
    return LinearCode::from_generator(hstack(GF4Matrix::identity(cfg.k), a));
}

struct BranchResult {
    std::vector<LinearCode> found;
    uint64_t nodes = 0;
    bool complete = false;       // subtree fully traversed
    std::vector<int> frontier;   // only from budgeted single-branch runs
};

// Sequential DFS over root cursor range [root_lo, root_hi).  The path holds
// candidate indices for rows 2..m; the deepest entry is the node about to be
// examined, its ancestors are placed rows.  `abort_below` (first-hit mode,
// parallel) cuts the branch when a lower-numbered branch has already hit.
BranchResult run_range(const SearchConfig& cfg, const Prepared& p, int root_lo,
                       int root_hi, std::vector<int> start,
                       const std::atomic<int>* abort_below = nullptr,
                       int branch_id = 0) {
    BranchResult out;
    int csize = static_cast<int>(p.cands.size());
    int leaf_pos = cfg.k - 2;  // path position of the final row

    ComboTable table(cfg.d);
    table.push_row(p.packed[0]);
    std::vector<int> path = std::move(start);
    std::vector<Packed> placed{p.packed[0]};  // row 1 + path ancestors

    // Rebuild and re-validate the placed prefix when resuming mid-tree.
    for (size_t t = 0; t + 1 < path.size(); ++t) {
        int c = path[t];
        int lo = t == 0 ? root_lo : path[t - 1] + p.step;
        if (c < lo || c >= csize || static_cast<int>(t) >= leaf_pos)
            throw CheckpointError("checkpoint: frontier is not a search prefix");
        if (!table.row_ok(p.packed[static_cast<size_t>(c)]))
            throw CheckpointError("checkpoint: frontier fails the weight checks");
        table.push_row(p.packed[static_cast<size_t>(c)]);
        placed.push_back(p.packed[static_cast<size_t>(c)]);
    }
    if (!path.empty()) {
        int lo = path.size() == 1 ? root_lo : path[path.size() - 2] + p.step;
        if (path.back() < lo || path.back() > csize)
            throw CheckpointError("checkpoint: frontier cursor out of range");
    }

    while (!path.empty()) {
        int c = path.back();
        int limit = path.size() == 1 ? root_hi : csize;
        if (c >= limit) {
            path.pop_back();
            if (path.empty()) break;
            table.pop_row();
            placed.pop_back();
            ++path.back();
            continue;
        }
        if (abort_below && abort_below->load(std::memory_order_relaxed) < branch_id)
            return out;  // a lower branch already holds the first hit
        if (cfg.max_nodes > 0 && out.nodes == cfg.max_nodes) {
            out.frontier = path;
            return out;
        }
        ++out.nodes;

        Packed row = p.packed[static_cast<size_t>(c)];
        if (table.row_ok(row)) {
            if (static_cast<int>(path.size()) - 1 == leaf_pos) {
                placed.push_back(row);
                bool lcd = gram_nonsingular(placed);
                placed.pop_back();
                if (lcd) {
                    out.found.push_back(assemble(cfg, p, path));
                    bool budget_hit =
                        cfg.max_found > 0 && out.found.size() >= cfg.max_found;
                    if (cfg.mode == SearchMode::first_hit || budget_hit) {
                        ++path.back();
                        out.frontier = path;
                        return out;
                    }
                }
                ++path.back();
            } else {
                table.push_row(row);
                placed.push_back(row);
                path.push_back(c + p.step);
            }
        } else {
            ++path.back();
        }
    }
    out.complete = true;
    return out;
}

SearchOutcome run_parallel(const SearchConfig& cfg, const Prepared& p) {
    int csize = static_cast<int>(p.cands.size());
    std::vector<int> roots;
    for (int c = p.root_lo; c < csize; ++c) roots.push_back(c);

    std::vector<BranchResult> results(roots.size());
    std::atomic<size_t> next{0};
    std::atomic<int> best_branch{csize};  // lowest branch with a hit (first_hit)
    bool cancel = cfg.mode == SearchMode::first_hit;

    auto worker = [&]() {
        for (;;) {
            size_t b = next.fetch_add(1);
            if (b >= roots.size()) return;
            int root = roots[b];
            if (cancel && best_branch.load() < root) continue;
            BranchResult r = run_range(cfg, p, root, root + 1, {root},
                                       cancel ? &best_branch : nullptr, root);
            if (cancel && !r.found.empty()) {
                int seen = best_branch.load();
                while (root < seen && !best_branch.compare_exchange_weak(seen, root)) {
                }
            }
            results[b] = std::move(r);
        }
    };

    int width = std::min<int>(cfg.parallel_width, static_cast<int>(roots.size()));
    std::vector<std::thread> threads;
    threads.reserve(static_cast<size_t>(width));
    for (int t = 0; t < width; ++t) threads.emplace_back(worker);
    for (std::thread& t : threads) t.join();

    SearchOutcome out;
    out.complete = true;
    for (size_t b = 0; b < roots.size(); ++b) {
        out.nodes_visited += results[b].nodes;
        if (cfg.mode == SearchMode::first_hit) {
            if (!results[b].found.empty() && out.found.empty()) {
                out.found.push_back(std::move(results[b].found.front()));
                out.complete = false;  // traversal stopped at the hit
            }
        } else {
            for (LinearCode& c : results[b].found) out.found.push_back(std::move(c));
            out.complete = out.complete && results[b].complete;
        }
    }
    return out;
}

}  // namespace

std::vector<RowCandidate> enumerate_rows(int n_minus_k, int d) {
    if (n_minus_k < 1 || n_minus_k > 64)
        throw std::invalid_argument("search: row length out of range");
    if (d < 1) throw std::invalid_argument("search: d must be positive");

    std::vector<RowCandidate> out;
    std::vector<uint8_t> v(static_cast<size_t>(n_minus_k), 0);
    for (;;) {
        int w = 0;
        uint8_t lead = 0;
        for (uint8_t s : v) {
            if (s) {
                ++w;
                if (!lead) lead = s;
            }
        }
        if (lead == 1 && w >= d - 1) {
            GF4Vector row(v.size());
            for (size_t i = 0; i < v.size(); ++i) row[i] = GF4Scalar(v[i]);
            out.push_back({std::move(row)});
        }
        // Odometer step in lexicographic order, rightmost coordinate fastest.
        int i = n_minus_k - 1;
        while (i >= 0 && v[static_cast<size_t>(i)] == 3) v[static_cast<size_t>(i--)] = 0;
        if (i < 0) break;
        ++v[static_cast<size_t>(i)];
    }
    return out;
}

RowCandidate first_row(int n, int k, int d) {
    if (n - k < d - 1)
        throw std::invalid_argument("search: no opening row for these parameters");
    GF4Vector v(static_cast<size_t>(n - k), GF4_ZERO);
    for (int i = n - k - d + 1; i < n - k; ++i) v[static_cast<size_t>(i)] = GF4_ONE;
    return {std::move(v)};
}

bool partial_min_weight_ok(const std::vector<RowCandidate>& rows, int m, int d) {
    if (m < 2 || m > static_cast<int>(rows.size()))
        throw std::invalid_argument("search: need 2 <= m <= rows");
    ComboTable table(d);
    for (int t = 0; t < m; ++t) {
        Packed r = pack(rows[static_cast<size_t>(t)].vector);
        // The empty combination: the new row alone must carry weight d-1
        // beyond its identity coordinate.
        if (1 + pweight(r) < d) return false;
        if (!table.row_ok(r)) return false;
        table.push_row(r);
    }
    return true;
}

SearchOutcome run_search(const SearchConfig& cfg) {
    validate_config(cfg);
    Prepared p = prepare(cfg);
    if (cfg.parallel_width > 1) return run_parallel(cfg, p);

    BranchResult r = run_range(cfg, p, p.root_lo, static_cast<int>(p.cands.size()),
                               {p.root_lo});
    SearchOutcome out;
    out.found = std::move(r.found);
    out.nodes_visited = r.nodes;
    out.complete = r.complete;
    out.frontier = std::move(r.frontier);
    return out;
}

SearchOutcome run_search(const SearchConfig& cfg, const std::vector<int>& frontier) {
    validate_config(cfg);
    if (cfg.parallel_width > 1)
        throw std::invalid_argument("search: resume requires parallel_width == 1");
    if (frontier.empty()) {
        SearchOutcome out;
        out.complete = true;
        return out;
    }
    Prepared p = prepare(cfg);
    if (static_cast<int>(frontier.size()) > cfg.k - 1)
        throw CheckpointError("checkpoint: frontier deeper than the search tree");

    BranchResult r = run_range(cfg, p, p.root_lo, static_cast<int>(p.cands.size()),
                               frontier);
    SearchOutcome out;
    out.found = std::move(r.found);
    out.nodes_visited = r.nodes;
    out.complete = r.complete;
    out.frontier = std::move(r.frontier);
    return out;
}

void write_checkpoint(const std::string& path, const SearchConfig& cfg,
                      const std::vector<int>& frontier) {
    std::ofstream out(path, std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
    out << "lcd4-ckpt v1\n" << cfg.n << ' ' << cfg.k << ' ' << cfg.d << '\n';
    for (size_t i = 0; i < frontier.size(); ++i) {
        if (i) out << ' ';
        out << frontier[i];
    }
    out << '\n';
    if (!out) throw std::runtime_error("failed writing checkpoint '" + path + "'");
}

Checkpoint read_checkpoint(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw CheckpointError("cannot open checkpoint '" + path + "'");
    std::string magic;
    if (!std::getline(in, magic) || magic != "lcd4-ckpt v1")
        throw CheckpointError("checkpoint: bad header");
    Checkpoint ck;
    std::string line;
    if (!std::getline(in, line))
        throw CheckpointError("checkpoint: missing parameter line");
    {
        std::istringstream ps(line);
        if (!(ps >> ck.n >> ck.k >> ck.d))
            throw CheckpointError("checkpoint: bad parameter line");
        std::string rest;
        if (ps >> rest) throw CheckpointError("checkpoint: bad parameter line");
    }
    if (std::getline(in, line)) {
        std::istringstream fs(line);
        int idx;
        while (fs >> idx) {
            if (idx < 0) throw CheckpointError("checkpoint: negative index");
            ck.frontier.push_back(idx);
        }
        if (!fs.eof()) throw CheckpointError("checkpoint: bad frontier line");
    }
    while (std::getline(in, line)) {
        if (line.find_first_not_of(" \t\r") != std::string::npos)
            throw CheckpointError("checkpoint: trailing content");
    }
    return ck;
}

}  // namespace lcd4
