#include "lcd4/linear_code.hpp"

#include <algorithm>
#include <array>
#include <climits>
#include <sstream>

#include "packed_gf4.hpp"

namespace lcd4 {
namespace {

using detail::Packed;
using detail::pack;
using detail::pscale;
using detail::pweight;
using detail::pxor;

// One packed generator row with its three nonzero scalar multiples, so the
// enumeration recursion below never rescales inside the hot path.
using ScaledRow = std::array<Packed, 3>;

std::vector<ScaledRow> packed_rows(const GF4Matrix& g) {
    std::vector<ScaledRow> rows(static_cast<size_t>(g.rows()));
    for (int r = 0; r < g.rows(); ++r) {
        Packed p = pack(g.row(r));
        rows[static_cast<size_t>(r)] = {p, pscale(GF4_OMEGA, p), pscale(GF4_OMEGA2, p)};
    }
    return rows;
}

// Projective enumeration: walk combinations whose first nonzero coefficient
// is 1 and count each leaf three times (its scalar multiples have the same
// weight).  Visits (4^k - 1) / 3 combinations.
void enum_weights_rec(const std::vector<ScaledRow>& rows, size_t i, bool started,
                      Packed acc, std::vector<long long>& hist) {
    if (i == rows.size()) {
        if (started) hist[static_cast<size_t>(pweight(acc))] += 3;
        return;
    }
    if (started) {
        enum_weights_rec(rows, i + 1, true, acc, hist);
        for (const Packed& s : rows[i])
            enum_weights_rec(rows, i + 1, true, pxor(acc, s), hist);
    } else {
        enum_weights_rec(rows, i + 1, false, acc, hist);
        enum_weights_rec(rows, i + 1, true, pxor(acc, rows[i][0]), hist);
    }
}

// Same walk over symbol vectors, for n > 64.
void enum_weights_rec_wide(const GF4Matrix& g, int i, bool started,
                           GF4Vector& acc, std::vector<long long>& hist) {
    if (i == g.rows()) {
        if (started) hist[static_cast<size_t>(weight(acc))] += 3;
        return;
    }
    enum_weights_rec_wide(g, i + 1, started, acc, hist);
    GF4Vector row = g.row(i);
    const GF4Scalar coeffs[3] = {GF4_ONE, GF4_OMEGA, GF4_OMEGA2};
    int limit = started ? 3 : 1;
    for (int t = 0; t < limit; ++t) {
        GF4Vector next = acc;
        add_into(next, scaled(coeffs[t], row));
        enum_weights_rec_wide(g, i + 1, true, next, hist);
    }
}

void min_weight_rec(const std::vector<ScaledRow>& rows, size_t i, bool started,
                    Packed acc, int& best) {
    if (best == 1) return;  // nothing can beat weight 1
    if (i == rows.size()) {
        if (started) best = std::min(best, pweight(acc));
        return;
    }
    if (started) {
        min_weight_rec(rows, i + 1, true, acc, best);
        for (const Packed& s : rows[i])
            min_weight_rec(rows, i + 1, true, pxor(acc, s), best);
    } else {
        min_weight_rec(rows, i + 1, false, acc, best);
        min_weight_rec(rows, i + 1, true, pxor(acc, rows[i][0]), best);
    }
}

std::vector<long long> direct_weight_hist(const LinearCode& c) {
    std::vector<long long> hist(static_cast<size_t>(c.n()) + 1, 0);
    if (c.n() <= 64) {
        enum_weights_rec(packed_rows(c.generator()), 0, false, Packed{}, hist);
    } else {
        GF4Vector acc(static_cast<size_t>(c.n()), GF4_ZERO);
        enum_weights_rec_wide(c.generator(), 0, false, acc, hist);
    }
    hist[0] = 1;
    return hist;
}

constexpr int kDirectEnumerationMaxK = 12;

void require_nonzero_code(const LinearCode& c, const char* op) {
    if (c.is_zero_code())
        throw std::invalid_argument(std::string(op) + " is undefined for the zero code");
}

}  // namespace

long long WeightEnumerator::total() const {
    long long s = 0;
    for (long long a : counts) s += a;
    return s;
}

int WeightEnumerator::min_positive() const {
    for (size_t i = 1; i < counts.size(); ++i)
        if (counts[i] > 0) return static_cast<int>(i);
    throw std::logic_error("enumerator has no nonzero weight");
}

std::string format_enumerator(const WeightEnumerator& w) {
    std::ostringstream out;
    bool first = true;
    for (size_t i = 0; i < w.counts.size(); ++i) {
        if (w.counts[i] == 0) continue;
        if (!first) out << ' ';
        out << i << ':' << w.counts[i];
        first = false;
    }
    return out.str();
}

std::string format_classical(const CodeParams& p) {
    std::ostringstream out;
    out << '[' << p.n << ',' << p.k << ',' << p.d << "]_4";
    return out.str();
}

std::string format_quantum(const CodeParams& p) {
    std::ostringstream out;
    out << "[[" << p.n << ',' << p.k << ',' << p.d << ';' << p.c() << "]]_2";
    return out.str();
}

MonomialTransform MonomialTransform::identity(int n) {
    MonomialTransform t;
    t.perm.resize(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) t.perm[static_cast<size_t>(i)] = i;
    t.diag.assign(static_cast<size_t>(n), GF4_ONE);
    return t;
}

LinearCode::LinearCode(GF4Matrix g, int n, int k)
    : gen_(std::move(g)), n_(n), k_(k) {}

LinearCode LinearCode::from_generator(const GF4Matrix& g) {
    if (g.rows() < 1 || g.cols() < 1)
        throw std::invalid_argument("code: generator must have rows and columns");
    if (rank(g) != g.rows())
        throw std::invalid_argument("code: generator rows are linearly dependent");
    return LinearCode(g, g.cols(), g.rows());
}

LinearCode LinearCode::zero(int n) {
    if (n < 1) throw std::invalid_argument("code: length must be positive");
    return LinearCode(GF4Matrix(0, n), n, 0);
}

std::pair<GF4Matrix, MonomialTransform> standard_form(const LinearCode& c) {
    RrefResult r = rref(c.generator());
    int n = c.n();

    // Pivot column t goes to position t; the remaining columns keep their
    // relative order after the identity block.
    MonomialTransform t = MonomialTransform::identity(n);
    std::vector<char> is_pivot(static_cast<size_t>(n), 0);
    for (size_t i = 0; i < r.pivots.size(); ++i) {
        t.perm[static_cast<size_t>(r.pivots[i])] = static_cast<int>(i);
        is_pivot[static_cast<size_t>(r.pivots[i])] = 1;
    }
    int next = r.rank;
    for (int j = 0; j < n; ++j)
        if (!is_pivot[static_cast<size_t>(j)]) t.perm[static_cast<size_t>(j)] = next++;

    GF4Matrix out(c.k(), n);
    for (int i = 0; i < c.k(); ++i)
        for (int j = 0; j < n; ++j)
            out.at(i, t.perm[static_cast<size_t>(j)]) = r.m.at(i, j);
    return {out, t};
}

LinearCode hermitian_dual(const LinearCode& c) {
    GF4Matrix basis = null_space(conj(c.generator()));
    for (int i = 0; i < basis.rows(); ++i)
        for (int r = 0; r < c.k(); ++r)
            if (!hermitian_inner_product(basis.row(i), c.generator().row(r)).is_zero())
                throw std::logic_error("code: dual basis fails orthogonality check");
    if (basis.rows() == 0) return LinearCode::zero(c.n());
    return LinearCode::from_generator(basis);
}

LinearCode euclidean_dual(const LinearCode& c) {
    GF4Matrix basis = null_space(c.generator());
    for (int i = 0; i < basis.rows(); ++i)
        for (int r = 0; r < c.k(); ++r)
            if (!euclidean_inner_product(basis.row(i), c.generator().row(r)).is_zero())
                throw std::logic_error("code: dual basis fails orthogonality check");
    if (basis.rows() == 0) return LinearCode::zero(c.n());
    return LinearCode::from_generator(basis);
}

bool is_hermitian_lcd(const LinearCode& c) {
    const GF4Matrix& g = c.generator();
    return is_nonsingular(matmul(g, conj_transpose(g)));
}

bool is_euclidean_lcd(const LinearCode& c) {
    LinearCode dual = euclidean_dual(c);
    return rank(vstack(c.generator(), dual.generator())) == c.n();
}

int minimum_weight(const LinearCode& c) {
    require_nonzero_code(c, "minimum weight");
    if (c.k() <= kDirectEnumerationMaxK && c.n() <= 64) {
        int best = INT_MAX;
        min_weight_rec(packed_rows(c.generator()), 0, false, Packed{}, best);
        return best;
    }
    return weight_enumerator(c).min_positive();
}

WeightEnumerator weight_enumerator(const LinearCode& c) {
    require_nonzero_code(c, "weight enumerator");
    if (c.k() <= kDirectEnumerationMaxK)
        return WeightEnumerator{direct_weight_hist(c)};
    if (c.n() - c.k() > kDirectEnumerationMaxK)
        throw std::runtime_error(
            "weight enumerator: both k and n-k above the direct enumeration limit");
    // High-rate code: enumerate the small dual and transform back.
    LinearCode dual = euclidean_dual(c);
    WeightEnumerator dw{direct_weight_hist(dual)};
    return macwilliams_transform(dw, c.n(), c.n() - c.k());
}

WeightEnumerator macwilliams_transform(const WeightEnumerator& w, int n, int k) {
    if (n < 1 || n > 64)
        throw std::invalid_argument("macwilliams: length out of supported range");
    if (k < 0 || k > n || k > 31)
        throw std::invalid_argument("macwilliams: dimension out of supported range");
    if (static_cast<int>(w.counts.size()) > n + 1)
        throw std::invalid_argument("macwilliams: enumerator longer than the code length");

    using i128 = __int128;

    // Pascal's triangle up to n; C(64,32) still fits in 64 bits.
    std::vector<std::vector<long long>> binom(static_cast<size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) {
        binom[static_cast<size_t>(i)].assign(static_cast<size_t>(n) + 1, 0);
        binom[static_cast<size_t>(i)][0] = 1;
        for (int j = 1; j <= i; ++j)
            binom[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                binom[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)] +
                binom[static_cast<size_t>(i - 1)][static_cast<size_t>(j)];
    }
    std::vector<i128> pow3(static_cast<size_t>(n) + 1);
    pow3[0] = 1;
    for (int j = 1; j <= n; ++j) pow3[static_cast<size_t>(j)] = pow3[static_cast<size_t>(j - 1)] * 3;

    i128 order = 1;
    for (int t = 0; t < k; ++t) order *= 4;

    WeightEnumerator out;
    out.counts.assign(static_cast<size_t>(n) + 1, 0);
    for (int j = 0; j <= n; ++j) {
        i128 sum = 0;
        for (int i = 0; i < static_cast<int>(w.counts.size()); ++i) {
            long long ai = w.counts[static_cast<size_t>(i)];
            if (ai == 0) continue;
            // Quaternary Krawtchouk kernel K_j(i).
            i128 kj = 0;
            for (int s = 0; s <= j; ++s) {
                if (s > i || j - s > n - i) continue;
                i128 term = pow3[static_cast<size_t>(j - s)] *
                            binom[static_cast<size_t>(i)][static_cast<size_t>(s)] *
                            binom[static_cast<size_t>(n - i)][static_cast<size_t>(j - s)];
                kj += (s % 2 == 0) ? term : -term;
            }
            sum += i128(ai) * kj;
        }
        if (sum % order != 0 || sum < 0)
            throw std::invalid_argument("macwilliams: input is not a valid enumerator");
        i128 q = sum / order;
        if (q > i128(LLONG_MAX))
            throw std::runtime_error("macwilliams: coefficient exceeds 64-bit range");
        out.counts[static_cast<size_t>(j)] = static_cast<long long>(q);
    }
    return out;
}

namespace {

void check_coordinate(const LinearCode& c, int i) {
    if (i < 1 || i > c.n())
        throw std::out_of_range("code: coordinate index out of range");
    if (c.n() == 1)
        throw std::invalid_argument("code: cannot delete the only coordinate");
}

GF4Matrix drop_column(const std::vector<GF4Vector>& rows, int skip, int cols) {
    GF4Matrix out(static_cast<int>(rows.size()), cols - 1);
    for (size_t r = 0; r < rows.size(); ++r) {
        int c2 = 0;
        for (int c = 0; c < cols; ++c) {
            if (c == skip) continue;
            out.at(static_cast<int>(r), c2++) = rows[r][static_cast<size_t>(c)];
        }
    }
    return out;
}

}  // namespace

LinearCode shorten(const LinearCode& c, int i) {
    check_coordinate(c, i);
    if (c.is_zero_code()) return LinearCode::zero(c.n() - 1);
    int j = i - 1;

    std::vector<GF4Vector> rows;
    rows.reserve(static_cast<size_t>(c.k()));
    for (int r = 0; r < c.k(); ++r) rows.push_back(c.generator().row(r));

    // Eliminate coordinate j with one pivot row, then discard that row; what
    // remains spans exactly the codewords vanishing at j.
    int pivot = -1;
    for (size_t r = 0; r < rows.size(); ++r) {
        if (!rows[r][static_cast<size_t>(j)].is_zero()) {
            pivot = static_cast<int>(r);
            break;
        }
    }
    if (pivot >= 0) {
        GF4Scalar piv_inv = inv(rows[static_cast<size_t>(pivot)][static_cast<size_t>(j)]);
        for (size_t r = 0; r < rows.size(); ++r) {
            if (static_cast<int>(r) == pivot) continue;
            GF4Scalar f = rows[r][static_cast<size_t>(j)];
            if (f.is_zero()) continue;
            add_into(rows[r], scaled(mul(f, piv_inv), rows[static_cast<size_t>(pivot)]));
        }
        rows.erase(rows.begin() + pivot);
    }
    if (rows.empty()) return LinearCode::zero(c.n() - 1);
    return LinearCode::from_generator(drop_column(rows, j, c.n()));
}

LinearCode puncture(const LinearCode& c, int i) {
    check_coordinate(c, i);
    if (c.is_zero_code()) return LinearCode::zero(c.n() - 1);
    int j = i - 1;

    std::vector<GF4Vector> rows;
    rows.reserve(static_cast<size_t>(c.k()));
    for (int r = 0; r < c.k(); ++r) rows.push_back(c.generator().row(r));
    RrefResult reduced = rref(drop_column(rows, j, c.n()));
    if (reduced.rank == 0) return LinearCode::zero(c.n() - 1);

    GF4Matrix basis(reduced.rank, c.n() - 1);
    for (int r = 0; r < reduced.rank; ++r) basis.set_row(r, reduced.m.row(r));
    return LinearCode::from_generator(basis);
}

LinearCode apply_monomial(const LinearCode& c, const MonomialTransform& p) {
    int n = c.n();
    if (static_cast<int>(p.perm.size()) != n || static_cast<int>(p.diag.size()) != n)
        throw std::invalid_argument("monomial: size mismatch");
    std::vector<char> seen(static_cast<size_t>(n), 0);
    for (int dst : p.perm) {
        if (dst < 0 || dst >= n || seen[static_cast<size_t>(dst)])
            throw std::invalid_argument("monomial: not a permutation");
        seen[static_cast<size_t>(dst)] = 1;
    }
    for (GF4Scalar s : p.diag)
        if (s.is_zero())
            throw std::invalid_argument("monomial: zero diagonal entry");

    if (c.is_zero_code()) return c;
    GF4Matrix out(c.k(), n);
    for (int r = 0; r < c.k(); ++r)
        for (int j = 0; j < n; ++j)
            out.at(r, p.perm[static_cast<size_t>(j)]) =
                mul(p.diag[static_cast<size_t>(j)], c.generator().at(r, j));
    return LinearCode::from_generator(out);
}

CodeParams eaqecc_params(const LinearCode& c) {
    if (!is_hermitian_lcd(c))
        throw std::invalid_argument("eaqecc: code is not Hermitian LCD");
    return CodeParams{c.n(), c.k(), minimum_weight(c)};
}

}  // namespace lcd4
