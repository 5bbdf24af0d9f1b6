#include "lcd4/gf4.hpp"

#include <string>

namespace lcd4 {

char to_char(GF4Scalar a) {
    constexpr char table[4] = {'0', '1', 'w', 'W'};
    return table[a.v];
}

std::optional<GF4Scalar> gf4_from_char(char c) {
    switch (c) {
        case '0': return GF4_ZERO;
        case '1': return GF4_ONE;
        case 'w': return GF4_OMEGA;
        case 'W': return GF4_OMEGA2;
        default: return std::nullopt;
    }
}

int weight(const GF4Vector& v) {
    int w = 0;
    for (GF4Scalar s : v)
        if (!s.is_zero()) ++w;
    return w;
}

GF4Vector conj(const GF4Vector& v) {
    GF4Vector out(v.size());
    for (size_t i = 0; i < v.size(); ++i) out[i] = conj(v[i]);
    return out;
}

GF4Vector scaled(GF4Scalar c, const GF4Vector& v) {
    GF4Vector out(v.size());
    for (size_t i = 0; i < v.size(); ++i) out[i] = mul(c, v[i]);
    return out;
}

void add_into(GF4Vector& dst, const GF4Vector& src) {
    if (dst.size() != src.size())
        throw std::invalid_argument("gf4: vector length mismatch");
    for (size_t i = 0; i < dst.size(); ++i) dst[i] = add(dst[i], src[i]);
}

GF4Scalar hermitian_inner_product(const GF4Vector& x, const GF4Vector& y) {
    if (x.size() != y.size())
        throw std::invalid_argument("gf4: vector length mismatch");
    GF4Scalar acc;
    for (size_t i = 0; i < x.size(); ++i)
        acc = add(acc, mul(x[i], conj(y[i])));
    return acc;
}

GF4Scalar euclidean_inner_product(const GF4Vector& x, const GF4Vector& y) {
    if (x.size() != y.size())
        throw std::invalid_argument("gf4: vector length mismatch");
    GF4Scalar acc;
    for (size_t i = 0; i < x.size(); ++i)
        acc = add(acc, mul(x[i], y[i]));
    return acc;
}

GF4Matrix::GF4Matrix(int rows, int cols) : rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0)
        throw std::invalid_argument("gf4: negative matrix dimension");
    a_.assign(static_cast<size_t>(rows) * static_cast<size_t>(cols), GF4_ZERO);
}

GF4Matrix GF4Matrix::identity(int k) {
    GF4Matrix m(k, k);
    for (int i = 0; i < k; ++i) m.at(i, i) = GF4_ONE;
    return m;
}

GF4Scalar GF4Matrix::at(int r, int c) const {
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
        throw std::out_of_range("gf4: matrix index out of range");
    return a_[static_cast<size_t>(r) * cols_ + c];
}

GF4Scalar& GF4Matrix::at(int r, int c) {
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
        throw std::out_of_range("gf4: matrix index out of range");
    return a_[static_cast<size_t>(r) * cols_ + c];
}

GF4Vector GF4Matrix::row(int r) const {
    if (r < 0 || r >= rows_)
        throw std::out_of_range("gf4: row index out of range");
    auto begin = a_.begin() + static_cast<size_t>(r) * cols_;
    return GF4Vector(begin, begin + cols_);
}

void GF4Matrix::set_row(int r, const GF4Vector& v) {
    if (r < 0 || r >= rows_)
        throw std::out_of_range("gf4: row index out of range");
    if (static_cast<int>(v.size()) != cols_)
        throw std::invalid_argument("gf4: row length mismatch");
    std::copy(v.begin(), v.end(), a_.begin() + static_cast<size_t>(r) * cols_);
}

GF4Matrix transpose(const GF4Matrix& m) {
    GF4Matrix out(m.cols(), m.rows());
    for (int r = 0; r < m.rows(); ++r)
        for (int c = 0; c < m.cols(); ++c)
            out.at(c, r) = m.at(r, c);
    return out;
}

GF4Matrix conj(const GF4Matrix& m) {
    GF4Matrix out(m.rows(), m.cols());
    for (int r = 0; r < m.rows(); ++r)
        for (int c = 0; c < m.cols(); ++c)
            out.at(r, c) = conj(m.at(r, c));
    return out;
}

GF4Matrix conj_transpose(const GF4Matrix& m) { return transpose(conj(m)); }

GF4Matrix matmul(const GF4Matrix& a, const GF4Matrix& b) {
    if (a.cols() != b.rows())
        throw std::invalid_argument("gf4: matmul inner dimension mismatch");
    GF4Matrix out(a.rows(), b.cols());
    for (int r = 0; r < a.rows(); ++r) {
        for (int t = 0; t < a.cols(); ++t) {
            GF4Scalar f = a.at(r, t);
            if (f.is_zero()) continue;
            for (int c = 0; c < b.cols(); ++c)
                out.at(r, c) = add(out.at(r, c), mul(f, b.at(t, c)));
        }
    }
    return out;
}

GF4Matrix vstack(const GF4Matrix& top, const GF4Matrix& bottom) {
    if (top.cols() != bottom.cols())
        throw std::invalid_argument("gf4: vstack column mismatch");
    GF4Matrix out(top.rows() + bottom.rows(), top.cols());
    for (int r = 0; r < top.rows(); ++r) out.set_row(r, top.row(r));
    for (int r = 0; r < bottom.rows(); ++r) out.set_row(top.rows() + r, bottom.row(r));
    return out;
}

GF4Matrix hstack(const GF4Matrix& left, const GF4Matrix& right) {
    if (left.rows() != right.rows())
        throw std::invalid_argument("gf4: hstack row mismatch");
    GF4Matrix out(left.rows(), left.cols() + right.cols());
    for (int r = 0; r < left.rows(); ++r) {
        for (int c = 0; c < left.cols(); ++c) out.at(r, c) = left.at(r, c);
        for (int c = 0; c < right.cols(); ++c) out.at(r, left.cols() + c) = right.at(r, c);
    }
    return out;
}

RrefResult rref(const GF4Matrix& m) {
    RrefResult res;
    res.m = m;
    GF4Matrix& a = res.m;
    int r = 0;
    for (int c = 0; c < a.cols() && r < a.rows(); ++c) {
        int pivot = -1;
        for (int i = r; i < a.rows(); ++i) {
            if (!a.at(i, c).is_zero()) {
                pivot = i;
                break;
            }
        }
        if (pivot < 0) continue;
        if (pivot != r) {
            GF4Vector tmp = a.row(r);
            a.set_row(r, a.row(pivot));
            a.set_row(pivot, tmp);
        }
        GF4Scalar iv = inv(a.at(r, c));
        for (int j = c; j < a.cols(); ++j) a.at(r, j) = mul(iv, a.at(r, j));
        for (int i = 0; i < a.rows(); ++i) {
            if (i == r) continue;
            GF4Scalar f = a.at(i, c);
            if (f.is_zero()) continue;
            for (int j = c; j < a.cols(); ++j)
                a.at(i, j) = add(a.at(i, j), mul(f, a.at(r, j)));
        }
        res.pivots.push_back(c);
        ++r;
    }
    res.rank = r;
    return res;
}

int rank(const GF4Matrix& m) { return rref(m).rank; }

bool is_nonsingular(const GF4Matrix& m) {
    if (m.rows() != m.cols())
        throw std::invalid_argument("gf4: nonsingularity needs a square matrix");
    return rank(m) == m.rows();
}

GF4Matrix null_space(const GF4Matrix& m) {
    RrefResult r = rref(m);
    int n = m.cols();
    std::vector<char> is_pivot(static_cast<size_t>(n), 0);
    for (int p : r.pivots) is_pivot[static_cast<size_t>(p)] = 1;

    GF4Matrix out(n - r.rank, n);
    int row = 0;
    for (int f = 0; f < n; ++f) {
        if (is_pivot[static_cast<size_t>(f)]) continue;
        // Basis vector with free coordinate f set to 1; pivot coordinates are
        // read off the reduced rows so that (row i of rref) . x = 0.
        out.at(row, f) = GF4_ONE;
        for (int i = 0; i < r.rank; ++i)
            out.at(row, r.pivots[static_cast<size_t>(i)]) = r.m.at(i, f);
        ++row;
    }
    return out;
}

}  // namespace lcd4
