#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

namespace lcd4 {

// One element of GF(4) = {0, 1, w, w^2} with w^2 = w + 1, stored in the two
// low bits: bit 0 is the F_2-coordinate on 1, bit 1 the coordinate on w.
// Under this encoding addition is plain XOR (characteristic 2), and the
// Frobenius map x -> x^2 swaps the bit patterns 10 and 11.
struct GF4Scalar {
    uint8_t v = 0;

    constexpr GF4Scalar() = default;
    constexpr explicit GF4Scalar(unsigned bits) : v(static_cast<uint8_t>(bits & 3u)) {}

    constexpr bool operator==(const GF4Scalar&) const = default;
    constexpr bool is_zero() const { return v == 0; }
};

inline constexpr GF4Scalar GF4_ZERO{0u};
inline constexpr GF4Scalar GF4_ONE{1u};
inline constexpr GF4Scalar GF4_OMEGA{2u};
inline constexpr GF4Scalar GF4_OMEGA2{3u};

constexpr GF4Scalar add(GF4Scalar a, GF4Scalar b) {
    return GF4Scalar(static_cast<unsigned>(a.v ^ b.v));
}

// Product table; the nonzero elements form the cyclic group generated by w,
// with w * w = w^2 and w * w^2 = w^3 = 1.
constexpr GF4Scalar mul(GF4Scalar a, GF4Scalar b) {
    constexpr uint8_t table[16] = {
        0, 0, 0, 0,
        0, 1, 2, 3,
        0, 2, 3, 1,
        0, 3, 1, 2,
    };
    return GF4Scalar(static_cast<unsigned>(table[a.v * 4 + b.v]));
}

constexpr GF4Scalar conj(GF4Scalar a) {
    return a.v < 2 ? a : GF4Scalar(static_cast<unsigned>(5 - a.v));
}

// x^-1 = x^2 = conj(x) for nonzero x, since x^3 = 1.
constexpr GF4Scalar inv(GF4Scalar a) {
    return a.is_zero() ? throw std::domain_error("gf4: inverse of zero")
                       : conj(a);
}

constexpr GF4Scalar operator+(GF4Scalar a, GF4Scalar b) { return add(a, b); }
constexpr GF4Scalar operator*(GF4Scalar a, GF4Scalar b) { return mul(a, b); }

// Textual alphabet used everywhere in this repo: '0', '1', 'w', 'W' (W = w^2).
char to_char(GF4Scalar a);
std::optional<GF4Scalar> gf4_from_char(char c);

using GF4Vector = std::vector<GF4Scalar>;

int weight(const GF4Vector& v);
GF4Vector conj(const GF4Vector& v);
GF4Vector scaled(GF4Scalar c, const GF4Vector& v);
void add_into(GF4Vector& dst, const GF4Vector& src);

// <x,y>_H = sum x_i * conj(y_i); <x,y> = sum x_i * y_i.  Both throw
// std::invalid_argument on length mismatch.
GF4Scalar hermitian_inner_product(const GF4Vector& x, const GF4Vector& y);
GF4Scalar euclidean_inner_product(const GF4Vector& x, const GF4Vector& y);

// Dense row-major matrix.  Matrices with zero rows are legal; they show up as
// generators of the trivial code {0} (duals of the full space).
class GF4Matrix {
public:
    GF4Matrix() = default;
    GF4Matrix(int rows, int cols);
    static GF4Matrix identity(int k);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    GF4Scalar at(int r, int c) const;
    GF4Scalar& at(int r, int c);
    GF4Vector row(int r) const;
    void set_row(int r, const GF4Vector& v);

    bool operator==(const GF4Matrix&) const = default;

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<GF4Scalar> a_;
};

GF4Matrix transpose(const GF4Matrix& m);
GF4Matrix conj(const GF4Matrix& m);
GF4Matrix conj_transpose(const GF4Matrix& m);
GF4Matrix matmul(const GF4Matrix& a, const GF4Matrix& b);
GF4Matrix vstack(const GF4Matrix& top, const GF4Matrix& bottom);
GF4Matrix hstack(const GF4Matrix& left, const GF4Matrix& right);

struct RrefResult {
    GF4Matrix m;
    int rank = 0;
    std::vector<int> pivots;  // pivot column per pivot row, strictly increasing
};

// Reduced row-echelon form; row space is preserved.
RrefResult rref(const GF4Matrix& m);
int rank(const GF4Matrix& m);

// True iff a square matrix has full rank.  Throws std::invalid_argument on a
// non-square input.  The 0x0 matrix counts as nonsingular (empty product).
bool is_nonsingular(const GF4Matrix& m);

// Rows span {x : m x^T = 0}; returns a (cols - rank) x cols matrix.
GF4Matrix null_space(const GF4Matrix& m);

}  // namespace lcd4
