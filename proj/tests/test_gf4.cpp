#include "doctest.h"

#include <random>

#include "lcd4/gf4.hpp"

using namespace lcd4;

namespace {

const GF4Scalar kAll[4] = {GF4_ZERO, GF4_ONE, GF4_OMEGA, GF4_OMEGA2};

GF4Vector random_vector(std::mt19937& rng, int len) {
    std::uniform_int_distribution<int> sym(0, 3);
    GF4Vector v;
    v.reserve(static_cast<size_t>(len));
    for (int i = 0; i < len; ++i) v.push_back(GF4Scalar(static_cast<uint8_t>(sym(rng))));
    return v;
}

GF4Matrix random_matrix(std::mt19937& rng, int rows, int cols) {
    GF4Matrix m(rows, cols);
    for (int r = 0; r < rows; ++r) m.set_row(r, random_vector(rng, cols));
    return m;
}

}  // namespace

TEST_CASE("field axioms hold exhaustively") {
    for (GF4Scalar a : kAll) {
        CHECK(add(a, GF4_ZERO) == a);
        CHECK(mul(a, GF4_ONE) == a);
        CHECK(add(a, a) == GF4_ZERO);
        CHECK(mul(a, GF4_ZERO) == GF4_ZERO);
        for (GF4Scalar b : kAll) {
            CHECK(add(a, b) == add(b, a));
            CHECK(mul(a, b) == mul(b, a));
            for (GF4Scalar c : kAll) {
                CHECK(add(add(a, b), c) == add(a, add(b, c)));
                CHECK(mul(mul(a, b), c) == mul(a, mul(b, c)));
                CHECK(mul(a, add(b, c)) == add(mul(a, b), mul(a, c)));
            }
        }
    }
    for (GF4Scalar a : kAll) {
        if (a.is_zero()) continue;
        CHECK(mul(a, inv(a)) == GF4_ONE);
        CHECK(mul(mul(a, a), a) == GF4_ONE);  // x^3 = 1 for nonzero x
    }
    CHECK_THROWS_AS(inv(GF4_ZERO), std::domain_error);
}

TEST_CASE("defining relation and sample products") {
    CHECK(add(GF4_OMEGA, GF4_OMEGA2) == GF4_ONE);
    CHECK(add(GF4_ONE, GF4_OMEGA) == GF4_OMEGA2);
    CHECK(mul(GF4_OMEGA, GF4_OMEGA) == GF4_OMEGA2);
    CHECK(mul(GF4_OMEGA, GF4_OMEGA2) == GF4_ONE);
}

TEST_CASE("conjugation is the squaring automorphism") {
    CHECK(conj(GF4_ZERO) == GF4_ZERO);
    CHECK(conj(GF4_ONE) == GF4_ONE);
    CHECK(conj(GF4_OMEGA) == GF4_OMEGA2);
    CHECK(conj(GF4_OMEGA2) == GF4_OMEGA);
    for (GF4Scalar a : kAll) {
        CHECK(conj(a) == mul(a, a));
        CHECK(conj(conj(a)) == a);
        for (GF4Scalar b : kAll) {
            CHECK(conj(add(a, b)) == add(conj(a), conj(b)));
            CHECK(conj(mul(a, b)) == mul(conj(a), conj(b)));
        }
    }
}

TEST_CASE("symbol characters round-trip") {
    const char chars[4] = {'0', '1', 'w', 'W'};
    for (int i = 0; i < 4; ++i) {
        CHECK(to_char(kAll[i]) == chars[i]);
        auto back = gf4_from_char(chars[i]);
        REQUIRE(back.has_value());
        CHECK(*back == kAll[i]);
    }
    CHECK_FALSE(gf4_from_char('2').has_value());
    CHECK_FALSE(gf4_from_char('x').has_value());
    CHECK_FALSE(gf4_from_char(' ').has_value());
}

TEST_CASE("vector weight counts nonzero symbols") {
    GF4Vector v{GF4_ZERO, GF4_ZERO, GF4_ONE, GF4_ONE, GF4_ONE, GF4_ONE, GF4_ONE, GF4_ONE};
    CHECK(weight(v) == 6);
    CHECK(weight(GF4Vector(5, GF4_ZERO)) == 0);
    CHECK(weight(GF4Vector{GF4_ONE, GF4_OMEGA, GF4_OMEGA2, GF4_ZERO}) == 3);
}

TEST_CASE("inner products match hand values") {
    GF4Vector w1{GF4_OMEGA};
    CHECK(hermitian_inner_product(w1, w1) == GF4_ONE);
    CHECK(euclidean_inner_product(w1, w1) == GF4_OMEGA2);

    GF4Vector x{GF4_ONE, GF4_OMEGA};
    GF4Vector y{GF4_OMEGA, GF4_ONE};
    CHECK(hermitian_inner_product(x, y) == GF4_ONE);

    GF4Vector ones{GF4_ONE, GF4_ONE};
    CHECK(euclidean_inner_product(ones, ones) == GF4_ZERO);

    GF4Vector longer{GF4_ONE, GF4_ONE, GF4_ONE};
    CHECK_THROWS_AS(hermitian_inner_product(x, longer), std::invalid_argument);
    CHECK_THROWS_AS(euclidean_inner_product(x, longer), std::invalid_argument);
}

TEST_CASE("hermitian product symmetry and self-pairing parity") {
    std::mt19937 rng(991);
    std::uniform_int_distribution<int> len(1, 20);
    for (int t = 0; t < 200; ++t) {
        int n = len(rng);
        GF4Vector x = random_vector(rng, n);
        GF4Vector y = random_vector(rng, n);
        CHECK(hermitian_inner_product(x, y) == conj(hermitian_inner_product(y, x)));
        GF4Scalar self = hermitian_inner_product(x, x);
        if (weight(x) % 2 == 0) {
            CHECK(self == GF4_ZERO);
        } else {
            CHECK(self == GF4_ONE);
        }
    }
}

TEST_CASE("matrix entry access is bounds-checked") {
    GF4Matrix m(2, 3);
    CHECK(m.at(1, 2) == GF4_ZERO);
    CHECK_THROWS_AS(m.at(2, 0), std::out_of_range);
    CHECK_THROWS_AS(m.at(0, 3), std::out_of_range);
}

TEST_CASE("rref fixes the identity and collapses repeats") {
    GF4Matrix id = GF4Matrix::identity(3);
    RrefResult r = rref(id);
    CHECK(r.m == id);
    CHECK(r.rank == 3);
    CHECK(r.pivots == std::vector<int>{0, 1, 2});

    GF4Matrix twice(2, 4);
    GF4Vector row{GF4_ONE, GF4_OMEGA, GF4_ZERO, GF4_OMEGA2};
    twice.set_row(0, row);
    twice.set_row(1, row);
    CHECK(rref(twice).rank == 1);
}

namespace {

// Membership of v in the row space of an rref matrix: peel pivots, expect zero.
bool in_rref_span(const GF4Matrix& reduced, const std::vector<int>& pivots, GF4Vector v) {
    for (size_t p = 0; p < pivots.size(); ++p) {
        GF4Scalar c = v[static_cast<size_t>(pivots[p])];
        if (!c.is_zero()) add_into(v, scaled(c, reduced.row(static_cast<int>(p))));
    }
    return weight(v) == 0;
}

}  // namespace

TEST_CASE("rref is idempotent and keeps the row space") {
    std::mt19937 rng(4057);
    for (int t = 0; t < 50; ++t) {
        GF4Matrix m = random_matrix(rng, 5, 9);
        RrefResult r = rref(m);
        RrefResult again = rref(r.m);
        CHECK(again.m == r.m);
        CHECK(again.rank == r.rank);
        for (size_t i = 0; i + 1 < r.pivots.size(); ++i) CHECK(r.pivots[i] < r.pivots[i + 1]);
        for (int i = 0; i < 5; ++i) CHECK(in_rref_span(r.m, r.pivots, m.row(i)));
    }
}

TEST_CASE("nonsingularity by rank") {
    CHECK(is_nonsingular(GF4Matrix::identity(6)));
    CHECK_FALSE(is_nonsingular(GF4Matrix(2, 2)));
    CHECK_THROWS_AS(is_nonsingular(GF4Matrix(2, 3)), std::invalid_argument);
}

TEST_CASE("transpose, conjugate transpose and products") {
    GF4Matrix m(1, 2);
    m.set_row(0, GF4Vector{GF4_OMEGA, GF4_ONE});
    GF4Matrix ct = conj_transpose(m);
    CHECK(ct.rows() == 2);
    CHECK(ct.cols() == 1);
    CHECK(ct.at(0, 0) == GF4_OMEGA2);
    CHECK(ct.at(1, 0) == GF4_ONE);

    std::mt19937 rng(77);
    GF4Matrix a = random_matrix(rng, 3, 5);
    CHECK(conj_transpose(conj_transpose(a)) == a);
    CHECK(matmul(GF4Matrix::identity(3), a) == a);
    CHECK_THROWS_AS(matmul(a, a), std::invalid_argument);
}

TEST_CASE("null space vectors annihilate the matrix") {
    std::mt19937 rng(515);
    for (int t = 0; t < 30; ++t) {
        GF4Matrix m = random_matrix(rng, 3, 7);
        int rk = rank(m);
        GF4Matrix ns = null_space(m);
        CHECK(static_cast<int>(ns.rows()) == 7 - rk);
        CHECK(rank(ns) == 7 - rk);
        for (int i = 0; i < static_cast<int>(ns.rows()); ++i) {
            for (int r = 0; r < 3; ++r) {
                CHECK(euclidean_inner_product(m.row(r), ns.row(i)) == GF4_ZERO);
            }
        }
    }
}
