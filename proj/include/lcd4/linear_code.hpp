#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lcd4/gf4.hpp"

namespace lcd4 {

// Codeword counts by Hamming weight: counts[i] = A_i, size n + 1.
struct WeightEnumerator {
    std::vector<long long> counts;

    long long total() const;
    // Smallest i >= 1 with A_i > 0; throws std::logic_error if there is none.
    int min_positive() const;

    bool operator==(const WeightEnumerator&) const = default;
};

// "i:A_i" pairs in ascending weight order, zero coefficients omitted.
std::string format_enumerator(const WeightEnumerator& w);

struct CodeParams {
    int n = 0;
    int k = 0;
    int d = 0;

    int c() const { return n - k; }  // entangled-pair count of the quantum tuple

    bool operator==(const CodeParams&) const = default;
};

std::string format_classical(const CodeParams& p);  // "[n,k,d]_4"
std::string format_quantum(const CodeParams& p);    // "[[n,k,d;c]]_2"

// A permutation with per-coordinate nonzero scalings: input coordinate j is
// multiplied by diag[j] and then placed at position perm[j] (0-based arrays;
// the 1-based convention applies only to coordinate arguments of shorten and
// puncture below).
struct MonomialTransform {
    std::vector<int> perm;
    GF4Vector diag;

    static MonomialTransform identity(int n);
};

// A linear [n, k] code over GF(4), presented by a full-row-rank generator
// matrix.  The matrix is kept exactly as given, not reduced.  The trivial
// code {0_n} (k = 0) cannot be built from a generator matrix; it is produced
// by the zero() factory and shows up as the dual of the full space.
class LinearCode {
public:
    // Throws std::invalid_argument if g has no rows, no columns, or rank
    // below its row count.
    static LinearCode from_generator(const GF4Matrix& g);
    static LinearCode zero(int n);

    int n() const { return n_; }
    int k() const { return k_; }
    bool is_zero_code() const { return k_ == 0; }
    const GF4Matrix& generator() const { return gen_; }

private:
    LinearCode(GF4Matrix g, int n, int k);

    GF4Matrix gen_;
    int n_ = 0;
    int k_ = 0;
};

// Generator of a monomially equivalent code in the form (I_k | A), together
// with the column permutation that produced it (diagonal part identity).
std::pair<GF4Matrix, MonomialTransform> standard_form(const LinearCode& c);

LinearCode hermitian_dual(const LinearCode& c);
LinearCode euclidean_dual(const LinearCode& c);

// G conj(G)^T nonsingular, for the stored generator G.
bool is_hermitian_lcd(const LinearCode& c);
// Trivial intersection with the Euclidean dual, decided by the rank of the
// stacked generators.
bool is_euclidean_lcd(const LinearCode& c);

// Both require k >= 1 and throw std::invalid_argument on the zero code.
// weight_enumerator enumerates directly for k <= 12 and otherwise goes
// through the dual's enumerator and the MacWilliams transform (which needs
// n - k <= 12; anything bigger is out of this artifact's envelope).
int minimum_weight(const LinearCode& c);
WeightEnumerator weight_enumerator(const LinearCode& c);

// Enumerator of the dual [n, n-k] code.  Throws std::invalid_argument when
// the transform produces a negative or non-integer coefficient (an input that
// is not the enumerator of any [n, k] code).
WeightEnumerator macwilliams_transform(const WeightEnumerator& w, int n, int k);

// Coordinate i is 1-based.  Both throw std::out_of_range for i outside
// [1, n] and std::invalid_argument when n = 1 (the result would be empty).
LinearCode shorten(const LinearCode& c, int i);
LinearCode puncture(const LinearCode& c, int i);

LinearCode apply_monomial(const LinearCode& c, const MonomialTransform& p);

// The [[n, k, d; n-k]] tuple of the entanglement-assisted quantum code built
// from a Hermitian LCD code; rejects non-LCD input with std::invalid_argument.
CodeParams eaqecc_params(const LinearCode& c);

}  // namespace lcd4
