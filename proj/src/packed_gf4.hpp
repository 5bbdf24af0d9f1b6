#pragma once

#include <bit>
#include <cstdint>

#include "lcd4/gf4.hpp"

// Bit-plane packing shared by the enumeration and search kernels.  Bit i of
// `lo`/`hi` holds the two encoding bits of coordinate i, so vector addition
// is two XORs and Hamming weight is one popcount.  Length is capped at 64.
namespace lcd4::detail {

struct Packed {
    uint64_t lo = 0;
    uint64_t hi = 0;

    bool operator==(const Packed&) const = default;
};

inline Packed pack(const GF4Vector& v) {
    Packed p;
    for (size_t i = 0; i < v.size(); ++i) {
        p.lo |= uint64_t(v[i].v & 1u) << i;
        p.hi |= uint64_t((v[i].v >> 1) & 1u) << i;
    }
    return p;
}

inline Packed pxor(Packed a, Packed b) { return {a.lo ^ b.lo, a.hi ^ b.hi}; }

inline int pweight(Packed a) { return std::popcount(a.lo | a.hi); }

// Multiplication by w maps a + bw to b + (a+b)w; by w^2 to (a+b) + aw.
inline Packed pscale(GF4Scalar c, Packed a) {
    switch (c.v) {
        case 0: return {0, 0};
        case 1: return a;
        case 2: return {a.hi, a.lo ^ a.hi};
        default: return {a.lo ^ a.hi, a.lo};
    }
}

// <x,y>_H over packed words: conjugate y (swap its nonzero patterns), then
// accumulate the product bit-planes; each plane's parity gives one bit of the
// resulting scalar.
inline GF4Scalar phermdot(Packed x, Packed y) {
    uint64_t cl = y.lo ^ y.hi;
    uint64_t ch = y.hi;
    uint64_t pl = (x.lo & cl) ^ (x.hi & ch);
    uint64_t ph = (x.lo & ch) ^ (x.hi & cl) ^ (x.hi & ch);
    unsigned bits = (std::popcount(pl) & 1) | ((std::popcount(ph) & 1) << 1);
    return GF4Scalar(bits);
}

}  // namespace lcd4::detail
