#pragma once

#include <cstdint>

namespace chromkh::detail {

struct Binomials {
    std::uint64_t c[65][65] = {};
    Binomials() {
        for (int n = 0; n <= 64; ++n) {
            c[n][0] = 1;
            for (int k = 1; k <= n; ++k) c[n][k] = c[n - 1][k - 1] + (k <= n - 1 ? c[n - 1][k] : 0);
        }
    }
};

inline const Binomials& binomials() {
    static const Binomials table;
    return table;
}

inline std::uint64_t binomial(unsigned n, unsigned k) { return k > n ? 0 : binomials().c[n][k]; }

// Rank of `mask` among masks with the same popcount, colexicographic order
// (which is increasing numeric order).
inline std::uint64_t colex_rank(std::uint64_t mask) {
    std::uint64_t r = 0;
    unsigned t = 0;
    while (mask) {
        unsigned pos = static_cast<unsigned>(__builtin_ctzll(mask));
        r += binomials().c[pos][t + 1];
        ++t;
        mask &= mask - 1;
    }
    return r;
}

// Next larger mask with the same popcount (Gosper). `mask` must be nonzero.
inline std::uint64_t next_same_popcount(std::uint64_t mask) {
    std::uint64_t u = mask & (~mask + 1), v = mask + u;
    return v + (((v ^ mask) / u) >> 2);
}

inline std::uint64_t low_bits(unsigned k) { return k >= 64 ? ~0ULL : (1ULL << k) - 1; }

// Bits 0..width-1 of `mask` in reverse order.
inline std::uint64_t reverse_bits(std::uint64_t mask, unsigned width) {
    std::uint64_t r = 0;
    for (unsigned b = 0; b < width; ++b)
        if (mask >> b & 1) r |= 1ULL << (width - 1 - b);
    return r;
}

}  // namespace chromkh::detail
