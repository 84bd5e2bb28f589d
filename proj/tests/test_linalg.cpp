#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "chromkh/error.hpp"
#include "chromkh/linalg.hpp"

using namespace chromkh;

namespace {

std::vector<Integer> ints(std::initializer_list<std::int64_t> xs) { return {xs.begin(), xs.end()}; }

IntMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, double density, int range) {
    std::uniform_real_distribution<double> coin(0, 1);
    std::uniform_int_distribution<int> val(-range, range);
    IntMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c)
            if (coin(rng) < density) m.add(r, c, val(rng));
    return m;
}

// Dense Gaussian elimination over Q with exact rationals, independent of the
// sparse engine.
std::size_t dense_rank_q(const IntMatrix& m) {
    std::vector<std::vector<mpq_class>> a(m.rows(), std::vector<mpq_class>(m.cols()));
    for (std::size_t c = 0; c < m.cols(); ++c)
        for (const auto& e : m.column(c)) a[e.row][c] = e.value.to_mpz();
    std::size_t rank = 0;
    for (std::size_t c = 0; c < m.cols() && rank < m.rows(); ++c) {
        std::size_t p = rank;
        while (p < m.rows() && a[p][c] == 0) ++p;
        if (p == m.rows()) continue;
        std::swap(a[p], a[rank]);
        for (std::size_t r = rank + 1; r < m.rows(); ++r) {
            if (a[r][c] == 0) continue;
            mpq_class f = a[r][c] / a[rank][c];
            for (std::size_t k = c; k < m.cols(); ++k) a[r][k] -= f * a[rank][k];
        }
        ++rank;
    }
    return rank;
}

// Product of the invariant factors equals the gcd of the maximal minors; for
// small square matrices compare |det| against the factor product.
mpz_class dense_det(std::vector<std::vector<mpz_class>> a) {
    std::size_t n = a.size();
    mpz_class det = 1, prev = 1;
    int sign = 1;
    // Bareiss
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        while (p < n && a[p][k] == 0) ++p;
        if (p == n) return 0;
        if (p != k) {
            std::swap(a[p], a[k]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
        prev = a[k][k];
    }
    det = prev * sign;
    return det;
}

}  // namespace

TEST_CASE("smith normal form examples") {
    auto id = smith_normal_form(IntMatrix::identity(3));
    CHECK(id.rank == 3);
    CHECK(id.invariant_factors == ints({1, 1, 1}));

    auto zero = smith_normal_form(IntMatrix(2, 5));
    CHECK(zero.rank == 0);
    CHECK(zero.invariant_factors.empty());

    auto d = smith_normal_form(IntMatrix::from_dense({{2, 0}, {0, 3}}));
    CHECK(d.rank == 2);
    CHECK(d.invariant_factors == ints({1, 6}));

    auto empty = smith_normal_form(IntMatrix(0, 0));
    CHECK(empty.rank == 0);
}

TEST_CASE("smith normal form needs euclidean steps") {
    auto m = IntMatrix::from_dense({{2, 3}, {4, 5}});
    CHECK(smith_normal_form(m).invariant_factors == ints({1, 2}));
    auto n = IntMatrix::from_dense({{6, 10, 15}});
    CHECK(smith_normal_form(n).invariant_factors == ints({1}));
    auto k = IntMatrix::from_dense({{4, 6}, {6, 4}});
    CHECK(smith_normal_form(k).invariant_factors == ints({2, 10}));
}

TEST_CASE("big coefficients do not overflow") {
    IntMatrix m(2, 2);
    Integer big = Integer(std::int64_t{1} << 62) * Integer(1000);
    m.add(0, 0, big);
    m.add(1, 1, big * Integer(3));
    auto f = smith_normal_form(m);
    REQUIRE(f.invariant_factors.size() == 2);
    CHECK(f.invariant_factors[0] == big);
    CHECK(f.invariant_factors[1] == big * Integer(3));
    CHECK(rank_mod_p(m, 7) == 2);
    CHECK(rank_mod_p(m, 5) == 0);
    CHECK(rank_mod_p(m, 2) == 0);
}

TEST_CASE("homology_at examples") {
    auto h = homology_at(IntMatrix::from_dense({{2}}), IntMatrix(0, 1));
    CHECK(h == AbelianGroup(0, ints({2})));
    CHECK(h.str() == "Z2");

    CHECK(homology_at(IntMatrix(3, 0), IntMatrix(0, 3)) == AbelianGroup::free(3));
    CHECK(homology_at(IntMatrix(2, 0), IntMatrix::from_dense({{1, 1}})) == AbelianGroup::free(1));
}

TEST_CASE("homology_at rejects bad complexes") {
    CHECK_THROWS_AS(homology_at(IntMatrix(2, 1), IntMatrix(1, 3)), InvalidArgument);
    CHECK_THROWS_AS(homology_at(IntMatrix::from_dense({{1}, {0}}), IntMatrix::from_dense({{1, 0}})), AssertionFailure);
}

TEST_CASE("rank_mod_p examples") {
    CHECK(rank_mod_p(IntMatrix::from_dense({{2}}), 2) == 0);
    for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 4294967291ULL}) CHECK(rank_mod_p(IntMatrix::identity(3), p) == 3);
    CHECK(rank_mod_p(IntMatrix::from_dense({{2, 0}, {0, 3}}), 3) == 1);
    CHECK_THROWS_AS(rank_mod_p(IntMatrix::identity(2), 4), InvalidArgument);
    CHECK_THROWS_AS(rank_mod_p(IntMatrix::identity(2), 1), InvalidArgument);
}

TEST_CASE("random matrices: ranks, determinants, mod p") {
    std::mt19937_64 rng(12345);
    for (int trial = 0; trial < 300; ++trial) {
        std::size_t rows = 1 + rng() % 9, cols = 1 + rng() % 9;
        double density = 0.15 + 0.7 * (rng() % 100) / 100.0;
        auto m = random_matrix(rng, rows, cols, density, 1 + trial % 7);
        auto f = smith_normal_form(m);
        CHECK(f.rank == dense_rank_q(m));
        CHECK(rank(m.transpose()) == f.rank);
        for (std::size_t i = 1; i < f.invariant_factors.size(); ++i)
            CHECK(f.invariant_factors[i - 1].divides(f.invariant_factors[i]));
        for (std::uint32_t p : {2u, 3u, 5u, 7u, 11u}) {
            std::size_t expected = 0;
            for (const auto& d : f.invariant_factors) expected += d.mod(p) != 0;
            CHECK(rank_mod_p(m, p) == expected);
            CHECK(rank_mod_p(m, p) <= f.rank);
        }
        if (rows == cols) {
            std::vector<std::vector<mpz_class>> a(rows, std::vector<mpz_class>(cols));
            for (std::size_t c = 0; c < cols; ++c)
                for (const auto& e : m.column(c)) a[e.row][c] = e.value.to_mpz();
            mpz_class det = abs(dense_det(a));
            mpz_class prod = f.rank == rows ? 1 : 0;
            if (f.rank == rows)
                for (const auto& d : f.invariant_factors) prod *= d.to_mpz();
            CHECK(det == prod);
        }
    }
}

TEST_CASE("rank-nullity on random complexes") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 100; ++trial) {
        // d_out * d_in = 0 by construction: d_in = K * X where K spans ker(d_out)
        // is awkward to get directly, so build d_out = Y * P and d_in = Q * X with P * Q = 0.
        std::size_t a = 1 + rng() % 5, b = 2 + rng() % 6, c = 1 + rng() % 5;
        std::size_t split = rng() % (b + 1);
        auto x = random_matrix(rng, split, a, 0.6, 3);
        auto y = random_matrix(rng, c, b - split, 0.6, 3);
        IntMatrix q(b, split), p(b - split, b);
        for (std::size_t i = 0; i < split; ++i) q.add(i, i, 1 + rng() % 3);
        for (std::size_t i = 0; i < b - split; ++i) p.add(i, split + i, 1);
        auto d_in = q * x;
        auto d_out = y * p;
        auto h = homology_at(d_in, d_out);
        CHECK(h.free_rank() == b - rank(d_in) - rank(d_out));
        std::size_t over_f2 = homology_rank_mod_p(d_in, d_out, 2);
        CHECK(over_f2 >= h.free_rank());
    }
}

TEST_CASE("abelian group arithmetic") {
    auto g = AbelianGroup::from_cyclic_orders(ints({0, 2, 3, 1, 4}));
    CHECK(g.free_rank() == 1);
    CHECK(g.torsion() == ints({2, 12}));
    CHECK(g.str() == "Z + Z2 + Z12");
    CHECK(AbelianGroup::free_plus_z2(2, 3).str() == "Z^2 + Z2^3");
    CHECK(AbelianGroup().str() == "0");
    auto z2 = AbelianGroup(0, ints({2}));
    CHECK(z2.tensor(z2) == z2);
    CHECK(AbelianGroup::free(2).tensor(z2) == AbelianGroup::free_plus_z2(0, 2));
    CHECK(AbelianGroup::free(2).tensor(AbelianGroup::free(3)) == AbelianGroup::free(6));
    CHECK(z2.direct_sum(AbelianGroup::free(1)) == AbelianGroup::free_plus_z2(1, 1));
    CHECK(AbelianGroup(0, ints({2, 6})).p_rank(2) == 2);
    CHECK(AbelianGroup(0, ints({2, 6})).p_rank(3) == 1);
    CHECK_THROWS_AS(AbelianGroup(0, ints({4, 2})), InvalidArgument);
    CHECK_THROWS_AS(AbelianGroup(0, ints({1})), InvalidArgument);
}
