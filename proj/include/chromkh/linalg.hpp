#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "chromkh/integer.hpp"

namespace chromkh {

struct MatrixEntry {
    std::uint32_t row;
    Integer value;
};

struct Triplet {
    std::uint32_t row;
    std::uint32_t col;
    Integer value;
};

// Sparse integer matrix in compressed-column form. Absent entries are zero;
// each column is sorted by row and never stores an explicit zero.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(cols) {}
    // Duplicated (row, col) pairs are summed.
    IntMatrix(std::size_t rows, std::size_t cols, std::vector<Triplet> triplets);

    static IntMatrix identity(std::size_t n);
    static IntMatrix from_dense(const std::vector<std::vector<std::int64_t>>& dense);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::size_t nonzeros() const;

    void add(std::size_t row, std::size_t col, const Integer& value);
    Integer at(std::size_t row, std::size_t col) const;
    const std::vector<MatrixEntry>& column(std::size_t col) const { return data_[col]; }

    IntMatrix transpose() const;
    IntMatrix operator*(const IntMatrix& rhs) const;
    bool is_zero() const { return nonzeros() == 0; }

    friend bool operator==(const IntMatrix& a, const IntMatrix& b);

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<std::vector<MatrixEntry>> data_;
};

struct SmithForm {
    std::vector<Integer> invariant_factors;  // d1 | d2 | ... | dr, all positive
    std::size_t rank = 0;
};

// Finitely generated abelian group: Z^free_rank + Z/t1 + ... + Z/tk with
// t1 | t2 | ... | tk and every ti > 1.
class AbelianGroup {
public:
    AbelianGroup() = default;
    explicit AbelianGroup(std::size_t free_rank, std::vector<Integer> torsion = {});

    static AbelianGroup free(std::size_t rank) { return AbelianGroup(rank); }
    // Z^free + Z_2^twos
    static AbelianGroup free_plus_z2(std::size_t free_rank, std::size_t twos);
    // Accepts arbitrary cyclic orders (0 means Z, 1 is dropped) and normalises.
    static AbelianGroup from_cyclic_orders(const std::vector<Integer>& orders);

    std::size_t free_rank() const { return free_rank_; }
    const std::vector<Integer>& torsion() const { return torsion_; }

    bool is_trivial() const { return free_rank_ == 0 && torsion_.empty(); }
    bool is_free() const { return torsion_.empty(); }
    AbelianGroup free_part() const { return AbelianGroup(free_rank_); }
    AbelianGroup torsion_part() const { return AbelianGroup(0, torsion_); }
    // Number of cyclic factors of order divisible by p.
    std::size_t p_rank(std::uint32_t p) const;
    // dim over F_p of (G tensor F_p).
    std::size_t rank_mod_p(std::uint32_t p) const { return free_rank_ + p_rank(p); }

    AbelianGroup direct_sum(const AbelianGroup& other) const;
    AbelianGroup tensor(const AbelianGroup& other) const;

    // "0", "Z", "Z^2 + Z2^3 + Z4", ...
    std::string str() const;

    friend bool operator==(const AbelianGroup& a, const AbelianGroup& b) {
        return a.free_rank_ == b.free_rank_ && a.torsion_ == b.torsion_;
    }
    friend bool operator!=(const AbelianGroup& a, const AbelianGroup& b) { return !(a == b); }

private:
    std::size_t free_rank_ = 0;
    std::vector<Integer> torsion_;
};

SmithForm smith_normal_form(const IntMatrix& m);

// Rank over the rationals.
std::size_t rank(const IntMatrix& m);

bool is_prime(std::uint64_t n);

// Rank over F_p. Throws InvalidArgument unless p is a prime below 2^32.
std::size_t rank_mod_p(const IntMatrix& m, std::uint64_t p);

// ker(d_out) / im(d_in), for d_in : A -> B and d_out : B -> C.
// Throws InvalidArgument on a shape mismatch and AssertionFailure when
// d_out * d_in != 0.
AbelianGroup homology_at(const IntMatrix& d_in, const IntMatrix& d_out);

// The same group from precomputed pieces: `in` is the Smith form of d_in,
// `middle` the dimension of B and out_rank the rank of d_out.
AbelianGroup homology_from_smith(const SmithForm& in, std::size_t middle, std::size_t out_rank);

// dim over F_p of ker(d_out) / im(d_in).
std::size_t homology_rank_mod_p(const IntMatrix& d_in, const IntMatrix& d_out, std::uint64_t p);

// Shape and d_out * d_in == 0 checks shared by the homology routines.
void check_composable(const IntMatrix& d_in, const IntMatrix& d_out);

}  // namespace chromkh
