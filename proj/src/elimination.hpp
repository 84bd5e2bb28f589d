#pragma once

// Sparse elimination engine shared by the Smith normal form (over Z) and the
// rank computations over F_p. Rows are stored sorted by column; each column
// keeps a superset list of the rows that may touch it, cleaned lazily.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <utility>
#include <vector>

#include "chromkh/integer.hpp"
#include "chromkh/linalg.hpp"

namespace chromkh::detail {

struct IntegerRing {
    using T = Integer;
    static constexpr bool kIsField = false;

    T from(const Integer& v) const { return v; }
    bool is_zero(const T& a) const { return a.is_zero(); }
    bool is_unit(const T& a) const { return a.is_unit(); }
    bool divides(const T& a, const T& b) const { return a.divides(b); }
    // Exact quotient b / a, or the truncated one for Euclidean steps.
    T quotient(const T& b, const T& a) const { return b / a; }
    T sub_mul(const T& x, const T& f, const T& y) const { return x - f * y; }
    bool abs_less(const T& a, const T& b) const { return Integer::abs_less(a, b); }
};

struct PrimeField {
    using T = std::uint32_t;
    static constexpr bool kIsField = true;
    std::uint32_t p;

    T from(const Integer& v) const { return v.mod(p); }
    bool is_zero(T a) const { return a == 0; }
    bool is_unit(T a) const { return a != 0; }
    bool divides(T a, T) const { return a != 0; }
    T mul(T a, T b) const { return static_cast<T>((std::uint64_t{a} * b) % p); }
    T inverse(T a) const {
        // Fermat: a^(p-2)
        std::uint64_t result = 1, base = a, e = p - 2;
        while (e) {
            if (e & 1) result = result * base % p;
            base = base * base % p;
            e >>= 1;
        }
        return static_cast<T>(result);
    }
    T quotient(T b, T a) const { return mul(b, inverse(a)); }
    T sub_mul(T x, T f, T y) const {
        auto prod = mul(f, y);
        return x >= prod ? x - prod : static_cast<T>(x + p - prod);
    }
    bool abs_less(T, T) const { return false; }
};

template <class Ring>
class SparseEliminator {
public:
    using T = typename Ring::T;
    struct Entry {
        std::uint32_t col;
        T val;
    };
    using Row = std::vector<Entry>;

    SparseEliminator(Ring ring, const IntMatrix& m) : ring_(std::move(ring)), rows_(m.rows()), col_rows_(m.cols()) {
        for (std::size_t c = 0; c < m.cols(); ++c) {
            for (const auto& e : m.column(c)) {
                T v = ring_.from(e.value);
                if (ring_.is_zero(v)) continue;
                rows_[e.row].push_back({static_cast<std::uint32_t>(c), std::move(v)});
                col_rows_[c].push_back(e.row);
            }
        }
        row_dead_.assign(rows_.size(), 0);
        col_dead_.assign(col_rows_.size(), 0);
    }

    // Diagonalises the matrix; returns the pivot values. Over a field only the
    // count matters; over Z the absolute values are the diagonal entries of a
    // matrix equivalent to the input.
    std::vector<T> run() {
        while (true) {
            bool progress = pass(/*units_only=*/true);
            if constexpr (!Ring::kIsField) {
                if (!progress) progress = pass(/*units_only=*/false);
            }
            if (!progress) break;
        }
        if constexpr (!Ring::kIsField) euclid_phase();
        return std::move(pivots_);
    }

private:
    const T* find(const Row& row, std::uint32_t col) const {
        auto it = std::lower_bound(row.begin(), row.end(), col, [](const Entry& e, std::uint32_t c) { return e.col < c; });
        return (it != row.end() && it->col == col) ? &it->val : nullptr;
    }
    T* find(Row& row, std::uint32_t col) {
        auto it = std::lower_bound(row.begin(), row.end(), col, [](const Entry& e, std::uint32_t c) { return e.col < c; });
        return (it != row.end() && it->col == col) ? &it->val : nullptr;
    }

    // Live rows with a nonzero entry in column c (compacts the list).
    std::vector<std::uint32_t>& clean_column(std::uint32_t c) {
        auto& list = col_rows_[c];
        std::sort(list.begin(), list.end());
        list.erase(std::unique(list.begin(), list.end()), list.end());
        list.erase(std::remove_if(list.begin(), list.end(),
                                  [&](std::uint32_t r) { return row_dead_[r] || find(rows_[r], c) == nullptr; }),
                   list.end());
        return list;
    }

    // row[target] -= factor * row[source]
    void axpy(std::uint32_t target, const T& factor, std::uint32_t source) {
        const Row& src = rows_[source];
        Row& dst = rows_[target];
        scratch_.clear();
        scratch_.reserve(dst.size() + src.size());
        std::size_t i = 0, j = 0;
        while (i < dst.size() || j < src.size()) {
            if (j == src.size() || (i < dst.size() && dst[i].col < src[j].col)) {
                scratch_.push_back(std::move(dst[i++]));
            } else if (i == dst.size() || src[j].col < dst[i].col) {
                T v = ring_.sub_mul(T{}, factor, src[j].val);
                if (!ring_.is_zero(v)) {
                    col_rows_[src[j].col].push_back(target);
                    scratch_.push_back({src[j].col, std::move(v)});
                }
                ++j;
            } else {
                T v = ring_.sub_mul(dst[i].val, factor, src[j].val);
                if (!ring_.is_zero(v)) scratch_.push_back({dst[i].col, std::move(v)});
                ++i;
                ++j;
            }
        }
        dst.swap(scratch_);
    }

    void retire(std::uint32_t r, std::uint32_t c, T pivot) {
        row_dead_[r] = 1;
        col_dead_[c] = 1;
        Row().swap(rows_[r]);
        std::vector<std::uint32_t>().swap(col_rows_[c]);
        pivots_.push_back(std::move(pivot));
    }

    // Pivot (r, c) divides every entry of its column and row: eliminate the
    // column by row operations; the row is then cleared by column operations
    // that touch no other row, so it can simply be dropped.
    void eliminate(std::uint32_t r, std::uint32_t c) {
        T pivot = *find(rows_[r], c);
        auto others = col_rows_[c];
        for (auto i : others) {
            if (i == r) continue;
            const T* a = find(rows_[i], c);
            if (!a) continue;
            T factor = ring_.quotient(*a, pivot);
            axpy(i, factor, r);
        }
        retire(r, c, std::move(pivot));
    }

    bool pivot_divides_row(std::uint32_t r, const T& pivot) const {
        for (const auto& e : rows_[r])
            if (!ring_.divides(pivot, e.val)) return false;
        return true;
    }

    bool pass(bool units_only) {
        std::vector<std::uint32_t> order;
        for (std::uint32_t c = 0; c < col_rows_.size(); ++c)
            if (!col_dead_[c]) order.push_back(c);
        std::stable_sort(order.begin(), order.end(),
                         [&](std::uint32_t a, std::uint32_t b) { return col_rows_[a].size() < col_rows_[b].size(); });
        bool progress = false;
        for (auto c : order) {
            if (col_dead_[c]) continue;
            auto& list = clean_column(c);
            if (list.empty()) {
                col_dead_[c] = 1;
                continue;
            }
            std::optional<std::uint32_t> best;
            if (units_only) {
                for (auto r : list) {
                    if (!ring_.is_unit(*find(rows_[r], c))) continue;
                    if (!best || rows_[r].size() < rows_[*best].size()) best = r;
                }
            } else {
                std::vector<std::uint32_t> candidates(list.begin(), list.end());
                std::sort(candidates.begin(), candidates.end(), [&](std::uint32_t a, std::uint32_t b) {
                    const T& va = *find(rows_[a], c);
                    const T& vb = *find(rows_[b], c);
                    if (ring_.abs_less(va, vb)) return true;
                    if (ring_.abs_less(vb, va)) return false;
                    return rows_[a].size() < rows_[b].size();
                });
                for (auto r : candidates) {
                    const T& v = *find(rows_[r], c);
                    bool ok = std::all_of(list.begin(), list.end(),
                                          [&](std::uint32_t i) { return ring_.divides(v, *find(rows_[i], c)); });
                    if (ok && pivot_divides_row(r, v)) {
                        best = r;
                        break;
                    }
                }
            }
            if (!best) continue;
            eliminate(*best, c);
            progress = true;
        }
        return progress;
    }

    // General Euclidean reduction for whatever resists the divisor passes.
    void euclid_phase() {
        while (true) {
            std::optional<std::pair<std::uint32_t, std::uint32_t>> best;
            for (std::uint32_t r = 0; r < rows_.size(); ++r) {
                if (row_dead_[r]) continue;
                for (const auto& e : rows_[r]) {
                    if (!best || ring_.abs_less(e.val, *find(rows_[best->first], best->second))) best = {r, e.col};
                }
            }
            if (!best) return;
            auto [r, c] = *best;
            while (true) {
                T pivot = *find(rows_[r], c);
                auto others = clean_column(c);
                std::optional<std::uint32_t> smaller;
                for (auto i : others) {
                    if (i == r) continue;
                    T factor = ring_.quotient(*find(rows_[i], c), pivot);
                    if (!ring_.is_zero(factor)) axpy(i, factor, r);
                    const T* rem = find(rows_[i], c);
                    if (rem && (!smaller || ring_.abs_less(*rem, *find(rows_[*smaller], c)))) smaller = i;
                }
                if (smaller) {
                    r = *smaller;
                    continue;
                }
                // Column c holds only the pivot; fix up row r with column operations.
                std::optional<std::uint32_t> bad;
                for (const auto& e : rows_[r])
                    if (e.col != c && !ring_.divides(pivot, e.val)) {
                        bad = e.col;
                        break;
                    }
                if (!bad) {
                    retire(r, c, std::move(pivot));
                    break;
                }
                T* b = find(rows_[r], *bad);
                *b = *b - ring_.quotient(*b, pivot) * pivot;
                c = *bad;
            }
        }
    }

    Ring ring_;
    std::vector<Row> rows_;
    std::vector<std::vector<std::uint32_t>> col_rows_;
    std::vector<char> row_dead_;
    std::vector<char> col_dead_;
    std::vector<T> pivots_;
    Row scratch_;
};

}  // namespace chromkh::detail
