#include "chromkh/linalg.hpp"

#include <algorithm>
#include <sstream>

#include "chromkh/error.hpp"
#include "elimination.hpp"

namespace chromkh {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols, std::vector<Triplet> triplets)
    : rows_(rows), cols_(cols), data_(cols) {
    std::sort(triplets.begin(), triplets.end(), [](const Triplet& a, const Triplet& b) {
        return a.col != b.col ? a.col < b.col : a.row < b.row;
    });
    for (auto& t : triplets) {
        if (t.row >= rows || t.col >= cols) throw InvalidArgument("matrix entry index out of range");
        auto& column = data_[t.col];
        if (!column.empty() && column.back().row == t.row) {
            column.back().value += t.value;
        } else {
            column.push_back({t.row, std::move(t.value)});
        }
    }
    for (auto& column : data_)
        column.erase(std::remove_if(column.begin(), column.end(), [](const MatrixEntry& e) { return e.value.is_zero(); }),
                     column.end());
}

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.data_[i].push_back({static_cast<std::uint32_t>(i), Integer(1)});
    return m;
}

IntMatrix IntMatrix::from_dense(const std::vector<std::vector<std::int64_t>>& dense) {
    std::size_t rows = dense.size();
    std::size_t cols = rows ? dense[0].size() : 0;
    IntMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        if (dense[r].size() != cols) throw InvalidArgument("ragged dense matrix");
        for (std::size_t c = 0; c < cols; ++c)
            if (dense[r][c] != 0) m.data_[c].push_back({static_cast<std::uint32_t>(r), Integer(dense[r][c])});
    }
    return m;
}

std::size_t IntMatrix::nonzeros() const {
    std::size_t n = 0;
    for (const auto& column : data_) n += column.size();
    return n;
}

void IntMatrix::add(std::size_t row, std::size_t col, const Integer& value) {
    if (row >= rows_ || col >= cols_) throw InvalidArgument("matrix entry index out of range");
    auto& column = data_[col];
    auto it = std::lower_bound(column.begin(), column.end(), row,
                               [](const MatrixEntry& e, std::size_t r) { return e.row < r; });
    if (it != column.end() && it->row == row) {
        it->value += value;
        if (it->value.is_zero()) column.erase(it);
    } else if (!value.is_zero()) {
        column.insert(it, {static_cast<std::uint32_t>(row), value});
    }
}

Integer IntMatrix::at(std::size_t row, std::size_t col) const {
    const auto& column = data_.at(col);
    auto it = std::lower_bound(column.begin(), column.end(), row,
                               [](const MatrixEntry& e, std::size_t r) { return e.row < r; });
    return (it != column.end() && it->row == row) ? it->value : Integer(0);
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix t(cols_, rows_);
    // Walking columns in order keeps every transposed column sorted.
    for (std::size_t c = 0; c < cols_; ++c)
        for (const auto& e : data_[c]) t.data_[e.row].push_back({static_cast<std::uint32_t>(c), e.value});
    return t;
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
    if (cols_ != rhs.rows_) throw InvalidArgument("matrix product shape mismatch");
    IntMatrix out(rows_, rhs.cols_);
    std::vector<Integer> acc(rows_);
    std::vector<std::uint32_t> touched;
    std::vector<char> mark(rows_, 0);
    for (std::size_t j = 0; j < rhs.cols_; ++j) {
        touched.clear();
        for (const auto& b : rhs.data_[j]) {
            for (const auto& a : data_[b.row]) {
                if (!mark[a.row]) {
                    mark[a.row] = 1;
                    touched.push_back(a.row);
                    acc[a.row] = 0;
                }
                acc[a.row] += a.value * b.value;
            }
        }
        std::sort(touched.begin(), touched.end());
        for (auto r : touched) {
            mark[r] = 0;
            if (!acc[r].is_zero()) out.data_[j].push_back({r, acc[r]});
        }
    }
    return out;
}

bool operator==(const IntMatrix& a, const IntMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
    for (std::size_t c = 0; c < a.cols_; ++c) {
        const auto& x = a.data_[c];
        const auto& y = b.data_[c];
        if (x.size() != y.size()) return false;
        for (std::size_t i = 0; i < x.size(); ++i)
            if (x[i].row != y[i].row || x[i].value != y[i].value) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------

namespace {

// Turns the diagonal of an equivalent diagonal matrix into invariant factors.
std::vector<Integer> normalise_diagonal(std::vector<Integer> diag) {
    for (auto& d : diag) d = d.abs();
    diag.erase(std::remove_if(diag.begin(), diag.end(), [](const Integer& d) { return d.is_zero(); }), diag.end());
    std::sort(diag.begin(), diag.end());
    // diag(a, b) ~ diag(gcd, lcm); sweeping pairs yields a divisibility chain.
    for (std::size_t i = 0; i < diag.size(); ++i) {
        for (std::size_t j = i + 1; j < diag.size(); ++j) {
            if (diag[i].divides(diag[j])) continue;
            Integer g = Integer::gcd(diag[i], diag[j]);
            Integer l = Integer::lcm(diag[i], diag[j]);
            diag[i] = std::move(g);
            diag[j] = std::move(l);
        }
    }
    return diag;
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& m) {
    detail::SparseEliminator<detail::IntegerRing> elim(detail::IntegerRing{}, m);
    auto pivots = elim.run();
    SmithForm form;
    form.rank = pivots.size();
    std::size_t units = 0;
    std::vector<Integer> rest;
    for (auto& p : pivots) {
        if (p.is_unit())
            ++units;
        else
            rest.push_back(std::move(p));
    }
    form.invariant_factors.assign(units, Integer(1));
    for (auto& d : normalise_diagonal(std::move(rest))) form.invariant_factors.push_back(std::move(d));
    return form;
}

std::size_t rank(const IntMatrix& m) { return smith_normal_form(m).rank; }

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::size_t rank_mod_p(const IntMatrix& m, std::uint64_t p) {
    if (p >= (std::uint64_t{1} << 32) || !is_prime(p)) throw InvalidArgument("modulus " + std::to_string(p) + " is not a supported prime");
    detail::SparseEliminator<detail::PrimeField> elim(detail::PrimeField{static_cast<std::uint32_t>(p)}, m);
    return elim.run().size();
}

void check_composable(const IntMatrix& d_in, const IntMatrix& d_out) {
    if (d_in.rows() != d_out.cols()) {
        std::ostringstream msg;
        msg << "differential shapes do not compose: d_in is " << d_in.rows() << "x" << d_in.cols() << ", d_out is "
            << d_out.rows() << "x" << d_out.cols();
        throw InvalidArgument(msg.str());
    }
    if (!(d_out * d_in).is_zero()) throw AssertionFailure("d_out * d_in != 0: not a chain complex");
}

AbelianGroup homology_at(const IntMatrix& d_in, const IntMatrix& d_out) {
    check_composable(d_in, d_out);
    return homology_from_smith(smith_normal_form(d_in), d_in.rows(), rank(d_out));
}

AbelianGroup homology_from_smith(const SmithForm& in, std::size_t middle, std::size_t out_rank) {
    if (in.rank + out_rank > middle) throw AssertionFailure("ranks exceed the middle dimension");
    std::vector<Integer> torsion;
    for (const auto& d : in.invariant_factors)
        if (!d.is_unit()) torsion.push_back(d);
    return AbelianGroup(middle - in.rank - out_rank, std::move(torsion));
}

std::size_t homology_rank_mod_p(const IntMatrix& d_in, const IntMatrix& d_out, std::uint64_t p) {
    check_composable(d_in, d_out);
    return d_in.rows() - rank_mod_p(d_in, p) - rank_mod_p(d_out, p);
}

// ---------------------------------------------------------------------------

AbelianGroup::AbelianGroup(std::size_t free_rank, std::vector<Integer> torsion)
    : free_rank_(free_rank), torsion_(std::move(torsion)) {
    for (const auto& t : torsion_)
        if (!(Integer(1) < t)) throw InvalidArgument("torsion coefficients must exceed 1");
    for (std::size_t i = 1; i < torsion_.size(); ++i)
        if (!torsion_[i - 1].divides(torsion_[i])) throw InvalidArgument("torsion coefficients must form a divisibility chain");
}

AbelianGroup AbelianGroup::free_plus_z2(std::size_t free_rank, std::size_t twos) {
    return AbelianGroup(free_rank, std::vector<Integer>(twos, Integer(2)));
}

AbelianGroup AbelianGroup::from_cyclic_orders(const std::vector<Integer>& orders) {
    std::size_t free = 0;
    std::vector<Integer> finite;
    for (const auto& o : orders) {
        if (o.is_zero())
            ++free;
        else if (!o.is_unit())
            finite.push_back(o.abs());
    }
    auto chain = normalise_diagonal(std::move(finite));
    chain.erase(std::remove_if(chain.begin(), chain.end(), [](const Integer& d) { return d.is_unit(); }), chain.end());
    return AbelianGroup(free, std::move(chain));
}

std::size_t AbelianGroup::p_rank(std::uint32_t p) const {
    std::size_t n = 0;
    for (const auto& t : torsion_)
        if (t.mod(p) == 0) ++n;
    return n;
}

AbelianGroup AbelianGroup::direct_sum(const AbelianGroup& other) const {
    std::vector<Integer> orders(free_rank_ + other.free_rank_, Integer(0));
    orders.insert(orders.end(), torsion_.begin(), torsion_.end());
    orders.insert(orders.end(), other.torsion_.begin(), other.torsion_.end());
    return from_cyclic_orders(orders);
}

AbelianGroup AbelianGroup::tensor(const AbelianGroup& other) const {
    // Z (x) G = G, Z_a (x) Z_b = Z_gcd(a,b)
    std::vector<Integer> orders(free_rank_ * other.free_rank_, Integer(0));
    for (std::size_t i = 0; i < free_rank_; ++i) orders.insert(orders.end(), other.torsion_.begin(), other.torsion_.end());
    for (std::size_t i = 0; i < other.free_rank_; ++i) orders.insert(orders.end(), torsion_.begin(), torsion_.end());
    for (const auto& a : torsion_)
        for (const auto& b : other.torsion_) orders.push_back(Integer::gcd(a, b));
    return from_cyclic_orders(orders);
}

std::string AbelianGroup::str() const {
    if (is_trivial()) return "0";
    std::ostringstream out;
    bool first = true;
    auto sep = [&] {
        if (!first) out << " + ";
        first = false;
    };
    if (free_rank_ > 0) {
        sep();
        out << "Z";
        if (free_rank_ > 1) out << "^" << free_rank_;
    }
    for (std::size_t i = 0; i < torsion_.size();) {
        std::size_t j = i;
        while (j < torsion_.size() && torsion_[j] == torsion_[i]) ++j;
        sep();
        out << "Z" << torsion_[i].str();
        if (j - i > 1) out << "^" << (j - i);
        i = j;
    }
    return out.str();
}

}  // namespace chromkh
