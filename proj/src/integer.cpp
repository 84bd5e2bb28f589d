#include "chromkh/integer.hpp"

#include <limits>

namespace chromkh {

namespace {

constexpr std::int64_t kMin = std::numeric_limits<std::int64_t>::min();

mpz_class from_i64(std::int64_t v) {
    mpz_class z;
    // mpz_set_si takes long, which is 64-bit on the supported platforms.
    mpz_set_si(z.get_mpz_t(), static_cast<long>(v));
    return z;
}

}  // namespace

void Integer::assign(const mpz_class& v) {
    if (mpz_fits_slong_p(v.get_mpz_t())) {
        small_ = mpz_get_si(v.get_mpz_t());
        big_.reset();
    } else {
        small_ = 0;
        big_ = std::make_unique<mpz_class>(v);
    }
}

mpz_class Integer::to_mpz() const { return big_ ? *big_ : from_i64(small_); }

int Integer::sign() const {
    if (big_) return sgn(*big_);
    return (small_ > 0) - (small_ < 0);
}

Integer Integer::abs() const {
    if (!big_ && small_ != kMin) return Integer(small_ < 0 ? -small_ : small_);
    return Integer(mpz_class(::abs(to_mpz())));
}

Integer Integer::operator-() const {
    if (!big_ && small_ != kMin) return Integer(-small_);
    return Integer(mpz_class(-to_mpz()));
}

Integer operator+(const Integer& a, const Integer& b) {
    std::int64_t r;
    if (!a.big_ && !b.big_ && !__builtin_add_overflow(a.small_, b.small_, &r)) return Integer(r);
    return Integer(mpz_class(a.to_mpz() + b.to_mpz()));
}

Integer operator-(const Integer& a, const Integer& b) {
    std::int64_t r;
    if (!a.big_ && !b.big_ && !__builtin_sub_overflow(a.small_, b.small_, &r)) return Integer(r);
    return Integer(mpz_class(a.to_mpz() - b.to_mpz()));
}

Integer operator*(const Integer& a, const Integer& b) {
    std::int64_t r;
    if (!a.big_ && !b.big_ && !__builtin_mul_overflow(a.small_, b.small_, &r)) return Integer(r);
    return Integer(mpz_class(a.to_mpz() * b.to_mpz()));
}

Integer operator/(const Integer& a, const Integer& b) {
    if (!a.big_ && !b.big_ && !(a.small_ == kMin && b.small_ == -1)) return Integer(a.small_ / b.small_);
    mpz_class q;
    mpz_tdiv_q(q.get_mpz_t(), a.to_mpz().get_mpz_t(), b.to_mpz().get_mpz_t());
    return Integer(q);
}

Integer operator%(const Integer& a, const Integer& b) {
    if (!a.big_ && !b.big_ && !(a.small_ == kMin && b.small_ == -1)) return Integer(a.small_ % b.small_);
    mpz_class r;
    mpz_tdiv_r(r.get_mpz_t(), a.to_mpz().get_mpz_t(), b.to_mpz().get_mpz_t());
    return Integer(r);
}

bool operator==(const Integer& a, const Integer& b) {
    // Canonical form: big_ is engaged only when the value does not fit.
    if (!a.big_ && !b.big_) return a.small_ == b.small_;
    if (a.big_ && b.big_) return *a.big_ == *b.big_;
    return false;
}

bool operator<(const Integer& a, const Integer& b) {
    if (!a.big_ && !b.big_) return a.small_ < b.small_;
    return a.to_mpz() < b.to_mpz();
}

bool Integer::abs_less(const Integer& a, const Integer& b) {
    if (!a.big_ && !b.big_ && a.small_ != kMin && b.small_ != kMin) {
        auto x = a.small_ < 0 ? -a.small_ : a.small_;
        auto y = b.small_ < 0 ? -b.small_ : b.small_;
        return x < y;
    }
    return mpz_cmpabs(a.to_mpz().get_mpz_t(), b.to_mpz().get_mpz_t()) < 0;
}

bool Integer::divides(const Integer& b) const {
    if (!big_ && !b.big_ && small_ != kMin) return small_ != 0 && b.small_ % small_ == 0;
    return mpz_divisible_p(b.to_mpz().get_mpz_t(), to_mpz().get_mpz_t()) != 0;
}

Integer Integer::gcd(const Integer& a, const Integer& b) {
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), a.to_mpz().get_mpz_t(), b.to_mpz().get_mpz_t());
    return Integer(g);
}

Integer Integer::lcm(const Integer& a, const Integer& b) {
    mpz_class l;
    mpz_lcm(l.get_mpz_t(), a.to_mpz().get_mpz_t(), b.to_mpz().get_mpz_t());
    return Integer(l);
}

std::uint32_t Integer::mod(std::uint32_t p) const {
    if (!big_) {
        auto r = small_ % static_cast<std::int64_t>(p);
        if (r < 0) r += p;
        return static_cast<std::uint32_t>(r);
    }
    return static_cast<std::uint32_t>(mpz_fdiv_ui(big_->get_mpz_t(), p));
}

std::string Integer::str() const { return big_ ? big_->get_str() : std::to_string(small_); }

}  // namespace chromkh
