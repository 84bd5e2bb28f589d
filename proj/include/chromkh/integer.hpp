#pragma once

#include <cstdint>
#include <memory>
#include <string>

#include <gmpxx.h>

namespace chromkh {

// Arbitrary-precision integer. Values that fit in int64 are held inline;
// anything larger spills to a GMP integer. Arithmetic never overflows.
class Integer {
public:
    Integer() = default;
    Integer(std::int64_t v) : small_(v) {}  // NOLINT(google-explicit-constructor)
    explicit Integer(const mpz_class& v) { assign(v); }

    Integer(const Integer& o) : small_(o.small_) {
        if (o.big_) big_ = std::make_unique<mpz_class>(*o.big_);
    }
    Integer(Integer&&) noexcept = default;
    Integer& operator=(const Integer& o) {
        if (this != &o) {
            small_ = o.small_;
            big_ = o.big_ ? std::make_unique<mpz_class>(*o.big_) : nullptr;
        }
        return *this;
    }
    Integer& operator=(Integer&&) noexcept = default;

    bool is_small() const { return !big_; }
    std::int64_t small() const { return small_; }
    mpz_class to_mpz() const;

    bool is_zero() const { return !big_ && small_ == 0; }
    bool is_unit() const { return !big_ && (small_ == 1 || small_ == -1); }
    int sign() const;

    Integer abs() const;
    Integer operator-() const;

    friend Integer operator+(const Integer& a, const Integer& b);
    friend Integer operator-(const Integer& a, const Integer& b);
    friend Integer operator*(const Integer& a, const Integer& b);
    Integer& operator+=(const Integer& b) { return *this = *this + b; }
    Integer& operator-=(const Integer& b) { return *this = *this - b; }
    Integer& operator*=(const Integer& b) { return *this = *this * b; }

    // Truncating division, as C++ does for built-ins.
    friend Integer operator/(const Integer& a, const Integer& b);
    friend Integer operator%(const Integer& a, const Integer& b);

    friend bool operator==(const Integer& a, const Integer& b);
    friend bool operator<(const Integer& a, const Integer& b);
    friend bool operator!=(const Integer& a, const Integer& b) { return !(a == b); }
    friend bool operator>(const Integer& a, const Integer& b) { return b < a; }
    friend bool operator<=(const Integer& a, const Integer& b) { return !(b < a); }
    friend bool operator>=(const Integer& a, const Integer& b) { return !(a < b); }

    // |a| < |b|
    static bool abs_less(const Integer& a, const Integer& b);
    bool divides(const Integer& b) const;  // *this | b, *this nonzero
    static Integer gcd(const Integer& a, const Integer& b);
    static Integer lcm(const Integer& a, const Integer& b);

    // Residue in [0, p) for a word-sized prime p.
    std::uint32_t mod(std::uint32_t p) const;

    std::string str() const;

private:
    void assign(const mpz_class& v);

    std::int64_t small_ = 0;
    std::unique_ptr<mpz_class> big_;
};

}  // namespace chromkh
