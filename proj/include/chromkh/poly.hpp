#pragma once

#include <map>
#include <string>
#include <vector>

#include "chromkh/integer.hpp"

namespace chromkh {

// Integer Laurent polynomial in a fixed, ordered list of named variables.
// Terms are keyed by exponent vectors; zero coefficients are never stored.
class LaurentPoly {
public:
    using Exponents = std::vector<int>;

    LaurentPoly() : LaurentPoly(std::vector<std::string>{"A"}) {}
    explicit LaurentPoly(std::vector<std::string> variables);

    static LaurentPoly constant(std::vector<std::string> variables, const Integer& c);
    static LaurentPoly monomial(std::vector<std::string> variables, Exponents exps, const Integer& c = 1);
    // variables[index]^power
    static LaurentPoly variable(std::vector<std::string> variables, std::size_t index, int power = 1);

    const std::vector<std::string>& variables() const { return vars_; }
    const std::map<Exponents, Integer>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Integer coefficient(const Exponents& exps) const;

    void add_term(const Exponents& exps, const Integer& c);

    LaurentPoly operator+(const LaurentPoly& o) const;
    LaurentPoly operator-(const LaurentPoly& o) const;
    LaurentPoly operator*(const LaurentPoly& o) const;
    LaurentPoly operator-() const;
    LaurentPoly& operator+=(const LaurentPoly& o) { return *this = *this + o; }
    LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }
    LaurentPoly pow(unsigned n) const;

    // Substitutes `replacement` (over the result variables) for variables[index].
    // Negative powers of that variable are rejected.
    LaurentPoly substitute(std::size_t index, const LaurentPoly& replacement) const;

    // Canonical text: terms in descending exponent order, e.g. "-A^4 - A^-4",
    // "A*mu^2 + B*mu". The zero polynomial prints as "0".
    std::string str() const;

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
        return a.vars_ == b.vars_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

private:
    void require_same_variables(const LaurentPoly& o) const;

    std::vector<std::string> vars_;
    std::map<Exponents, Integer> terms_;
};

}  // namespace chromkh
