#include "chromkh/poly.hpp"

#include <algorithm>
#include <sstream>

#include "chromkh/error.hpp"

namespace chromkh {

LaurentPoly::LaurentPoly(std::vector<std::string> variables) : vars_(std::move(variables)) {
    if (vars_.empty()) throw InvalidArgument("a polynomial needs at least one variable");
}

LaurentPoly LaurentPoly::constant(std::vector<std::string> variables, const Integer& c) {
    LaurentPoly p(std::move(variables));
    p.add_term(Exponents(p.vars_.size(), 0), c);
    return p;
}

LaurentPoly LaurentPoly::monomial(std::vector<std::string> variables, Exponents exps, const Integer& c) {
    LaurentPoly p(std::move(variables));
    p.add_term(exps, c);
    return p;
}

LaurentPoly LaurentPoly::variable(std::vector<std::string> variables, std::size_t index, int power) {
    Exponents e(variables.size(), 0);
    e.at(index) = power;
    return monomial(std::move(variables), std::move(e));
}

Integer LaurentPoly::coefficient(const Exponents& exps) const {
    auto it = terms_.find(exps);
    return it == terms_.end() ? Integer(0) : it->second;
}

void LaurentPoly::add_term(const Exponents& exps, const Integer& c) {
    if (exps.size() != vars_.size()) throw InvalidArgument("exponent vector has wrong length");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(exps, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void LaurentPoly::require_same_variables(const LaurentPoly& o) const {
    if (vars_ != o.vars_) throw InvalidArgument("polynomials over different variables");
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
    require_same_variables(o);
    LaurentPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const { return *this + (-o); }

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
    require_same_variables(o);
    LaurentPoly r(vars_);
    Exponents e(vars_.size());
    for (const auto& [ea, ca] : terms_)
        for (const auto& [eb, cb] : o.terms_) {
            for (std::size_t k = 0; k < e.size(); ++k) e[k] = ea[k] + eb[k];
            r.add_term(e, ca * cb);
        }
    return r;
}

LaurentPoly LaurentPoly::pow(unsigned n) const {
    LaurentPoly result = constant(vars_, 1), base = *this;
    while (n) {
        if (n & 1) result *= base;
        base *= base;
        n >>= 1;
    }
    return result;
}

LaurentPoly LaurentPoly::substitute(std::size_t index, const LaurentPoly& replacement) const {
    if (index >= vars_.size()) throw InvalidArgument("substitution index out of range");
    const auto& out_vars = replacement.variables();
    LaurentPoly r(out_vars);
    for (const auto& [e, c] : terms_) {
        if (e[index] < 0) throw InvalidArgument("cannot substitute into a negative power of " + vars_[index]);
        LaurentPoly term = replacement.pow(static_cast<unsigned>(e[index]));
        // Remaining variables must exist in the output variable list.
        Exponents rest(out_vars.size(), 0);
        for (std::size_t k = 0; k < vars_.size(); ++k) {
            if (k == index || e[k] == 0) continue;
            auto it = std::find(out_vars.begin(), out_vars.end(), vars_[k]);
            if (it == out_vars.end()) throw InvalidArgument("variable " + vars_[k] + " missing after substitution");
            rest[static_cast<std::size_t>(it - out_vars.begin())] += e[k];
        }
        r += term * monomial(out_vars, rest, c);
    }
    return r;
}

std::string LaurentPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        bool negative = c.sign() < 0;
        Integer mag = c.abs();
        if (first)
            out << (negative ? "-" : "");
        else
            out << (negative ? " - " : " + ");
        first = false;

        std::string mono;
        for (std::size_t k = 0; k < vars_.size(); ++k) {
            if (e[k] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += vars_[k];
            if (e[k] != 1) mono += "^" + std::to_string(e[k]);
        }
        if (mono.empty())
            out << mag.str();
        else if (mag.is_unit())
            out << mono;
        else
            out << mag.str() << "*" << mono;
    }
    return out.str();
}

}  // namespace chromkh
