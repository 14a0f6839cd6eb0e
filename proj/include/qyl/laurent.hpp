/**
 * @file laurent.hpp
 * @brief Sparse Laurent polynomials in the spectral variable u over Rational.
 *
 * Coefficients are stored by exponent; zero coefficients are never kept.
 * All operations are exact.
 */
#pragma once

#include <map>
#include <stdexcept>

#include "qyl/rational.hpp"

namespace qyl {

class LaurentPoly {
public:
    LaurentPoly() = default;

    static LaurentPoly constant(const Rational& c) { return monomial(0, c); }
    static LaurentPoly monomial(int e, const Rational& c) {
        LaurentPoly p;
        if (!c.is_zero()) p.c_[e] = c;
        return p;
    }
    static LaurentPoly one() { return constant(Rational(1)); }

    bool is_zero() const { return c_.empty(); }
    const std::map<int, Rational>& terms() const { return c_; }

    Rational coeff(int e) const {
        auto it = c_.find(e);
        return it == c_.end() ? Rational(0) : it->second;
    }

    int min_exp() const {
        if (is_zero()) throw std::domain_error("LaurentPoly: degree of zero");
        return c_.begin()->first;
    }
    int max_exp() const {
        if (is_zero()) throw std::domain_error("LaurentPoly: degree of zero");
        return c_.rbegin()->first;
    }

    void add_term(int e, const Rational& v) {
        if (v.is_zero()) return;
        auto [it, fresh] = c_.emplace(e, v);
        if (!fresh) {
            it->second += v;
            if (it->second.is_zero()) c_.erase(it);
        }
    }

    LaurentPoly& operator+=(const LaurentPoly& o) {
        for (const auto& [e, v] : o.c_) add_term(e, v);
        return *this;
    }
    LaurentPoly& operator-=(const LaurentPoly& o) {
        for (const auto& [e, v] : o.c_) add_term(e, -v);
        return *this;
    }
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { a += b; return a; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { a -= b; return a; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
        LaurentPoly r;
        for (const auto& [ea, va] : a.c_)
            for (const auto& [eb, vb] : b.c_) r.add_term(ea + eb, va * vb);
        return r;
    }
    friend LaurentPoly operator*(const Rational& s, const LaurentPoly& p) {
        LaurentPoly r;
        if (s.is_zero()) return r;
        for (const auto& [e, v] : p.c_) r.c_[e] = s * v;
        return r;
    }
    LaurentPoly operator-() const { return Rational(-1) * *this; }

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.c_ == b.c_; }

    /// Substitute u -> c*u (c nonzero): the exponent-e coefficient picks up c^e.
    LaurentPoly scale_arg(const Rational& c) const {
        if (c.is_zero()) throw std::domain_error("LaurentPoly::scale_arg: zero scale");
        LaurentPoly r;
        for (const auto& [e, v] : c_) r.add_term(e, c.pow(e) * v);
        return r;
    }

    /// Derivative of a genuine polynomial; rejects negative exponents.
    LaurentPoly derivative() const {
        if (!is_zero() && min_exp() < 0) throw std::domain_error("not a polynomial");
        return formal_derivative();
    }

    /// Termwise formal derivative e*u^{e-1}, defined for any support.
    LaurentPoly formal_derivative() const {
        LaurentPoly r;
        for (const auto& [e, v] : c_) {
            if (e == 0) continue;
            r.add_term(e - 1, Rational(static_cast<long>(e)) * v);
        }
        return r;
    }

    Rational eval_at(const Rational& x) const {
        if (x.is_zero()) throw std::domain_error("LaurentPoly::eval_at: x must be nonzero");
        Rational acc(0);
        for (const auto& [e, v] : c_) acc += x.pow(e) * v;
        return acc;
    }

private:
    std::map<int, Rational> c_;
};

}  // namespace qyl
