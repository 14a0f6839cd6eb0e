/**
 * @file rational.hpp
 * @brief Exact rational scalars and the deformation parameter q.
 *
 * Rational wraps a GMP mpq_class: always canonical (lowest terms, denominator
 * positive), arithmetic never rounds. QValue pins the deformation parameter of
 * the whole computation and provides exact q-powers and q-integers
 * [m] = (q^m - q^-m)/(q - q^-1).
 */
#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <utility>

namespace qyl {

class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(static_cast<signed long>(n)) {}
    Rational(int n) : v_(n) {}
    Rational(long num, long den) {
        if (den == 0) throw std::domain_error("Rational: zero denominator");
        v_ = mpq_class(num, den);
        v_.canonicalize();
    }
    explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

    /// Parse "p/q" or "p"; sign on the numerator.
    static Rational parse(const std::string& s);

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    int sign() const { return sgn(v_); }

    /// "p/q", or just "p" when the denominator is 1.
    std::string str() const { return v_.get_str(); }

    Rational operator-() const { return Rational(mpq_class(-v_)); }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw std::domain_error("Rational: division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { a += b; return a; }
    friend Rational operator-(Rational a, const Rational& b) { a -= b; return a; }
    friend Rational operator*(Rational a, const Rational& b) { a *= b; return a; }
    friend Rational operator/(Rational a, const Rational& b) { a /= b; return a; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    /// Exact k-th power; k may be negative (requires a nonzero base).
    Rational pow(long k) const;

    Rational inverse() const {
        if (is_zero()) throw std::domain_error("Rational: inverse of zero");
        return Rational(mpq_class(1) / v_);
    }

    const mpq_class& raw() const { return v_; }

private:
    mpq_class v_;
};

/**
 * The deformation parameter. Restricted to rationals outside {0, 1, -1}; a
 * rational number other than 0 and +-1 is never a root of unity, so every
 * q-integer [m] with m != 0 is invertible.
 */
class QValue {
public:
    explicit QValue(const Rational& q) : q_(q) {
        if (q.is_zero() || q == Rational(1) || q == Rational(-1))
            throw std::invalid_argument("QValue: q must lie outside {0, 1, -1}");
        qinv_ = q.inverse();
        bracket_den_ = q_ - qinv_;
    }

    const Rational& value() const { return q_; }
    const Rational& inv() const { return qinv_; }

    /// q^k, exact, any integer k.
    Rational power(long k) const { return q_.pow(k); }

    /// [m] = (q^m - q^-m)/(q - q^-1).
    Rational q_int(long m) const { return (q_.pow(m) - q_.pow(-m)) / bracket_den_; }

    /// q - q^-1, the denominator of the q-integer bracket.
    const Rational& bracket_den() const { return bracket_den_; }

private:
    Rational q_;
    Rational qinv_;
    Rational bracket_den_;
};

inline QValue default_q() { return QValue(Rational(3, 2)); }

}  // namespace qyl
