/**
 * @file operator_poly.hpp
 * @brief Matrices whose entries are Laurent polynomials in the spectral
 *        variable, stored coefficient-wise: M(u) = sum_e u^e M_e.
 *
 * Equality of operators is coefficient-wise equality of the M_e, which is how
 * every identity suite below decides operator identities exactly.
 */
#pragma once

#include <map>
#include <set>
#include <vector>

#include "qyl/laurent.hpp"
#include "qyl/matrix.hpp"

namespace qyl {

class OperatorPoly {
public:
    OperatorPoly() = default;
    OperatorPoly(int rows, int cols) : rows_(rows), cols_(cols) {}

    static OperatorPoly term(int e, SparseMat m) {
        OperatorPoly p(m.rows, m.cols);
        if (!m.is_zero()) p.c_.emplace(e, std::move(m));
        return p;
    }
    static OperatorPoly constant(SparseMat m) { return term(0, std::move(m)); }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool is_zero() const { return c_.empty(); }

    const std::map<int, SparseMat>& coeffs() const { return c_; }
    SparseMat coeff(int e) const {
        auto it = c_.find(e);
        return it == c_.end() ? SparseMat(rows_, cols_) : it->second;
    }
    std::set<int> support() const {
        std::set<int> s;
        for (const auto& [e, m] : c_) s.insert(e);
        return s;
    }

    void add_term(int e, const SparseMat& m);

    OperatorPoly& operator+=(const OperatorPoly& o);
    OperatorPoly& operator-=(const OperatorPoly& o);
    friend OperatorPoly operator+(OperatorPoly a, const OperatorPoly& b) { a += b; return a; }
    friend OperatorPoly operator-(OperatorPoly a, const OperatorPoly& b) { a -= b; return a; }
    friend OperatorPoly operator*(const OperatorPoly& a, const OperatorPoly& b);
    friend OperatorPoly operator*(const Rational& s, const OperatorPoly& p);
    friend OperatorPoly operator*(const LaurentPoly& s, const OperatorPoly& p);

    friend bool operator==(const OperatorPoly& a, const OperatorPoly& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.c_ == b.c_;
    }

    /// Substitute u -> c*u.
    OperatorPoly scale_arg(const Rational& c) const;
    /// Termwise formal derivative in u, defined for any exponent support.
    OperatorPoly formal_derivative() const;
    /// Specialize u to a nonzero rational point.
    SparseMat eval_at(const Rational& x) const;

    LaurentPoly entry(int i, int j) const {
        LaurentPoly p;
        for (const auto& [e, m] : c_) p.add_term(e, m.at(i, j));
        return p;
    }

private:
    int rows_ = 0, cols_ = 0;
    std::map<int, SparseMat> c_;
};

/// Operator-valued polynomial in several spectral variables; exponent vectors
/// index the coefficient matrices. Used to expand multi-variable identities.
class MultiSeries {
public:
    MultiSeries(int nvars, int rows, int cols) : nvars_(nvars), rows_(rows), cols_(cols) {}

    /// Place a one-variable operator into variable slot `var`.
    static MultiSeries lift(const OperatorPoly& p, int var, int nvars);

    int nvars() const { return nvars_; }
    bool is_zero() const { return c_.empty(); }
    const std::map<std::vector<int>, SparseMat>& coeffs() const { return c_; }

    void add_term(const std::vector<int>& e, const SparseMat& m);

    MultiSeries& operator+=(const MultiSeries& o);
    MultiSeries& operator-=(const MultiSeries& o);
    friend MultiSeries operator+(MultiSeries a, const MultiSeries& b) { a += b; return a; }
    friend MultiSeries operator-(MultiSeries a, const MultiSeries& b) { a -= b; return a; }
    friend MultiSeries operator*(const MultiSeries& a, const MultiSeries& b);
    friend MultiSeries operator*(const Rational& s, const MultiSeries& p);

    /// Multiply by the scalar monomial c * prod_v x_v^{e_v}.
    MultiSeries mono_mul(const std::vector<int>& e, const Rational& c) const;

    friend bool operator==(const MultiSeries& a, const MultiSeries& b) {
        return a.nvars_ == b.nvars_ && a.c_ == b.c_;
    }

private:
    int nvars_ = 0, rows_ = 0, cols_ = 0;
    std::map<std::vector<int>, SparseMat> c_;
};

}  // namespace qyl
