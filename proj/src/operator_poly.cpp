#include "qyl/operator_poly.hpp"

#include <stdexcept>

namespace qyl {

void OperatorPoly::add_term(int e, const SparseMat& m) {
    if (m.is_zero()) return;
    auto it = c_.find(e);
    if (it == c_.end()) {
        c_.emplace(e, m);
    } else {
        it->second = it->second + m;
        if (it->second.is_zero()) c_.erase(it);
    }
}

OperatorPoly& OperatorPoly::operator+=(const OperatorPoly& o) {
    for (const auto& [e, m] : o.c_) add_term(e, m);
    return *this;
}

OperatorPoly& OperatorPoly::operator-=(const OperatorPoly& o) {
    for (const auto& [e, m] : o.c_) add_term(e, Rational(-1) * m);
    return *this;
}

OperatorPoly operator*(const OperatorPoly& a, const OperatorPoly& b) {
    OperatorPoly r(a.rows_, b.cols_);
    for (const auto& [ea, ma] : a.c_)
        for (const auto& [eb, mb] : b.c_) r.add_term(ea + eb, ma * mb);
    return r;
}

OperatorPoly operator*(const Rational& s, const OperatorPoly& p) {
    OperatorPoly r(p.rows_, p.cols_);
    if (s.is_zero()) return r;
    for (const auto& [e, m] : p.c_) r.c_.emplace(e, s * m);
    return r;
}

OperatorPoly operator*(const LaurentPoly& s, const OperatorPoly& p) {
    OperatorPoly r(p.rows_, p.cols_);
    for (const auto& [es, vs] : s.terms())
        for (const auto& [e, m] : p.c_) r.add_term(es + e, vs * m);
    return r;
}

OperatorPoly OperatorPoly::scale_arg(const Rational& c) const {
    if (c.is_zero()) throw std::domain_error("OperatorPoly::scale_arg: zero scale");
    OperatorPoly r(rows_, cols_);
    for (const auto& [e, m] : c_) r.c_.emplace(e, c.pow(e) * m);
    return r;
}

OperatorPoly OperatorPoly::formal_derivative() const {
    OperatorPoly r(rows_, cols_);
    for (const auto& [e, m] : c_) {
        if (e == 0) continue;
        r.add_term(e - 1, Rational(static_cast<long>(e)) * m);
    }
    return r;
}

SparseMat OperatorPoly::eval_at(const Rational& x) const {
    if (x.is_zero()) throw std::domain_error("OperatorPoly::eval_at: x must be nonzero");
    SparseMat acc(rows_, cols_);
    for (const auto& [e, m] : c_) acc = acc + x.pow(e) * m;
    return acc;
}

MultiSeries MultiSeries::lift(const OperatorPoly& p, int var, int nvars) {
    MultiSeries r(nvars, p.rows(), p.cols());
    for (const auto& [e, m] : p.coeffs()) {
        std::vector<int> key(nvars, 0);
        key[var] = e;
        r.c_.emplace(std::move(key), m);
    }
    return r;
}

void MultiSeries::add_term(const std::vector<int>& e, const SparseMat& m) {
    if (m.is_zero()) return;
    auto it = c_.find(e);
    if (it == c_.end()) {
        c_.emplace(e, m);
    } else {
        it->second = it->second + m;
        if (it->second.is_zero()) c_.erase(it);
    }
}

MultiSeries& MultiSeries::operator+=(const MultiSeries& o) {
    for (const auto& [e, m] : o.c_) add_term(e, m);
    return *this;
}

MultiSeries& MultiSeries::operator-=(const MultiSeries& o) {
    for (const auto& [e, m] : o.c_) add_term(e, Rational(-1) * m);
    return *this;
}

MultiSeries operator*(const MultiSeries& a, const MultiSeries& b) {
    MultiSeries r(a.nvars_, a.rows_, b.cols_);
    for (const auto& [ea, ma] : a.c_)
        for (const auto& [eb, mb] : b.c_) {
            std::vector<int> e(a.nvars_);
            for (int v = 0; v < a.nvars_; ++v) e[v] = ea[v] + eb[v];
            r.add_term(e, ma * mb);
        }
    return r;
}

MultiSeries operator*(const Rational& s, const MultiSeries& p) {
    MultiSeries r(p.nvars_, p.rows_, p.cols_);
    if (s.is_zero()) return r;
    for (const auto& [e, m] : p.c_) r.c_.emplace(e, s * m);
    return r;
}

MultiSeries MultiSeries::mono_mul(const std::vector<int>& e, const Rational& c) const {
    MultiSeries r(nvars_, rows_, cols_);
    if (c.is_zero()) return r;
    for (const auto& [ek, m] : c_) {
        std::vector<int> key(nvars_);
        for (int v = 0; v < nvars_; ++v) key[v] = ek[v] + e[v];
        r.c_.emplace(std::move(key), c * m);
    }
    return r;
}

}  // namespace qyl
