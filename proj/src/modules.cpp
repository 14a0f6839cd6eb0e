#include "qyl/modules.hpp"

#include <stdexcept>

namespace qyl {

ActionGrid tensor_actions(const ActionGrid& a, const ActionGrid& b) {
    if (a.n != b.n) throw std::invalid_argument("tensor_actions: rank mismatch");
    ActionGrid g;
    g.n = a.n;
    g.dim = a.dim * b.dim;
    g.q = a.q;
    g.t.assign(static_cast<size_t>(g.n) * g.n, OperatorPoly(g.dim, g.dim));
    for (int i = 1; i <= g.n; ++i)
        for (int j = 1; j <= g.n; ++j) {
            OperatorPoly acc(g.dim, g.dim);
            for (int k = 1; k <= g.n; ++k) {
                const OperatorPoly& lk = a.tij(i, k);
                const OperatorPoly& rk = b.tij(k, j);
                for (const auto& [e1, m1] : lk.coeffs())
                    for (const auto& [e2, m2] : rk.coeffs())
                        acc.add_term(e1 + e2, SparseMat::kron(m1, m2));
            }
            g.tij(i, j) = std::move(acc);
        }
    return g;
}

EvalModule make_eval_module(std::shared_ptr<const GlnRep> rep, const Rational& a) {
    if (a.is_zero()) throw std::invalid_argument("make_eval_module: parameter must be nonzero");
    EvalModule m;
    m.rep = std::move(rep);
    m.a = a;
    m.top_index = m.rep->top_index;
    TMatrices tm = t_matrices(*m.rep);
    const int n = m.rep->n();
    m.act.n = n;
    m.act.dim = m.rep->dim;
    m.act.q = m.rep->q;
    m.act.t.assign(static_cast<size_t>(n) * n, OperatorPoly(m.rep->dim, m.rep->dim));
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            OperatorPoly p(m.rep->dim, m.rep->dim);
            p.add_term(0, tm.t[i - 1][j - 1]);
            p.add_term(-1, (Rational(-1) * a) * tm.tbar[i - 1][j - 1]);
            m.act.tij(i, j) = std::move(p);
        }
    return m;
}

ActionGrid eval_tbar_actions(const EvalModule& m) {
    TMatrices tm = t_matrices(*m.rep);
    const int n = m.n();
    ActionGrid g;
    g.n = n;
    g.dim = m.dim();
    g.q = m.q();
    g.t.assign(static_cast<size_t>(n) * n, OperatorPoly(g.dim, g.dim));
    const Rational ainv = m.a.inverse();
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            OperatorPoly p(g.dim, g.dim);
            p.add_term(0, tm.tbar[i - 1][j - 1]);
            p.add_term(1, (Rational(-1) * ainv) * tm.t[i - 1][j - 1]);
            g.tij(i, j) = std::move(p);
        }
    return g;
}

std::vector<std::vector<long>> TensorModule::basis_weights() const {
    std::vector<std::vector<long>> w;
    w.reserve(dim());
    std::vector<std::vector<long>> lw, rw;
    for (const auto& p : left.rep->basis) lw.push_back(pattern_weight(p));
    for (const auto& p : right.rep->basis) rw.push_back(pattern_weight(p));
    for (const auto& a : lw)
        for (const auto& b : rw) {
            std::vector<long> s(a.size());
            for (size_t i = 0; i < a.size(); ++i) s[i] = a[i] + b[i];
            w.push_back(std::move(s));
        }
    return w;
}

TensorModule make_tensor_module(EvalModule left, EvalModule right) {
    TensorModule tm;
    tm.act = tensor_actions(left.act, right.act);
    tm.top_index = left.top_index * right.dim() + right.top_index;
    tm.left = std::move(left);
    tm.right = std::move(right);
    return tm;
}

FoldedModule multi_tensor(const std::vector<EvalModule>& factors) {
    if (factors.empty()) throw std::invalid_argument("multi_tensor: no factors");
    FoldedModule fm;
    fm.act = factors[0].act;
    fm.top_index = factors[0].top_index;
    std::vector<std::vector<long>> w;
    for (const auto& p : factors[0].rep->basis) w.push_back(pattern_weight(p));
    for (size_t f = 1; f < factors.size(); ++f) {
        fm.act = tensor_actions(fm.act, factors[f].act);
        fm.top_index = fm.top_index * factors[f].dim() + factors[f].top_index;
        std::vector<std::vector<long>> nw;
        nw.reserve(w.size() * factors[f].rep->basis.size());
        for (const auto& a : w)
            for (const auto& p : factors[f].rep->basis) {
                std::vector<long> pw = pattern_weight(p);
                for (size_t i = 0; i < pw.size(); ++i) pw[i] += a[i];
                nw.push_back(std::move(pw));
            }
        w = std::move(nw);
    }
    fm.weights = std::move(w);
    return fm;
}

SparseMat gln_e_from_actions(const ActionGrid& tact, const ActionGrid& tbar_act, int k,
                             const QValue& q) {
    // e_k = -tbar_{k,k+1} t_{kk} / (q - q^{-1}) at u-exponent 0.
    SparseMat prod = tbar_act.tij(k, k + 1).coeff(0) * tact.tij(k, k).coeff(0);
    return (Rational(-1) * q.bracket_den().inverse()) * prod;
}

}  // namespace qyl
