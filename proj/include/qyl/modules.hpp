/**
 * @file modules.hpp
 * @brief q-Yangian modules with finite-support generator actions: evaluation
 *        modules L_a(lambda) and their tensor products under the coproduct.
 */
#pragma once

#include <memory>
#include <vector>

#include "qyl/gln_rep.hpp"
#include "qyl/operator_poly.hpp"

namespace qyl {

/// A module presented through the actions of the generating series
/// t_ij(u); every entry has finite u-support.
struct ActionGrid {
    int n = 0;
    int dim = 0;
    QValue q{Rational(3, 2)};
    std::vector<OperatorPoly> t;  // (i-1)*n + (j-1)

    const OperatorPoly& tij(int i, int j) const { return t[(i - 1) * n + (j - 1)]; }
    OperatorPoly& tij(int i, int j) { return t[(i - 1) * n + (j - 1)]; }
};

/// Coproduct action on a tensor product: t_ij(u) -> sum_k t_ik(u) (x) t_kj(u).
ActionGrid tensor_actions(const ActionGrid& a, const ActionGrid& b);

/**
 * L(lambda) pulled back through T(u) -> T - a Tbar u^{-1}: the diagonal series
 * become t_i - a t_i^{-1} u^{-1}, entries below the diagonal stay constant and
 * entries above are pure u^{-1} terms.
 */
struct EvalModule {
    std::shared_ptr<const GlnRep> rep;
    Rational a;
    ActionGrid act;
    int top_index = 0;

    int dim() const { return act.dim; }
    int n() const { return act.n; }
    const QValue& q() const { return rep->q; }
};

EvalModule make_eval_module(std::shared_ptr<const GlnRep> rep, const Rational& a);
inline EvalModule make_eval_module(const HighestWeight& lambda, const QValue& q,
                                   const Rational& a = Rational(1)) {
    return make_eval_module(std::make_shared<const GlnRep>(build_rep(lambda, q)), a);
}

/// The other half of the generator matrix on an evaluation module:
/// Tbar(u) -> Tbar - a^{-1} T u (used only for restriction spot checks).
ActionGrid eval_tbar_actions(const EvalModule& m);

struct TensorModule {
    EvalModule left, right;
    ActionGrid act;  // u-support inside {0,-1,-2}
    int top_index = 0;

    int dim() const { return act.dim; }
    int n() const { return act.n; }
    const QValue& q() const { return left.rep->q; }
    /// Product-basis weight of each index: weight(left pattern) + weight(right pattern).
    std::vector<std::vector<long>> basis_weights() const;
};

TensorModule make_tensor_module(EvalModule left, EvalModule right);

/// k-fold tensor product folded left to right; weights accompany the actions
/// so downstream kernels and closures can work per weight block.
struct FoldedModule {
    ActionGrid act;
    std::vector<std::vector<long>> weights;
    int top_index = 0;
};

FoldedModule multi_tensor(const std::vector<EvalModule>& factors);

/// Constant-coefficient gl_n generator e_k or f_k acting on any module given
/// through its t and tbar action grids (recovered from the R-matrix
/// presentation entries at u-exponent 0).
SparseMat gln_e_from_actions(const ActionGrid& tact, const ActionGrid& tbar_act, int k,
                             const QValue& q);

}  // namespace qyl
