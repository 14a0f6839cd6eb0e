/**
 * @file minors.hpp
 * @brief Quantum minors, quantum determinant and comatrix, q-antisymmetrizers
 *        and R-matrices, lowering operators, Gelfand-Tsetlin vectors and the
 *        reducibility witness vector.
 */
#pragma once

#include <vector>

#include "qyl/modules.hpp"

namespace qyl {

/// q-permutation operator on C^n (x) C^n.
MatrixR q_permutation(int n, const QValue& q);

/// A_r = sum_sigma sgn(sigma) P_sigma on (C^n)^{(x) r}, P_sigma built from a
/// reduced decomposition of sigma.
MatrixR antisymmetrizer(int n, int r, const QValue& q);

/// Trigonometric R-matrix evaluated at rational points.
MatrixR trig_r_matrix_at(int n, const QValue& q, const Rational& u, const Rational& v);

/// Fused R-matrix on (C^n)^{(x) r}: the product of the two-slot R-matrices
/// R_ij(u_i, u_j) over pairs i < j in lexicographic order.
MatrixR fused_r_matrix(int n, const QValue& q, const std::vector<Rational>& points);

/**
 * Quantum minor of the generator matrix over a module: for ascending row
 * indices the row-form expansion
 *
 *   sum_sigma (-q)^{-l(sigma)} t_{a_sigma(1) b_1}(u) ... t_{a_sigma(r) b_r}(s^{r-1} u)
 *
 * with column argument step s = q^{-2}. Unsorted index sequences are reduced
 * to sorted ones by the exchange signs (-q)^{+-l(tau)}; a repeated row or
 * column index gives the zero operator.
 */
OperatorPoly quantum_minor(const ActionGrid& g, const std::vector<int>& rows,
                           const std::vector<int>& cols);

/// Independent route: the column-form expansion (descending factor order,
/// signs (-q)^{+l(sigma)}), valid for ascending column indices.
OperatorPoly quantum_minor_col_form(const ActionGrid& g, const std::vector<int>& rows,
                                    const std::vector<int>& cols);

/// The full n x n minor; its coefficients act centrally.
OperatorPoly qdet(const ActionGrid& g);

/// Comatrix entries that_ij(u) = (-q)^{j-i} * minor with row j and column i
/// omitted; satisfies That(u) T(q^{-2n+2} u) = qdet(u) * identity.
std::vector<std::vector<OperatorPoly>> comatrix(const ActionGrid& g);

/**
 * Two normalizations of the constant-family generator matrix used by the
 * lowering-operator calculus:
 *  - Branching: T_ij(u) = (u t_ij - u^{-1} tbar_ij)/(q - q^{-1}), the
 *    half-step series on an evaluation module at a = 1;
 *  - Singular: T_ij(u) = u^2 t_ij(u^2), which clears the u^{-1} poles of the
 *    entries on single evaluation modules and of the below-diagonal entries
 *    on tensor products.
 * Minors of these entries use argument step q^{-1}.
 */
enum class LoweringVariant { Branching, Singular };

OperatorPoly lowering_entry(const ActionGrid& g, int i, int j, LoweringVariant v);

OperatorPoly lowering_minor(const ActionGrid& g, const std::vector<int>& rows,
                            const std::vector<int>& cols, LoweringVariant v);

/// tau_{ra}(u): the minor with rows a+1..r and columns a..r-1; the Branching
/// normalization carries the extra factor q^{r-a}.
OperatorPoly lowering_tau(const ActionGrid& g, int r, int a, LoweringVariant v);

/// Product of m lowering operators at q-stepped arguments:
/// tau_{ra}(u) tau_{ra}(q u) ... tau_{ra}(q^{m-1} u), symbolic in u.
OperatorPoly lowering_tau_product(const ActionGrid& g, int r, int a, long m, LoweringVariant v);

/**
 * Branching vector: the image of the highest vector under the column of
 * lowering operators tau_{na} evaluated at q^{-lambda_a}, ..., q^{-mu_a - 1}
 * for a = 1..n-1. Nonzero branching vectors generate the gl_{n-1} submodule
 * of highest weight mu. Requires a = 1 and mu interlacing lambda.
 */
VecR branching_vector(const EvalModule& m, const std::vector<long>& mu);

/**
 * Gelfand-Tsetlin vector of a pattern: iterated branching products applied to
 * the highest vector, row n down to row 2, the (r,a) block running over the
 * argument exponents -lambda_{ra} .. -lambda_{r-1,a} - 1. Requires a = 1.
 */
VecR gt_vector(const EvalModule& m, const GTPattern& pattern);

/// Reducibility witness data: on the tensor product with the stated weight
/// ordering there are p lowering strings of lengths k_1..k_p.
struct ThetaCase {
    bool swapped = false;    // true when the factors had to be exchanged first
    int p = 0;               // number of lowering strings
    std::vector<long> k;     // string lengths, all positive
};

/**
 * The singular witness vector: the first lowering string applied as-is, the
 * later ones differentiated in u before evaluation at u = q^{-lambda_a}.
 * Nonzero, annihilated by every raising coefficient, independent of the top
 * vector. The module must be the pair ordering recorded in the case.
 */
VecR theta_vector(const TensorModule& tm, const ThetaCase& tc);

/// Unprimed counterpart of theta on the left factor alone; lands on a single
/// Gelfand-Tsetlin basis direction and carries theta's leading coefficient.
VecR theta_leading_vector(const EvalModule& m, const ThetaCase& tc);

}  // namespace qyl
