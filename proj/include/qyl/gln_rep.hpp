/**
 * @file gln_rep.hpp
 * @brief The irreducible quantized gl_n module L(lambda) as explicit matrices
 *        in the Gelfand-Tsetlin basis, with the generator matrices of both
 *        presentations and an exhaustive defining-relation verifier.
 */
#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "qyl/gt_patterns.hpp"
#include "qyl/matrix.hpp"

namespace qyl {

struct GlnRep {
    HighestWeight lambda;
    QValue q;
    std::vector<GTPattern> basis;
    int dim = 0;
    int top_index = 0;  // position of the all-maximal pattern

    std::vector<SparseMat> t, t_inv;  // n diagonal matrices, 1-based via t[k-1]
    std::vector<SparseMat> e, f;      // n-1 raising/lowering matrices

    int n() const { return lambda.n(); }
    /// Basis position of a pattern, or -1 when it is not a pattern of lambda.
    int index_of(const GTPattern& p) const;

    std::map<std::vector<long>, int> index;
};

/**
 * Build L(lambda): t_k acts diagonally by q^{w_k}; e_k and f_k move one
 * pattern entry in row k by +-1 with coefficients
 *
 *   e_k:  -prod_i [l_{k+1,i} - l_{kj}] / prod_{i != j} [l_{ki} - l_{kj}]
 *   f_k:  +prod_i [l_{k-1,i} - l_{kj}] / prod_{i != j} [l_{ki} - l_{kj}]
 *
 * where [m] is the q-integer and targets that break interlacing are dropped.
 * Denominators are q-integers of differences of distinct l-values, hence
 * nonzero for the admitted q.
 */
GlnRep build_rep(const HighestWeight& lambda, const QValue& q);

/**
 * Root vector e_ij (i != j, 1-based) by the q-commutator recursion
 * [a,b]_z = ab - z ba through a middle index k; any admissible k yields the
 * same matrix. middle = 0 picks i+1 (ascending) or i-1 (descending).
 */
SparseMat root_vector_matrix(const GlnRep& rep, int i, int j, int middle = 0);

/// Entries of the generator matrices T and Tbar of the R-matrix presentation.
struct TMatrices {
    std::vector<std::vector<SparseMat>> t;     // t[i-1][j-1]; zero above the diagonal
    std::vector<std::vector<SparseMat>> tbar;  // zero below the diagonal
};

/**
 * T and Tbar on L(lambda): t_ii = t_i, tbar_ii = t_i^{-1},
 * t_ij = (q - q^{-1}) t_j e_ij for i > j and
 * tbar_ij = -(q - q^{-1}) e_ij t_i^{-1} for i < j.
 */
TMatrices t_matrices(const GlnRep& rep);

/**
 * Check every defining relation of the Chevalley-type presentation
 * (commutations, conjugations, [e_i,f_j], Serre) and the three constant
 * R-matrix exchange relations on T and Tbar, all as exact matrix identities.
 * Returns the names of violated relations; empty means all hold.
 */
std::vector<std::string> verify_gln_relations(const GlnRep& rep);

/// R = q sum E_ii x E_ii + sum_{i != j} E_ii x E_jj + (q - q^{-1}) sum_{i<j} E_ij x E_ji.
MatrixR constant_r_matrix(int n, const QValue& q);

}  // namespace qyl
