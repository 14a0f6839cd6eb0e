/**
 * @file oracle.hpp
 * @brief Ground-truth irreducibility by exact linear algebra: the singular
 *        space and cyclicity from the top vector, with an independent
 *        algebra-closure (Burnside) double check.
 *
 * Generators shift the gl_n weight grading by e_i - e_j, so kernels and span
 * closures decompose over weight blocks; the blockwise computation is an
 * optimization with no effect on results.
 */
#pragma once

#include <optional>

#include "qyl/modules.hpp"

namespace qyl {

struct OracleVerdict {
    bool cyclic_from_top = false;
    int singular_dim = 0;
    bool irreducible = false;
    std::optional<int> burnside_algebra_dim;
};

/**
 * Joint kernel of the raising action coefficients t_ij^{(r)}, i < j,
 * r in {1,2} (the r = 0 coefficients vanish above the diagonal and higher r
 * vanish on a two-factor product). Always contains the top vector.
 */
std::vector<VecR> singular_space(const TensorModule& tm);

/// Does the span of the top vector under all action coefficients fill the
/// module? With include_tbar the closure also applies the tbar-series
/// coefficients (restriction spot check; same answer expected).
bool is_cyclic_from_top(const TensorModule& tm, bool include_tbar = false);

/// irreducible = cyclic_from_top and singular_dim == 1.
OracleVerdict oracle_irreducible(const TensorModule& tm, bool with_burnside = false,
                                 int burnside_bound = 36);

/// Dimension of the linear span of all products of the generators (seeded
/// with the identity), graded by weight shift. Throws "burnside bound" when
/// the module dimension exceeds the guard.
int burnside_algebra_dim(const std::vector<SparseMat>& gens,
                         const std::vector<std::vector<long>>& weights, int bound = 36);

/// Full matrix algebra reached, i.e. span dimension equals dim^2.
bool burnside_check(const TensorModule& tm, int bound = 36);
bool burnside_check(const FoldedModule& fm, int bound = 36);

/// Every nonzero coefficient matrix of every t_ij(u) on the module.
std::vector<SparseMat> action_generators(const ActionGrid& g);

/// Blockwise invariant-span closure; equals the plain closure.
std::vector<VecR> graded_invariant_span(const std::vector<SparseMat>& gens,
                                        const std::vector<std::vector<long>>& gen_shift,
                                        const std::vector<std::vector<long>>& weights,
                                        const std::vector<VecR>& seeds);

}  // namespace qyl
