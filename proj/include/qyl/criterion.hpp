/**
 * @file criterion.hpp
 * @brief Combinatorial irreducibility decision for tensor products of
 *        evaluation modules: shifted-weight sets, the crossing test, the
 *        equivalent pairwise gap condition, the reduction of general highest
 *        weights to the integral normalized form, and the multi-factor check.
 */
#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "qyl/gt_patterns.hpp"
#include "qyl/minors.hpp"

namespace qyl {

enum class Verdict { Irreducible, Reducible };

inline const char* to_string(Verdict v) {
    return v == Verdict::Irreducible ? "irreducible" : "reducible";
}

/// A_lambda = {l_1, ..., l_n} with l_i = lambda_i - i + 1; strictly decreasing.
std::vector<long> a_set(const HighestWeight& lambda);

/**
 * Two disjoint finite integer sets cross when some a_1 < b_1 < a_2 < b_2 with
 * the a's in one set and the b's in the other. When crossing and a witness
 * pointer is supplied, the four integers are stored in increasing order.
 */
bool is_crossing(const std::vector<long>& A, const std::vector<long>& B,
                 std::array<long, 4>* witness = nullptr);

/// L(lambda) (x) L(mu) is irreducible iff A_lambda \ A_mu and A_mu \ A_lambda
/// are non-crossing.
Verdict check_theorem(const HighestWeight& lambda, const HighestWeight& mu,
                      std::array<long, 4>* witness = nullptr);

/// Gap set <x_j, x_i> for i < j: the integers strictly between x_j and x_i
/// (inclusive range) minus the values x_i, x_{i+1}, ..., x_j themselves.
std::vector<long> bracket_gap_set(const std::vector<long>& x, int i, int j);

/**
 * Pairwise form of the criterion: irreducible iff for all i < j either both
 * m_j and m_i avoid <l_j, l_i> or both l_j and l_i avoid <m_j, m_i>.
 */
Verdict check_pairwise(const HighestWeight& lambda, const HighestWeight& mu);

/// Highest weight of general form alpha_i = h eps_i q^{lambda_i} on the
/// evaluation module with parameter a.
struct GeneralParams {
    Rational h = Rational(1);
    std::vector<int> eps;  // entries +-1; empty means all +1
    HighestWeight lambda;
    Rational a = Rational(1);
};

struct Reduction {
    bool outright_irreducible = false;  // parameter ratio escapes q^{2Z}
    std::string reason;
    HighestWeight lambda, mu;  // normalized integral pair (valid otherwise)
    long k = 0;                // ratio = q^{2k}
};

/**
 * Reduce a general two-factor product to the normalized integral pair: with
 * b = a h^{-2} and b' = a' h'^{-2}, the module is irreducible outright unless
 * b/b' = q^{2k} for an integer k, in which case the decision equals that of
 * the pair (lambda, lambda' - k(1,...,1)). The signs eps are absorbed by a
 * diagonal twist and never enter.
 */
Reduction reduce_general(const GeneralParams& p1, const GeneralParams& p2, const QValue& q);

/// Exact test for ratio = q^{2k}; no logarithms, monotone escape bound.
std::optional<long> q_power_exponent(const Rational& ratio, const QValue& q);

/// A k-fold product is irreducible iff every two-factor subproduct is.
Verdict multi_factor_check(const std::vector<GeneralParams>& params, const QValue& q);

/**
 * Configurations under which the reducibility witness vector exists: after
 * exchanging the factors when needed, some p in 1..n-1 has m_n inside
 * <l_{p+1}, l_p> and l_1 inside <m_{n-p+1}, m_{n-p}>, the string lengths
 * k_i = l_i - m_{n-p+i} are positive, and for p <= n-2 the interior chains
 * match (l_{p-i+1} = m_{n-i}). Reports every valid (ordering, p); callers
 * pick one and build the tensor module with that factor order.
 */
struct WitnessConfig {
    ThetaCase tc;
    HighestWeight lambda, mu;  // the ordering to build the module with
};

std::vector<WitnessConfig> theta_cases(const HighestWeight& lambda, const HighestWeight& mu);

}  // namespace qyl
