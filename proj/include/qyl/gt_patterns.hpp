/**
 * @file gt_patterns.hpp
 * @brief Gelfand-Tsetlin pattern combinatorics: enumeration, weights, shifts
 *        and the shifted row coordinates l_{ki} = lambda_{ki} - i + 1.
 */
#pragma once

#include <optional>
#include <vector>

#include "qyl/rational.hpp"

namespace qyl {

/// Weakly decreasing integer tuple (lambda_1, ..., lambda_n).
struct HighestWeight {
    std::vector<long> entries;

    HighestWeight() = default;
    explicit HighestWeight(std::vector<long> e);

    int n() const { return static_cast<int>(entries.size()); }
    long operator[](int i) const { return entries[i]; }  // 0-based

    friend bool operator==(const HighestWeight& a, const HighestWeight& b) {
        return a.entries == b.entries;
    }
    friend bool operator<(const HighestWeight& a, const HighestWeight& b) {
        return a.entries < b.entries;
    }
};

/**
 * Triangular array with rows of sizes n, n-1, ..., 1 stored top row first.
 * Row k (1-based, k entries) interlaces row k+1:
 * lambda_{k+1,i+1} <= lambda_{k,i} <= lambda_{k+1,i}.
 */
struct GTPattern {
    std::vector<std::vector<long>> rows;  // rows[0] has n entries, rows[n-1] has 1

    int n() const { return static_cast<int>(rows.size()); }
    /// Entry lambda_{ki}: row k (1-based, size k), position i (1-based).
    long entry(int k, int i) const { return rows[n() - k][i - 1]; }
    long& entry(int k, int i) { return rows[n() - k][i - 1]; }
    const std::vector<long>& row(int k) const { return rows[n() - k]; }

    std::vector<long> flat() const;

    friend bool operator==(const GTPattern& a, const GTPattern& b) { return a.rows == b.rows; }
};

bool is_pattern(const GTPattern& p);

/// The pattern with every entry maximal: lambda_{ki} = lambda_i.
GTPattern highest_pattern(const HighestWeight& lambda);

/**
 * All patterns with top row lambda, each exactly once, ordered
 * lexicographically by the concatenation of rows n-1 down to 1 with entries
 * compared descending (larger entry first). The highest pattern is first.
 */
std::vector<GTPattern> enumerate_patterns(const HighestWeight& lambda);

/// w_k = sum(row k) - sum(row k-1) for k = 1..n; t_k acts by q^{w_k}.
std::vector<long> pattern_weight(const GTPattern& p);

/**
 * Replace lambda_{kj} by lambda_{kj} + sign (sign = +-1). Returns the shifted
 * pattern, or nullopt when interlacing breaks — the corresponding basis
 * vector is treated as zero. Requires 1 <= j <= k <= n-1.
 */
std::optional<GTPattern> shift_pattern(const GTPattern& p, int k, int j, int sign);

/// (l_{k1}, ..., l_{kk}) with l_{ki} = lambda_{ki} - i + 1; strictly decreasing.
std::vector<long> l_values(const GTPattern& p, int k);

}  // namespace qyl
