#include "qyl/gt_patterns.hpp"

#include <numeric>
#include <stdexcept>

namespace qyl {

HighestWeight::HighestWeight(std::vector<long> e) : entries(std::move(e)) {
    if (entries.empty()) throw std::invalid_argument("HighestWeight: empty");
    for (size_t i = 0; i + 1 < entries.size(); ++i)
        if (entries[i] < entries[i + 1])
            throw std::invalid_argument("HighestWeight: entries must be weakly decreasing");
}

std::vector<long> GTPattern::flat() const {
    std::vector<long> f;
    for (const auto& r : rows) f.insert(f.end(), r.begin(), r.end());
    return f;
}

bool is_pattern(const GTPattern& p) {
    int n = p.n();
    if (n == 0) return false;
    for (int r = 0; r < n; ++r)
        if (static_cast<int>(p.rows[r].size()) != n - r) return false;
    for (int k = 1; k <= n - 1; ++k)
        for (int i = 1; i <= k; ++i)
            if (!(p.entry(k + 1, i + 1) <= p.entry(k, i) && p.entry(k, i) <= p.entry(k + 1, i)))
                return false;
    return true;
}

GTPattern highest_pattern(const HighestWeight& lambda) {
    int n = lambda.n();
    GTPattern p;
    p.rows.resize(n);
    for (int r = 0; r < n; ++r)
        p.rows[r].assign(lambda.entries.begin(), lambda.entries.begin() + (n - r));
    return p;
}

namespace {

// Depth-first over rows n-1 down to 1; each row's free entries range over
// independent intervals fixed by the row above, scanned from the top value
// down so the emission order matches the basis order.
void enumerate_rows(GTPattern& p, int k, std::vector<GTPattern>& out) {
    if (k == 0) {
        out.push_back(p);
        return;
    }
    int n = p.n();
    std::vector<long> lo(k), hi(k);
    for (int i = 1; i <= k; ++i) {
        hi[i - 1] = p.entry(k + 1, i);
        lo[i - 1] = p.entry(k + 1, i + 1);
    }
    std::vector<long> cur(hi);
    while (true) {
        p.rows[n - k].assign(cur.begin(), cur.end());
        enumerate_rows(p, k - 1, out);
        int pos = k - 1;
        while (pos >= 0 && cur[pos] == lo[pos]) {
            cur[pos] = hi[pos];
            --pos;
        }
        if (pos < 0) break;
        --cur[pos];
    }
}

}  // namespace

std::vector<GTPattern> enumerate_patterns(const HighestWeight& lambda) {
    int n = lambda.n();
    GTPattern p;
    p.rows.resize(n);
    p.rows[0] = lambda.entries;
    for (int r = 1; r < n; ++r) p.rows[r].resize(n - r);
    std::vector<GTPattern> out;
    enumerate_rows(p, n - 1, out);
    return out;
}

std::vector<long> pattern_weight(const GTPattern& p) {
    int n = p.n();
    std::vector<long> w(n);
    long prev = 0;
    for (int k = 1; k <= n; ++k) {
        const auto& r = p.row(k);
        long s = std::accumulate(r.begin(), r.end(), 0L);
        w[k - 1] = s - prev;
        prev = s;
    }
    return w;
}

std::optional<GTPattern> shift_pattern(const GTPattern& p, int k, int j, int sign) {
    if (sign != 1 && sign != -1) throw std::invalid_argument("shift_pattern: sign must be +-1");
    if (!(1 <= j && j <= k && k <= p.n() - 1))
        throw std::invalid_argument("shift_pattern: index out of range");
    GTPattern s = p;
    s.entry(k, j) += sign;
    if (!is_pattern(s)) return std::nullopt;
    return s;
}

std::vector<long> l_values(const GTPattern& p, int k) {
    if (!(1 <= k && k <= p.n())) throw std::invalid_argument("l_values: row out of range");
    std::vector<long> l(k);
    for (int i = 1; i <= k; ++i) l[i - 1] = p.entry(k, i) - i + 1;
    return l;
}

}  // namespace qyl
