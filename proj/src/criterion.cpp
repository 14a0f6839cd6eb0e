#include "qyl/criterion.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace qyl {

std::vector<long> a_set(const HighestWeight& lambda) {
    std::vector<long> l(lambda.n());
    for (int i = 1; i <= lambda.n(); ++i) l[i - 1] = lambda[i - 1] - i + 1;
    return l;
}

namespace {

std::vector<long> sorted_difference(const std::vector<long>& a, const std::vector<long>& b) {
    std::set<long> sb(b.begin(), b.end());
    std::vector<long> d;
    for (long x : a)
        if (!sb.count(x)) d.push_back(x);
    std::sort(d.begin(), d.end());
    return d;
}

// Greedy alternating quadruple a_1 < b_1 < a_2 < b_2 with the a's drawn from
// `first` and the b's from `second`; minimal choices preserve existence.
bool alternating_quadruple(const std::vector<long>& first, const std::vector<long>& second,
                           std::array<long, 4>* witness) {
    if (first.empty() || second.empty()) return false;
    long a1 = first.front();
    auto b1 = std::upper_bound(second.begin(), second.end(), a1);
    if (b1 == second.end()) return false;
    auto a2 = std::upper_bound(first.begin(), first.end(), *b1);
    if (a2 == first.end()) return false;
    auto b2 = std::upper_bound(second.begin(), second.end(), *a2);
    if (b2 == second.end()) return false;
    if (witness) *witness = {a1, *b1, *a2, *b2};
    return true;
}

}  // namespace

bool is_crossing(const std::vector<long>& A, const std::vector<long>& B,
                 std::array<long, 4>* witness) {
    std::vector<long> sa = A, sb = B;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    return alternating_quadruple(sa, sb, witness) || alternating_quadruple(sb, sa, witness);
}

Verdict check_theorem(const HighestWeight& lambda, const HighestWeight& mu,
                      std::array<long, 4>* witness) {
    if (lambda.n() != mu.n()) throw std::invalid_argument("check_theorem: rank mismatch");
    std::vector<long> al = a_set(lambda), am = a_set(mu);
    std::vector<long> d1 = sorted_difference(al, am), d2 = sorted_difference(am, al);
    return is_crossing(d1, d2, witness) ? Verdict::Reducible : Verdict::Irreducible;
}

std::vector<long> bracket_gap_set(const std::vector<long>& x, int i, int j) {
    if (!(1 <= i && i < j && j <= static_cast<int>(x.size())))
        throw std::invalid_argument("bracket_gap_set: need 1 <= i < j <= n");
    std::set<long> excluded;
    for (int t = i; t <= j; ++t) excluded.insert(x[t - 1]);
    std::vector<long> out;
    for (long v = x[j - 1]; v <= x[i - 1]; ++v)
        if (!excluded.count(v)) out.push_back(v);
    return out;
}

Verdict check_pairwise(const HighestWeight& lambda, const HighestWeight& mu) {
    if (lambda.n() != mu.n()) throw std::invalid_argument("check_pairwise: rank mismatch");
    const int n = lambda.n();
    std::vector<long> l = a_set(lambda), m = a_set(mu);
    auto in = [](const std::vector<long>& s, long v) {
        return std::find(s.begin(), s.end(), v) != s.end();
    };
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            std::vector<long> gl = bracket_gap_set(l, i, j);
            std::vector<long> gm = bracket_gap_set(m, i, j);
            bool l_side = !in(gl, m[j - 1]) && !in(gl, m[i - 1]);
            bool m_side = !in(gm, l[j - 1]) && !in(gm, l[i - 1]);
            if (!l_side && !m_side) return Verdict::Reducible;
        }
    return Verdict::Irreducible;
}

std::optional<long> q_power_exponent(const Rational& ratio, const QValue& q) {
    if (ratio.sign() <= 0) return std::nullopt;
    const Rational s = q.power(2);
    if (ratio.is_one()) return 0L;
    // |s| != 1, so the powers s^k are strictly monotone in k; walk toward the
    // ratio and stop once it is passed.
    bool grow = (s > Rational(1)) == (ratio > Rational(1));
    Rational step = grow ? s : s.inverse();
    long sign = grow ? 1 : -1;
    Rational cur(1);
    long k = 0;
    bool up = ratio > Rational(1);
    while (true) {
        cur *= step;
        k += sign;
        if (cur == ratio) return k;
        if (up ? cur > ratio : cur < ratio) return std::nullopt;
    }
}

Reduction reduce_general(const GeneralParams& p1, const GeneralParams& p2, const QValue& q) {
    auto check = [](const GeneralParams& p) {
        if (p.h.is_zero() || p.a.is_zero())
            throw std::invalid_argument("reduce_general: h and a must be nonzero");
        for (int e : p.eps)
            if (e != 1 && e != -1) throw std::invalid_argument("reduce_general: eps entries must be +-1");
    };
    check(p1);
    check(p2);
    if (p1.lambda.n() != p2.lambda.n()) throw std::invalid_argument("reduce_general: rank mismatch");

    Rational b1 = p1.a / (p1.h * p1.h);
    Rational b2 = p2.a / (p2.h * p2.h);
    Reduction r;
    auto k = q_power_exponent(b1 / b2, q);
    if (!k) {
        r.outright_irreducible = true;
        r.reason = "ratio not in q^{2Z}";
        return r;
    }
    r.k = *k;
    r.lambda = p1.lambda;
    std::vector<long> shifted = p2.lambda.entries;
    for (auto& x : shifted) x -= r.k;
    r.mu = HighestWeight(shifted);
    return r;
}

Verdict multi_factor_check(const std::vector<GeneralParams>& params, const QValue& q) {
    if (params.empty()) throw std::invalid_argument("multi_factor_check: need at least one factor");
    for (size_t i = 0; i < params.size(); ++i)
        for (size_t j = i + 1; j < params.size(); ++j) {
            Reduction r = reduce_general(params[i], params[j], q);
            if (r.outright_irreducible) continue;
            if (check_theorem(r.lambda, r.mu) == Verdict::Reducible) return Verdict::Reducible;
        }
    return Verdict::Irreducible;
}

namespace {

void collect_cases(const HighestWeight& lam, const HighestWeight& mu, bool swapped,
                   std::vector<WitnessConfig>& out) {
    const int n = lam.n();
    std::vector<long> l = a_set(lam), m = a_set(mu);
    auto contains = [](const std::vector<long>& s, long v) {
        return std::find(s.begin(), s.end(), v) != s.end();
    };
    for (int p = 1; p <= n - 1; ++p) {
        if (!contains(bracket_gap_set(l, p, p + 1), m[n - 1])) continue;
        if (!contains(bracket_gap_set(m, n - p, n - p + 1), l[0])) continue;
        bool ok = true;
        std::vector<long> k(p);
        for (int i = 1; i <= p && ok; ++i) {
            k[i - 1] = l[i - 1] - m[n - p + i - 1];
            if (k[i - 1] <= 0) ok = false;
        }
        if (p <= n - 2)
            for (int i = 1; i <= p - 1 && ok; ++i)
                if (l[p - i] != m[n - i - 1]) ok = false;
        if (!ok) continue;
        WitnessConfig cfg;
        cfg.tc.swapped = swapped;
        cfg.tc.p = p;
        cfg.tc.k = std::move(k);
        cfg.lambda = lam;
        cfg.mu = mu;
        out.push_back(std::move(cfg));
    }
}

}  // namespace

std::vector<WitnessConfig> theta_cases(const HighestWeight& lambda, const HighestWeight& mu) {
    std::vector<WitnessConfig> out;
    collect_cases(lambda, mu, false, out);
    collect_cases(mu, lambda, true, out);
    return out;
}

}  // namespace qyl
