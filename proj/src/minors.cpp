#include "qyl/minors.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace qyl {

namespace {

long inversions(const std::vector<int>& v) {
    long inv = 0;
    for (size_t i = 0; i < v.size(); ++i)
        for (size_t j = i + 1; j < v.size(); ++j)
            if (v[i] > v[j]) ++inv;
    return inv;
}

bool has_duplicate(std::vector<int> v) {
    std::sort(v.begin(), v.end());
    return std::adjacent_find(v.begin(), v.end()) != v.end();
}

std::vector<std::vector<int>> all_permutations(int r) {
    std::vector<int> p(r);
    std::iota(p.begin(), p.end(), 0);
    std::vector<std::vector<int>> out;
    do out.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    return out;
}

// sigma = s_{w_1} ... s_{w_l} reduced; peeled off the right at descents.
std::vector<int> reduced_word(std::vector<int> sigma) {
    std::vector<int> word;
    bool moved = true;
    while (moved) {
        moved = false;
        for (size_t i = 0; i + 1 < sigma.size(); ++i) {
            if (sigma[i] > sigma[i + 1]) {
                word.push_back(static_cast<int>(i));
                std::swap(sigma[i], sigma[i + 1]);
                moved = true;
                break;
            }
        }
    }
    std::reverse(word.begin(), word.end());
    return word;
}

// Embed an operator on slots (a,b) of (C^n)^{(x) r}; the matrix acts on the
// two marked copies, identity elsewhere.
MatrixR embed_two_slot(const MatrixR& m, int n, int r, int a, int b) {
    int side = 1;
    for (int i = 0; i < r; ++i) side *= n;
    MatrixR out(side, side);
    std::vector<int> digits(r);
    for (int row = 0; row < side; ++row) {
        int x = row;
        for (int i = r - 1; i >= 0; --i) {
            digits[i] = x % n;
            x /= n;
        }
        for (int ia = 0; ia < n; ++ia)
            for (int ib = 0; ib < n; ++ib) {
                const Rational& v = m.at(digits[a] * n + digits[b], ia * n + ib);
                if (v.is_zero()) continue;
                std::vector<int> src = digits;
                src[a] = ia;
                src[b] = ib;
                int col = 0;
                for (int i = 0; i < r; ++i) col = col * n + src[i];
                out.at(row, col) += v;
            }
    }
    return out;
}

}  // namespace

MatrixR q_permutation(int n, const QValue& q) {
    MatrixR p(n * n, n * n);
    for (int i = 0; i < n; ++i) p.at(i * n + i, i * n + i) = Rational(1);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            p.at(i * n + j, j * n + i) = i > j ? q.value() : q.inv();
        }
    return p;
}

MatrixR antisymmetrizer(int n, int r, const QValue& q) {
    if (r < 1) throw std::invalid_argument("antisymmetrizer: r >= 1 required");
    int side = 1;
    for (int i = 0; i < r; ++i) side *= n;
    MatrixR p2 = q_permutation(n, q);
    std::vector<MatrixR> adj(std::max(0, r - 1));
    for (int i = 0; i + 1 < r; ++i) adj[i] = embed_two_slot(p2, n, r, i, i + 1);

    MatrixR a(side, side);
    for (const auto& sigma : all_permutations(r)) {
        std::vector<int> word = reduced_word(sigma);
        MatrixR m = MatrixR::identity(side);
        for (int s : word) m = m * adj[s];
        if (word.size() % 2 == 0) a += m;
        else a -= m;
    }
    return a;
}

MatrixR trig_r_matrix_at(int n, const QValue& q, const Rational& u, const Rational& v) {
    MatrixR r(n * n, n * n);
    const Rational diag_eq = q.inv() * u - q.value() * v;
    const Rational diag_ne = u - v;
    const Rational neg_bd = q.inv() - q.value();
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) r.at(i * n + k, i * n + k) = (i == k) ? diag_eq : diag_ne;
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            if (i == k) continue;
            r.at(i * n + k, k * n + i) = neg_bd * (i > k ? u : v);
        }
    return r;
}

MatrixR fused_r_matrix(int n, const QValue& q, const std::vector<Rational>& points) {
    int r = static_cast<int>(points.size());
    if (r < 2) throw std::invalid_argument("fused_r_matrix: need at least two points");
    int side = 1;
    for (int i = 0; i < r; ++i) side *= n;
    MatrixR acc = MatrixR::identity(side);
    for (int i = 0; i < r; ++i)
        for (int j = i + 1; j < r; ++j)
            acc = acc * embed_two_slot(trig_r_matrix_at(n, q, points[i], points[j]), n, r, i, j);
    return acc;
}

namespace {

using EntryFn = std::function<OperatorPoly(int, int)>;

OperatorPoly minor_row_form(const EntryFn& entry, int dim, const QValue& q,
                            const std::vector<int>& rows, const std::vector<int>& cols,
                            const Rational& step) {
    const int r = static_cast<int>(rows.size());
    OperatorPoly acc(dim, dim);
    const Rational neg_q = -q.value();
    for (const auto& sigma : all_permutations(r)) {
        OperatorPoly prod = entry(rows[sigma[0]], cols[0]);
        for (int i = 1; i < r; ++i)
            prod = prod * entry(rows[sigma[i]], cols[i]).scale_arg(step.pow(i));
        acc += neg_q.pow(-inversions(sigma)) * prod;
    }
    return acc;
}

OperatorPoly minor_col_form(const EntryFn& entry, int dim, const QValue& q,
                            const std::vector<int>& rows, const std::vector<int>& cols,
                            const Rational& step) {
    const int r = static_cast<int>(rows.size());
    OperatorPoly acc(dim, dim);
    const Rational neg_q = -q.value();
    for (const auto& sigma : all_permutations(r)) {
        OperatorPoly prod = entry(rows[r - 1], cols[sigma[r - 1]]).scale_arg(step.pow(r - 1));
        for (int i = r - 2; i >= 0; --i)
            prod = prod * entry(rows[i], cols[sigma[i]]).scale_arg(step.pow(i));
        acc += neg_q.pow(inversions(sigma)) * prod;
    }
    return acc;
}

OperatorPoly minor_dispatch(const EntryFn& entry, int dim, const QValue& q,
                            const std::vector<int>& rows, const std::vector<int>& cols,
                            const Rational& step) {
    if (rows.size() != cols.size() || rows.empty())
        throw std::invalid_argument("quantum minor: row/column lists must match and be nonempty");
    if (has_duplicate(rows) || has_duplicate(cols)) return OperatorPoly(dim, dim);
    if (std::is_sorted(rows.begin(), rows.end()))
        return minor_row_form(entry, dim, q, rows, cols, step);
    long inv = inversions(cols);
    std::vector<int> sc = cols;
    std::sort(sc.begin(), sc.end());
    const Rational neg_q = -q.value();
    return neg_q.pow(-inv) * minor_col_form(entry, dim, q, rows, sc, step);
}

EntryFn grid_entry(const ActionGrid& g) {
    return [&g](int i, int j) { return g.tij(i, j); };
}

}  // namespace

OperatorPoly quantum_minor(const ActionGrid& g, const std::vector<int>& rows,
                           const std::vector<int>& cols) {
    return minor_dispatch(grid_entry(g), g.dim, g.q, rows, cols, g.q.power(-2));
}

OperatorPoly quantum_minor_col_form(const ActionGrid& g, const std::vector<int>& rows,
                                    const std::vector<int>& cols) {
    if (!std::is_sorted(cols.begin(), cols.end()))
        throw std::invalid_argument("quantum_minor_col_form: columns must ascend");
    if (has_duplicate(rows) || has_duplicate(cols)) return OperatorPoly(g.dim, g.dim);
    return minor_col_form(grid_entry(g), g.dim, g.q, rows, cols, g.q.power(-2));
}

OperatorPoly qdet(const ActionGrid& g) {
    std::vector<int> idx(g.n);
    std::iota(idx.begin(), idx.end(), 1);
    return quantum_minor(g, idx, idx);
}

std::vector<std::vector<OperatorPoly>> comatrix(const ActionGrid& g) {
    const int n = g.n;
    std::vector<std::vector<OperatorPoly>> hat(n, std::vector<OperatorPoly>(n));
    const Rational neg_q = -g.q.value();
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            std::vector<int> rows, cols;
            for (int x = 1; x <= n; ++x) {
                if (x != j) rows.push_back(x);
                if (x != i) cols.push_back(x);
            }
            hat[i - 1][j - 1] = neg_q.pow(j - i) * quantum_minor(g, rows, cols);
        }
    return hat;
}

OperatorPoly lowering_entry(const ActionGrid& g, int i, int j, LoweringVariant v) {
    const OperatorPoly& t = g.tij(i, j);
    OperatorPoly out(g.dim, g.dim);
    if (v == LoweringVariant::Branching) {
        // (u t_ij - u^{-1} tbar_ij)/(q - q^{-1}) with tbar_ij = -t_ij^{(1)}.
        const Rational inv_bd = g.q.bracket_den().inverse();
        out.add_term(1, inv_bd * t.coeff(0));
        out.add_term(-1, inv_bd * t.coeff(-1));
        return out;
    }
    for (const auto& [e, m] : t.coeffs()) out.add_term(2 + 2 * e, m);  // u^2 t_ij(u^2)
    return out;
}

OperatorPoly lowering_minor(const ActionGrid& g, const std::vector<int>& rows,
                            const std::vector<int>& cols, LoweringVariant v) {
    EntryFn entry = [&g, v](int i, int j) { return lowering_entry(g, i, j, v); };
    return minor_dispatch(entry, g.dim, g.q, rows, cols, g.q.inv());
}

OperatorPoly lowering_tau(const ActionGrid& g, int r, int a, LoweringVariant v) {
    if (!(1 <= a && a < r && r <= g.n)) throw std::invalid_argument("lowering_tau: need 1 <= a < r <= n");
    std::vector<int> rows, cols;
    for (int x = a + 1; x <= r; ++x) rows.push_back(x);
    for (int x = a; x <= r - 1; ++x) cols.push_back(x);
    OperatorPoly m = lowering_minor(g, rows, cols, v);
    if (v == LoweringVariant::Branching) m = g.q.power(r - a) * m;
    return m;
}

OperatorPoly lowering_tau_product(const ActionGrid& g, int r, int a, long m, LoweringVariant v) {
    OperatorPoly tau = lowering_tau(g, r, a, v);
    OperatorPoly acc = OperatorPoly::constant(SparseMat::identity(g.dim));
    for (long i = 0; i < m; ++i) acc = acc * tau.scale_arg(g.q.power(i));
    return acc;
}

namespace {

VecR basis_vector(int dim, int idx) {
    VecR v(dim);
    v[idx] = Rational(1);
    return v;
}

void require_unit_parameter(const EvalModule& m, const char* who) {
    if (!(m.a == Rational(1)))
        throw std::invalid_argument(std::string(who) + ": evaluation parameter must be 1");
}

}  // namespace

VecR branching_vector(const EvalModule& m, const std::vector<long>& mu) {
    require_unit_parameter(m, "branching_vector");
    const int n = m.n();
    if (static_cast<int>(mu.size()) != n - 1)
        throw std::invalid_argument("branching_vector: mu must have n-1 entries");
    const auto& lam = m.rep->lambda.entries;
    for (int i = 0; i < n - 1; ++i)
        if (!(lam[i + 1] <= mu[i] && mu[i] <= lam[i]))
            throw std::invalid_argument("branching_vector: mu must interlace lambda");
    VecR v = basis_vector(m.dim(), m.top_index);
    for (int a = 1; a <= n - 1; ++a) {
        OperatorPoly tau = lowering_tau(m.act, n, a, LoweringVariant::Branching);
        for (long e = -lam[a - 1]; e <= -mu[a - 1] - 1; ++e) v = tau.eval_at(m.q().power(e)).apply(v);
    }
    return v;
}

VecR gt_vector(const EvalModule& m, const GTPattern& pattern) {
    require_unit_parameter(m, "gt_vector");
    const int n = m.n();
    if (m.rep->index_of(pattern) < 0)
        throw std::invalid_argument("gt_vector: pattern does not belong to the module weight");
    VecR v = basis_vector(m.dim(), m.top_index);
    for (int r = n; r >= 2; --r)
        for (int a = 1; a <= r - 1; ++a) {
            long upper = pattern.entry(r, a);
            long lower = pattern.entry(r - 1, a);
            if (upper == lower) continue;
            OperatorPoly tau = lowering_tau(m.act, r, a, LoweringVariant::Branching);
            for (long e = -upper; e <= -lower - 1; ++e) v = tau.eval_at(m.q().power(e)).apply(v);
        }
    return v;
}

VecR theta_vector(const TensorModule& tm, const ThetaCase& tc) {
    const int n = tm.n();
    const auto& lam = tm.left.rep->lambda.entries;
    const auto& mu = tm.right.rep->lambda.entries;
    if (!(1 <= tc.p && tc.p <= n - 1) || static_cast<int>(tc.k.size()) != tc.p)
        throw std::invalid_argument("theta_vector: malformed case data");
    for (int i = 1; i <= tc.p; ++i) {
        long li = lam[i - 1] - i + 1;
        long mi = mu[n - tc.p + i - 1] - (n - tc.p + i) + 1;
        if (tc.k[i - 1] != li - mi || tc.k[i - 1] <= 0)
            throw std::invalid_argument(
                "theta_vector: not a reducible configuration for the singular-vector construction");
    }
    VecR v = basis_vector(tm.dim(), tm.top_index);
    for (int a = tc.p; a >= 1; --a) {
        OperatorPoly prod =
            lowering_tau_product(tm.act, n - tc.p + a, a, tc.k[a - 1], LoweringVariant::Singular);
        if (a > 1) prod = prod.formal_derivative();
        v = prod.eval_at(tm.q().power(-lam[a - 1])).apply(v);
    }
    return v;
}

VecR theta_leading_vector(const EvalModule& m, const ThetaCase& tc) {
    require_unit_parameter(m, "theta_leading_vector");
    const int n = m.n();
    const auto& lam = m.rep->lambda.entries;
    VecR v = basis_vector(m.dim(), m.top_index);
    for (int a = tc.p; a >= 1; --a) {
        OperatorPoly prod =
            lowering_tau_product(m.act, n - tc.p + a, a, tc.k[a - 1], LoweringVariant::Singular);
        v = prod.eval_at(m.q().power(-lam[a - 1])).apply(v);
    }
    return v;
}

}  // namespace qyl
