#include "qyl/gln_rep.hpp"

#include <cstdlib>
#include <stdexcept>
#include <utility>

namespace qyl {

int GlnRep::index_of(const GTPattern& p) const {
    auto it = index.find(p.flat());
    return it == index.end() ? -1 : it->second;
}

GlnRep build_rep(const HighestWeight& lambda, const QValue& q) {
    GlnRep rep{lambda, q, enumerate_patterns(lambda)};
    rep.dim = static_cast<int>(rep.basis.size());
    for (int s = 0; s < rep.dim; ++s) rep.index[rep.basis[s].flat()] = s;
    rep.top_index = rep.index_of(highest_pattern(lambda));

    const int n = lambda.n();
    rep.t.assign(n, SparseMat(rep.dim, rep.dim));
    rep.t_inv.assign(n, SparseMat(rep.dim, rep.dim));
    for (int s = 0; s < rep.dim; ++s) {
        std::vector<long> w = pattern_weight(rep.basis[s]);
        for (int k = 1; k <= n; ++k) {
            rep.t[k - 1].row[s].emplace_back(s, q.power(w[k - 1]));
            rep.t_inv[k - 1].row[s].emplace_back(s, q.power(-w[k - 1]));
        }
    }

    rep.e.assign(n - 1, SparseMat(rep.dim, rep.dim));
    rep.f.assign(n - 1, SparseMat(rep.dim, rep.dim));
    for (int s = 0; s < rep.dim; ++s) {
        const GTPattern& pat = rep.basis[s];
        for (int k = 1; k <= n - 1; ++k) {
            std::vector<long> lk = l_values(pat, k);
            std::vector<long> lup = l_values(pat, k + 1);
            std::vector<long> ldown = k >= 2 ? l_values(pat, k - 1) : std::vector<long>{};
            for (int j = 1; j <= k; ++j) {
                Rational den(1);
                for (int i = 1; i <= k; ++i) {
                    if (i == j) continue;
                    den *= q.q_int(lk[i - 1] - lk[j - 1]);
                }
                if (den.is_zero())
                    throw std::logic_error("build_rep: vanishing denominator (internal invariant)");

                if (auto up = shift_pattern(pat, k, j, +1)) {
                    Rational num(1);
                    for (int i = 1; i <= k + 1; ++i) num *= q.q_int(lup[i - 1] - lk[j - 1]);
                    Rational c = -(num / den);
                    if (!c.is_zero()) rep.e[k - 1].set_entry(rep.index_of(*up), s, c);
                }
                if (auto down = shift_pattern(pat, k, j, -1)) {
                    Rational num(1);
                    for (int i = 1; i <= k - 1; ++i) num *= q.q_int(ldown[i - 1] - lk[j - 1]);
                    Rational c = num / den;
                    if (!c.is_zero()) rep.f[k - 1].set_entry(rep.index_of(*down), s, c);
                }
            }
        }
    }
    return rep;
}

namespace {

SparseMat q_commutator(const SparseMat& a, const SparseMat& b, const Rational& z) {
    return a * b - z * (b * a);
}

SparseMat root_vector_impl(const GlnRep& rep, int i, int j, int middle) {
    if (i == j) throw std::invalid_argument("root_vector_matrix: i != j required");
    if (j == i + 1) return rep.e[i - 1];
    if (j == i - 1) return rep.f[j - 1];
    if (i < j) {
        int k = middle > 0 ? middle : i + 1;
        if (!(i < k && k < j)) throw std::invalid_argument("root_vector_matrix: bad middle index");
        return q_commutator(root_vector_impl(rep, i, k, 0), root_vector_impl(rep, k, j, 0),
                            rep.q.value());
    }
    int k = middle > 0 ? middle : i - 1;
    if (!(j < k && k < i)) throw std::invalid_argument("root_vector_matrix: bad middle index");
    return q_commutator(root_vector_impl(rep, i, k, 0), root_vector_impl(rep, k, j, 0),
                        rep.q.inv());
}

}  // namespace

SparseMat root_vector_matrix(const GlnRep& rep, int i, int j, int middle) {
    return root_vector_impl(rep, i, j, middle);
}

TMatrices t_matrices(const GlnRep& rep) {
    const int n = rep.n();
    const Rational bd = rep.q.bracket_den();
    TMatrices m;
    m.t.assign(n, std::vector<SparseMat>(n, SparseMat(rep.dim, rep.dim)));
    m.tbar = m.t;
    for (int i = 1; i <= n; ++i) {
        m.t[i - 1][i - 1] = rep.t[i - 1];
        m.tbar[i - 1][i - 1] = rep.t_inv[i - 1];
        for (int j = 1; j < i; ++j)
            m.t[i - 1][j - 1] = bd * (rep.t[j - 1] * root_vector_matrix(rep, i, j));
        for (int j = i + 1; j <= n; ++j)
            m.tbar[i - 1][j - 1] = (Rational(-1) * bd) * (root_vector_matrix(rep, i, j) * rep.t_inv[i - 1]);
    }
    return m;
}

MatrixR constant_r_matrix(int n, const QValue& q) {
    MatrixR r(n * n, n * n);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) r.at(i * n + k, i * n + k) = (i == k) ? q.value() : Rational(1);
    for (int i = 0; i < n; ++i)
        for (int k = i + 1; k < n; ++k) r.at(i * n + k, k * n + i) = q.bracket_den();
    return r;
}

namespace {

using Grid = std::vector<std::vector<SparseMat>>;  // side x side blocks over the module

// R acts on the two auxiliary tensor slots, the blocks on the module.
Grid scalar_mul_left(const MatrixR& r, const Grid& g, int dim) {
    int side = r.rows();
    Grid c(side, std::vector<SparseMat>(side, SparseMat(dim, dim)));
    for (int a = 0; a < side; ++a)
        for (int b = 0; b < side; ++b) {
            if (r.at(a, b).is_zero()) continue;
            for (int col = 0; col < side; ++col) {
                if (g[b][col].is_zero()) continue;
                c[a][col] = c[a][col] + r.at(a, b) * g[b][col];
            }
        }
    return c;
}

Grid scalar_mul_right(const Grid& g, const MatrixR& r, int dim) {
    int side = r.rows();
    Grid c(side, std::vector<SparseMat>(side, SparseMat(dim, dim)));
    for (int a = 0; a < side; ++a)
        for (int b = 0; b < side; ++b) {
            if (r.at(a, b).is_zero()) continue;
            for (int rrow = 0; rrow < side; ++rrow) {
                if (g[rrow][a].is_zero()) continue;
                c[rrow][b] = c[rrow][b] + r.at(a, b) * g[rrow][a];
            }
        }
    return c;
}

Grid grid_mul(const Grid& a, const Grid& b, int dim) {
    int side = static_cast<int>(a.size());
    Grid c(side, std::vector<SparseMat>(side, SparseMat(dim, dim)));
    for (int i = 0; i < side; ++i)
        for (int k = 0; k < side; ++k) {
            if (a[i][k].is_zero()) continue;
            for (int j = 0; j < side; ++j) {
                if (b[k][j].is_zero()) continue;
                c[i][j] = c[i][j] + a[i][k] * b[k][j];
            }
        }
    return c;
}

bool grid_equal(const Grid& a, const Grid& b) {
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < a.size(); ++j)
            if (!(a[i][j] == b[i][j])) return false;
    return true;
}

// First tensor slot: X_1[(i,k),(j,l)] = x_ij when k == l.
Grid slot1(const std::vector<std::vector<SparseMat>>& x, int n, int dim) {
    Grid g(n * n, std::vector<SparseMat>(n * n, SparseMat(dim, dim)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) g[i * n + k][j * n + k] = x[i][j];
    return g;
}

Grid slot2(const std::vector<std::vector<SparseMat>>& x, int n, int dim) {
    Grid g(n * n, std::vector<SparseMat>(n * n, SparseMat(dim, dim)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) g[k * n + i][k * n + j] = x[i][j];
    return g;
}

}  // namespace

std::vector<std::string> verify_gln_relations(const GlnRep& rep) {
    std::vector<std::string> bad;
    const int n = rep.n();
    const QValue& q = rep.q;
    const SparseMat id = SparseMat::identity(rep.dim);
    auto report = [&bad](bool ok, const std::string& name) {
        if (!ok) bad.push_back(name);
    };

    for (int i = 1; i <= n; ++i) {
        report(rep.t[i - 1] * rep.t_inv[i - 1] == id, "t_i t_i^-1 = 1, i=" + std::to_string(i));
        for (int j = i + 1; j <= n; ++j)
            report(rep.t[i - 1] * rep.t[j - 1] == rep.t[j - 1] * rep.t[i - 1],
                   "t_i t_j commute, i=" + std::to_string(i) + " j=" + std::to_string(j));
    }

    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n - 1; ++j) {
            long ce = (i == j ? 1 : 0) - (i == j + 1 ? 1 : 0);
            report(rep.t[i - 1] * rep.e[j - 1] == q.power(ce) * (rep.e[j - 1] * rep.t[i - 1]),
                   "t_i e_j conjugation, i=" + std::to_string(i) + " j=" + std::to_string(j));
            report(rep.t[i - 1] * rep.f[j - 1] == q.power(-ce) * (rep.f[j - 1] * rep.t[i - 1]),
                   "t_i f_j conjugation, i=" + std::to_string(i) + " j=" + std::to_string(j));
        }

    for (int i = 1; i <= n - 1; ++i)
        for (int j = 1; j <= n - 1; ++j) {
            SparseMat lhs = rep.e[i - 1] * rep.f[j - 1] - rep.f[j - 1] * rep.e[i - 1];
            SparseMat rhs(rep.dim, rep.dim);
            if (i == j) {
                SparseMat k = rep.t[i - 1] * rep.t_inv[i];
                SparseMat kinv = rep.t[i] * rep.t_inv[i - 1];
                rhs = q.bracket_den().inverse() * (k - kinv);
            }
            report(lhs == rhs, "[e_i,f_j], i=" + std::to_string(i) + " j=" + std::to_string(j));
        }

    for (int i = 1; i <= n - 1; ++i)
        for (int j = 1; j <= n - 1; ++j) {
            if (i == j) continue;
            if (std::abs(i - j) > 1) {
                report(rep.e[i - 1] * rep.e[j - 1] == rep.e[j - 1] * rep.e[i - 1],
                       "[e_i,e_j]=0, i=" + std::to_string(i) + " j=" + std::to_string(j));
                report(rep.f[i - 1] * rep.f[j - 1] == rep.f[j - 1] * rep.f[i - 1],
                       "[f_i,f_j]=0, i=" + std::to_string(i) + " j=" + std::to_string(j));
            } else {
                auto serre = [&q](const SparseMat& a, const SparseMat& b) {
                    SparseMat inner = b * a - q.value() * (a * b);
                    return a * inner - q.value() * (inner * a);
                };
                report(serre(rep.e[i - 1], rep.e[j - 1]).is_zero(),
                       "Serre e, i=" + std::to_string(i) + " j=" + std::to_string(j));
                report(serre(rep.f[i - 1], rep.f[j - 1]).is_zero(),
                       "Serre f, i=" + std::to_string(i) + " j=" + std::to_string(j));
            }
        }

    TMatrices tm = t_matrices(rep);
    MatrixR r = constant_r_matrix(n, q);
    Grid t1 = slot1(tm.t, n, rep.dim), t2 = slot2(tm.t, n, rep.dim);
    Grid b1 = slot1(tm.tbar, n, rep.dim), b2 = slot2(tm.tbar, n, rep.dim);
    report(grid_equal(scalar_mul_left(r, grid_mul(t1, t2, rep.dim), rep.dim),
                      scalar_mul_right(grid_mul(t2, t1, rep.dim), r, rep.dim)),
           "R T1 T2 = T2 T1 R");
    report(grid_equal(scalar_mul_left(r, grid_mul(b1, b2, rep.dim), rep.dim),
                      scalar_mul_right(grid_mul(b2, b1, rep.dim), r, rep.dim)),
           "R Tbar1 Tbar2 = Tbar2 Tbar1 R");
    report(grid_equal(scalar_mul_left(r, grid_mul(b1, t2, rep.dim), rep.dim),
                      scalar_mul_right(grid_mul(t2, b1, rep.dim), r, rep.dim)),
           "R Tbar1 T2 = T2 Tbar1 R");

    return bad;
}

}  // namespace qyl
