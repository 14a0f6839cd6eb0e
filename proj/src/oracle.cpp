#include "qyl/oracle.hpp"

#include <map>
#include <stdexcept>
#include <utility>

namespace qyl {

namespace {

using Weight = std::vector<long>;

struct Bucket {
    std::vector<int> idx;        // global indices, ascending
    std::map<int, int> pos;      // global -> local
};

std::map<Weight, Bucket> make_buckets(const std::vector<Weight>& weights) {
    std::map<Weight, Bucket> b;
    for (int i = 0; i < static_cast<int>(weights.size()); ++i) {
        Bucket& bk = b[weights[i]];
        bk.pos[i] = static_cast<int>(bk.idx.size());
        bk.idx.push_back(i);
    }
    return b;
}

Weight shifted(const Weight& w, const Weight& s) {
    Weight r(w.size());
    for (size_t i = 0; i < w.size(); ++i) r[i] = w[i] + s[i];
    return r;
}

Weight pair_shift(int n, int i, int j) {
    Weight s(n, 0);
    s[i - 1] += 1;
    s[j - 1] -= 1;
    return s;
}

// Block of m with rows restricted to `rows` (global) and columns to the
// bucket described by col_pos.
MatrixR extract_block(const SparseMat& m, const std::vector<int>& rows,
                      const std::map<int, int>& col_pos, int ncols) {
    MatrixR b(static_cast<int>(rows.size()), ncols);
    for (size_t r = 0; r < rows.size(); ++r)
        for (const auto& [c, v] : m.row[rows[r]]) {
            auto it = col_pos.find(c);
            if (it != col_pos.end()) b.at(static_cast<int>(r), it->second) = v;
        }
    return b;
}

}  // namespace

std::vector<SparseMat> action_generators(const ActionGrid& g) {
    std::vector<SparseMat> out;
    for (int i = 1; i <= g.n; ++i)
        for (int j = 1; j <= g.n; ++j)
            for (const auto& [e, m] : g.tij(i, j).coeffs()) out.push_back(m);
    return out;
}

namespace {

// Generators with their weight shifts, one entry per nonzero coefficient.
void graded_generators(const ActionGrid& g, std::vector<SparseMat>& gens,
                       std::vector<Weight>& shifts) {
    for (int i = 1; i <= g.n; ++i)
        for (int j = 1; j <= g.n; ++j)
            for (const auto& [e, m] : g.tij(i, j).coeffs()) {
                gens.push_back(m);
                shifts.push_back(pair_shift(g.n, i, j));
            }
}

}  // namespace

std::vector<VecR> graded_invariant_span(const std::vector<SparseMat>& gens,
                                        const std::vector<Weight>& gen_shift,
                                        const std::vector<Weight>& weights,
                                        const std::vector<VecR>& seeds) {
    const int dim = static_cast<int>(weights.size());
    auto buckets = make_buckets(weights);
    std::map<Weight, RowSpace> spaces;
    for (const auto& [w, bk] : buckets) spaces.emplace(w, RowSpace(static_cast<int>(bk.idx.size())));

    std::vector<std::pair<Weight, VecR>> work;
    for (const auto& seed : seeds) {
        for (const auto& [w, bk] : buckets) {
            VecR local(bk.idx.size());
            bool nz = false;
            for (size_t p = 0; p < bk.idx.size(); ++p) {
                local[p] = seed[bk.idx[p]];
                nz = nz || !local[p].is_zero();
            }
            if (nz && spaces.at(w).insert(local)) work.emplace_back(w, std::move(local));
        }
    }

    // Block extraction cache per (generator, source bucket).
    std::map<std::pair<int, Weight>, MatrixR> block_cache;
    while (!work.empty()) {
        auto [w, v] = std::move(work.back());
        work.pop_back();
        for (int gi = 0; gi < static_cast<int>(gens.size()); ++gi) {
            Weight tw = shifted(w, gen_shift[gi]);
            auto tb = buckets.find(tw);
            if (tb == buckets.end()) continue;
            auto key = std::make_pair(gi, w);
            auto bc = block_cache.find(key);
            if (bc == block_cache.end()) {
                const Bucket& src = buckets.at(w);
                bc = block_cache
                         .emplace(key, extract_block(gens[gi], tb->second.idx, src.pos,
                                                     static_cast<int>(src.idx.size())))
                         .first;
            }
            VecR img = bc->second.apply(v);
            if (vec_is_zero(img)) continue;
            if (spaces.at(tw).insert(img)) work.emplace_back(tw, std::move(img));
        }
    }

    std::vector<VecR> out;
    for (const auto& [w, sp] : spaces)
        for (const auto& row : sp.rows()) {
            VecR g(dim);
            const Bucket& bk = buckets.at(w);
            for (size_t p = 0; p < bk.idx.size(); ++p) g[bk.idx[p]] = row[p];
            out.push_back(std::move(g));
        }
    return out;
}

std::vector<VecR> singular_space(const TensorModule& tm) {
    const int n = tm.n();
    const int dim = tm.dim();
    auto weights = tm.basis_weights();
    auto buckets = make_buckets(weights);

    std::vector<VecR> out;
    for (const auto& [w, bk] : buckets) {
        std::vector<MatrixR> blocks;
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j) {
                Weight tw = shifted(w, pair_shift(n, i, j));
                auto tb = buckets.find(tw);
                for (int r = 1; r <= 2; ++r) {
                    SparseMat m = tm.act.tij(i, j).coeff(-r);
                    if (m.is_zero()) continue;
                    if (tb == buckets.end()) continue;  // empty target: block is zero
                    blocks.push_back(extract_block(m, tb->second.idx, bk.pos,
                                                   static_cast<int>(bk.idx.size())));
                }
            }
        std::vector<VecR> local = joint_kernel(blocks, static_cast<int>(bk.idx.size()));
        for (const auto& v : local) {
            VecR g(dim);
            for (size_t p = 0; p < bk.idx.size(); ++p) g[bk.idx[p]] = v[p];
            out.push_back(std::move(g));
        }
    }
    return out;
}

bool is_cyclic_from_top(const TensorModule& tm, bool include_tbar) {
    std::vector<SparseMat> gens;
    std::vector<Weight> shifts;
    graded_generators(tm.act, gens, shifts);
    if (include_tbar) {
        ActionGrid tbar = tensor_actions(eval_tbar_actions(tm.left), eval_tbar_actions(tm.right));
        graded_generators(tbar, gens, shifts);
    }
    VecR top(tm.dim());
    top[tm.top_index] = Rational(1);
    auto basis = graded_invariant_span(gens, shifts, tm.basis_weights(), {top});
    return static_cast<int>(basis.size()) == tm.dim();
}

int burnside_algebra_dim(const std::vector<SparseMat>& gens,
                         const std::vector<Weight>& weights, int bound) {
    const int dim = static_cast<int>(weights.size());
    if (dim > bound) throw std::runtime_error("burnside bound");
    auto buckets = make_buckets(weights);

    // Matrices of a fixed weight shift live on the pairs (row, col) with
    // wt(row) - wt(col) equal to that shift; flatten per shift.
    struct GradeData {
        std::vector<std::pair<int, int>> coords;
        std::map<long, int> pos;  // row * dim + col -> local position
        RowSpace space{0};
    };
    std::map<Weight, GradeData> grades;
    auto grade_of = [&](const Weight& g) -> GradeData& {
        auto it = grades.find(g);
        if (it != grades.end()) return it->second;
        GradeData gd;
        for (const auto& [cw, cbk] : buckets) {
            auto rb = buckets.find(shifted(cw, g));
            if (rb == buckets.end()) continue;
            for (int r : rb->second.idx)
                for (int c : cbk.idx) {
                    gd.pos[static_cast<long>(r) * dim + c] = static_cast<int>(gd.coords.size());
                    gd.coords.emplace_back(r, c);
                }
        }
        gd.space = RowSpace(static_cast<int>(gd.coords.size()));
        return grades.emplace(g, std::move(gd)).first->second;
    };

    auto flatten = [&](const SparseMat& m, GradeData& gd) {
        VecR v(gd.coords.size());
        for (int r = 0; r < m.rows; ++r)
            for (const auto& [c, val] : m.row[r]) {
                auto it = gd.pos.find(static_cast<long>(r) * dim + c);
                if (it == gd.pos.end())
                    throw std::logic_error("burnside: generator is not weight-homogeneous");
                v[it->second] = val;
            }
        return v;
    };

    std::vector<Weight> gen_grade;
    for (const auto& g : gens) {
        // Derive the grade from any nonzero entry.
        Weight gr;
        for (int r = 0; r < g.rows && gr.empty(); ++r)
            if (!g.row[r].empty()) {
                int c = g.row[r][0].first;
                gr = Weight(weights[r].size());
                for (size_t i = 0; i < gr.size(); ++i) gr[i] = weights[r][i] - weights[c][i];
            }
        if (gr.empty()) gr = Weight(weights.empty() ? 0 : weights[0].size(), 0);
        gen_grade.push_back(std::move(gr));
    }

    std::vector<std::pair<Weight, SparseMat>> work;
    {
        Weight zero(weights.empty() ? 0 : weights[0].size(), 0);
        SparseMat id = SparseMat::identity(dim);
        GradeData& gd = grade_of(zero);
        if (gd.space.insert(flatten(id, gd))) work.emplace_back(zero, std::move(id));
    }
    while (!work.empty()) {
        auto [g, m] = std::move(work.back());
        work.pop_back();
        for (size_t gi = 0; gi < gens.size(); ++gi) {
            SparseMat prod = gens[gi] * m;
            if (prod.is_zero()) continue;
            Weight pg = shifted(g, gen_grade[gi]);
            GradeData& gd = grade_of(pg);
            if (gd.space.insert(flatten(prod, gd))) work.emplace_back(pg, std::move(prod));
        }
    }

    int total = 0;
    for (const auto& [g, gd] : grades) total += gd.space.dim();
    return total;
}

bool burnside_check(const TensorModule& tm, int bound) {
    int total = burnside_algebra_dim(action_generators(tm.act), tm.basis_weights(), bound);
    return total == tm.dim() * tm.dim();
}

bool burnside_check(const FoldedModule& fm, int bound) {
    int total = burnside_algebra_dim(action_generators(fm.act), fm.weights, bound);
    return total == fm.act.dim * fm.act.dim;
}

OracleVerdict oracle_irreducible(const TensorModule& tm, bool with_burnside, int burnside_bound) {
    OracleVerdict v;
    v.singular_dim = static_cast<int>(singular_space(tm).size());
    v.cyclic_from_top = is_cyclic_from_top(tm);
    v.irreducible = v.cyclic_from_top && v.singular_dim == 1;
    if (with_burnside && tm.dim() <= burnside_bound)
        v.burnside_algebra_dim = burnside_algebra_dim(action_generators(tm.act),
                                                      tm.basis_weights(), burnside_bound);
    return v;
}

}  // namespace qyl
