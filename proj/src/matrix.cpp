#include "qyl/matrix.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace qyl {

bool vec_is_zero(const VecR& v) {
    for (const auto& x : v)
        if (!x.is_zero()) return false;
    return true;
}

VecR vec_scaled(const VecR& v, const Rational& s) {
    VecR r(v.size());
    for (size_t i = 0; i < v.size(); ++i) r[i] = s * v[i];
    return r;
}

void vec_add_scaled(VecR& target, const VecR& src, const Rational& s) {
    for (size_t i = 0; i < target.size(); ++i)
        if (!src[i].is_zero()) target[i] += s * src[i];
}

MatrixR& MatrixR::operator+=(const MatrixR& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("MatrixR: shape mismatch");
    for (size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
    return *this;
}

MatrixR& MatrixR::operator-=(const MatrixR& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("MatrixR: shape mismatch");
    for (size_t i = 0; i < a_.size(); ++i) a_[i] -= o.a_[i];
    return *this;
}

MatrixR operator*(const MatrixR& a, const MatrixR& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("MatrixR: product shape mismatch");
    MatrixR c(a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i)
        for (int k = 0; k < a.cols_; ++k) {
            const Rational& aik = a.at(i, k);
            if (aik.is_zero()) continue;
            for (int j = 0; j < b.cols_; ++j) {
                const Rational& bkj = b.at(k, j);
                if (!bkj.is_zero()) c.at(i, j) += aik * bkj;
            }
        }
    return c;
}

MatrixR operator*(const Rational& s, const MatrixR& m) {
    MatrixR c(m.rows_, m.cols_);
    if (s.is_zero()) return c;
    for (size_t i = 0; i < m.a_.size(); ++i) c.a_[i] = s * m.a_[i];
    return c;
}

MatrixR MatrixR::transpose() const {
    MatrixR t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            if (!at(i, j).is_zero()) t.at(j, i) = at(i, j);
    return t;
}

VecR MatrixR::apply(const VecR& v) const {
    if (static_cast<int>(v.size()) != cols_) throw std::invalid_argument("MatrixR::apply: size mismatch");
    VecR r(rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            if (!at(i, j).is_zero() && !v[j].is_zero()) r[i] += at(i, j) * v[j];
    return r;
}

MatrixR MatrixR::kron(const MatrixR& a, const MatrixR& b) {
    MatrixR c(a.rows() * b.rows(), a.cols() * b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) {
            if (a.at(i, j).is_zero()) continue;
            for (int k = 0; k < b.rows(); ++k)
                for (int l = 0; l < b.cols(); ++l)
                    if (!b.at(k, l).is_zero())
                        c.at(i * b.rows() + k, j * b.cols() + l) = a.at(i, j) * b.at(k, l);
        }
    return c;
}

RrefResult rref_rank_kernel(const MatrixR& m) {
    int rows = m.rows(), cols = m.cols();
    MatrixR r = m;
    std::vector<int> pivot_col;
    int lead = 0;
    for (int col = 0; col < cols && lead < rows; ++col) {
        int sel = -1;
        for (int i = lead; i < rows; ++i)
            if (!r.at(i, col).is_zero()) { sel = i; break; }
        if (sel < 0) continue;
        if (sel != lead)
            for (int j = 0; j < cols; ++j) std::swap(r.at(sel, j), r.at(lead, j));
        Rational inv = r.at(lead, col).inverse();
        for (int j = col; j < cols; ++j)
            if (!r.at(lead, j).is_zero()) r.at(lead, j) *= inv;
        for (int i = 0; i < rows; ++i) {
            if (i == lead) continue;
            const Rational f = r.at(i, col);
            if (f.is_zero()) continue;
            for (int j = col; j < cols; ++j)
                if (!r.at(lead, j).is_zero()) r.at(i, j) -= f * r.at(lead, j);
        }
        pivot_col.push_back(col);
        ++lead;
    }

    RrefResult out;
    out.rank = static_cast<int>(pivot_col.size());
    std::vector<bool> is_pivot(cols, false);
    for (int c : pivot_col) is_pivot[c] = true;
    for (int col = 0; col < cols; ++col) {
        if (is_pivot[col]) continue;
        VecR k(cols);
        k[col] = Rational(1);
        for (int pi = 0; pi < out.rank; ++pi) k[pivot_col[pi]] = -r.at(pi, col);
        out.kernel.push_back(std::move(k));
    }
    out.rref = std::move(r);
    return out;
}

std::vector<VecR> joint_kernel(const std::vector<MatrixR>& ms, int dim) {
    int total = 0;
    for (const auto& m : ms) {
        if (m.cols() != dim) throw std::invalid_argument("joint_kernel: column count mismatch");
        total += m.rows();
    }
    MatrixR stacked(total, dim);
    int off = 0;
    for (const auto& m : ms) {
        for (int i = 0; i < m.rows(); ++i)
            for (int j = 0; j < dim; ++j)
                if (!m.at(i, j).is_zero()) stacked.at(off + i, j) = m.at(i, j);
        off += m.rows();
    }
    return rref_rank_kernel(stacked).kernel;
}

void RowSpace::reduce(VecR& v) const {
    for (size_t r = 0; r < rows_.size(); ++r) {
        const Rational& c = v[pivots_[r]];
        if (c.is_zero()) continue;
        const Rational f = c;  // pivot entries are 1
        vec_add_scaled(v, rows_[r], -f);
    }
}

bool RowSpace::contains(VecR v) const {
    reduce(v);
    return vec_is_zero(v);
}

bool RowSpace::insert(VecR v) {
    reduce(v);
    int piv = -1;
    for (int j = 0; j < n_; ++j)
        if (!v[j].is_zero()) { piv = j; break; }
    if (piv < 0) return false;
    Rational inv = v[piv].inverse();
    for (auto& x : v) x *= inv;
    for (size_t r = 0; r < rows_.size(); ++r) {
        const Rational f = rows_[r][piv];
        if (!f.is_zero()) vec_add_scaled(rows_[r], v, -f);
    }
    auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), piv);
    size_t idx = static_cast<size_t>(pos - pivots_.begin());
    pivots_.insert(pos, piv);
    rows_.insert(rows_.begin() + idx, std::move(v));
    return true;
}

std::vector<VecR> invariant_span(const std::vector<MatrixR>& generators, const std::vector<VecR>& seeds) {
    int dim = 0;
    if (!seeds.empty()) dim = static_cast<int>(seeds[0].size());
    else if (!generators.empty()) dim = generators[0].cols();
    RowSpace space(dim);
    std::vector<VecR> frontier;
    for (const auto& s : seeds) {
        VecR v = s;
        if (space.insert(v)) frontier.push_back(s);
    }
    while (!frontier.empty()) {
        std::vector<VecR> next;
        for (const auto& g : generators)
            for (const auto& v : frontier) {
                VecR img = g.apply(v);
                if (space.insert(img)) next.push_back(std::move(img));
            }
        frontier = std::move(next);
    }
    return space.rows();
}

SparseMat SparseMat::identity(int n) {
    SparseMat m(n, n);
    for (int i = 0; i < n; ++i) m.row[i].emplace_back(i, Rational(1));
    return m;
}

SparseMat SparseMat::from_dense(const MatrixR& m) {
    SparseMat s(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            if (!m.at(i, j).is_zero()) s.row[i].emplace_back(j, m.at(i, j));
    return s;
}

MatrixR SparseMat::dense() const {
    MatrixR m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (const auto& [j, v] : row[i]) m.at(i, j) = v;
    return m;
}

Rational SparseMat::at(int i, int j) const {
    for (const auto& [c, v] : row[i])
        if (c == j) return v;
    return Rational(0);
}

void SparseMat::set_entry(int i, int j, const Rational& v) {
    auto& r = row[i];
    auto it = std::lower_bound(r.begin(), r.end(), j,
                               [](const std::pair<int, Rational>& e, int col) { return e.first < col; });
    if (it != r.end() && it->first == j) {
        it->second = v;
        if (it->second.is_zero()) r.erase(it);
    } else if (!v.is_zero()) {
        r.insert(it, {j, v});
    }
}

SparseMat SparseMat::operator+(const SparseMat& o) const {
    if (rows != o.rows || cols != o.cols) throw std::invalid_argument("SparseMat: shape mismatch");
    SparseMat c(rows, cols);
    for (int i = 0; i < rows; ++i) {
        auto& out = c.row[i];
        const auto& a = row[i];
        const auto& b = o.row[i];
        size_t ia = 0, ib = 0;
        while (ia < a.size() || ib < b.size()) {
            if (ib == b.size() || (ia < a.size() && a[ia].first < b[ib].first)) {
                out.push_back(a[ia++]);
            } else if (ia == a.size() || b[ib].first < a[ia].first) {
                out.push_back(b[ib++]);
            } else {
                Rational s = a[ia].second + b[ib].second;
                if (!s.is_zero()) out.emplace_back(a[ia].first, std::move(s));
                ++ia;
                ++ib;
            }
        }
    }
    return c;
}

SparseMat SparseMat::operator-(const SparseMat& o) const { return *this + Rational(-1) * o; }

SparseMat SparseMat::operator*(const SparseMat& o) const {
    if (cols != o.rows) throw std::invalid_argument("SparseMat: product shape mismatch");
    SparseMat c(rows, o.cols);
    std::vector<Rational> acc(o.cols, Rational(0));
    std::vector<int> touched;
    for (int i = 0; i < rows; ++i) {
        touched.clear();
        for (const auto& [k, aik] : row[i]) {
            for (const auto& [j, bkj] : o.row[k]) {
                if (acc[j].is_zero()) touched.push_back(j);
                acc[j] += aik * bkj;
            }
        }
        std::sort(touched.begin(), touched.end());
        for (int j : touched) {
            if (!acc[j].is_zero()) c.row[i].emplace_back(j, acc[j]);
            acc[j] = Rational(0);
        }
    }
    return c;
}

SparseMat operator*(const Rational& s, const SparseMat& m) {
    SparseMat c(m.rows, m.cols);
    if (s.is_zero()) return c;
    for (int i = 0; i < m.rows; ++i) {
        c.row[i].reserve(m.row[i].size());
        for (const auto& [j, v] : m.row[i]) c.row[i].emplace_back(j, s * v);
    }
    return c;
}

SparseMat SparseMat::transpose() const {
    SparseMat t(cols, rows);
    for (int i = 0; i < rows; ++i)
        for (const auto& [j, v] : row[i]) t.row[j].emplace_back(i, v);
    return t;
}

VecR SparseMat::apply(const VecR& v) const {
    if (static_cast<int>(v.size()) != cols) throw std::invalid_argument("SparseMat::apply: size mismatch");
    VecR r(rows);
    for (int i = 0; i < rows; ++i)
        for (const auto& [j, a] : row[i])
            if (!v[j].is_zero()) r[i] += a * v[j];
    return r;
}

SparseMat SparseMat::kron(const SparseMat& a, const SparseMat& b) {
    SparseMat c(a.rows * b.rows, a.cols * b.cols);
    for (int i = 0; i < a.rows; ++i)
        for (int k = 0; k < b.rows; ++k) {
            auto& out = c.row[i * b.rows + k];
            for (const auto& [j, av] : a.row[i])
                for (const auto& [l, bv] : b.row[k]) out.emplace_back(j * b.cols + l, av * bv);
        }
    return c;
}

}  // namespace qyl
