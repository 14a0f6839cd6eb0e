/**
 * @file matrix.hpp
 * @brief Exact dense linear algebra over Rational plus a sparse companion type.
 *
 * MatrixR is a dense rational matrix with deterministic Gaussian elimination:
 * pivots are the first nonzero entry in column order, normalized to 1, so
 * reduced forms are identical across runs and platforms. SparseMat holds the
 * same data row-compressed and is used for large, mostly-zero module actions.
 */
#pragma once

#include <utility>
#include <vector>

#include "qyl/rational.hpp"

namespace qyl {

using VecR = std::vector<Rational>;

bool vec_is_zero(const VecR& v);
VecR vec_scaled(const VecR& v, const Rational& s);
void vec_add_scaled(VecR& target, const VecR& src, const Rational& s);

class MatrixR {
public:
    MatrixR() = default;
    MatrixR(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {}

    static MatrixR identity(int n) {
        MatrixR m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = Rational(1);
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Rational& at(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
    const Rational& at(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

    bool is_zero() const {
        for (const auto& v : a_)
            if (!v.is_zero()) return false;
        return true;
    }

    friend bool operator==(const MatrixR& a, const MatrixR& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
    }

    MatrixR& operator+=(const MatrixR& o);
    MatrixR& operator-=(const MatrixR& o);
    friend MatrixR operator+(MatrixR a, const MatrixR& b) { a += b; return a; }
    friend MatrixR operator-(MatrixR a, const MatrixR& b) { a -= b; return a; }
    friend MatrixR operator*(const MatrixR& a, const MatrixR& b);
    friend MatrixR operator*(const Rational& s, const MatrixR& m);

    MatrixR transpose() const;
    VecR apply(const VecR& v) const;
    static MatrixR kron(const MatrixR& a, const MatrixR& b);

private:
    int rows_ = 0, cols_ = 0;
    std::vector<Rational> a_;
};

struct RrefResult {
    MatrixR rref;
    int rank = 0;
    std::vector<VecR> kernel;  // exact basis of the null space
};

RrefResult rref_rank_kernel(const MatrixR& m);

/// Basis of the intersection of the kernels; an empty list yields the full
/// dim-dimensional space. All matrices must have `dim` columns.
std::vector<VecR> joint_kernel(const std::vector<MatrixR>& ms, int dim);

/// Incremental row-echelon basis of a subspace. Rows are kept fully reduced
/// with pivot 1, ordered by pivot column.
class RowSpace {
public:
    explicit RowSpace(int n) : n_(n) {}

    /// Reduce v against the basis; if a new direction remains, absorb it.
    /// Returns true when the dimension grew.
    bool insert(VecR v);

    /// Reduce v without inserting; true iff v lies in the span.
    bool contains(VecR v) const;

    int dim() const { return static_cast<int>(rows_.size()); }
    int ambient() const { return n_; }
    const std::vector<VecR>& rows() const { return rows_; }

private:
    void reduce(VecR& v) const;

    int n_;
    std::vector<VecR> rows_;
    std::vector<int> pivots_;  // ascending, parallel to rows_
};

/// Smallest subspace containing the seeds and stable under every generator.
/// Generators are applied breadth-first to newly found directions until the
/// dimension is stable over a full pass. Returns the reduced row basis.
std::vector<VecR> invariant_span(const std::vector<MatrixR>& generators, const std::vector<VecR>& seeds);

/// Row-compressed sparse matrix; rows hold (col, value) pairs sorted by
/// column with no stored zeros, so equality is structural.
struct SparseMat {
    int rows = 0, cols = 0;
    std::vector<std::vector<std::pair<int, Rational>>> row;

    SparseMat() = default;
    SparseMat(int r, int c) : rows(r), cols(c), row(r) {}

    static SparseMat identity(int n);
    static SparseMat from_dense(const MatrixR& m);
    MatrixR dense() const;

    bool is_zero() const {
        for (const auto& r : row)
            if (!r.empty()) return false;
        return true;
    }
    long nnz() const {
        long t = 0;
        for (const auto& r : row) t += static_cast<long>(r.size());
        return t;
    }

    Rational at(int i, int j) const;
    /// Build-time accumulation; call finalize_row after filling a row unsorted.
    void set_entry(int i, int j, const Rational& v);

    friend bool operator==(const SparseMat& a, const SparseMat& b) {
        return a.rows == b.rows && a.cols == b.cols && a.row == b.row;
    }

    SparseMat operator+(const SparseMat& o) const;
    SparseMat operator-(const SparseMat& o) const;
    SparseMat operator*(const SparseMat& o) const;
    friend SparseMat operator*(const Rational& s, const SparseMat& m);
    SparseMat transpose() const;
    VecR apply(const VecR& v) const;
    static SparseMat kron(const SparseMat& a, const SparseMat& b);
};

}  // namespace qyl
