// Dense matrices over F_p and the scalar linear algebra the graded pieces
// reduce to: rank, solving inside a column span, kernels, and the stabilized
// rank of a p-linear (Frobenius-semilinear) endomorphism.

#ifndef LYUCALC_DENSE_MATRIX_HPP
#define LYUCALC_DENSE_MATRIX_HPP

#include <cstddef>
#include <vector>

#include "lyucalc/fp.hpp"

namespace lyu {

class DenseMatrix {
public:
    DenseMatrix() : p_(2), rows_(0), cols_(0) {}
    DenseMatrix(u64 p, std::size_t rows, std::size_t cols)
        : p_(p), rows_(rows), cols_(cols), a_(rows * cols, 0) {}

    static DenseMatrix identity(u64 p, std::size_t n);

    u64 p() const { return p_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    u64 at(std::size_t r, std::size_t c) const {
        assert(r < rows_ && c < cols_);
        return a_[r * cols_ + c];
    }
    void set(std::size_t r, std::size_t c, u64 v) {
        assert(r < rows_ && c < cols_ && v < p_);
        a_[r * cols_ + c] = v;
    }

    DenseMatrix mul(const DenseMatrix& rhs) const;
    DenseMatrix transpose() const;
    std::vector<u64> apply(const std::vector<u64>& v) const; // this * v
    DenseMatrix entrywise_pow(u64 e) const;                  // x -> x^e on entries

    std::vector<u64> col(std::size_t c) const;
    bool is_identity() const;
    bool operator==(const DenseMatrix& rhs) const {
        return p_ == rhs.p_ && rows_ == rhs.rows_ && cols_ == rhs.cols_ && a_ == rhs.a_;
    }

private:
    u64 p_;
    std::size_t rows_, cols_;
    std::vector<u64> a_; // row-major
};

std::size_t rank(const DenseMatrix& m);

// Solve basis * x = target where the columns of `basis` span a subspace.
// Returns one coefficient vector (the echelon solution with free coordinates
// zero, so the answer is deterministic). Throws NotInSpan if unsolvable.
std::vector<u64> solve_in_span(const DenseMatrix& basis, const std::vector<u64>& target);

// Columns span ker(m). Deterministic: one column per free column of the
// echelon form, in ascending column order, with the free coordinate set to 1.
DenseMatrix kernel_basis(const DenseMatrix& m);

// Reduction modulo the column span of a fixed matrix W inside F_p^N, plus the
// induced coordinates on the quotient F_p^N / span(W). The quotient basis is
// the set of non-pivot rows of the column echelon form of W, in row order.
class SpanReducer {
public:
    SpanReducer() : p_(2), n_(0) {}
    // span = 0: every row is free, reduction is the identity
    SpanReducer(u64 p, std::size_t n) : p_(p), n_(n) {
        for (std::size_t i = 0; i < n; ++i) free_rows_.push_back(i);
    }
    explicit SpanReducer(const DenseMatrix& w);

    std::size_t ambient_dim() const { return n_; }
    std::size_t span_dim() const { return cols_.size(); }
    std::size_t quotient_dim() const { return free_rows_.size(); }
    const std::vector<std::size_t>& free_rows() const { return free_rows_; }

    // v minus its projection into the span; zero at every pivot row
    std::vector<u64> reduce(std::vector<u64> v) const;
    bool contains(const std::vector<u64>& v) const;
    // coordinates of [v] with respect to the free-row quotient basis
    std::vector<u64> quotient_coords(const std::vector<u64>& v) const;

private:
    u64 p_;
    std::size_t n_;
    std::vector<std::vector<u64>> cols_;    // reduced echelon columns, pivot entry 1
    std::vector<std::size_t> pivot_rows_;   // pivot_rows_[k] = pivot row of cols_[k]
    std::vector<std::size_t> free_rows_;    // non-pivot rows ascending
};

// A p-linear endomorphism f of F_p^d: f(v) = mat * v^[p] where v^[p] raises
// coordinates to the p-th power. Additive, and f(c v) = c^p f(v).
struct PLinearEndo {
    DenseMatrix mat; // square, d x d, over F_p
    u64 p() const { return mat.p(); }
    std::size_t dim() const { return mat.rows(); }
};

// Matrix of the e-th iterate f^e as a p^e-linear map:
//   M_e = mat * mat^[p] * ... * mat^[p^{e-1}]  (entrywise Frobenius powers).
// Entries live in F_p, where the entrywise Frobenius is the identity, so this
// equals mat^e; the general formula is kept anyway.
DenseMatrix semilinear_power(const PLinearEndo& f, std::size_t e);

// dim of the stable image \cap_e f^e(V); the image chain stabilizes after at
// most dim steps, so this is rank(semilinear_power(f, dim)).
std::size_t stable_rank(const PLinearEndo& f);

} // namespace lyu

#endif
