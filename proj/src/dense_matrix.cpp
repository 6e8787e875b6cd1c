#include "lyucalc/dense_matrix.hpp"

#include <string>

namespace lyu {

DenseMatrix DenseMatrix::identity(u64 p, std::size_t n) {
    DenseMatrix m(p, n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1 % p);
    return m;
}

DenseMatrix DenseMatrix::mul(const DenseMatrix& rhs) const {
    assert(cols_ == rhs.rows_ && p_ == rhs.p_);
    DenseMatrix out(p_, rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            u64 v = at(i, k);
            if (!v) continue;
            for (std::size_t j = 0; j < rhs.cols_; ++j)
                out.a_[i * rhs.cols_ + j] =
                    fp_add(out.a_[i * rhs.cols_ + j], fp_mul(v, rhs.at(k, j), p_), p_);
        }
    return out;
}

DenseMatrix DenseMatrix::transpose() const {
    DenseMatrix out(p_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            out.set(j, i, at(i, j));
    return out;
}

std::vector<u64> DenseMatrix::apply(const std::vector<u64>& v) const {
    assert(v.size() == cols_);
    std::vector<u64> out(rows_, 0);
    for (std::size_t i = 0; i < rows_; ++i) {
        u64 acc = 0;
        for (std::size_t j = 0; j < cols_; ++j)
            if (at(i, j) && v[j]) acc = fp_add(acc, fp_mul(at(i, j), v[j], p_), p_);
        out[i] = acc;
    }
    return out;
}

DenseMatrix DenseMatrix::entrywise_pow(u64 e) const {
    DenseMatrix out(p_, rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            out.set(i, j, fp_pow(at(i, j), e, p_));
    return out;
}

std::vector<u64> DenseMatrix::col(std::size_t c) const {
    assert(c < cols_);
    std::vector<u64> out(rows_);
    for (std::size_t i = 0; i < rows_; ++i) out[i] = at(i, c);
    return out;
}

bool DenseMatrix::is_identity() const {
    if (rows_ != cols_) return false;
    return *this == identity(p_, rows_);
}

namespace {

// Row echelon form in place; returns pivot (row, col) pairs. Pivot selection is
// deterministic: columns left to right, first row with a nonzero entry.
std::vector<std::pair<std::size_t, std::size_t>> echelonize(std::vector<std::vector<u64>>& m,
                                                            u64 p) {
    std::vector<std::pair<std::size_t, std::size_t>> pivots;
    if (m.empty()) return pivots;
    std::size_t rows = m.size(), cols = m[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t pr = rows;
        for (std::size_t i = r; i < rows; ++i)
            if (m[i][c]) { pr = i; break; }
        if (pr == rows) continue;
        std::swap(m[r], m[pr]);
        u64 inv = fp_inv(m[r][c], p);
        for (std::size_t j = c; j < cols; ++j) m[r][j] = fp_mul(m[r][j], inv, p);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || !m[i][c]) continue;
            u64 f = m[i][c];
            for (std::size_t j = c; j < cols; ++j)
                m[i][j] = fp_sub(m[i][j], fp_mul(f, m[r][j], p), p);
        }
        pivots.emplace_back(r, c);
        ++r;
    }
    return pivots;
}

std::vector<std::vector<u64>> to_rows(const DenseMatrix& m) {
    std::vector<std::vector<u64>> rows(m.rows(), std::vector<u64>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            rows[i][j] = m.at(i, j);
    return rows;
}

} // namespace

std::size_t rank(const DenseMatrix& m) {
    auto rows = to_rows(m);
    return echelonize(rows, m.p()).size();
}

std::vector<u64> solve_in_span(const DenseMatrix& basis, const std::vector<u64>& target) {
    assert(target.size() == basis.rows());
    u64 p = basis.p();
    // eliminate on [basis | target]
    std::vector<std::vector<u64>> aug(basis.rows(), std::vector<u64>(basis.cols() + 1));
    for (std::size_t i = 0; i < basis.rows(); ++i) {
        for (std::size_t j = 0; j < basis.cols(); ++j) aug[i][j] = basis.at(i, j);
        aug[i][basis.cols()] = target[i];
    }
    auto pivots = echelonize(aug, p);
    std::vector<u64> x(basis.cols(), 0);
    for (auto [r, c] : pivots) {
        if (c == basis.cols())
            throw NotInSpan("solve_in_span: target is not in the column span");
        x[c] = aug[r][basis.cols()];
    }
    return x;
}

DenseMatrix kernel_basis(const DenseMatrix& m) {
    u64 p = m.p();
    auto rows = to_rows(m);
    auto pivots = echelonize(rows, p);
    std::vector<bool> is_pivot_col(m.cols(), false);
    for (auto [r, c] : pivots) is_pivot_col[c] = true;
    std::vector<std::size_t> free_cols;
    for (std::size_t c = 0; c < m.cols(); ++c)
        if (!is_pivot_col[c]) free_cols.push_back(c);

    DenseMatrix ker(p, m.cols(), free_cols.size());
    for (std::size_t k = 0; k < free_cols.size(); ++k) {
        std::size_t fc = free_cols[k];
        ker.set(fc, k, 1 % p);
        for (auto [r, c] : pivots)
            ker.set(c, k, fp_neg(rows[r][fc], p));
    }
    return ker;
}

SpanReducer::SpanReducer(const DenseMatrix& w) : p_(w.p()), n_(w.rows()) {
    for (std::size_t c = 0; c < w.cols(); ++c) {
        std::vector<u64> v = reduce(w.col(c));
        std::size_t piv = n_;
        for (std::size_t i = 0; i < n_; ++i)
            if (v[i]) { piv = i; break; }
        if (piv == n_) continue; // dependent column
        u64 inv = fp_inv(v[piv], p_);
        for (auto& x : v) x = fp_mul(x, inv, p_);
        // keep stored columns fully reduced against the new pivot
        for (std::size_t k = 0; k < cols_.size(); ++k) {
            u64 f = cols_[k][piv];
            if (!f) continue;
            for (std::size_t i = 0; i < n_; ++i)
                cols_[k][i] = fp_sub(cols_[k][i], fp_mul(f, v[i], p_), p_);
        }
        cols_.push_back(std::move(v));
        pivot_rows_.push_back(piv);
    }
    std::vector<bool> is_pivot(n_, false);
    for (auto r : pivot_rows_) is_pivot[r] = true;
    for (std::size_t i = 0; i < n_; ++i)
        if (!is_pivot[i]) free_rows_.push_back(i);
}

std::vector<u64> SpanReducer::reduce(std::vector<u64> v) const {
    assert(v.size() == n_);
    for (std::size_t k = 0; k < cols_.size(); ++k) {
        u64 f = v[pivot_rows_[k]];
        if (!f) continue;
        for (std::size_t i = 0; i < n_; ++i)
            v[i] = fp_sub(v[i], fp_mul(f, cols_[k][i], p_), p_);
    }
    return v;
}

bool SpanReducer::contains(const std::vector<u64>& v) const {
    auto r = reduce(v);
    for (auto x : r)
        if (x) return false;
    return true;
}

std::vector<u64> SpanReducer::quotient_coords(const std::vector<u64>& v) const {
    auto r = reduce(v);
    std::vector<u64> out(free_rows_.size());
    for (std::size_t k = 0; k < free_rows_.size(); ++k) out[k] = r[free_rows_[k]];
    return out;
}

DenseMatrix semilinear_power(const PLinearEndo& f, std::size_t e) {
    const u64 p = f.p();
    DenseMatrix acc = DenseMatrix::identity(p, f.dim());
    u64 twist = 1; // p^k, the entrywise power applied to the k-th factor
    for (std::size_t k = 0; k < e; ++k) {
        acc = acc.mul(f.mat.entrywise_pow(twist));
        // p^k only matters mod p-1 for nonzero entries; over F_p it is 1 anyway
        twist = twist * p % (p - 1);
        if (twist == 0) twist = p - 1;
    }
    return acc;
}

std::size_t stable_rank(const PLinearEndo& f) {
    return rank(semilinear_power(f, f.dim()));
}

} // namespace lyu
