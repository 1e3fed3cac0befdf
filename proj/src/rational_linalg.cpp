#include "hdg/rational_linalg.hpp"

namespace hdg {

RationalMatrix RationalMatrix::identity(Index n) {
    RationalMatrix m(n, n);
    for (Index i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

RationalMatrix RationalMatrix::from_int(std::initializer_list<std::initializer_list<long>> rows) {
    const Index r = static_cast<Index>(rows.size());
    const Index c = r ? static_cast<Index>(rows.begin()->size()) : 0;
    RationalMatrix m(r, c);
    Index i = 0;
    for (const auto& row : rows) {
        if (static_cast<Index>(row.size()) != c)
            throw InputError(InputError::Code::bad_argument, "ragged initializer");
        Index j = 0;
        for (long x : row) m(i, j++) = x;
        ++i;
    }
    return m;
}

RationalMatrix RationalMatrix::transposed() const {
    RationalMatrix t(cols_, rows_);
    for (Index i = 0; i < rows_; ++i)
        for (Index j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

RationalMatrix RationalMatrix::operator*(const RationalMatrix& rhs) const {
    if (cols_ != rhs.rows_)
        throw InputError(InputError::Code::bad_argument, "matrix product shape mismatch");
    RationalMatrix out(rows_, rhs.cols_);
    for (Index i = 0; i < rows_; ++i)
        for (Index k = 0; k < cols_; ++k) {
            const Rational& a = (*this)(i, k);
            if (sgn(a) == 0) continue;
            for (Index j = 0; j < rhs.cols_; ++j) {
                const Rational& b = rhs(k, j);
                if (sgn(b) != 0) out(i, j) += a * b;
            }
        }
    return out;
}

RationalMatrix RationalMatrix::hstack(const RationalMatrix& rhs) const {
    if (rows_ != rhs.rows_)
        throw InputError(InputError::Code::bad_argument, "hstack row mismatch");
    RationalMatrix out(rows_, cols_ + rhs.cols_);
    for (Index i = 0; i < rows_; ++i) {
        for (Index j = 0; j < cols_; ++j) out(i, j) = (*this)(i, j);
        for (Index j = 0; j < rhs.cols_; ++j) out(i, cols_ + j) = rhs(i, j);
    }
    return out;
}

RationalMatrix RationalMatrix::select_rows(const std::vector<Index>& rows) const {
    RationalMatrix out(static_cast<Index>(rows.size()), cols_);
    for (Index i = 0; i < static_cast<Index>(rows.size()); ++i)
        for (Index j = 0; j < cols_; ++j) out(i, j) = (*this)(rows[static_cast<size_t>(i)], j);
    return out;
}

std::vector<Rational> RationalMatrix::col(Index c) const {
    std::vector<Rational> out(static_cast<size_t>(rows_));
    for (Index i = 0; i < rows_; ++i) out[static_cast<size_t>(i)] = (*this)(i, c);
    return out;
}

bool RationalMatrix::is_zero() const {
    for (const auto& x : data_)
        if (sgn(x) != 0) return false;
    return true;
}

bool RationalMatrix::operator==(const RationalMatrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) return false;
    for (size_t i = 0; i < data_.size(); ++i)
        if (cmp(data_[i], rhs.data_[i]) != 0) return false;
    return true;
}

Eigen::MatrixXd RationalMatrix::to_double() const {
    Eigen::MatrixXd out(rows_, cols_);
    for (Index i = 0; i < rows_; ++i)
        for (Index j = 0; j < cols_; ++j) out(i, j) = (*this)(i, j).get_d();
    return out;
}

RrefResult rref(RationalMatrix m) {
    const Index rows = m.rows(), cols = m.cols();
    std::vector<Index> pivots;
    Index r = 0;
    for (Index c = 0; c < cols && r < rows; ++c) {
        Index pr = -1;
        for (Index i = r; i < rows; ++i)
            if (sgn(m(i, c)) != 0) { pr = i; break; }
        if (pr < 0) continue;
        if (pr != r)
            for (Index j = c; j < cols; ++j) swap(m(r, j), m(pr, j));
        const Rational inv = 1 / m(r, c);
        for (Index j = c; j < cols; ++j) m(r, j) *= inv;
        for (Index i = 0; i < rows; ++i) {
            if (i == r || sgn(m(i, c)) == 0) continue;
            const Rational f = m(i, c);
            for (Index j = c; j < cols; ++j) m(i, j) -= f * m(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return {std::move(m), std::move(pivots)};
}

Index rank(const RationalMatrix& m) {
    return static_cast<Index>(rref(m).pivot_cols.size());
}

RationalMatrix kernel_basis(const RationalMatrix& m) {
    const auto rr = rref(m);
    const Index cols = m.cols();
    std::vector<bool> is_pivot(static_cast<size_t>(cols), false);
    for (Index c : rr.pivot_cols) is_pivot[static_cast<size_t>(c)] = true;

    std::vector<Index> free_cols;
    for (Index c = 0; c < cols; ++c)
        if (!is_pivot[static_cast<size_t>(c)]) free_cols.push_back(c);

    RationalMatrix k(cols, static_cast<Index>(free_cols.size()));
    for (Index j = 0; j < static_cast<Index>(free_cols.size()); ++j) {
        const Index f = free_cols[static_cast<size_t>(j)];
        k(f, j) = 1;
        for (Index r = 0; r < static_cast<Index>(rr.pivot_cols.size()); ++r)
            k(rr.pivot_cols[static_cast<size_t>(r)], j) = -rr.matrix(r, f);
    }
    return k;
}

bool in_span(const std::vector<Rational>& v, const RationalMatrix& basis) {
    if (static_cast<Index>(v.size()) != basis.rows())
        throw InputError(InputError::Code::bad_argument, "in_span dimension mismatch");
    RationalMatrix aug(basis.rows(), basis.cols() + 1);
    for (Index i = 0; i < basis.rows(); ++i) {
        for (Index j = 0; j < basis.cols(); ++j) aug(i, j) = basis(i, j);
        aug(i, basis.cols()) = v[static_cast<size_t>(i)];
    }
    const auto rr = rref(std::move(aug));
    for (Index c : rr.pivot_cols)
        if (c == basis.cols()) return false;
    return true;
}

bool span_contains(const RationalMatrix& basis, const RationalMatrix& candidates) {
    for (Index j = 0; j < candidates.cols(); ++j)
        if (!in_span(candidates.col(j), basis)) return false;
    return true;
}

RationalMatrix span_annihilator(const RationalMatrix& m) {
    return kernel_basis(m.transposed());
}

} // namespace hdg
