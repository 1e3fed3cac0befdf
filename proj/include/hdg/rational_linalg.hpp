#pragma once

#include <initializer_list>
#include <vector>

#include <gmpxx.h>
#include <Eigen/Dense>

#include "hdg/errors.hpp"
#include "hdg/hyperstructures.hpp" // Index

namespace hdg {

/// Exact rational scalar.  GMP keeps values in lowest terms with a positive
/// denominator, which is exactly the representation the exact stage needs.
using Rational = mpq_class;

/// Dense row-major matrix over the rationals.  Zero-dimensional shapes
/// (r x 0, 0 x c) are legal values and show up routinely as empty grades.
class RationalMatrix {
public:
    RationalMatrix() = default;
    RationalMatrix(Index rows, Index cols)
        : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows * cols)) {}

    static RationalMatrix identity(Index n);
    static RationalMatrix from_int(std::initializer_list<std::initializer_list<long>> rows);

    Index rows() const { return rows_; }
    Index cols() const { return cols_; }

    Rational& operator()(Index r, Index c) { return data_[static_cast<size_t>(r * cols_ + c)]; }
    const Rational& operator()(Index r, Index c) const {
        return data_[static_cast<size_t>(r * cols_ + c)];
    }

    RationalMatrix transposed() const;
    RationalMatrix operator*(const RationalMatrix& rhs) const;

    /// Horizontal concatenation [*this | rhs]; row counts must agree.
    RationalMatrix hstack(const RationalMatrix& rhs) const;

    RationalMatrix select_rows(const std::vector<Index>& rows) const;
    std::vector<Rational> col(Index c) const;

    bool is_zero() const;
    bool operator==(const RationalMatrix& rhs) const;

    Eigen::MatrixXd to_double() const;

private:
    Index rows_ = 0;
    Index cols_ = 0;
    std::vector<Rational> data_;
};

struct RrefResult {
    RationalMatrix matrix;
    std::vector<Index> pivot_cols;
};

/// Reduced row echelon form by exact Gauss-Jordan elimination.
/// rank = pivot_cols.size().
RrefResult rref(RationalMatrix m);

Index rank(const RationalMatrix& m);

/// Canonical null-space basis (columns span ker m): free variables are set
/// to 1 one at a time in column order, pivot variables solved from the rref.
/// Column count equals cols - rank.
RationalMatrix kernel_basis(const RationalMatrix& m);

/// Exact membership of v in the column span of `basis`.
bool in_span(const std::vector<Rational>& v, const RationalMatrix& basis);

/// Every column of `candidates` lies in the column span of `basis`.
bool span_contains(const RationalMatrix& basis, const RationalMatrix& candidates);

/// Matrix whose columns span the annihilator of colspan(m): x lies in
/// colspan(m) iff result^T x = 0.
RationalMatrix span_annihilator(const RationalMatrix& m);

} // namespace hdg
