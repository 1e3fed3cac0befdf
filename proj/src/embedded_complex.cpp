#include "hdg/embedded_complex.hpp"

#include <cmath>
#include <string>

namespace hdg {

namespace {
constexpr double kSpanResidualTol = 1e-9;
constexpr double kRankTol = 1e-10;
constexpr double kSignTol = 1e-9;
} // namespace

Index EmbeddedComplex::dim(int p) const {
    if (p < 0 || p >= static_cast<int>(omega.size())) return 0;
    return omega[static_cast<size_t>(p)].cols();
}

Eigen::MatrixXd EmbeddedComplex::boundary_matrix(int p) const {
    if (p >= 0 && p < static_cast<int>(brep.size())) return brep[static_cast<size_t>(p)];
    return Eigen::MatrixXd::Zero(0, dim(p - 1));
}

RationalMatrix compute_omega(const AmbientBoundary& d) {
    return kernel_basis(d.matrix.select_rows(d.forbidden_rows()));
}

RationalMatrix compute_omega(const Hyperdigraph& h, int p) {
    return compute_omega(ambient_boundary_matrix(h, p));
}

Eigen::MatrixXd orthonormalize(const RationalMatrix& exact_basis) {
    Eigen::MatrixXd q = exact_basis.to_double();
    for (Index j = 0; j < q.cols(); ++j) {
        for (Index i = 0; i < j; ++i) q.col(j) -= q.col(i).dot(q.col(j)) * q.col(i);
        const double norm = q.col(j).norm();
        if (norm < kRankTol)
            throw ConsistencyError("orthonormalize: rank-deficient spanning set at column " +
                                   std::to_string(j));
        q.col(j) /= norm;
        for (Index i = 0; i < q.rows(); ++i) {
            if (std::abs(q(i, j)) > kSignTol) {
                if (q(i, j) < 0) q.col(j) = -q.col(j);
                break;
            }
        }
    }
    return q;
}

RationalMatrix exact_boundary_in_edge_coords(const AmbientBoundary& d_p,
                                             const RationalMatrix& chains, Index dim_f_pm1) {
    const RationalMatrix w = d_p.matrix * chains;
    RationalMatrix out(dim_f_pm1, chains.cols());
    for (Index r = 0; r < w.rows(); ++r) {
        if (d_p.face_is_edge[static_cast<size_t>(r)]) {
            const Index g = d_p.face_edge_index[static_cast<size_t>(r)];
            for (Index j = 0; j < w.cols(); ++j) out(g, j) = w(r, j);
        } else {
            for (Index j = 0; j < w.cols(); ++j)
                if (sgn(w(r, j)) != 0)
                    throw ConsistencyError("boundary of an embedded chain leaves the edge span at face " +
                                           to_string(d_p.faces[static_cast<size_t>(r)]));
        }
    }
    return out;
}

Eigen::MatrixXd boundary_rep(const Eigen::MatrixXd& q_p, const Eigen::MatrixXd& q_pm1,
                             const AmbientBoundary& d_p, Index dim_f_pm1) {
    const Eigen::MatrixXd w = d_p.matrix.to_double() * q_p;
    Eigen::MatrixXd aligned = Eigen::MatrixXd::Zero(dim_f_pm1, q_p.cols());
    for (Index r = 0; r < w.rows(); ++r) {
        if (d_p.face_is_edge[static_cast<size_t>(r)]) {
            aligned.row(d_p.face_edge_index[static_cast<size_t>(r)]) = w.row(r);
        } else if (w.cols() > 0 && w.row(r).cwiseAbs().maxCoeff() > kSpanResidualTol) {
            throw ConsistencyError("boundary_rep: image escapes the lower edge span at face " +
                                   to_string(d_p.faces[static_cast<size_t>(r)]));
        }
    }
    const Eigen::MatrixXd m = q_pm1.transpose() * aligned;
    if (aligned.size() > 0) {
        const double resid = (aligned - q_pm1 * m).cwiseAbs().maxCoeff();
        if (resid > kSpanResidualTol)
            throw ConsistencyError("boundary_rep: projection residual " + std::to_string(resid));
    }
    return m.transpose();
}

EmbeddedComplex build_embedded_complex(const Hyperdigraph& h, int max_dim) {
    EmbeddedComplex c;
    c.complex = h;
    c.top_dim = max_dim >= 0 ? max_dim : std::max(0, h.max_dimension());
    const int upper = c.top_dim + 1;

    c.ambient.reserve(upper + 1);
    c.omega.reserve(upper + 1);
    c.ortho.reserve(upper + 1);
    for (int p = 0; p <= upper; ++p) {
        c.ambient.push_back(ambient_boundary_matrix(h, p));
        c.omega.push_back(compute_omega(c.ambient.back()));
        c.ortho.push_back(orthonormalize(c.omega.back()));
    }

    c.brep.resize(static_cast<size_t>(upper) + 1);
    c.brep[0] = Eigen::MatrixXd::Zero(c.dim(0), 0);
    for (int p = 1; p <= upper; ++p)
        c.brep[static_cast<size_t>(p)] =
            boundary_rep(c.ortho[static_cast<size_t>(p)], c.ortho[static_cast<size_t>(p - 1)],
                         c.ambient[static_cast<size_t>(p)], h.grade_size(p - 1));

    c.boundary_rank.resize(static_cast<size_t>(upper) + 1, 0);
    for (int p = 1; p <= upper; ++p)
        c.boundary_rank[static_cast<size_t>(p)] =
            rank(c.ambient[static_cast<size_t>(p)].matrix * c.omega[static_cast<size_t>(p)]);

    return c;
}

} // namespace hdg
