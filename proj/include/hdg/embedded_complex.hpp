#pragma once

#include <vector>

#include <Eigen/Dense>

#include "hdg/chain_complex.hpp"
#include "hdg/hyperstructures.hpp"
#include "hdg/rational_linalg.hpp"

namespace hdg {

/// The maximal chain complex inside the span of the directed hyperedges,
/// with exact rational spanning sets and a canonical orthonormal float basis
/// per dimension, plus the boundary representations between consecutive
/// orthonormal bases.
///
/// Boundary representations follow the left-action convention: row i of
/// brep[p] expands the image of the i-th basis chain of dimension p over the
/// basis of dimension p-1.  With that convention the Laplacian in dimension
/// p reads brep[p+1]^T brep[p+1] + brep[p] brep[p]^T.
struct EmbeddedComplex {
    Hyperdigraph complex;
    int top_dim = 0; // summaries are valid for p = 0..top_dim

    // All arrays run over p = 0..top_dim+1.
    std::vector<AmbientBoundary> ambient;  // d_p on the hyperedge span
    std::vector<RationalMatrix> omega;     // exact basis of the embedded space (columns)
    std::vector<Eigen::MatrixXd> ortho;    // orthonormal float basis Q_p, same span
    std::vector<Eigen::MatrixXd> brep;     // B_p = d_p between orthonormal bases
    std::vector<Index> boundary_rank;      // exact rank of d_p restricted to dimension p

    /// dim of the embedded space in dimension p (0 out of range).
    Index dim(int p) const;

    /// B_p; an empty matrix of the right shape outside the computed range.
    Eigen::MatrixXd boundary_matrix(int p) const;
};

/// Exact rational basis of the dimension-p embedded space: the kernel of the
/// sub-matrix of the ambient boundary consisting of rows whose face is not a
/// hyperedge.  Dimension 0 comes out as the full grade automatically since a
/// vertex has an empty boundary.
RationalMatrix compute_omega(const AmbientBoundary& d);
RationalMatrix compute_omega(const Hyperdigraph& h, int p);

/// Modified Gram-Schmidt in column order on the float image of the exact
/// basis.  Columns are orthonormal within 1e-12 and sign-canonicalized (the
/// first nonzero entry of each column is positive).  Rank deficiency is a
/// hard error.
Eigen::MatrixXd orthonormalize(const RationalMatrix& exact_basis);

/// Representation of d_p between the orthonormal bases (left-action).  The
/// image of every basis chain must lie in the span of Q_{p-1} within 1e-9;
/// a larger residual signals a broken embedded-space computation.
Eigen::MatrixXd boundary_rep(const Eigen::MatrixXd& q_p, const Eigen::MatrixXd& q_pm1,
                             const AmbientBoundary& d_p, Index dim_f_pm1);

/// Exact boundary of the given chains written over the generators of grade
/// p-1.  Rows for faces outside the complex must vanish identically.
RationalMatrix exact_boundary_in_edge_coords(const AmbientBoundary& d_p,
                                             const RationalMatrix& chains, Index dim_f_pm1);

/// Builds the full embedded complex.  max_dim < 0 selects the largest edge
/// dimension present; the internal arrays always extend one dimension higher
/// so that Laplacians at the top reported dimension see their upper boundary.
EmbeddedComplex build_embedded_complex(const Hyperdigraph& h, int max_dim = -1);

} // namespace hdg
