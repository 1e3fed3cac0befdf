#pragma once

#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "hdg/embedded_complex.hpp"

namespace hdg {

/// Relative zero-eigenvalue threshold: an eigenvalue counts as zero when it
/// falls below zero_tol * max(1, lambda_max).  The count is always verified
/// against the exact Betti number.
constexpr double kDefaultZeroTol = 1e-8;

struct SpectralSummary {
    std::vector<double> spectrum;            // ascending, clamped at 0
    long betti = 0;                          // exact
    std::optional<double> lambda_min_nonzero;
    std::optional<double> fiedler;           // second-smallest eigenvalue
    Index dim = 0;                           // dim of the embedded space
};

/// L_p = B_{p+1}^T B_{p+1} + B_p B_p^T, symmetrized.
Eigen::MatrixXd laplacian_matrix(const EmbeddedComplex& c, int p);

/// Ascending eigenvalues of a symmetric matrix; values within -1e-9 of zero
/// are clamped to 0, anything lower is a hard error.
std::vector<double> spectrum(const Eigen::MatrixXd& l);

/// Exact Betti number of the embedded homology in dimension p.
long betti_exact(const EmbeddedComplex& c, int p);
long betti_exact(const Hyperdigraph& h, int p);

/// Spectral summary per dimension 0..c.top_dim, with the zero-count/Betti
/// cross-check enforced.
std::vector<SpectralSummary> analyze(const EmbeddedComplex& c, double zero_tol = kDefaultZeroTol);
std::vector<SpectralSummary> analyze(const Hyperdigraph& h, int max_dim = -1,
                                     double zero_tol = kDefaultZeroTol);

/// Builds one summary from a spectrum and its exact Betti number.
SpectralSummary summarize_spectrum(std::vector<double> eigenvalues, long betti, double zero_tol);

struct ConnectivityReport {
    bool lambda0_2_positive = false; // second-smallest eigenvalue of L_0 above threshold
    bool connected = false;          // all 0-hyperedges joined by undirected 1-hyperedge paths
    std::optional<double> lambda0_2;
};

/// Spectral vs combinatorial connectivity of the vertex dimension.  Paths
/// may traverse any 1-hyperedge in either direction and pass through
/// vertices that are not 0-hyperedges.  Requires at least one 0-hyperedge.
ConnectivityReport connectivity_check(const Hyperdigraph& h, double zero_tol = kDefaultZeroTol);

} // namespace hdg
