#include "hdg/laplacian.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace hdg {

namespace {
constexpr double kNegativeEigTol = -1e-9;
} // namespace

Eigen::MatrixXd laplacian_matrix(const EmbeddedComplex& c, int p) {
    const Index n = c.dim(p);
    Eigen::MatrixXd l = Eigen::MatrixXd::Zero(n, n);
    const Eigen::MatrixXd b_up = c.boundary_matrix(p + 1); // dim(p+1) x dim(p)
    const Eigen::MatrixXd b_dn = c.boundary_matrix(p);     // dim(p) x dim(p-1)
    if (b_up.rows() > 0) l += b_up.transpose() * b_up;
    if (b_dn.cols() > 0) l += b_dn * b_dn.transpose();
    return 0.5 * (l + l.transpose());
}

std::vector<double> spectrum(const Eigen::MatrixXd& l) {
    if (l.rows() == 0) return {};
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(l, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success)
        throw ConsistencyError("eigensolver failed to converge");
    std::vector<double> eigs(solver.eigenvalues().data(),
                             solver.eigenvalues().data() + solver.eigenvalues().size());
    for (double& x : eigs) {
        if (x < kNegativeEigTol)
            throw ConsistencyError("negative eigenvalue " + std::to_string(x) +
                                   " on a nonnegative operator");
        if (x < 0) x = 0;
    }
    std::sort(eigs.begin(), eigs.end());
    return eigs;
}

long betti_exact(const EmbeddedComplex& c, int p) {
    if (p < 0 || p > c.top_dim) return 0;
    const Index rank_dn = c.boundary_rank[static_cast<size_t>(p)];
    const Index rank_up = c.boundary_rank[static_cast<size_t>(p + 1)];
    return static_cast<long>(c.dim(p) - rank_dn - rank_up);
}

long betti_exact(const Hyperdigraph& h, int p) {
    return betti_exact(build_embedded_complex(h, std::max(p, 0)), p);
}

SpectralSummary summarize_spectrum(std::vector<double> eigenvalues, long betti, double zero_tol) {
    SpectralSummary s;
    s.dim = static_cast<Index>(eigenvalues.size());
    s.spectrum = std::move(eigenvalues);
    s.betti = betti;
    const double lmax = s.spectrum.empty() ? 0.0 : s.spectrum.back();
    const double tau = zero_tol * std::max(1.0, lmax);
    long zeros = 0;
    for (double x : s.spectrum) {
        if (x < tau) {
            ++zeros;
        } else {
            if (!s.lambda_min_nonzero) s.lambda_min_nonzero = x;
        }
    }
    if (zeros != betti)
        throw ConsistencyError("zero-eigenvalue count " + std::to_string(zeros) +
                               " does not match the exact Betti number " + std::to_string(betti));
    if (s.spectrum.size() >= 2) s.fiedler = s.spectrum[1];
    return s;
}

std::vector<SpectralSummary> analyze(const EmbeddedComplex& c, double zero_tol) {
    std::vector<SpectralSummary> out;
    out.reserve(static_cast<size_t>(c.top_dim) + 1);
    for (int p = 0; p <= c.top_dim; ++p)
        out.push_back(summarize_spectrum(spectrum(laplacian_matrix(c, p)), betti_exact(c, p),
                                         zero_tol));
    return out;
}

std::vector<SpectralSummary> analyze(const Hyperdigraph& h, int max_dim, double zero_tol) {
    return analyze(build_embedded_complex(h, max_dim), zero_tol);
}

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

} // namespace

ConnectivityReport connectivity_check(const Hyperdigraph& h, double zero_tol) {
    if (h.grade_size(0) == 0)
        throw InputError(InputError::Code::empty_grade,
                         "connectivity_check requires at least one 0-hyperedge");

    ConnectivityReport report;

    UnionFind uf(h.n_vertices());
    for (const auto& e : h.grade(1)) uf.unite(e.vertices[0], e.vertices[1]);
    const int root = uf.find(h.grade(0).front().vertices[0]);
    report.connected = true;
    for (const auto& v : h.grade(0))
        if (uf.find(v.vertices[0]) != root) { report.connected = false; break; }

    const auto c = build_embedded_complex(h, 0);
    const auto eigs = spectrum(laplacian_matrix(c, 0));
    if (eigs.size() >= 2) report.lambda0_2 = eigs[1];
    const double lmax = eigs.empty() ? 0.0 : eigs.back();
    const double tau = zero_tol * std::max(1.0, lmax);
    long zeros = 0;
    for (double x : eigs)
        if (x < tau) ++zeros;
    report.lambda0_2_positive = zeros <= 1;
    return report;
}

} // namespace hdg
