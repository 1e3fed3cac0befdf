#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "hdg/embedded_complex.hpp"
#include "hdg/laplacian.hpp"

namespace hdg {

/// A sublevel-set filtration: a maximal complex together with one real value
/// per directed hyperedge.  Snapshots f(a) keep exactly the edges with value
/// at most a, so a <= b always gives an inclusion of hyperdigraphs.
class Filtration {
public:
    Filtration() = default;

    /// `values` is parallel to the base's graded edge storage.
    static Filtration make(Hyperdigraph base, std::vector<std::vector<double>> values);

    const Hyperdigraph& base() const { return base_; }
    const std::vector<double>& critical_values() const { return critical_values_; }

    double value_of(const DirectedHyperedge& e) const;

    /// Sublevel hyperdigraph at parameter a (same vertex universe and coords).
    Hyperdigraph snapshot(double a) const;

    /// Largest critical value <= a; -infinity when a precedes every edge.
    double snap_down(double a) const;

private:
    Hyperdigraph base_;
    std::vector<std::vector<double>> values_;
    std::vector<double> critical_values_;
};

/// f(e) = |det(A^T A)|^(1/2p) with A = (v1-v0, ..., vp-v0); vertices get 0.
/// Degenerate configurations evaluate to 0 and enter immediately.
Filtration volume_filtration(const Hyperdigraph& h);

/// f(e) = largest pairwise Euclidean distance among the edge's vertices.
Filtration distance_filtration(const Hyperdigraph& h);

/// Explicit per-edge values, matched by edge identity; every edge of the
/// complex must receive a value.
Filtration values_filtration(const Hyperdigraph& h,
                             const std::vector<std::pair<DirectedHyperedge, double>>& values);

/// Exact basis of { x in the (p+1)-dimensional embedded space at b whose
/// boundary lies in the span of the p-dimensional embedded space at a },
/// written in the b-snapshot's (p+1)-edge coordinates.  `ca` and `cb` are the
/// embedded complexes of the two snapshots; cb must be built at least one
/// dimension past p.
RationalMatrix omega_ab(const EmbeddedComplex& ca, const EmbeddedComplex& cb, int p);

/// Persistent Betti number: nullity of the p-boundary at a minus the exact
/// rank of the (p+1)-boundary restricted to the (a,b)-compatible space.
long persistent_betti_exact(const EmbeddedComplex& ca, const EmbeddedComplex& cb, int p);

struct PersistentEntry {
    long betti = 0;                           // exact persistent Betti number
    std::vector<double> spectrum;             // eigenvalues of the persistent Laplacian
    std::optional<double> lambda_min_nonzero;
    Index dim_omega_a = 0;                    // dim of the a-snapshot space in dimension p
    Index dim_omega_ab = 0;                   // dim of the (a,b)-compatible space, dimension p+1
};

/// The persistent Laplacian on the a-snapshot's dimension-p space, its
/// spectrum and exact persistent Betti number.  The numeric zero count is
/// verified against the exact value.
PersistentEntry persistent_laplacian(const EmbeddedComplex& ca, const EmbeddedComplex& cb, int p,
                                     double zero_tol = kDefaultZeroTol);

/// Dimension of the image of the a-harmonic space inside the b-harmonic
/// space (inclusion followed by harmonic projection), via a float rank with
/// a 1e-8 singular-value cutoff.
long persistent_harmonic_dim(const EmbeddedComplex& ca, const EmbeddedComplex& cb, int p,
                             double zero_tol = kDefaultZeroTol);

// Convenience overloads that build the two snapshot complexes internally.
RationalMatrix omega_ab(const Filtration& f, double a, double b, int p);
long persistent_betti_exact(const Filtration& f, double a, double b, int p);
PersistentEntry persistent_laplacian(const Filtration& f, double a, double b, int p,
                                     double zero_tol = kDefaultZeroTol);
long persistent_harmonic_dim(const Filtration& f, double a, double b, int p,
                             double zero_tol = kDefaultZeroTol);

enum class SweepMode { diagonal, pairs, grid };

struct SweepSpec {
    SweepMode mode = SweepMode::diagonal;
    std::vector<std::pair<double, double>> pairs; // pairs mode; a <= b required
    double grid_step = 0;                         // grid mode
    std::vector<int> dims = {0, 1, 2};
    double zero_tol = kDefaultZeroTol;
};

struct SweepRow {
    double a = 0;
    double b = 0;
    std::vector<PersistentEntry> entries; // parallel to SweepSpec::dims
};

struct SweepResult {
    std::vector<int> dims;
    std::vector<SweepRow> rows; // deterministic order
};

/// Evaluates the requested (a,b) cells at critical values only (arbitrary
/// parameters snap down).  Snapshot complexes are cached per critical value
/// and cells run in parallel when OpenMP is available; the row order of the
/// result does not depend on the schedule.
SweepResult sweep(const Filtration& f, const SweepSpec& spec, bool parallel = true);

/// Serial reference: identical cell semantics, no cache, no threading.
/// Kept for testing and benchmarking against `sweep`.
SweepResult sweep_reference(const Filtration& f, const SweepSpec& spec);

} // namespace hdg
