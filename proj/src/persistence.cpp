#include "hdg/persistence.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <limits>
#include <map>
#include <memory>
#include <set>
#include <string>

namespace hdg {

namespace {
constexpr double kSpanResidualTol = 1e-9;
constexpr double kHarmonicRankCutoff = 1e-8;
constexpr double kNegInf = -std::numeric_limits<double>::infinity();
} // namespace

Filtration Filtration::make(Hyperdigraph base, std::vector<std::vector<double>> values) {
    Filtration f;
    const int top = base.max_dimension();
    if (static_cast<int>(values.size()) < top + 1)
        throw InputError(InputError::Code::bad_argument, "filtration values missing for some grade");
    for (int p = 0; p <= top; ++p)
        if (static_cast<Index>(values[static_cast<size_t>(p)].size()) != base.grade_size(p))
            throw InputError(InputError::Code::bad_argument,
                             "filtration values misaligned in dimension " + std::to_string(p));
    std::set<double> crit;
    for (const auto& grade : values)
        for (double v : grade) crit.insert(v);
    f.base_ = std::move(base);
    f.values_ = std::move(values);
    f.critical_values_.assign(crit.begin(), crit.end());
    return f;
}

double Filtration::value_of(const DirectedHyperedge& e) const {
    const Index idx = base_.edge_index(e);
    if (idx < 0)
        throw InputError(InputError::Code::bad_argument,
                         "edge " + to_string(e) + " is not part of the filtration");
    return values_[static_cast<size_t>(e.dimension())][static_cast<size_t>(idx)];
}

Hyperdigraph Filtration::snapshot(double a) const {
    std::vector<DirectedHyperedge> kept;
    for (int p = 0; p <= base_.max_dimension(); ++p) {
        const auto& grade = base_.grade(p);
        for (Index i = 0; i < static_cast<Index>(grade.size()); ++i)
            if (values_[static_cast<size_t>(p)][static_cast<size_t>(i)] <= a)
                kept.push_back(grade[static_cast<size_t>(i)]);
    }
    std::optional<std::vector<std::vector<double>>> coords;
    if (base_.has_coords()) coords = base_.coords();
    return Hyperdigraph::make(base_.n_vertices(), std::move(kept), std::move(coords));
}

double Filtration::snap_down(double a) const {
    auto it = std::upper_bound(critical_values_.begin(), critical_values_.end(), a);
    if (it == critical_values_.begin()) return kNegInf;
    return *std::prev(it);
}

namespace {

std::vector<std::vector<double>> value_table(const Hyperdigraph& h,
                                             double (*edge_value)(const Hyperdigraph&,
                                                                  const DirectedHyperedge&)) {
    std::vector<std::vector<double>> values(static_cast<size_t>(h.max_dimension() + 1));
    for (int p = 0; p <= h.max_dimension(); ++p) {
        values[static_cast<size_t>(p)].reserve(static_cast<size_t>(h.grade_size(p)));
        for (const auto& e : h.grade(p))
            values[static_cast<size_t>(p)].push_back(edge_value(h, e));
    }
    return values;
}

double volume_value(const Hyperdigraph& h, const DirectedHyperedge& e) {
    const int p = e.dimension();
    if (p == 0) return 0.0;
    const auto& coords = h.coords();
    const int d = h.coord_dim();
    Eigen::MatrixXd a(d, p);
    const auto& origin = coords[static_cast<size_t>(e.vertices[0])];
    for (int j = 0; j < p; ++j) {
        const auto& v = coords[static_cast<size_t>(e.vertices[static_cast<size_t>(j + 1)])];
        for (int i = 0; i < d; ++i) a(i, j) = v[static_cast<size_t>(i)] - origin[static_cast<size_t>(i)];
    }
    const double det = (a.transpose() * a).determinant();
    return std::pow(std::abs(det), 1.0 / (2.0 * p));
}

double distance_value(const Hyperdigraph& h, const DirectedHyperedge& e) {
    const auto& coords = h.coords();
    double worst = 0.0;
    for (size_t i = 0; i < e.vertices.size(); ++i)
        for (size_t j = i + 1; j < e.vertices.size(); ++j) {
            const auto& u = coords[static_cast<size_t>(e.vertices[i])];
            const auto& v = coords[static_cast<size_t>(e.vertices[j])];
            double s = 0;
            for (size_t k = 0; k < u.size(); ++k) s += (u[k] - v[k]) * (u[k] - v[k]);
            worst = std::max(worst, std::sqrt(s));
        }
    return worst;
}

} // namespace

Filtration volume_filtration(const Hyperdigraph& h) {
    if (!h.has_coords())
        throw InputError(InputError::Code::missing_coords, "volume filtration needs coordinates");
    if (h.coord_dim() < h.max_dimension())
        throw InputError(InputError::Code::bad_dimension,
                         "volume filtration: coordinate dimension below the top edge dimension");
    return Filtration::make(h, value_table(h, volume_value));
}

Filtration distance_filtration(const Hyperdigraph& h) {
    if (!h.has_coords())
        throw InputError(InputError::Code::missing_coords, "distance filtration needs coordinates");
    return Filtration::make(h, value_table(h, distance_value));
}

Filtration values_filtration(const Hyperdigraph& h,
                             const std::vector<std::pair<DirectedHyperedge, double>>& values) {
    std::map<DirectedHyperedge, double> by_edge;
    for (const auto& [e, v] : values) by_edge[e] = v;
    std::vector<std::vector<double>> table(static_cast<size_t>(h.max_dimension() + 1));
    for (int p = 0; p <= h.max_dimension(); ++p)
        for (const auto& e : h.grade(p)) {
            auto it = by_edge.find(e);
            if (it == by_edge.end())
                throw InputError(InputError::Code::bad_argument,
                                 "no filtration value for edge " + to_string(e));
            table[static_cast<size_t>(p)].push_back(it->second);
        }
    return Filtration::make(h, std::move(table));
}

namespace {

/// Column-wise inclusion of chains over snapshot-a edges into snapshot-b
/// edge coordinates; a must be a sub-hyperdigraph of b.
RationalMatrix include_chains(const Hyperdigraph& ha, const Hyperdigraph& hb, int p,
                              const RationalMatrix& chains) {
    RationalMatrix out(hb.grade_size(p), chains.cols());
    const auto& grade = ha.grade(p);
    for (Index i = 0; i < static_cast<Index>(grade.size()); ++i) {
        const Index tgt = hb.edge_index(grade[static_cast<size_t>(i)]);
        if (tgt < 0)
            throw ConsistencyError("snapshot inclusion broken: edge " +
                                   to_string(grade[static_cast<size_t>(i)]) +
                                   " missing at the later parameter");
        for (Index j = 0; j < chains.cols(); ++j) out(tgt, j) = chains(i, j);
    }
    return out;
}

} // namespace

RationalMatrix omega_ab(const EmbeddedComplex& ca, const EmbeddedComplex& cb, int p) {
    if (p < 0) throw InputError(InputError::Code::bad_dimension, "omega_ab: p < 0");
    const Index nb = cb.dim(p + 1);
    if (nb == 0) return RationalMatrix(cb.complex.grade_size(p + 1), 0);

    // Boundaries of the b-side space, in b's p-edge coordinates.
    const RationalMatrix w = exact_boundary_in_edge_coords(
        cb.ambient[static_cast<size_t>(p + 1)], cb.omega[static_cast<size_t>(p + 1)],
        cb.complex.grade_size(p));

    // x lies in span(omega_a) iff ann^T x = 0.
    const RationalMatrix a_in_b =
        include_chains(ca.complex, cb.complex, p, ca.omega[static_cast<size_t>(p)]);
    const RationalMatrix ann = span_annihilator(a_in_b);

    const RationalMatrix k = kernel_basis(ann.transposed() * w);
    return cb.omega[static_cast<size_t>(p + 1)] * k;
}

long persistent_betti_exact(const EmbeddedComplex& ca, const EmbeddedComplex& cb, int p) {
    const Index nullity_a = ca.dim(p) - ca.boundary_rank[static_cast<size_t>(p)];
    const RationalMatrix z = omega_ab(ca, cb, p);
    const Index rank_ab = rank(cb.ambient[static_cast<size_t>(p + 1)].matrix * z);
    return static_cast<long>(nullity_a - rank_ab);
}

PersistentEntry persistent_laplacian(const EmbeddedComplex& ca, const EmbeddedComplex& cb, int p,
                                     double zero_tol) {
    PersistentEntry out;
    out.dim_omega_a = ca.dim(p);

    const RationalMatrix z = omega_ab(ca, cb, p);
    out.dim_omega_ab = z.cols();

    // Representation of the (a,b)-boundary from an orthonormal basis of the
    // compatible space into the orthonormal basis at a.  The boundary of a
    // compatible chain already lies in the a-span, so the adjoint projection
    // reduces to coordinate extraction against the a-basis.
    const Eigen::MatrixXd q_ab = orthonormalize(z);
    const Eigen::MatrixXd w =
        cb.ambient[static_cast<size_t>(p + 1)].matrix.to_double() * q_ab;

    const auto& faces = cb.ambient[static_cast<size_t>(p + 1)].faces;
    Eigen::MatrixXd aligned = Eigen::MatrixXd::Zero(ca.complex.grade_size(p), q_ab.cols());
    for (Index r = 0; r < w.rows(); ++r) {
        const Index idx_a = ca.complex.edge_index(faces[static_cast<size_t>(r)]);
        if (idx_a >= 0) {
            aligned.row(idx_a) = w.row(r);
        } else if (w.cols() > 0 && w.row(r).cwiseAbs().maxCoeff() > kSpanResidualTol) {
            throw ConsistencyError("persistent boundary leaves the a-snapshot span at face " +
                                   to_string(faces[static_cast<size_t>(r)]));
        }
    }

    const Eigen::MatrixXd& q_a = ca.ortho[static_cast<size_t>(p)];
    const Eigen::MatrixXd m = q_a.transpose() * aligned; // dim_a x k
    if (aligned.size() > 0) {
        const double resid = (aligned - q_a * m).cwiseAbs().maxCoeff();
        if (resid > kSpanResidualTol)
            throw ConsistencyError("persistent boundary projection residual " +
                                   std::to_string(resid));
    }
    const Eigen::MatrixXd b_ab = m.transpose(); // left action: k x dim_a

    const Eigen::MatrixXd& b_a = ca.brep[static_cast<size_t>(p)];
    Eigen::MatrixXd l = Eigen::MatrixXd::Zero(out.dim_omega_a, out.dim_omega_a);
    if (b_ab.rows() > 0) l += b_ab.transpose() * b_ab;
    if (b_a.cols() > 0) l += b_a * b_a.transpose();
    l = 0.5 * (l + l.transpose());

    const Index rank_ab = rank(cb.ambient[static_cast<size_t>(p + 1)].matrix * z);
    const long betti =
        static_cast<long>(ca.dim(p) - ca.boundary_rank[static_cast<size_t>(p)] - rank_ab);

    const SpectralSummary s = summarize_spectrum(spectrum(l), betti, zero_tol);
    out.betti = s.betti;
    out.spectrum = s.spectrum;
    out.lambda_min_nonzero = s.lambda_min_nonzero;
    return out;
}

namespace {

/// Orthonormal basis of the numeric kernel of the dimension-p Laplacian,
/// written in the snapshot's p-edge coordinates.
Eigen::MatrixXd harmonic_basis(const EmbeddedComplex& c, int p, double zero_tol) {
    const Eigen::MatrixXd l = laplacian_matrix(c, p);
    if (l.rows() == 0) return Eigen::MatrixXd::Zero(c.complex.grade_size(p), 0);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(l);
    if (solver.info() != Eigen::Success)
        throw ConsistencyError("eigensolver failed to converge");
    const auto& eigs = solver.eigenvalues();
    const double tau = zero_tol * std::max(1.0, eigs(eigs.size() - 1));
    Index count = 0;
    while (count < eigs.size() && eigs(count) < tau) ++count;
    return c.ortho[static_cast<size_t>(p)] * solver.eigenvectors().leftCols(count);
}

} // namespace

long persistent_harmonic_dim(const EmbeddedComplex& ca, const EmbeddedComplex& cb, int p,
                             double zero_tol) {
    const Eigen::MatrixXd ha = harmonic_basis(ca, p, zero_tol);
    const Eigen::MatrixXd hb = harmonic_basis(cb, p, zero_tol);
    if (ha.cols() == 0 || hb.cols() == 0) return 0;

    Eigen::MatrixXd ha_in_b = Eigen::MatrixXd::Zero(cb.complex.grade_size(p), ha.cols());
    const auto& grade = ca.complex.grade(p);
    for (Index i = 0; i < static_cast<Index>(grade.size()); ++i) {
        const Index tgt = cb.complex.edge_index(grade[static_cast<size_t>(i)]);
        if (tgt < 0) throw ConsistencyError("snapshot inclusion broken in harmonic persistence");
        ha_in_b.row(tgt) = ha.row(i);
    }

    const Eigen::MatrixXd projected = hb.transpose() * ha_in_b; // beta_b x beta_a
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(projected);
    long r = 0;
    for (Index i = 0; i < svd.singularValues().size(); ++i)
        if (svd.singularValues()(i) > kHarmonicRankCutoff) ++r;
    return r;
}

namespace {

EmbeddedComplex build_snapshot_complex(const Filtration& f, double a, int cap) {
    return build_embedded_complex(f.snapshot(a), cap);
}

int cap_for(const SweepSpec& spec) {
    int cap = 0;
    for (int p : spec.dims) {
        if (p < 0) throw InputError(InputError::Code::bad_dimension, "negative dimension in sweep");
        cap = std::max(cap, p);
    }
    return cap;
}

std::vector<std::pair<double, double>> row_parameters(const Filtration& f, const SweepSpec& spec) {
    std::vector<std::pair<double, double>> rows;
    switch (spec.mode) {
    case SweepMode::diagonal:
        for (double t : f.critical_values()) rows.emplace_back(t, t);
        break;
    case SweepMode::pairs:
        for (auto [a, b] : spec.pairs) {
            if (a > b)
                throw InputError(InputError::Code::bad_argument,
                                 "persistence pair with a > b");
            rows.emplace_back(f.snap_down(a), f.snap_down(b));
        }
        break;
    case SweepMode::grid: {
        if (!(spec.grid_step > 0))
            throw InputError(InputError::Code::bad_argument, "grid step must be positive");
        if (f.critical_values().empty()) break;
        const double lo = f.critical_values().front();
        const double hi = f.critical_values().back();
        std::vector<double> ticks;
        for (double t = lo; t <= hi + spec.grid_step * 0.5; t += spec.grid_step) {
            const double snapped = f.snap_down(t);
            if (ticks.empty() || snapped != ticks.back()) ticks.push_back(snapped);
        }
        if (ticks.empty() || ticks.back() != hi) ticks.push_back(hi); // cover the full range
        for (size_t i = 0; i < ticks.size(); ++i)
            for (size_t j = i; j < ticks.size(); ++j) rows.emplace_back(ticks[i], ticks[j]);
        break;
    }
    }
    return rows;
}

SweepResult run_sweep(const Filtration& f, const SweepSpec& spec, bool parallel, bool cache) {
    SweepResult result;
    result.dims = spec.dims;
    const auto params = row_parameters(f, spec);
    result.rows.resize(params.size());
    for (size_t i = 0; i < params.size(); ++i) {
        result.rows[i].a = params[i].first;
        result.rows[i].b = params[i].second;
        result.rows[i].entries.resize(spec.dims.size());
    }
    if (params.empty()) return result;

    const int cap = cap_for(spec);

    // Stage 1: one embedded complex per distinct parameter value.
    std::vector<double> distinct;
    for (auto [a, b] : params) {
        distinct.push_back(a);
        distinct.push_back(b);
    }
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());

    std::vector<std::shared_ptr<const EmbeddedComplex>> complexes(distinct.size());
    std::exception_ptr failure = nullptr;

    if (cache) {
#pragma omp parallel for schedule(dynamic) if (parallel)
        for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(distinct.size()); ++i) {
            try {
                complexes[static_cast<size_t>(i)] = std::make_shared<EmbeddedComplex>(
                    build_snapshot_complex(f, distinct[static_cast<size_t>(i)], cap));
            } catch (...) {
#pragma omp critical
                if (!failure) failure = std::current_exception();
            }
        }
        if (failure) std::rethrow_exception(failure);
    }

    auto complex_at = [&](double t) -> std::shared_ptr<const EmbeddedComplex> {
        if (cache) {
            const auto it = std::lower_bound(distinct.begin(), distinct.end(), t);
            return complexes[static_cast<size_t>(it - distinct.begin())];
        }
        return std::make_shared<EmbeddedComplex>(build_snapshot_complex(f, t, cap));
    };

    // Stage 2: independent (a, b, p) cells.
    const std::ptrdiff_t n_cells =
        static_cast<std::ptrdiff_t>(params.size() * spec.dims.size());
#pragma omp parallel for schedule(dynamic) if (parallel)
    for (std::ptrdiff_t cell = 0; cell < n_cells; ++cell) {
        const size_t row = static_cast<size_t>(cell) / spec.dims.size();
        const size_t dim_slot = static_cast<size_t>(cell) % spec.dims.size();
        try {
            const auto ca = complex_at(params[row].first);
            const auto cb = complex_at(params[row].second);
            result.rows[row].entries[dim_slot] =
                persistent_laplacian(*ca, *cb, spec.dims[dim_slot], spec.zero_tol);
        } catch (...) {
#pragma omp critical
            if (!failure) failure = std::current_exception();
        }
    }
    if (failure) std::rethrow_exception(failure);
    return result;
}

} // namespace

SweepResult sweep(const Filtration& f, const SweepSpec& spec, bool parallel) {
    return run_sweep(f, spec, parallel, /*cache=*/true);
}

SweepResult sweep_reference(const Filtration& f, const SweepSpec& spec) {
    return run_sweep(f, spec, /*parallel=*/false, /*cache=*/false);
}

RationalMatrix omega_ab(const Filtration& f, double a, double b, int p) {
    if (a > b) throw InputError(InputError::Code::bad_argument, "omega_ab requires a <= b");
    return omega_ab(build_embedded_complex(f.snapshot(a), p),
                    build_embedded_complex(f.snapshot(b), p), p);
}

long persistent_betti_exact(const Filtration& f, double a, double b, int p) {
    if (a > b) throw InputError(InputError::Code::bad_argument, "persistence requires a <= b");
    return persistent_betti_exact(build_embedded_complex(f.snapshot(a), p),
                                  build_embedded_complex(f.snapshot(b), p), p);
}

PersistentEntry persistent_laplacian(const Filtration& f, double a, double b, int p,
                                     double zero_tol) {
    if (a > b) throw InputError(InputError::Code::bad_argument, "persistence requires a <= b");
    return persistent_laplacian(build_embedded_complex(f.snapshot(a), p),
                                build_embedded_complex(f.snapshot(b), p), p, zero_tol);
}

long persistent_harmonic_dim(const Filtration& f, double a, double b, int p, double zero_tol) {
    if (a > b) throw InputError(InputError::Code::bad_argument, "persistence requires a <= b");
    return persistent_harmonic_dim(build_embedded_complex(f.snapshot(a), p),
                                   build_embedded_complex(f.snapshot(b), p), p, zero_tol);
}

} // namespace hdg
