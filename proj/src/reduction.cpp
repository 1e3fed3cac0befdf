#include "hdg/reduction.hpp"

#include <algorithm>

namespace hdg {

Hypergraph reduce(const Hyperdigraph& h) {
    std::vector<DirectedHyperedge> edges;
    edges.reserve(static_cast<size_t>(h.total_edges()));
    for (const auto& e : h.all_edges()) edges.push_back(e.sorted());
    std::optional<std::vector<std::vector<double>>> coords;
    if (h.has_coords()) coords = h.coords();
    return Hypergraph::make(h.n_vertices(), std::move(edges), std::move(coords));
}

RationalMatrix pi_matrix(const std::vector<DirectedHyperedge>& sequences,
                         const std::vector<DirectedHyperedge>& reduced_edges) {
    RationalMatrix out(static_cast<Index>(reduced_edges.size()),
                       static_cast<Index>(sequences.size()));
    for (Index c = 0; c < static_cast<Index>(sequences.size()); ++c) {
        const auto& seq = sequences[static_cast<size_t>(c)];
        const DirectedHyperedge target = seq.sorted();
        const auto it = std::lower_bound(reduced_edges.begin(), reduced_edges.end(), target);
        if (it == reduced_edges.end() || *it != target)
            throw InputError(InputError::Code::bad_argument,
                             "projection target " + to_string(target) + " missing");
        out(it - reduced_edges.begin(), c) = permutation_sign(seq);
    }
    return out;
}

std::vector<Rational> pi_chain_map(const Hyperdigraph& h, int p, const std::vector<Rational>& x) {
    const auto& sequences = h.grade(p);
    if (static_cast<Index>(x.size()) != static_cast<Index>(sequences.size()))
        throw InputError(InputError::Code::bad_argument, "chain length does not match grade size");
    const Hypergraph reduced = reduce(h);
    const auto& targets = reduced.underlying().grade(p);
    std::vector<Rational> out(targets.size());
    for (size_t c = 0; c < sequences.size(); ++c) {
        if (sgn(x[c]) == 0) continue;
        const DirectedHyperedge target = sequences[c].sorted();
        const auto it = std::lower_bound(targets.begin(), targets.end(), target);
        out[static_cast<size_t>(it - targets.begin())] += permutation_sign(sequences[c]) * x[c];
    }
    return out;
}

namespace {

/// Cycles of the embedded complex in dimension p, in edge coordinates.
RationalMatrix cycle_chains(const EmbeddedComplex& c, int p) {
    const RationalMatrix restricted =
        c.ambient[static_cast<size_t>(p)].matrix * c.omega[static_cast<size_t>(p)];
    return c.omega[static_cast<size_t>(p)] * kernel_basis(restricted);
}

/// Boundaries from dimension p+1, in edge coordinates.
RationalMatrix boundary_chains(const EmbeddedComplex& c, int p) {
    return exact_boundary_in_edge_coords(c.ambient[static_cast<size_t>(p + 1)],
                                         c.omega[static_cast<size_t>(p + 1)],
                                         c.complex.grade_size(p));
}

/// Columns of `cycles` that stay independent modulo the span of `boundaries`.
RationalMatrix homology_representatives(const RationalMatrix& boundaries,
                                        const RationalMatrix& cycles) {
    RationalMatrix accumulated = boundaries;
    RationalMatrix reps(cycles.rows(), 0);
    for (Index j = 0; j < cycles.cols(); ++j) {
        const auto column = cycles.col(j);
        if (in_span(column, accumulated)) continue;
        RationalMatrix one(cycles.rows(), 1);
        for (Index i = 0; i < cycles.rows(); ++i) one(i, 0) = column[static_cast<size_t>(i)];
        accumulated = accumulated.hstack(one);
        reps = reps.hstack(one);
    }
    return reps;
}

} // namespace

InducedHomologyRank induced_homology_rank(const Hyperdigraph& h, int p) {
    if (p < 0) throw InputError(InputError::Code::bad_dimension, "induced_homology_rank: p < 0");

    const EmbeddedComplex cd = build_embedded_complex(h, p);
    const Hyperdigraph reduced = normalize_hypergraph(reduce(h));
    const EmbeddedComplex cr = build_embedded_complex(reduced, p);

    InducedHomologyRank out;

    const RationalMatrix boundaries_d = boundary_chains(cd, p);
    const RationalMatrix reps = homology_representatives(boundaries_d, cycle_chains(cd, p));
    out.dim_directed = static_cast<long>(reps.cols());

    const RationalMatrix boundaries_r = boundary_chains(cr, p);
    out.dim_reduced = static_cast<long>(rank(boundaries_r.hstack(cycle_chains(cr, p))) -
                                        rank(boundaries_r));

    const RationalMatrix projected = pi_matrix(h.grade(p), reduced.grade(p)) * reps;
    if (!span_contains(cr.omega[static_cast<size_t>(p)], projected))
        throw ConsistencyError("projected homology class leaves the reduced embedded space");
    out.rank =
        static_cast<long>(rank(boundaries_r.hstack(projected)) - rank(boundaries_r));
    return out;
}

} // namespace hdg
