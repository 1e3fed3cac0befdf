#pragma once

#include <cstdint>
#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "hdg/errors.hpp"

namespace hdg {

/// Index into a totally ordered vertex universe 0..n-1.  External labels
/// are mapped to ids at the I/O boundary.
using VertexId = std::int32_t;

using Index = std::ptrdiff_t;

/// A sequence of pairwise distinct vertices.  A sequence of length p+1 is a
/// directed p-hyperedge; via the usual (permutation, set) correspondence it
/// also encodes the pair (sigma, e).
struct DirectedHyperedge {
    std::vector<VertexId> vertices;

    DirectedHyperedge() = default;
    DirectedHyperedge(std::initializer_list<VertexId> vs) : vertices(vs) {}
    explicit DirectedHyperedge(std::vector<VertexId> vs) : vertices(std::move(vs)) {}

    int dimension() const { return static_cast<int>(vertices.size()) - 1; }
    Index size() const { return static_cast<Index>(vertices.size()); }

    bool has_distinct_vertices() const;
    bool is_sorted() const;

    /// Vertex set of this edge, in increasing order.
    DirectedHyperedge sorted() const;

    auto operator<=>(const DirectedHyperedge&) const = default;
};

std::string to_string(const DirectedHyperedge& e);

/// Sign of the permutation that sorts `seq` into increasing order,
/// i.e. (-1)^(number of inversions).  Rejects repeated vertices.
int permutation_sign(const DirectedHyperedge& seq);

/// True iff the permutation defining `seq` (ranks of its entries relative to
/// sorted order) is increasing on the first p positions and on the last q
/// positions.  Requires p, q >= 0 and p + q == seq length.
bool is_shuffle(const DirectedHyperedge& seq, int p, int q);

/// A vertex universe together with a set of directed hyperedges, stored
/// graded by dimension.  Each grade is kept deduplicated and sorted
/// lexicographically so that all downstream matrix layouts are reproducible.
/// Immutable after construction.
class Hyperdigraph {
public:
    Hyperdigraph() = default;

    /// Validates vertex ids and distinctness, deduplicates, grades and sorts.
    static Hyperdigraph make(int n_vertices,
                             std::vector<DirectedHyperedge> edges,
                             std::optional<std::vector<std::vector<double>>> coords = std::nullopt);

    int n_vertices() const { return n_vertices_; }

    /// Largest p with a nonempty grade; -1 when there are no edges at all.
    int max_dimension() const { return static_cast<int>(grades_.size()) - 1; }

    /// Directed p-hyperedges in canonical order (empty for out-of-range p).
    const std::vector<DirectedHyperedge>& grade(int p) const;

    /// Number of directed p-hyperedges.
    Index grade_size(int p) const { return static_cast<Index>(grade(p).size()); }

    Index total_edges() const;

    /// Column index of `e` within its grade, or -1 if absent.
    Index edge_index(const DirectedHyperedge& e) const;

    bool has_edge(const DirectedHyperedge& e) const { return edge_index(e) >= 0; }

    /// Flattened edge list, grade by grade.
    std::vector<DirectedHyperedge> all_edges() const;

    bool has_coords() const { return coords_.has_value(); }
    const std::vector<std::vector<double>>& coords() const;

    /// Coordinate dimension, or 0 when absent.
    int coord_dim() const;

private:
    int n_vertices_ = 0;
    std::vector<std::vector<DirectedHyperedge>> grades_;
    std::optional<std::vector<std::vector<double>>> coords_;
};

/// A hyperdigraph in which every edge sequence is strictly increasing (the
/// canonical representative of a vertex set).
class Hypergraph {
public:
    Hypergraph() = default;

    /// Sorts each edge into increasing order before validation; an edge with
    /// a repeated vertex is rejected.
    static Hypergraph make(int n_vertices,
                           std::vector<DirectedHyperedge> edges,
                           std::optional<std::vector<std::vector<double>>> coords = std::nullopt);

    const Hyperdigraph& underlying() const { return h_; }

private:
    Hyperdigraph h_;
};

/// The trivially-directed hyperdigraph of a hypergraph: every hyperedge
/// becomes the increasing sequence on its vertex set.  Spectra and Betti
/// numbers computed downstream agree with the plain hypergraph pipeline.
Hyperdigraph normalize_hypergraph(const Hypergraph& h);

} // namespace hdg
