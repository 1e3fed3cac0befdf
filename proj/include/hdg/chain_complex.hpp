#pragma once

#include <vector>

#include "hdg/hyperstructures.hpp"
#include "hdg/rational_linalg.hpp"

namespace hdg {

struct FaceTerm {
    DirectedHyperedge face;
    int sign; // +1 or -1, alternating in removal order
};

/// Alternating-sign face list of a directed hyperedge: the i-th term drops
/// the i-th vertex and carries sign (-1)^i.  A vertex edge has an empty
/// boundary by convention.
std::vector<FaceTerm> boundary_of_edge(const DirectedHyperedge& e);

/// The boundary d_p restricted to the span of the directed p-hyperedges,
/// written over the faces that actually occur.  Columns follow the canonical
/// grade order; rows are frozen in first-occurrence order during the column
/// sweep.  Each row is flagged by whether its face is itself a hyperedge of
/// the complex (the partition the embedded stage keys on); for such rows the
/// face's own column index in grade p-1 is recorded.
struct AmbientBoundary {
    RationalMatrix matrix;                  // faces x generators, entries in {-1,0,+1}
    std::vector<DirectedHyperedge> faces;   // row labels
    std::vector<bool> face_is_edge;         // partition of rows
    std::vector<Index> face_edge_index;     // index in grade p-1, or -1

    /// Row indices whose face is not a hyperedge of the complex.
    std::vector<Index> forbidden_rows() const;
};

AmbientBoundary ambient_boundary_matrix(const Hyperdigraph& h, int p);

/// Boundary matrix over an explicit column list of arbitrary sequences (not
/// restricted to the hyperedges of a complex); used to compose consecutive
/// boundaries in d(d(x)) = 0 checks.
AmbientBoundary boundary_of_sequences(const Hyperdigraph& h,
                                      const std::vector<DirectedHyperedge>& columns);

} // namespace hdg
