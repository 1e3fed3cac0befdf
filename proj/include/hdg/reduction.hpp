#pragma once

#include <vector>

#include "hdg/embedded_complex.hpp"
#include "hdg/hyperstructures.hpp"
#include "hdg/rational_linalg.hpp"

namespace hdg {

/// The reduced hypergraph: every directed hyperedge is forgotten down to its
/// vertex set (deduplicated).  The vertex universe is unchanged.
Hypergraph reduce(const Hyperdigraph& h);

/// Signed projection of a chain over the directed p-hyperedges onto the
/// reduced p-hyperedges: a generator maps to its vertex set weighted by the
/// sign of the sorting permutation.
std::vector<Rational> pi_chain_map(const Hyperdigraph& h, int p, const std::vector<Rational>& x);

/// Same projection, applied to every generator of an arbitrary sequence list
/// (rows of the result run over `reduced_edges` in order).
RationalMatrix pi_matrix(const std::vector<DirectedHyperedge>& sequences,
                         const std::vector<DirectedHyperedge>& reduced_edges);

struct InducedHomologyRank {
    long rank = 0;          // rank of the map induced on homology
    long dim_directed = 0;  // dim H_p of the hyperdigraph
    long dim_reduced = 0;   // dim H_p of its reduced hypergraph
};

/// Pushes exact homology representatives through the projection and counts
/// how many stay independent modulo boundaries on the reduced side.  All
/// ranks are exact.
InducedHomologyRank induced_homology_rank(const Hyperdigraph& h, int p);

} // namespace hdg
