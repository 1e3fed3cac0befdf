#pragma once

// Independent oracles for values asserted in the suites.  Everything here is
// deliberately brute-force and stays off the code paths it checks.

#include <algorithm>
#include <set>
#include <vector>

#include "hdg/hdg.hpp"

namespace hdgtest::oracle {

using namespace hdg;

/// Sign via bubble sort, counting swaps.
inline int permutation_sign_bruteforce(std::vector<VertexId> seq) {
    int swaps = 0;
    for (size_t i = 0; i < seq.size(); ++i)
        for (size_t j = 0; j + 1 < seq.size() - i; ++j)
            if (seq[j] > seq[j + 1]) {
                std::swap(seq[j], seq[j + 1]);
                ++swaps;
            }
    return swaps % 2 == 0 ? 1 : -1;
}

/// All (p,q)-shuffle arrangements of a sorted element list, by filtering the
/// full permutation set.
inline std::set<std::vector<VertexId>> all_shuffles(std::vector<VertexId> sorted_elems, int p,
                                                    int q) {
    std::set<std::vector<VertexId>> out;
    std::sort(sorted_elems.begin(), sorted_elems.end());
    std::vector<VertexId> perm = sorted_elems;
    std::sort(perm.begin(), perm.end());
    do {
        bool ok = true;
        for (int i = 1; i < p && ok; ++i)
            if (perm[static_cast<size_t>(i - 1)] >= perm[static_cast<size_t>(i)]) ok = false;
        for (int i = p + 1; i < p + q && ok; ++i)
            if (perm[static_cast<size_t>(i - 1)] >= perm[static_cast<size_t>(i)]) ok = false;
        if (ok) out.insert(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

/// Chains over snapshot-a edges re-indexed into snapshot-b edge coordinates.
inline RationalMatrix include_into(const Hyperdigraph& ha, const Hyperdigraph& hb, int p,
                                   const RationalMatrix& chains) {
    RationalMatrix out(hb.grade_size(p), chains.cols());
    const auto& grade = ha.grade(p);
    for (Index i = 0; i < static_cast<Index>(grade.size()); ++i) {
        const Index tgt = hb.edge_index(grade[static_cast<size_t>(i)]);
        for (Index j = 0; j < chains.cols(); ++j) out(tgt, j) = chains(i, j);
    }
    return out;
}

/// Dimension of the (a,b)-compatible space by the stacked-rank identity:
/// dim = n_b - rank([W | A]) + rank(A), where W holds the boundaries of the
/// b-side space and A spans the a-side target.
inline long omega_ab_dim(const EmbeddedComplex& ca, const EmbeddedComplex& cb, int p) {
    const Index nb = cb.dim(p + 1);
    if (nb == 0) return 0;
    const RationalMatrix w = exact_boundary_in_edge_coords(
        cb.ambient[static_cast<size_t>(p + 1)], cb.omega[static_cast<size_t>(p + 1)],
        cb.complex.grade_size(p));
    const RationalMatrix a =
        include_into(ca.complex, cb.complex, p, ca.omega[static_cast<size_t>(p)]);
    return static_cast<long>(nb - rank(w.hstack(a)) + rank(a));
}

/// Cycle space of dimension p in edge coordinates.
inline RationalMatrix cycles(const EmbeddedComplex& c, int p) {
    const RationalMatrix restricted =
        c.ambient[static_cast<size_t>(p)].matrix * c.omega[static_cast<size_t>(p)];
    return c.omega[static_cast<size_t>(p)] * kernel_basis(restricted);
}

/// Boundary space from dimension p+1 in edge coordinates.
inline RationalMatrix boundaries(const EmbeddedComplex& c, int p) {
    return exact_boundary_in_edge_coords(c.ambient[static_cast<size_t>(p + 1)],
                                         c.omega[static_cast<size_t>(p + 1)],
                                         c.complex.grade_size(p));
}

/// Cycle columns surviving modulo the given boundary span.
inline RationalMatrix quotient_representatives(const RationalMatrix& bnd,
                                               const RationalMatrix& zs) {
    RationalMatrix acc = bnd;
    RationalMatrix reps(zs.rows(), 0);
    for (Index j = 0; j < zs.cols(); ++j) {
        const auto col = zs.col(j);
        if (in_span(col, acc)) continue;
        RationalMatrix one(zs.rows(), 1);
        for (Index i = 0; i < zs.rows(); ++i) one(i, 0) = col[static_cast<size_t>(i)];
        acc = acc.hstack(one);
        reps = reps.hstack(one);
    }
    return reps;
}

/// Persistent Betti number by pushing a-homology representatives into the
/// b-snapshot and ranking their images modulo b-boundaries — the explicit
/// image-of-map computation, independent of the compatible-space route.
inline long persistent_betti(const EmbeddedComplex& ca, const EmbeddedComplex& cb, int p) {
    const RationalMatrix reps = quotient_representatives(boundaries(ca, p), cycles(ca, p));
    const RationalMatrix reps_in_b = include_into(ca.complex, cb.complex, p, reps);
    const RationalMatrix bnd_b = boundaries(cb, p);
    return static_cast<long>(rank(bnd_b.hstack(reps_in_b)) - rank(bnd_b));
}

} // namespace hdgtest::oracle
