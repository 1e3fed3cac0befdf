#pragma once

// Shared fixtures: the worked example complexes, spectrum comparison and
// seeded random generators used by the property suites.

#include <random>
#include <vector>

#include "hdg/hdg.hpp"

namespace hdgtest {

using namespace hdg;

using E = DirectedHyperedge;

// 3-vertex hypergraph with E = {1},{2},{12},{13},{23},{123} (labels shifted
// to 0-based ids).
inline Hyperdigraph example_2_1() {
    return normalize_hypergraph(Hypergraph::make(
        3, {E{0}, E{1}, E{0, 1}, E{0, 2}, E{1, 2}, E{0, 1, 2}}));
}

// 6-vertex hypergraph behind the second worked hypergraph example.
inline Hyperdigraph example_2_2() {
    return normalize_hypergraph(Hypergraph::make(
        6, {E{1}, E{2}, E{3}, E{4}, E{5},
            E{0, 1}, E{1, 2}, E{1, 4}, E{2, 3}, E{2, 4}, E{2, 5}, E{3, 4},
            E{0, 1, 2}, E{0, 1, 5}, E{1, 2, 4}, E{2, 3, 4}}));
}

inline Hyperdigraph two_vertex_loop() {
    return Hyperdigraph::make(2, {E{0, 1}, E{1, 0}});
}

// 3-vertex hyperdigraph with edges (1),(2),(12),(13),(32),(123).
inline Hyperdigraph example_3_3() {
    return Hyperdigraph::make(3, {E{0}, E{1}, E{0, 1}, E{0, 2}, E{2, 1}, E{0, 1, 2}});
}

// 6-vertex hyperdigraph whose Laplacian spectra carry the 1.044 value.
inline std::vector<E> figure3_edges() {
    return {E{1}, E{2}, E{3}, E{4}, E{5},
            E{0, 1}, E{1, 2}, E{2, 1}, E{2, 3}, E{2, 4}, E{2, 5}, E{3, 4}, E{4, 1},
            E{0, 1, 2}, E{0, 5, 1}, E{2, 3, 4}, E{2, 4, 1}};
}

inline Hyperdigraph figure3() { return Hyperdigraph::make(6, figure3_edges()); }

// 5-vertex hyperdigraph with edges (12),(25),(13),(35),(14),(45) and
// (125),(135),(145); the vertex dimension is spanned by all five singletons.
inline Hyperdigraph five_vertex() {
    return Hyperdigraph::make(5, {E{0}, E{1}, E{2}, E{3}, E{4},
                                  E{0, 1}, E{1, 4}, E{0, 2}, E{2, 4}, E{0, 3}, E{3, 4},
                                  E{0, 1, 4}, E{0, 2, 4}, E{0, 3, 4}});
}

// Every sequence of distinct elements on three vertices.
inline Hyperdigraph table2_complete() {
    std::vector<E> edges;
    for (VertexId a = 0; a < 3; ++a) {
        edges.push_back(E{a});
        for (VertexId b = 0; b < 3; ++b) {
            if (b == a) continue;
            edges.push_back(E{a, b});
            for (VertexId c = 0; c < 3; ++c) {
                if (c == a || c == b) continue;
                edges.push_back(E{a, b, c});
            }
        }
    }
    return Hyperdigraph::make(3, std::move(edges));
}

// The (p,1)-shuffle hyperdigraph on five vertices.
inline Hyperdigraph table3_shuffle() {
    return Hyperdigraph::make(
        5, {E{0, 1}, E{1, 0}, E{0, 2}, E{2, 1}, E{3, 1}, E{3, 2}, E{4, 1},
            E{0, 3, 1}, E{0, 3, 2}, E{0, 4, 1}, E{2, 3, 1}});
}

// Projection counterexamples: directed homology dies / reduced homology appears.
inline Hyperdigraph h1_counterexample() {
    return Hyperdigraph::make(3, {E{0, 1}, E{0, 2}, E{2, 1}, E{0, 1, 2}});
}

inline Hyperdigraph h2_counterexample() {
    return Hyperdigraph::make(4, {E{0, 1, 2}, E{1, 2, 3}, E{2, 3, 0}, E{3, 0, 1}});
}

// Triangle point cloud driving the volume-based filtration table.
inline Hyperdigraph table4_points() {
    return Hyperdigraph::make(3,
                              {E{0}, E{1}, E{2}, E{0, 1}, E{1, 2}, E{0, 2}, E{0, 1, 2}},
                              std::vector<std::vector<double>>{{0, 0}, {1, 2}, {2, 1}});
}

// A planar embedding consistent with the distances quoted for the 6-vertex
// persistence system: D45 = D12 = 6, D05 = D01 = D23 = D34 = sqrt(5),
// D24 = D15 = 4, D02 = sqrt(53).
inline std::vector<std::vector<double>> figure5_coords() {
    return {{-1, -2}, {0, 0}, {6, 0}, {7, -2}, {6, -4}, {0, -4}};
}

inline Hyperdigraph figure5_hyperdigraph() {
    return Hyperdigraph::make(6, figure3_edges(), figure5_coords());
}

inline std::vector<std::vector<double>> hexagon_coords() {
    const double s = std::sqrt(3.0);
    return {{2, 0}, {1, s}, {-1, s}, {-2, 0}, {-1, -s}, {1, -s}};
}

inline Hyperdigraph hexagon_hyperdigraph() {
    return Hyperdigraph::make(6, figure3_edges(), hexagon_coords());
}

inline Hyperdigraph hexagon_hypergraph() {
    return normalize_hypergraph(Hypergraph::make(
        6, {E{1}, E{2}, E{3}, E{4}, E{5},
            E{0, 1}, E{1, 2}, E{1, 4}, E{2, 3}, E{2, 4}, E{2, 5}, E{3, 4},
            E{0, 1, 2}, E{0, 1, 5}, E{1, 2, 4}, E{2, 3, 4}},
        hexagon_coords()));
}

inline bool spectrum_close(const std::vector<double>& got, const std::vector<double>& expected,
                           double tol) {
    if (got.size() != expected.size()) return false;
    for (size_t i = 0; i < got.size(); ++i)
        if (std::abs(got[i] - expected[i]) > tol) return false;
    return true;
}

// ---------------------------------------------------------------------------
// Random instances for the property suites.  All generators are seeded by the
// caller so failures replay.

inline DirectedHyperedge random_sequence(std::mt19937& rng, int n_vertices, int p) {
    std::vector<VertexId> pool(static_cast<size_t>(n_vertices));
    for (int i = 0; i < n_vertices; ++i) pool[static_cast<size_t>(i)] = i;
    std::shuffle(pool.begin(), pool.end(), rng);
    pool.resize(static_cast<size_t>(p + 1));
    return DirectedHyperedge{std::move(pool)};
}

struct RandomComplexOptions {
    int min_vertices = 2;
    int max_vertices = 7;
    int max_dim = 3;
    double vertex_edge_prob = 0.6; // chance each vertex joins as a 0-hyperedge
    bool all_vertices = false;     // force every vertex in as a 0-hyperedge
};

inline Hyperdigraph random_hyperdigraph(std::mt19937& rng,
                                        const RandomComplexOptions& opt = {}) {
    std::uniform_int_distribution<int> nv(opt.min_vertices, opt.max_vertices);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    const int n = nv(rng);
    std::vector<DirectedHyperedge> edges;
    for (VertexId v = 0; v < n; ++v)
        if (opt.all_vertices || coin(rng) < opt.vertex_edge_prob) edges.push_back(E{v});
    for (int p = 1; p <= std::min(opt.max_dim, n - 1); ++p) {
        std::uniform_int_distribution<int> count(0, std::max(2, n));
        const int m = count(rng);
        for (int i = 0; i < m; ++i) edges.push_back(random_sequence(rng, n, p));
    }
    return Hyperdigraph::make(n, std::move(edges));
}

/// Random edge values, dimension-biased and quantized so that ties and
/// nontrivial snapshots both occur.
inline Filtration random_filtration(std::mt19937& rng, const Hyperdigraph& h) {
    std::uniform_int_distribution<int> tick(0, 6);
    std::vector<std::vector<double>> values(static_cast<size_t>(h.max_dimension() + 1));
    for (int p = 0; p <= h.max_dimension(); ++p)
        for (Index i = 0; i < h.grade_size(p); ++i)
            values[static_cast<size_t>(p)].push_back(0.5 * tick(rng) + p);
    return Filtration::make(h, std::move(values));
}

} // namespace hdgtest
