#include "hdg/hyperstructures.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace hdg {

bool DirectedHyperedge::has_distinct_vertices() const {
    std::vector<VertexId> s = vertices;
    std::sort(s.begin(), s.end());
    return std::adjacent_find(s.begin(), s.end()) == s.end();
}

bool DirectedHyperedge::is_sorted() const {
    return std::is_sorted(vertices.begin(), vertices.end()) && has_distinct_vertices();
}

DirectedHyperedge DirectedHyperedge::sorted() const {
    DirectedHyperedge out = *this;
    std::sort(out.vertices.begin(), out.vertices.end());
    return out;
}

std::string to_string(const DirectedHyperedge& e) {
    std::ostringstream os;
    os << '(';
    for (size_t i = 0; i < e.vertices.size(); ++i) {
        if (i) os << ',';
        os << e.vertices[i];
    }
    os << ')';
    return os.str();
}

int permutation_sign(const DirectedHyperedge& seq) {
    if (seq.vertices.empty())
        throw InputError(InputError::Code::bad_argument, "permutation_sign: empty sequence");
    if (!seq.has_distinct_vertices())
        throw InputError(InputError::Code::repeated_vertex,
                         "permutation_sign: repeated vertex in " + to_string(seq));
    int inversions = 0;
    const auto& v = seq.vertices;
    for (size_t i = 0; i < v.size(); ++i)
        for (size_t j = i + 1; j < v.size(); ++j)
            if (v[i] > v[j]) ++inversions;
    return (inversions % 2 == 0) ? 1 : -1;
}

bool is_shuffle(const DirectedHyperedge& seq, int p, int q) {
    if (p < 0 || q < 0)
        throw InputError(InputError::Code::bad_argument, "is_shuffle: negative block size");
    if (p + q != static_cast<int>(seq.vertices.size()))
        throw InputError(InputError::Code::bad_argument,
                         "is_shuffle: p + q must equal the sequence length");
    if (!seq.has_distinct_vertices())
        throw InputError(InputError::Code::repeated_vertex,
                         "is_shuffle: repeated vertex in " + to_string(seq));
    // Ranks increase within a block iff the values do.
    const auto& v = seq.vertices;
    for (int i = 1; i < p; ++i)
        if (v[i - 1] >= v[i]) return false;
    for (int i = p + 1; i < p + q; ++i)
        if (v[i - 1] >= v[i]) return false;
    return true;
}

namespace {

void validate_coords(int n_vertices, const std::vector<std::vector<double>>& coords) {
    if (static_cast<int>(coords.size()) != n_vertices)
        throw InputError(InputError::Code::missing_coords,
                         "coords: expected one coordinate vector per vertex");
    if (!coords.empty()) {
        const size_t dim = coords.front().size();
        for (const auto& c : coords)
            if (c.size() != dim)
                throw InputError(InputError::Code::missing_coords,
                                 "coords: inconsistent coordinate dimensions");
    }
}

} // namespace

Hyperdigraph Hyperdigraph::make(int n_vertices, std::vector<DirectedHyperedge> edges,
                                std::optional<std::vector<std::vector<double>>> coords) {
    if (n_vertices < 0)
        throw InputError(InputError::Code::bad_argument, "negative vertex count");
    Hyperdigraph h;
    h.n_vertices_ = n_vertices;
    std::set<DirectedHyperedge> seen;
    for (auto& e : edges) {
        if (e.vertices.empty())
            throw InputError(InputError::Code::bad_argument, "empty hyperedge");
        if (!e.has_distinct_vertices())
            throw InputError(InputError::Code::repeated_vertex,
                             "repeated vertex in edge " + to_string(e));
        for (VertexId v : e.vertices)
            if (v < 0 || v >= n_vertices)
                throw InputError(InputError::Code::bad_vertex_id,
                                 "vertex id out of range in edge " + to_string(e));
        if (!seen.insert(e).second) continue; // set semantics
        const int p = e.dimension();
        if (static_cast<int>(h.grades_.size()) <= p) h.grades_.resize(p + 1);
        h.grades_[p].push_back(std::move(e));
    }
    for (auto& g : h.grades_) std::sort(g.begin(), g.end());
    if (coords) {
        validate_coords(n_vertices, *coords);
        h.coords_ = std::move(coords);
    }
    return h;
}

const std::vector<DirectedHyperedge>& Hyperdigraph::grade(int p) const {
    static const std::vector<DirectedHyperedge> empty;
    if (p < 0 || p >= static_cast<int>(grades_.size())) return empty;
    return grades_[p];
}

Index Hyperdigraph::total_edges() const {
    Index n = 0;
    for (const auto& g : grades_) n += static_cast<Index>(g.size());
    return n;
}

Index Hyperdigraph::edge_index(const DirectedHyperedge& e) const {
    const auto& g = grade(e.dimension());
    auto it = std::lower_bound(g.begin(), g.end(), e);
    if (it == g.end() || *it != e) return -1;
    return it - g.begin();
}

std::vector<DirectedHyperedge> Hyperdigraph::all_edges() const {
    std::vector<DirectedHyperedge> out;
    out.reserve(total_edges());
    for (const auto& g : grades_) out.insert(out.end(), g.begin(), g.end());
    return out;
}

const std::vector<std::vector<double>>& Hyperdigraph::coords() const {
    if (!coords_)
        throw InputError(InputError::Code::missing_coords, "complex carries no coordinates");
    return *coords_;
}

int Hyperdigraph::coord_dim() const {
    if (!coords_ || coords_->empty()) return 0;
    return static_cast<int>(coords_->front().size());
}

Hypergraph Hypergraph::make(int n_vertices, std::vector<DirectedHyperedge> edges,
                            std::optional<std::vector<std::vector<double>>> coords) {
    for (auto& e : edges) {
        if (!e.has_distinct_vertices())
            throw InputError(InputError::Code::repeated_vertex,
                             "repeated vertex in hyperedge " + to_string(e));
        std::sort(e.vertices.begin(), e.vertices.end());
    }
    Hypergraph hg;
    hg.h_ = Hyperdigraph::make(n_vertices, std::move(edges), std::move(coords));
    return hg;
}

Hyperdigraph normalize_hypergraph(const Hypergraph& h) {
    return h.underlying(); // edges are already canonical increasing sequences
}

} // namespace hdg
