#include "hdg/chain_complex.hpp"

#include <map>

namespace hdg {

std::vector<FaceTerm> boundary_of_edge(const DirectedHyperedge& e) {
    std::vector<FaceTerm> terms;
    if (e.dimension() <= 0) return terms; // d_0 e = 0
    const auto& v = e.vertices;
    terms.reserve(v.size());
    int sign = 1;
    for (size_t i = 0; i < v.size(); ++i) {
        DirectedHyperedge face;
        face.vertices.reserve(v.size() - 1);
        for (size_t j = 0; j < v.size(); ++j)
            if (j != i) face.vertices.push_back(v[j]);
        terms.push_back({std::move(face), sign});
        sign = -sign;
    }
    return terms;
}

std::vector<Index> AmbientBoundary::forbidden_rows() const {
    std::vector<Index> out;
    for (Index i = 0; i < static_cast<Index>(faces.size()); ++i)
        if (!face_is_edge[static_cast<size_t>(i)]) out.push_back(i);
    return out;
}

AmbientBoundary boundary_of_sequences(const Hyperdigraph& h,
                                      const std::vector<DirectedHyperedge>& columns) {
    AmbientBoundary out;
    std::map<DirectedHyperedge, Index> row_of;
    std::vector<std::vector<std::pair<Index, int>>> col_terms(columns.size());

    for (size_t c = 0; c < columns.size(); ++c) {
        for (auto& term : boundary_of_edge(columns[c])) {
            auto [it, inserted] = row_of.try_emplace(term.face, static_cast<Index>(out.faces.size()));
            if (inserted) out.faces.push_back(term.face);
            col_terms[c].push_back({it->second, term.sign});
        }
    }

    out.matrix = RationalMatrix(static_cast<Index>(out.faces.size()),
                                static_cast<Index>(columns.size()));
    for (size_t c = 0; c < columns.size(); ++c)
        for (auto [r, s] : col_terms[c]) out.matrix(r, static_cast<Index>(c)) = s;

    out.face_is_edge.reserve(out.faces.size());
    out.face_edge_index.reserve(out.faces.size());
    for (const auto& f : out.faces) {
        const Index idx = h.edge_index(f);
        out.face_is_edge.push_back(idx >= 0);
        out.face_edge_index.push_back(idx);
    }
    return out;
}

AmbientBoundary ambient_boundary_matrix(const Hyperdigraph& h, int p) {
    if (p < 0)
        throw InputError(InputError::Code::bad_dimension, "ambient_boundary_matrix: p < 0");
    return boundary_of_sequences(h, h.grade(p));
}

} // namespace hdg
