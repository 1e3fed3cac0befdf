#include "hdg/complex_io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <set>
#include <sstream>

#include <json.hpp>

namespace hdg {

using nlohmann::json;
using ordered_json = nlohmann::ordered_json;

std::string format_number(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6g", x);
    return buf;
}

namespace {

double round_sig(double x) { return std::stod(format_number(x)); }

json spectrum_to_json(const std::vector<double>& spectrum) {
    json arr = json::array();
    for (double x : spectrum) arr.push_back(round_sig(x));
    return arr;
}

} // namespace

ComplexDocument parse_complex_document(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw InputError(InputError::Code::malformed_json, std::string("malformed JSON: ") + e.what());
    }
    if (!j.is_object())
        throw InputError(InputError::Code::malformed_json, "top-level JSON object expected");

    ComplexDocument doc;
    try {
        if (!j.contains("vertices") || !j["vertices"].is_array())
            throw InputError(InputError::Code::malformed_json, "\"vertices\" array required");
        for (const auto& v : j["vertices"]) doc.vertices.push_back(v.get<std::string>());
        doc.directed = j.value("directed", true);
        if (j.contains("edges")) {
            for (const auto& e : j["edges"]) {
                std::vector<std::string> edge;
                for (const auto& label : e) edge.push_back(label.get<std::string>());
                doc.edges.push_back(std::move(edge));
            }
        }
        if (j.contains("coords") && !j["coords"].is_null())
            doc.coords = j["coords"].get<std::vector<std::vector<double>>>();
        if (j.contains("values") && !j["values"].is_null())
            doc.values = j["values"].get<std::vector<double>>();
    } catch (const json::exception& e) {
        throw InputError(InputError::Code::malformed_json, std::string("malformed JSON: ") + e.what());
    }

    std::set<std::string> seen;
    for (const auto& label : doc.vertices)
        if (!seen.insert(label).second)
            throw InputError(InputError::Code::duplicate_label, "duplicate vertex label \"" + label + "\"");
    return doc;
}

namespace {

std::vector<DirectedHyperedge> document_edges(const ComplexDocument& doc) {
    std::map<std::string, VertexId> ids;
    for (size_t i = 0; i < doc.vertices.size(); ++i)
        ids[doc.vertices[i]] = static_cast<VertexId>(i);

    std::vector<DirectedHyperedge> edges;
    edges.reserve(doc.edges.size());
    for (const auto& e : doc.edges) {
        DirectedHyperedge edge;
        for (const auto& label : e) {
            auto it = ids.find(label);
            if (it == ids.end())
                throw InputError(InputError::Code::unknown_label,
                                 "edge references unknown label \"" + label + "\"");
            edge.vertices.push_back(it->second);
        }
        if (!edge.has_distinct_vertices())
            throw InputError(InputError::Code::repeated_vertex,
                             "repeated vertex in edge " + to_string(edge));
        if (!doc.directed) std::sort(edge.vertices.begin(), edge.vertices.end());
        edges.push_back(std::move(edge));
    }
    return edges;
}

} // namespace

Hyperdigraph to_hyperdigraph(const ComplexDocument& doc) {
    auto coords = doc.coords;
    return Hyperdigraph::make(static_cast<int>(doc.vertices.size()), document_edges(doc),
                              std::move(coords));
}

Filtration to_values_filtration(const ComplexDocument& doc) {
    if (!doc.values)
        throw InputError(InputError::Code::bad_argument,
                         "document carries no per-edge \"values\"");
    if (doc.values->size() != doc.edges.size())
        throw InputError(InputError::Code::bad_argument,
                         "\"values\" length does not match the edge list");
    const auto edges = document_edges(doc);
    std::set<DirectedHyperedge> unique(edges.begin(), edges.end());
    if (unique.size() != edges.size())
        throw InputError(InputError::Code::bad_argument,
                         "duplicate edges are ambiguous with explicit values");
    std::vector<std::pair<DirectedHyperedge, double>> pairs;
    pairs.reserve(edges.size());
    for (size_t i = 0; i < edges.size(); ++i) pairs.emplace_back(edges[i], (*doc.values)[i]);
    return values_filtration(to_hyperdigraph(doc), pairs);
}

Hyperdigraph parse_complex(const std::string& text) {
    return to_hyperdigraph(parse_complex_document(text));
}

std::string emit_complex(const ComplexDocument& doc) {
    ordered_json j;
    j["vertices"] = doc.vertices;
    j["directed"] = doc.directed;
    j["edges"] = doc.edges;
    if (doc.coords) j["coords"] = *doc.coords;
    if (doc.values) j["values"] = *doc.values;
    return j.dump(2) + "\n";
}

ComplexDocument document_from(const Hyperdigraph& h, std::vector<std::string> labels) {
    ComplexDocument doc;
    if (labels.empty())
        for (int v = 0; v < h.n_vertices(); ++v) labels.push_back(std::to_string(v));
    if (static_cast<int>(labels.size()) != h.n_vertices())
        throw InputError(InputError::Code::bad_argument, "one label per vertex required");
    doc.vertices = std::move(labels);
    doc.directed = true;
    for (const auto& e : h.all_edges()) {
        std::vector<std::string> edge;
        for (VertexId v : e.vertices) edge.push_back(doc.vertices[static_cast<size_t>(v)]);
        doc.edges.push_back(std::move(edge));
    }
    if (h.has_coords()) doc.coords = h.coords();
    return doc;
}

namespace {

ordered_json summary_to_json(const SpectralSummary& s) {
    ordered_json entry;
    entry["betti"] = s.betti;
    entry["spectrum"] = spectrum_to_json(s.spectrum);
    if (s.lambda_min_nonzero) entry["lambda_min_nonzero"] = round_sig(*s.lambda_min_nonzero);
    return entry;
}

ordered_json entry_to_json(const PersistentEntry& e) {
    ordered_json entry;
    entry["betti"] = e.betti;
    entry["spectrum"] = spectrum_to_json(e.spectrum);
    if (e.lambda_min_nonzero) entry["lambda_min_nonzero"] = round_sig(*e.lambda_min_nonzero);
    entry["dim_omega_a"] = static_cast<long>(e.dim_omega_a);
    entry["dim_omega_ab"] = static_cast<long>(e.dim_omega_ab);
    return entry;
}

} // namespace

std::string emit_spectra_json(const std::vector<SpectralSummary>& summaries) {
    ordered_json j;
    for (size_t p = 0; p < summaries.size(); ++p)
        j[std::to_string(p)] = summary_to_json(summaries[p]);
    return j.dump(2) + "\n";
}

std::string emit_spectra_csv(const std::vector<SpectralSummary>& summaries) {
    std::ostringstream os;
    os << "dim,betti,lambda_min_nonzero,spectrum\n";
    for (size_t p = 0; p < summaries.size(); ++p) {
        os << p << ',' << summaries[p].betti << ',';
        if (summaries[p].lambda_min_nonzero) os << format_number(*summaries[p].lambda_min_nonzero);
        os << ',';
        for (size_t i = 0; i < summaries[p].spectrum.size(); ++i) {
            if (i) os << ' ';
            os << format_number(summaries[p].spectrum[i]);
        }
        os << '\n';
    }
    return os.str();
}

std::string emit_curves_json(const SweepResult& result) {
    ordered_json rows = ordered_json::array();
    for (const auto& row : result.rows) {
        ordered_json r;
        r["a"] = round_sig(row.a);
        r["b"] = round_sig(row.b);
        ordered_json dims;
        for (size_t i = 0; i < result.dims.size(); ++i)
            dims[std::to_string(result.dims[i])] = entry_to_json(row.entries[i]);
        r["dimensions"] = dims;
        rows.push_back(std::move(r));
    }
    return rows.dump(2) + "\n";
}

std::string emit_curves_csv(const SweepResult& result) {
    std::ostringstream os;
    os << "param,beta0,beta1,beta2,lambda0,lambda1,lambda2\n";
    auto slot_of = [&](int p) -> int {
        for (size_t i = 0; i < result.dims.size(); ++i)
            if (result.dims[i] == p) return static_cast<int>(i);
        return -1;
    };
    for (const auto& row : result.rows) {
        if (row.a == row.b)
            os << format_number(row.a);
        else
            os << format_number(row.a) << ':' << format_number(row.b);
        for (int p = 0; p <= 2; ++p) {
            os << ',';
            const int slot = slot_of(p);
            if (slot >= 0) os << row.entries[static_cast<size_t>(slot)].betti;
        }
        for (int p = 0; p <= 2; ++p) {
            os << ',';
            const int slot = slot_of(p);
            if (slot >= 0 && row.entries[static_cast<size_t>(slot)].lambda_min_nonzero)
                os << format_number(*row.entries[static_cast<size_t>(slot)].lambda_min_nonzero);
        }
        os << '\n';
    }
    return os.str();
}

std::string emit_reduce_json(const ComplexDocument& reduced,
                             const std::vector<InducedHomologyRank>& ranks) {
    ordered_json j;
    j["reduced"] = ordered_json::parse(emit_complex(reduced));
    ordered_json table;
    for (size_t p = 0; p < ranks.size(); ++p) {
        ordered_json entry;
        entry["rank"] = ranks[p].rank;
        entry["dim_directed"] = ranks[p].dim_directed;
        entry["dim_reduced"] = ranks[p].dim_reduced;
        table[std::to_string(p)] = entry;
    }
    j["induced_homology"] = table;
    return j.dump(2) + "\n";
}

} // namespace hdg
