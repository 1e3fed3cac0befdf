#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hdg/hyperstructures.hpp"
#include "hdg/laplacian.hpp"
#include "hdg/persistence.hpp"
#include "hdg/reduction.hpp"

namespace hdg {

/// On-disk description of a complex: vertex labels fix the order, edges name
/// labels, undirected documents treat every edge as a set.  Optional
/// per-vertex coordinates and per-edge filtration values.
struct ComplexDocument {
    std::vector<std::string> vertices;
    bool directed = true;
    std::vector<std::vector<std::string>> edges;
    std::optional<std::vector<std::vector<double>>> coords;
    std::optional<std::vector<double>> values;
};

ComplexDocument parse_complex_document(const std::string& text);

Hyperdigraph to_hyperdigraph(const ComplexDocument& doc);

/// Document's explicit per-edge values as a filtration (requires `values`).
Filtration to_values_filtration(const ComplexDocument& doc);

/// Convenience: document text straight to a complex.
Hyperdigraph parse_complex(const std::string& text);

std::string emit_complex(const ComplexDocument& doc);

ComplexDocument document_from(const Hyperdigraph& h, std::vector<std::string> labels = {});

// Result emitters.  All floating-point output uses 6 significant digits.
std::string emit_spectra_json(const std::vector<SpectralSummary>& summaries);
std::string emit_spectra_csv(const std::vector<SpectralSummary>& summaries);
std::string emit_curves_json(const SweepResult& result);

/// Header "param,beta0,beta1,beta2,lambda0,lambda1,lambda2"; one row per
/// evaluated parameter (or a:b pair), empty lambda cell where a dimension
/// has no nonzero eigenvalue.
std::string emit_curves_csv(const SweepResult& result);

std::string emit_reduce_json(const ComplexDocument& reduced,
                             const std::vector<InducedHomologyRank>& ranks);

/// exactly six significant digits, shared by all emitters
std::string format_number(double x);

} // namespace hdg
