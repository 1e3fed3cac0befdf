#include "hdg/pdb.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <set>
#include <sstream>

#include <json.hpp>

#include "hdg/errors.hpp"

namespace hdg {

namespace {

std::string trim(const std::string& s) {
    size_t begin = s.find_first_not_of(" \t");
    if (begin == std::string::npos) return "";
    size_t end = s.find_last_not_of(" \t");
    return s.substr(begin, end - begin + 1);
}

std::string upper(std::string s) {
    for (char& c : s) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    return s;
}

double parse_coord(const std::string& field, size_t line_no, const char* which) {
    try {
        size_t used = 0;
        const double v = std::stod(field, &used);
        if (!std::isfinite(v)) throw std::invalid_argument("not finite");
        return v;
    } catch (const std::exception&) {
        throw InputError(InputError::Code::pdb_line_too_short,
                         std::string("line ") + std::to_string(line_no) + ": unreadable " + which +
                             " coordinate \"" + trim(field) + "\"");
    }
}

long parse_int_field(const std::string& field) {
    const std::string t = trim(field);
    if (t.empty()) return 0;
    try {
        return std::stol(t);
    } catch (const std::exception&) {
        return 0;
    }
}

} // namespace

std::vector<AtomRecord> parse_pdb(const std::string& text) {
    std::vector<AtomRecord> atoms;
    std::istringstream in(text);
    std::string line;
    size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        const std::string record = trim(line.substr(0, std::min<size_t>(6, line.size())));
        if (record != "ATOM" && record != "HETATM") continue;
        if (line.size() < 54)
            throw InputError(InputError::Code::pdb_line_too_short,
                             "line " + std::to_string(line_no) +
                                 ": ATOM/HETATM record truncated before the coordinate fields");

        AtomRecord a;
        a.is_hetatm = record == "HETATM";
        a.serial = parse_int_field(line.substr(6, 5));
        a.name = line.substr(12, 4);
        a.resname = trim(line.substr(17, 3));
        a.chain = line.size() > 21 ? line[21] : ' ';
        a.resseq = parse_int_field(line.substr(22, 4));
        a.x = parse_coord(line.substr(30, 8), line_no, "x");
        a.y = parse_coord(line.substr(38, 8), line_no, "y");
        a.z = parse_coord(line.substr(46, 8), line_no, "z");

        std::string element = line.size() >= 77 ? trim(line.substr(76, std::min<size_t>(2, line.size() - 76)))
                                                : std::string{};
        if (element.empty()) {
            for (char c : a.name)
                if (std::isalpha(static_cast<unsigned char>(c))) { element = std::string(1, c); break; }
        }
        a.element = upper(element);
        atoms.push_back(std::move(a));
    }
    return atoms;
}

ElectronegativityTable ElectronegativityTable::defaults() {
    return {{{"H", 2.2}, {"S", 2.44}, {"C", 2.5}, {"N", 3.07}, {"O", 3.5}}};
}

double ElectronegativityTable::lookup(const std::string& element) const {
    auto it = chi.find(element);
    if (it == chi.end())
        throw InputError(InputError::Code::unknown_element,
                         "no electronegativity for element \"" + element + "\"");
    return it->second;
}

ElectronegativityTable parse_electronegativity_sidecar(const std::string& text) {
    ElectronegativityTable table = ElectronegativityTable::defaults();
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw InputError(InputError::Code::malformed_json,
                         std::string("electronegativity sidecar: ") + e.what());
    }
    if (!j.is_object())
        throw InputError(InputError::Code::malformed_json,
                         "electronegativity sidecar must be a JSON object");
    for (const auto& [key, value] : j.items()) {
        if (!value.is_number())
            throw InputError(InputError::Code::malformed_json,
                             "electronegativity for \"" + key + "\" must be a number");
        table.chi[upper(key)] = value.get<double>();
    }
    return table;
}

namespace {

double dist(const AtomRecord& a, const AtomRecord& b) {
    const double dx = a.x - b.x, dy = a.y - b.y, dz = a.z - b.z;
    return std::sqrt(dx * dx + dy * dy + dz * dz);
}

} // namespace

PdbComplex build_complex_from_pdb(const std::vector<AtomRecord>& atoms,
                                  const PdbBuildOptions& options) {
    if (options.cutoff <= 0)
        throw InputError(InputError::Code::bad_argument, "cutoff must be positive");

    std::vector<const AtomRecord*> ligand;
    std::vector<const AtomRecord*> protein_carbon;
    for (const auto& a : atoms) {
        if (a.resname == options.ligand_resname)
            ligand.push_back(&a);
        else if (!a.is_hetatm && a.element == "C")
            protein_carbon.push_back(&a);
    }
    if (ligand.empty())
        throw InputError(InputError::Code::empty_ligand,
                         "no atom matches ligand residue name \"" + options.ligand_resname + "\"");

    // Vertex set: ligand atoms plus protein carbons near any ligand atom,
    // kept in file order.
    std::vector<const AtomRecord*> vertices;
    for (const auto& a : atoms) {
        if (a.resname == options.ligand_resname) {
            vertices.push_back(&a);
            continue;
        }
        if (a.is_hetatm || a.element != "C") continue;
        for (const auto* l : ligand)
            if (dist(a, *l) <= options.cutoff) {
                vertices.push_back(&a);
                break;
            }
    }

    const int n = static_cast<int>(vertices.size());
    std::vector<bool> is_ligand(static_cast<size_t>(n));
    std::vector<double> chi(static_cast<size_t>(n));
    std::vector<std::vector<double>> coords(static_cast<size_t>(n));
    std::vector<std::string> labels(static_cast<size_t>(n));
    std::set<std::string> label_guard;
    for (int i = 0; i < n; ++i) {
        const AtomRecord& a = *vertices[static_cast<size_t>(i)];
        is_ligand[static_cast<size_t>(i)] = a.resname == options.ligand_resname;
        chi[static_cast<size_t>(i)] = options.table.lookup(a.element);
        coords[static_cast<size_t>(i)] = {a.x, a.y, a.z};
        labels[static_cast<size_t>(i)] = a.element + std::to_string(a.serial);
        if (!label_guard.insert(labels[static_cast<size_t>(i)]).second)
            throw InputError(InputError::Code::duplicate_label,
                             "ambiguous atom label " + labels[static_cast<size_t>(i)]);
    }

    std::set<DirectedHyperedge> edges;
    for (VertexId v = 0; v < n; ++v) edges.insert(DirectedHyperedge{{v}});

    auto orient = [&](VertexId u, VertexId v) {
        if (chi[static_cast<size_t>(u)] < chi[static_cast<size_t>(v)]) {
            edges.insert(DirectedHyperedge{{u, v}});
        } else if (chi[static_cast<size_t>(u)] > chi[static_cast<size_t>(v)]) {
            edges.insert(DirectedHyperedge{{v, u}});
        } else {
            edges.insert(DirectedHyperedge{{u, v}});
            edges.insert(DirectedHyperedge{{v, u}});
        }
    };

    for (VertexId i = 0; i < n; ++i)
        for (VertexId j = i + 1; j < n; ++j) {
            const double d =
                dist(*vertices[static_cast<size_t>(i)], *vertices[static_cast<size_t>(j)]);
            const bool both_ligand = is_ligand[static_cast<size_t>(i)] && is_ligand[static_cast<size_t>(j)];
            const bool mixed = is_ligand[static_cast<size_t>(i)] != is_ligand[static_cast<size_t>(j)];
            bool keep = false;
            if (both_ligand)
                keep = d <= options.covalent ||
                       (options.include_ligand_noncovalent && d <= options.cutoff);
            else if (mixed)
                keep = d <= options.cutoff;
            else
                keep = options.include_protein_protein && d <= options.cutoff;
            if (keep) orient(i, j);
        }

    if (options.chain2) {
        std::vector<DirectedHyperedge> pairs;
        for (const auto& e : edges)
            if (e.dimension() == 1) pairs.push_back(e);
        for (const auto& uv : pairs)
            for (const auto& vw : pairs) {
                if (uv.vertices[1] != vw.vertices[0]) continue;
                if (uv.vertices[0] == vw.vertices[1]) continue;
                edges.insert(DirectedHyperedge{{uv.vertices[0], uv.vertices[1], vw.vertices[1]}});
            }
    }

    PdbComplex out;
    out.complex = Hyperdigraph::make(
        n, std::vector<DirectedHyperedge>(edges.begin(), edges.end()), std::move(coords));
    out.labels = std::move(labels);
    return out;
}

} // namespace hdg
