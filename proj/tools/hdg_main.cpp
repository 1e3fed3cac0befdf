// Command-line front end: spectra, persistence sweeps, the PDB pipeline and
// hypergraph reduction over complex-document JSON inputs.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hdg/hdg.hpp"

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw hdg::InputError(hdg::InputError::Code::io_failure, "cannot open \"" + path + "\"");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_output(const std::string& path, const std::string& content) {
    if (path.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw hdg::InputError(hdg::InputError::Code::io_failure, "cannot write \"" + path + "\"");
    out << content;
}

std::vector<std::pair<double, double>> parse_pair_list(const std::string& text) {
    std::vector<std::pair<double, double>> pairs;
    std::istringstream in(text);
    std::string token;
    while (std::getline(in, token, ',')) {
        const auto colon = token.find(':');
        if (colon == std::string::npos)
            throw hdg::InputError(hdg::InputError::Code::bad_argument,
                                  "pair \"" + token + "\" must look like a:b");
        try {
            pairs.emplace_back(std::stod(token.substr(0, colon)), std::stod(token.substr(colon + 1)));
        } catch (const std::exception&) {
            throw hdg::InputError(hdg::InputError::Code::bad_argument,
                                  "unreadable pair \"" + token + "\"");
        }
    }
    if (pairs.empty())
        throw hdg::InputError(hdg::InputError::Code::bad_argument, "empty pair list");
    return pairs;
}

hdg::SweepSpec make_sweep_spec(const std::vector<std::string>& mode_tokens,
                               const std::vector<int>& dims, double zero_tol) {
    hdg::SweepSpec spec;
    spec.dims = dims;
    spec.zero_tol = zero_tol;
    const std::string& mode = mode_tokens.front();
    if (mode == "diagonal") {
        spec.mode = hdg::SweepMode::diagonal;
        if (mode_tokens.size() != 1)
            throw hdg::InputError(hdg::InputError::Code::bad_argument,
                                  "--mode diagonal takes no parameter");
    } else if (mode == "pairs") {
        spec.mode = hdg::SweepMode::pairs;
        if (mode_tokens.size() != 2)
            throw hdg::InputError(hdg::InputError::Code::bad_argument,
                                  "--mode pairs needs a a:b,... list");
        spec.pairs = parse_pair_list(mode_tokens[1]);
    } else if (mode == "grid") {
        spec.mode = hdg::SweepMode::grid;
        if (mode_tokens.size() != 2)
            throw hdg::InputError(hdg::InputError::Code::bad_argument,
                                  "--mode grid needs a step");
        try {
            spec.grid_step = std::stod(mode_tokens[1]);
        } catch (const std::exception&) {
            throw hdg::InputError(hdg::InputError::Code::bad_argument, "unreadable grid step");
        }
    } else {
        throw hdg::InputError(hdg::InputError::Code::bad_argument,
                              "unknown mode \"" + mode + "\"");
    }
    return spec;
}

struct CommonOutput {
    std::string format = "json";
    std::string output;
};

void emit_sweep(const hdg::SweepResult& result, const CommonOutput& out) {
    write_output(out.output, out.format == "csv" ? hdg::emit_curves_csv(result)
                                                 : hdg::emit_curves_json(result));
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"embedded homology, topological Laplacian spectra and persistent spectra "
                 "of hypergraphs and hyperdigraphs"};
    app.require_subcommand(1);

    double zero_tol = hdg::kDefaultZeroTol;
    unsigned long seed = 0;
    app.add_option("--zero-tol", zero_tol,
                   "zero-eigenvalue threshold, relative to the largest eigenvalue")
        ->capture_default_str();
    app.add_option("--seed", seed, "seed for randomized harnesses")->capture_default_str();

    auto* cmd_spectra = app.add_subcommand("spectra", "Laplacian spectra of a single complex");
    std::string spectra_input;
    int spectra_max_dim = -1;
    CommonOutput spectra_out;
    cmd_spectra->add_option("--input", spectra_input, "complex document (JSON)")->required();
    cmd_spectra->add_option("--max-dim", spectra_max_dim, "highest reported dimension");
    cmd_spectra->add_option("--format", spectra_out.format)->check(CLI::IsMember({"json", "csv"}));
    cmd_spectra->add_option("--output", spectra_out.output, "output path (default stdout)");

    auto* cmd_persist = app.add_subcommand("persist", "persistent spectra over a filtration");
    std::string persist_input, persist_filtration;
    std::vector<std::string> persist_mode{"diagonal"};
    std::vector<int> persist_dims{0, 1, 2};
    CommonOutput persist_out;
    bool persist_serial = false;
    cmd_persist->add_option("--input", persist_input, "complex document (JSON)")->required();
    cmd_persist->add_option("--filtration", persist_filtration, "distance|volume|values")
        ->required()
        ->check(CLI::IsMember({"distance", "volume", "values"}));
    cmd_persist->add_option("--mode", persist_mode, "diagonal | pairs a:b,... | grid step")
        ->expected(1, 2);
    cmd_persist->add_option("--dims", persist_dims, "dimensions to evaluate")->delimiter(',');
    cmd_persist->add_option("--format", persist_out.format)->check(CLI::IsMember({"json", "csv"}));
    cmd_persist->add_option("--output", persist_out.output, "output path (default stdout)");
    cmd_persist->add_flag("--serial", persist_serial, "use the serial reference sweep");

    auto* cmd_pdb = app.add_subcommand("pdb", "protein-ligand pipeline on a PDB file");
    std::string pdb_file, pdb_ligand, pdb_two_edges = "chain2", pdb_sidecar;
    double pdb_cutoff = 4.0, pdb_covalent = 1.8;
    std::vector<std::string> pdb_mode{"diagonal"};
    std::vector<int> pdb_dims{0, 1, 2};
    CommonOutput pdb_out;
    cmd_pdb->add_option("--file", pdb_file, "PDB file")->required();
    cmd_pdb->add_option("--ligand-resname", pdb_ligand, "ligand residue name")->required();
    cmd_pdb->add_option("--cutoff", pdb_cutoff, "contact cutoff in Angstrom")
        ->capture_default_str();
    cmd_pdb->add_option("--covalent", pdb_covalent, "ligand covalent bond distance in Angstrom")
        ->capture_default_str();
    cmd_pdb->add_option("--two-edges", pdb_two_edges, "chain2|none")
        ->check(CLI::IsMember({"chain2", "none"}));
    cmd_pdb->add_option("--mode", pdb_mode, "diagonal | pairs a:b,... | grid step")
        ->expected(1, 2);
    cmd_pdb->add_option("--dims", pdb_dims, "dimensions to evaluate")->delimiter(',');
    cmd_pdb->add_option("--electronegativities", pdb_sidecar,
                        "JSON sidecar overriding the element table");
    cmd_pdb->add_option("--format", pdb_out.format)->check(CLI::IsMember({"json", "csv"}));
    cmd_pdb->add_option("--output", pdb_out.output, "output path (default stdout)");

    auto* cmd_reduce = app.add_subcommand("reduce", "reduced hypergraph and induced homology ranks");
    std::string reduce_input, reduce_output;
    cmd_reduce->add_option("--input", reduce_input, "complex document (JSON)")->required();
    cmd_reduce->add_option("--output", reduce_output, "output path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (cmd_spectra->parsed()) {
            const auto h = hdg::parse_complex(read_file(spectra_input));
            const auto summaries = hdg::analyze(h, spectra_max_dim, zero_tol);
            write_output(spectra_out.output, spectra_out.format == "csv"
                                                 ? hdg::emit_spectra_csv(summaries)
                                                 : hdg::emit_spectra_json(summaries));
        } else if (cmd_persist->parsed()) {
            const auto doc = hdg::parse_complex_document(read_file(persist_input));
            hdg::Filtration filtration;
            if (persist_filtration == "values") {
                filtration = hdg::to_values_filtration(doc);
            } else {
                const auto h = hdg::to_hyperdigraph(doc);
                filtration = persist_filtration == "volume" ? hdg::volume_filtration(h)
                                                            : hdg::distance_filtration(h);
            }
            const auto spec = make_sweep_spec(persist_mode, persist_dims, zero_tol);
            const auto result = persist_serial ? hdg::sweep_reference(filtration, spec)
                                               : hdg::sweep(filtration, spec);
            emit_sweep(result, persist_out);
        } else if (cmd_pdb->parsed()) {
            hdg::PdbBuildOptions options;
            options.ligand_resname = pdb_ligand;
            options.cutoff = pdb_cutoff;
            options.covalent = pdb_covalent;
            options.chain2 = pdb_two_edges == "chain2";
            if (!pdb_sidecar.empty())
                options.table = hdg::parse_electronegativity_sidecar(read_file(pdb_sidecar));
            const auto atoms = hdg::parse_pdb(read_file(pdb_file));
            const auto built = hdg::build_complex_from_pdb(atoms, options);
            const auto filtration = hdg::distance_filtration(built.complex);
            const auto spec = make_sweep_spec(pdb_mode, pdb_dims, zero_tol);
            emit_sweep(hdg::sweep(filtration, spec), pdb_out);
        } else if (cmd_reduce->parsed()) {
            const auto doc = hdg::parse_complex_document(read_file(reduce_input));
            const auto h = hdg::to_hyperdigraph(doc);
            const auto reduced = hdg::reduce(h);
            std::vector<hdg::InducedHomologyRank> ranks;
            const int top = std::max(0, h.max_dimension());
            for (int p = 0; p <= top; ++p) ranks.push_back(hdg::induced_homology_rank(h, p));
            auto reduced_doc = hdg::document_from(hdg::normalize_hypergraph(reduced), doc.vertices);
            reduced_doc.directed = false;
            write_output(reduce_output, hdg::emit_reduce_json(reduced_doc, ranks));
        }
    } catch (const hdg::InputError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const hdg::ConsistencyError& e) {
        std::cerr << "internal consistency failure: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
