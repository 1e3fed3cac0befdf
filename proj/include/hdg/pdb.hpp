#pragma once

#include <map>
#include <string>
#include <vector>

#include "hdg/hyperstructures.hpp"

namespace hdg {

struct AtomRecord {
    long serial = 0;
    std::string name;    // columns 13-16, as written
    std::string resname; // columns 18-20, trimmed
    char chain = ' ';
    long resseq = 0;
    double x = 0, y = 0, z = 0; // Angstrom
    std::string element;        // columns 77-78, or derived from the atom name
    bool is_hetatm = false;
};

/// Fixed-column parse of ATOM/HETATM records; every other record type is
/// ignored.  An ATOM/HETATM line shorter than the coordinate fields is an
/// error carrying its line number.
std::vector<AtomRecord> parse_pdb(const std::string& text);

/// Pauling-style electronegativities keyed by element symbol; the defaults
/// carry H, S, C, N and O.  Unknown elements surface as errors naming the
/// element so that a sidecar table can be supplied.
struct ElectronegativityTable {
    std::map<std::string, double> chi;

    static ElectronegativityTable defaults();
    double lookup(const std::string& element) const;
};

/// JSON object {"ELEMENT": value, ...} merged over the defaults.
ElectronegativityTable parse_electronegativity_sidecar(const std::string& text);

struct PdbBuildOptions {
    std::string ligand_resname;
    double cutoff = 4.0;   // ligand-to-protein-carbon contact distance, Angstrom
    double covalent = 1.8; // ligand internal covalent bond distance, Angstrom
    bool chain2 = true;    // directed 2-hyperedges from composable edge pairs
    // Interactions beyond the standard rule, off by default.
    bool include_ligand_noncovalent = false;
    bool include_protein_protein = false;
    ElectronegativityTable table = ElectronegativityTable::defaults();
};

struct PdbComplex {
    Hyperdigraph complex; // carries 3D coordinates
    std::vector<std::string> labels;
};

/// Vertices are the ligand atoms plus every protein carbon within the cutoff
/// of some ligand atom.  Directed 1-hyperedges connect ligand-internal
/// covalent pairs and ligand/protein-carbon contacts, oriented from lower to
/// higher electronegativity (ties give both directions).  With chain2 every
/// composable pair (u,v),(v,w) with u != w spawns the directed 2-hyperedge
/// (u,v,w).  All vertices enter as directed 0-hyperedges.
PdbComplex build_complex_from_pdb(const std::vector<AtomRecord>& atoms,
                                  const PdbBuildOptions& options);

} // namespace hdg
