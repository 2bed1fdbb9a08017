#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "ela/dynkin.hpp"
#include "ela/exactla.hpp"
#include "ela/freelie.hpp"
#include "ela/reps.hpp"

namespace ela {

enum class Provenance { RepDerived, ClosureDerived };
const char* provenance_name(Provenance p);

// Basis indexed by positive roots (order of positive_roots); constants[a][b]
// is [b_a, b_b] in that basis.
struct StructureTable {
    DynkinDiagram diagram;
    std::vector<Root> roots;
    std::vector<BracketTree> words;
    std::vector<std::vector<SparseVec>> constants;
    Provenance provenance = Provenance::RepDerived;

    int size() const { return static_cast<int>(roots.size()); }
    const SparseVec& at(int a, int b) const { return constants[a][b]; }
    int index_of(const Root& r) const;  // -1 if absent
    int generator(int node) const;     // basis index of e_node

    SparseVec bracket(const SparseVec& x, const SparseVec& y) const;
    SparseVec evaluate(const BracketTree& t) const;
    SparseVec evaluate(const LieElement& x) const;

    // Exact equality of basis and constants.
    bool same_constants(const StructureTable& o) const;
};

// Empty table skeleton over the spanning words of d.
StructureTable empty_table(const DynkinDiagram& d, Provenance p);

struct TableCertificate {
    bool antisymmetry_ok = false;
    bool jacobi_ok = false;
    bool relations_ok = false;
    bool generated_ok = false;  // evaluated basis words are independent
    int dimension = 0;
    std::size_t checked_triples = 0;
    std::size_t total_triples = 0;
    bool ok() const { return antisymmetry_ok && jacobi_ok && relations_ok && generated_ok; }
};

StructureTable table_from_representation(const DynkinDiagram& d, const Representation& rho);

// Equations processed before ClosureDiverged: 10 |Phi+|^2 unless ELA_ITER_CAP is set.
std::size_t default_iteration_cap(const DynkinDiagram& d);

struct ClosureStats {
    std::size_t equations = 0;
    std::size_t unknowns = 0;
    int orders = 0;
};

StructureTable table_from_presentation(const DynkinDiagram& d, std::optional<std::size_t> max_iterations = {},
                                       ClosureStats* stats = nullptr);

// Chevalley generators of the classical n+ with the electrical Cartan
// convention (used as the order-zero term of the closure).
std::vector<SparseMatrix> classical_nplus(const DynkinDiagram& d);

TableCertificate certify_table(const StructureTable& t, const DynkinDiagram& d, int threads = 1);

// Table used for dimension certificates: rep-derived for A, B, C and
// closure-derived for D.
StructureTable build_table(const DynkinDiagram& d, std::optional<std::size_t> max_iterations = {});

}  // namespace ela
