#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ela/closure.hpp"
#include "ela/dynkin.hpp"
#include "ela/freelie.hpp"
#include "ela/reps.hpp"

namespace ela {

struct Check {
    std::string name;
    bool pass = false;
    std::string witness;
};

struct Certificate {
    std::string claim;
    Family family = Family::A;
    int rank = 0;
    std::vector<Check> checks;
    std::vector<std::pair<std::string, std::string>> values;

    void add(std::string name, bool pass, std::string witness = {});
    void value(std::string key, std::string v);
    // Appends o's checks, prefixing their names.
    void merge(const Certificate& o, const std::string& prefix = {});
    bool overall() const;
};

struct IdealSpec {
    std::string name;
    std::vector<LieElement> elements;
};

struct CenterElement {
    LieElement element;
};

// Fundamental-weight coordinates for sp_{2n}.
struct Weight {
    std::vector<int> coords;
    static Weight from_epsilon(const std::vector<int>& eps);  // throws NonDominant
    std::vector<int> epsilon() const;
};

// ---- words ------------------------------------------------------------
namespace words {
// type C, 1-based labels
LieElement W(const DynkinDiagram& d, int i, int j);   // [e_i[...[e_{j-1}e_j]]]
LieElement V(const DynkinDiagram& d, int i, int j);   // [e_i[...[e_1[e_1[e_2...e_j]]]]]
// type D, node 1b is written as label 0 here
LieElement P(const DynkinDiagram& d, int i);          // [e1[e2...e_i]]
LieElement Pb(const DynkinDiagram& d, int i);         // [e1b[e2...e_i]]
LieElement Dv(const DynkinDiagram& d, int i, int j);  // [e_i[...[e_2[e1b[e1[e2...e_j]]]]]]
LieElement gen(const DynkinDiagram& d, const std::string& label, const Q& c = 1);
}  // namespace words

// The type-C center element c of C_{2n}.
CenterElement center_element_C(int n);
// The type-D center element c of D_{2n+1}.
CenterElement center_element_D(int n);
// S for C_{2n}: all V(i,j), i<j, except [e1[e1e2]].
IdealSpec ideal_S(int n);
IdealSpec ideal_I(int n);  // S plus c

// One row of a hand-computed bracket table.
struct OracleEntry {
    std::string label;
    LieElement lhs;       // evaluated through the table
    LieElement expected;
};
std::vector<OracleEntry> hand_table_C(int rank);
std::vector<OracleEntry> hand_table_D(int rank);
Certificate check_oracle(const StructureTable& t, const std::vector<OracleEntry>& entries, const std::string& name);

struct WeightPreimages {
    std::vector<LieElement> toral;     // k = 1..n
    std::vector<LieElement> raising;   // k = 2..n
    std::vector<LieElement> lowering;  // k = 1..n-1
    LieElement top;                    // preimage of the upper E_nn block
};
// Elements of A_{2n}.
WeightPreimages weight_vector_preimages(int n);
// Same words read over another diagram with the same node labels (e.g. C_{2n}).
LieElement relabel(const LieElement& x, const DynkinDiagram& target);

// sp_{2n}: product over positive roots of <lambda+rho, alpha>/<rho, alpha>.
long long weyl_dim_sp(const Weight& w, int n);

Certificate certify_dimension(Family f, int rank, std::optional<std::size_t> max_iterations = {}, int threads = 1);
Certificate verify_ideal(const StructureTable& t, const IdealSpec& spec);
Certificate verify_abelian(const StructureTable& t, const IdealSpec& spec);
Certificate verify_center(const StructureTable& t, const CenterElement& c);
Certificate verify_quotient_iso_C_mod_I(const StructureTable& tc, const StructureTable& ta);
Certificate verify_highest_weight(const StructureTable& tc, int n);
Certificate verify_typeD_radical(const StructureTable& td, int n);
Certificate verify_oddA_extension(int n);

// Rank of the span of elements evaluated in the table.
std::size_t span_dimension(const StructureTable& t, const std::vector<LieElement>& xs);

struct SuiteOptions {
    std::optional<std::size_t> max_iterations;
    int threads = 1;
};

const std::vector<std::string>& suite_names();
// Throws UnsupportedType when the suite does not apply to d.
Certificate run_suite(const std::string& suite, const DynkinDiagram& d, const SuiteOptions& opt = {});

}  // namespace ela
