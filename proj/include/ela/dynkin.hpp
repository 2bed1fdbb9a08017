#pragma once

#include <string>
#include <vector>

namespace ela {

enum class Family { A, B, C, D };

char family_letter(Family f);
Family parse_family(const std::string& s);  // throws UnsupportedType

// Node indices are 0-based. For D the order is 1b, 1, 2, ..., rank-1, so
// index 0 is the extra fork node and index k >= 1 is node k.
struct DynkinDiagram {
    Family family = Family::A;
    int rank = 1;

    bool operator==(const DynkinDiagram&) const = default;
    std::string name() const;  // "A4", "D5"
};

DynkinDiagram make_diagram(Family f, int rank);  // validates, throws UnsupportedType

std::string node_label(const DynkinDiagram& d, int node);  // "1", "1b"
int node_index(const DynkinDiagram& d, const std::string& label);

using CartanMatrix = std::vector<std::vector<int>>;
using Root = std::vector<int>;

// a_ij is the Serre exponent: ad(e_i)^(1 - a_ij) e_j is the relator.
CartanMatrix cartan_matrix(const DynkinDiagram& d);

// Sorted by height, then lexicographically.
std::vector<Root> positive_roots(const DynkinDiagram& d);
std::size_t positive_root_count(const DynkinDiagram& d);  // closed form

bool is_positive_root(const Root& a, const DynkinDiagram& d);
int height(const Root& a);
Root simple_root(const DynkinDiagram& d, int node);

// Lexicographically smallest (i_1, ..., i_t), outermost letter first, such
// that every inner tail alpha_{i_s} + ... + alpha_{i_t} is a positive root.
std::vector<int> root_decomposition(const Root& a, const DynkinDiagram& d);

// +1/-1 two-colouring of the tree diagram, node 0 gets +1.
std::vector<int> bipartition(const DynkinDiagram& d);

}  // namespace ela
