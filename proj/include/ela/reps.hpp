#pragma once

#include <map>
#include <vector>

#include "ela/dynkin.hpp"
#include "ela/exactla.hpp"
#include "ela/freelie.hpp"

namespace ela {

// images[k] is the matrix of generator node k.
struct Representation {
    DynkinDiagram diagram;
    int dim = 0;
    std::vector<SparseMatrix> images;
};

// [[0, I], [-I, 0]] of size 2n+2; covector index n+1 (1-based) is the
// distinguished one cut out by the odd symplectic condition.
struct SymplecticForm {
    int n = 0;
    SparseMatrix matrix() const;
    int size() const { return 2 * n + 2; }
};

// One image per target summand for every source node.
struct Homomorphism {
    DynkinDiagram source;
    std::vector<DynkinDiagram> targets;
    std::map<int, std::vector<LieElement>> assignment;
};

std::vector<LieElement> apply(const Homomorphism& h, const LieElement& x);

SparseMatrix evaluate(const LieElement& x, const Representation& rho);
SparseMatrix evaluate(const BracketTree& t, const Representation& rho);

// Keep the images of the first `d.rank` nodes, now read over d.
Representation restrict_to(const Representation& rho, const DynkinDiagram& d);
Representation direct_sum(const Representation& a, const Representation& b, const DynkinDiagram& d);

// A_{2n+2} into sp_{2n+2}. Size 2n+2.
Representation rep_A_even(int n);
// Smallest truncation of rep_A_even covering A_m.
Representation rep_A(int m);

bool is_symplectic(const SparseMatrix& m, const SymplecticForm& b);
bool odd_symplectic_membership(const SparseMatrix& m, int n);

Homomorphism hom_B_to_AplusA(int n);
// Block-diagonal rep of B_n through hom_B_to_AplusA.
Representation rep_B(int n);

// C_{2n} acting on (2n)^2-dimensional space; kernel is the center.
Representation rep_C_gl(int n);
// e1 -> 1, other generators -> 0.
Representation rep_C_scalar(int n);
// rep_C_gl plus rep_C_scalar, faithful. Odd rank restricts the next even one.
Representation rep_C(int rank);

// C_{2n} into D_{2n+1}.
Homomorphism hom_C_into_D(int n);

// Faithful matrix model where available (A, B, C); throws UnsupportedType for D.
Representation faithful_representation(const DynkinDiagram& d);

// Every electrical relator evaluates to zero.
bool satisfies_relators(const Representation& rho);

}  // namespace ela
