#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ela/dynkin.hpp"
#include "ela/exactla.hpp"

namespace ela {

class BracketTree {
public:
    static BracketTree leaf(int node);
    static BracketTree pair(const BracketTree& l, const BracketTree& r);

    bool is_leaf() const;
    int node() const;
    const BracketTree& left() const;
    const BracketTree& right() const;
    int leaves() const;

    // leaf < pair, leaves by node, pairs lexicographically by (left, right)
    friend int compare(const BracketTree& a, const BracketTree& b);
    friend bool operator<(const BracketTree& a, const BracketTree& b) { return compare(a, b) < 0; }
    friend bool operator==(const BracketTree& a, const BracketTree& b) { return compare(a, b) == 0; }

private:
    struct Node;
    explicit BracketTree(std::shared_ptr<const Node> p) : p_(std::move(p)) {}
    std::shared_ptr<const Node> p_;
};

struct BracketTree::Node {
    int node = -1;
    BracketTree l{nullptr}, r{nullptr};
    int leaves = 1;
};

inline bool BracketTree::is_leaf() const { return p_->node >= 0; }
inline int BracketTree::node() const { return p_->node; }
inline const BracketTree& BracketTree::left() const { return p_->l; }
inline const BracketTree& BracketTree::right() const { return p_->r; }
inline int BracketTree::leaves() const { return p_->leaves; }

// Right-nested [e_{s0},[e_{s1},[...,e_{sk}]]].
BracketTree right_nested(const std::vector<int>& nodes);

// Formal rational combination of bracket trees in normal form: children are
// normalized, [x,x] vanishes, and [x,y] with y < x is stored as -[y,x].
class LieElement {
public:
    LieElement() = default;
    explicit LieElement(DynkinDiagram d) : d_(d) {}

    static LieElement generator(const DynkinDiagram& d, int node, const Q& c = 1);
    static LieElement from_tree(const DynkinDiagram& d, const BracketTree& t, const Q& c = 1);

    const DynkinDiagram& diagram() const { return d_; }
    const std::map<BracketTree, Q>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const BracketTree& t, const Q& c);

    LieElement& operator+=(const LieElement& o);
    LieElement& operator-=(const LieElement& o);
    LieElement& operator*=(const Q& c);
    friend LieElement operator+(LieElement a, const LieElement& b) { return a += b; }
    friend LieElement operator-(LieElement a, const LieElement& b) { return a -= b; }
    friend LieElement operator*(const Q& c, LieElement a) { return a *= c; }
    friend bool operator==(const LieElement& a, const LieElement& b) {
        return a.d_ == b.d_ && a.terms_ == b.terms_;
    }

private:
    DynkinDiagram d_;
    std::map<BracketTree, Q> terms_;
};

// Normal form of a single tree: nullopt if it vanishes formally.
std::optional<std::pair<int, BracketTree>> normalize(const BracketTree& t);

LieElement bracket(const LieElement& x, const LieElement& y);
LieElement ad_power(const LieElement& x, int m, const LieElement& y);

struct Relator {
    int i = 0, j = 0;
    LieElement lhs;  // vanishes in the algebra
};

// One relator per ordered pair i != j; the a_ij = -1 case carries -2 e_i.
std::vector<Relator> electrical_relators(const DynkinDiagram& d);

BracketTree spanning_word(const Root& a, const DynkinDiagram& d);

// Homomorphic image of x with generator node k sent to assignment[k].
// The result lives over `target`.
LieElement substitute(const LieElement& x, const std::map<int, LieElement>& assignment,
                      const DynkinDiagram& target);

// Expansion into the free associative algebra ([x,y] = xy - yx); faithful
// on the free Lie algebra, so formal identities can be tested here.
std::map<std::vector<int>, Q> expand_associative(const LieElement& x);

std::string format_tree(const DynkinDiagram& d, const BracketTree& t);
std::string format_element(const LieElement& x);
BracketTree parse_tree(const DynkinDiagram& d, const std::string& s);
LieElement parse_element(const DynkinDiagram& d, const std::string& s);

}  // namespace ela
