#include "ela/freelie.hpp"

#include <cctype>
#include <functional>

#include "ela/errors.hpp"

namespace ela {

BracketTree BracketTree::leaf(int node) {
    auto n = std::make_shared<Node>();
    n->node = node;
    return BracketTree(n);
}

BracketTree BracketTree::pair(const BracketTree& l, const BracketTree& r) {
    auto n = std::make_shared<Node>();
    n->node = -1;
    n->l = l;
    n->r = r;
    n->leaves = l.leaves() + r.leaves();
    return BracketTree(n);
}

int compare(const BracketTree& a, const BracketTree& b) {
    if (a.p_ == b.p_) return 0;
    const bool la = a.is_leaf(), lb = b.is_leaf();
    if (la != lb) return la ? -1 : 1;
    if (la) return a.node() < b.node() ? -1 : (a.node() > b.node() ? 1 : 0);
    if (int c = compare(a.left(), b.left())) return c;
    return compare(a.right(), b.right());
}

BracketTree right_nested(const std::vector<int>& nodes) {
    if (nodes.empty()) throw ParseError("empty word");
    BracketTree t = BracketTree::leaf(nodes.back());
    for (auto it = nodes.rbegin() + 1; it != nodes.rend(); ++it) t = BracketTree::pair(BracketTree::leaf(*it), t);
    return t;
}

std::optional<std::pair<int, BracketTree>> normalize(const BracketTree& t) {
    if (t.is_leaf()) return std::make_pair(1, t);
    auto l = normalize(t.left());
    if (!l) return std::nullopt;
    auto r = normalize(t.right());
    if (!r) return std::nullopt;
    const int c = compare(l->second, r->second);
    if (c == 0) return std::nullopt;
    const int sign = l->first * r->first;
    if (c < 0) return std::make_pair(sign, BracketTree::pair(l->second, r->second));
    return std::make_pair(-sign, BracketTree::pair(r->second, l->second));
}

static void check_leaves(const DynkinDiagram& d, const BracketTree& t) {
    if (t.is_leaf()) {
        if (t.node() < 0 || t.node() >= d.rank) throw MissingGenerator("leaf outside " + d.name());
        return;
    }
    check_leaves(d, t.left());
    check_leaves(d, t.right());
}

LieElement LieElement::generator(const DynkinDiagram& d, int node, const Q& c) {
    return from_tree(d, BracketTree::leaf(node), c);
}

LieElement LieElement::from_tree(const DynkinDiagram& d, const BracketTree& t, const Q& c) {
    check_leaves(d, t);
    LieElement x(d);
    x.add_term(t, c);
    return x;
}

void LieElement::add_term(const BracketTree& t, const Q& c) {
    if (c == 0) return;
    auto n = normalize(t);
    if (!n) return;
    Q& slot = terms_[n->second];
    slot += n->first * c;
    if (slot == 0) terms_.erase(n->second);
}

LieElement& LieElement::operator+=(const LieElement& o) {
    if (!(d_ == o.d_)) throw DiagramMismatch(d_.name() + " vs " + o.d_.name());
    for (const auto& [t, c] : o.terms_) add_term(t, c);
    return *this;
}

LieElement& LieElement::operator-=(const LieElement& o) {
    if (!(d_ == o.d_)) throw DiagramMismatch(d_.name() + " vs " + o.d_.name());
    for (const auto& [t, c] : o.terms_) add_term(t, -c);
    return *this;
}

LieElement& LieElement::operator*=(const Q& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [t, v] : terms_) v *= c;
    return *this;
}

LieElement bracket(const LieElement& x, const LieElement& y) {
    if (!(x.diagram() == y.diagram())) throw DiagramMismatch(x.diagram().name() + " vs " + y.diagram().name());
    LieElement z(x.diagram());
    for (const auto& [a, ca] : x.terms())
        for (const auto& [b, cb] : y.terms()) z.add_term(BracketTree::pair(a, b), ca * cb);
    return z;
}

LieElement ad_power(const LieElement& x, int m, const LieElement& y) {
    LieElement z = y;
    for (int k = 0; k < m; ++k) z = bracket(x, z);
    return z;
}

std::vector<Relator> electrical_relators(const DynkinDiagram& d) {
    const auto a = cartan_matrix(d);
    std::vector<Relator> out;
    for (int i = 0; i < d.rank; ++i)
        for (int j = 0; j < d.rank; ++j) {
            if (i == j) continue;
            const auto ei = LieElement::generator(d, i);
            LieElement lhs = ad_power(ei, 1 - a[i][j], LieElement::generator(d, j));
            if (a[i][j] == -1) lhs += LieElement::generator(d, i, 2);
            out.push_back({i, j, lhs});
        }
    return out;
}

BracketTree spanning_word(const Root& a, const DynkinDiagram& d) {
    return right_nested(root_decomposition(a, d));
}

LieElement substitute(const LieElement& x, const std::map<int, LieElement>& assignment,
                      const DynkinDiagram& target) {
    std::function<LieElement(const BracketTree&)> go = [&](const BracketTree& t) -> LieElement {
        if (t.is_leaf()) {
            auto it = assignment.find(t.node());
            if (it == assignment.end())
                throw MissingAssignment("no image for node " + node_label(x.diagram(), t.node()));
            if (!(it->second.diagram() == target)) throw DiagramMismatch("assignment outside target");
            return it->second;
        }
        return bracket(go(t.left()), go(t.right()));
    };
    LieElement out(target);
    for (const auto& [t, c] : x.terms()) out += c * go(t);
    return out;
}

using Assoc = std::map<std::vector<int>, Q>;

static Assoc assoc_of(const BracketTree& t) {
    if (t.is_leaf()) return {{{t.node()}, Q(1)}};
    const Assoc l = assoc_of(t.left()), r = assoc_of(t.right());
    Assoc out;
    for (const auto& [u, a] : l)
        for (const auto& [v, b] : r) {
            std::vector<int> uv = u, vu = v;
            uv.insert(uv.end(), v.begin(), v.end());
            vu.insert(vu.end(), u.begin(), u.end());
            out[uv] += a * b;
            out[vu] -= a * b;
        }
    std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
    return out;
}

std::map<std::vector<int>, Q> expand_associative(const LieElement& x) {
    Assoc out;
    for (const auto& [t, c] : x.terms())
        for (const auto& [w, v] : assoc_of(t)) out[w] += c * v;
    std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
    return out;
}

std::string format_tree(const DynkinDiagram& d, const BracketTree& t) {
    if (t.is_leaf()) return "e" + node_label(d, t.node());
    return "[" + format_tree(d, t.left()) + format_tree(d, t.right()) + "]";
}

std::string format_element(const LieElement& x) {
    if (x.is_zero()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [t, c] : x.terms()) {
        Q a = c;
        if (first) {
            if (a < 0) s += "-";
        } else {
            s += a < 0 ? " - " : " + ";
        }
        if (a < 0) a = -a;
        if (a != 1) s += to_string(a) + "*";
        s += format_tree(x.diagram(), t);
        first = false;
    }
    return s;
}

namespace {

struct Parser {
    const DynkinDiagram& d;
    const std::string& s;
    std::size_t i = 0;

    void ws() {
        while (i < s.size() && (std::isspace(static_cast<unsigned char>(s[i])) || s[i] == ',')) ++i;
    }
    [[noreturn]] void fail(const std::string& what) const {
        throw ParseError(what + " at offset " + std::to_string(i) + " in '" + s + "'");
    }

    BracketTree tree() {
        ws();
        if (i >= s.size()) fail("unexpected end");
        if (s[i] == 'e') {
            ++i;
            std::size_t j = i;
            while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
            if (j < s.size() && s[j] == 'b') ++j;
            if (j == i) fail("missing generator label");
            const std::string label = s.substr(i, j - i);
            i = j;
            try {
                return BracketTree::leaf(node_index(d, label));
            } catch (const MissingGenerator&) {
                fail("unknown generator e" + label);
            }
        }
        if (s[i] == '[') {
            ++i;
            BracketTree l = tree();
            BracketTree r = tree();
            ws();
            if (i >= s.size() || s[i] != ']') fail("expected ']'");
            ++i;
            return BracketTree::pair(l, r);
        }
        fail("unexpected character");
    }

    LieElement element() {
        LieElement x(d);
        ws();
        bool first = true;
        while (i < s.size()) {
            Q sign = 1;
            ws();
            if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
                if (s[i] == '-') sign = -1;
                ++i;
                ws();
            } else if (!first) {
                fail("expected '+' or '-'");
            }
            Q coef = 1;
            if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
                std::size_t j = i;
                while (j < s.size() && (std::isdigit(static_cast<unsigned char>(s[j])) || s[j] == '/')) ++j;
                coef = parse_rational(s.substr(i, j - i));
                i = j;
                ws();
                if (i < s.size() && s[i] == '*') ++i;
                ws();
                if (i >= s.size() || (s[i] != 'e' && s[i] != '[')) fail("bare scalar");
            }
            x.add_term(tree(), sign * coef);
            first = false;
            ws();
        }
        return x;
    }
};

}  // namespace

BracketTree parse_tree(const DynkinDiagram& d, const std::string& s) {
    Parser p{d, s};
    BracketTree t = p.tree();
    p.ws();
    if (p.i != s.size()) p.fail("trailing input");
    return t;
}

LieElement parse_element(const DynkinDiagram& d, const std::string& s) {
    if (s == "0") return LieElement(d);
    Parser p{d, s};
    return p.element();
}

}  // namespace ela
