#include "ela/dynkin.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "ela/errors.hpp"

namespace ela {

char family_letter(Family f) {
    switch (f) {
        case Family::A: return 'A';
        case Family::B: return 'B';
        case Family::C: return 'C';
        case Family::D: return 'D';
    }
    return '?';
}

Family parse_family(const std::string& s) {
    if (s == "A" || s == "a") return Family::A;
    if (s == "B" || s == "b") return Family::B;
    if (s == "C" || s == "c") return Family::C;
    if (s == "D" || s == "d") return Family::D;
    throw UnsupportedType("unsupported family '" + s + "'");
}

std::string DynkinDiagram::name() const { return std::string(1, family_letter(family)) + std::to_string(rank); }

DynkinDiagram make_diagram(Family f, int rank) {
    int lo = 1;
    if (f == Family::B || f == Family::C) lo = 2;
    if (f == Family::D) lo = 3;
    if (rank < lo)
        throw UnsupportedType(std::string(1, family_letter(f)) + " needs rank >= " + std::to_string(lo));
    return DynkinDiagram{f, rank};
}

std::string node_label(const DynkinDiagram& d, int node) {
    if (node < 0 || node >= d.rank) throw MissingGenerator("node index out of range");
    if (d.family == Family::D) return node == 0 ? "1b" : std::to_string(node);
    return std::to_string(node + 1);
}

int node_index(const DynkinDiagram& d, const std::string& label) {
    for (int i = 0; i < d.rank; ++i)
        if (node_label(d, i) == label) return i;
    throw MissingGenerator("no node '" + label + "' in " + d.name());
}

static std::vector<std::pair<int, int>> edges(const DynkinDiagram& d) {
    std::vector<std::pair<int, int>> e;
    if (d.family == Family::D) {
        e = {{0, 2}, {1, 2}};
        for (int k = 2; k + 1 < d.rank; ++k) e.emplace_back(k, k + 1);
    } else {
        for (int k = 0; k + 1 < d.rank; ++k) e.emplace_back(k, k + 1);
    }
    return e;
}

CartanMatrix cartan_matrix(const DynkinDiagram& d) {
    CartanMatrix a(d.rank, std::vector<int>(d.rank, 0));
    for (int i = 0; i < d.rank; ++i) a[i][i] = 2;
    for (auto [i, j] : edges(d)) a[i][j] = a[j][i] = -1;
    // B: [e2,[e2,[e2,e1]]] = 0.  C: [e1,[e1,[e1,e2]]] = 0.
    if (d.family == Family::B) a[1][0] = -2;
    if (d.family == Family::C) a[0][1] = -2;
    return a;
}

int height(const Root& a) { return std::accumulate(a.begin(), a.end(), 0); }

Root simple_root(const DynkinDiagram& d, int node) {
    if (node < 0 || node >= d.rank) throw MissingGenerator("node index out of range");
    Root r(d.rank, 0);
    r[node] = 1;
    return r;
}

std::vector<Root> positive_roots(const DynkinDiagram& d) {
    const auto a = cartan_matrix(d);
    const int r = d.rank;
    std::set<Root> found;
    std::vector<Root> frontier;
    for (int i = 0; i < r; ++i) {
        found.insert(simple_root(d, i));
        frontier.push_back(simple_root(d, i));
    }
    // root strings: p - q = -<beta, alpha_i^vee>
    while (!frontier.empty()) {
        std::vector<Root> next;
        for (const auto& b : frontier) {
            for (int i = 0; i < r; ++i) {
                int q = 0;
                for (;;) {
                    Root c = b;
                    c[i] -= q + 1;
                    if (found.count(c)) ++q;
                    else break;
                }
                int pairing = 0;
                for (int j = 0; j < r; ++j) pairing += b[j] * a[i][j];
                if (q - pairing > 0) {
                    Root c = b;
                    c[i] += 1;
                    if (found.insert(c).second) next.push_back(c);
                }
            }
        }
        frontier = std::move(next);
    }
    std::vector<Root> out(found.begin(), found.end());
    std::stable_sort(out.begin(), out.end(), [](const Root& x, const Root& y) {
        int hx = height(x), hy = height(y);
        if (hx != hy) return hx < hy;
        return x < y;
    });
    return out;
}

std::size_t positive_root_count(const DynkinDiagram& d) {
    const std::size_t n = d.rank;
    switch (d.family) {
        case Family::A: return n * (n + 1) / 2;
        case Family::B:
        case Family::C: return n * n;
        case Family::D: return n * n - n;
    }
    return 0;
}

bool is_positive_root(const Root& a, const DynkinDiagram& d) {
    if (static_cast<int>(a.size()) != d.rank) return false;
    const auto roots = positive_roots(d);
    return std::find(roots.begin(), roots.end(), a) != roots.end();
}

std::vector<int> root_decomposition(const Root& a, const DynkinDiagram& d) {
    const auto roots = positive_roots(d);
    std::set<Root> rs(roots.begin(), roots.end());
    if (!rs.count(a)) throw NotAPositiveRoot("not a positive root of " + d.name());
    std::vector<int> seq;
    Root cur = a;
    // greedy is lex-minimal: every positive root of height > 1 has a simple
    // root whose removal leaves a positive root
    while (height(cur) > 1) {
        bool done = false;
        for (int i = 0; i < d.rank && !done; ++i) {
            if (cur[i] == 0) continue;
            Root t = cur;
            --t[i];
            if (rs.count(t)) {
                seq.push_back(i);
                cur = t;
                done = true;
            }
        }
        if (!done) throw NotAPositiveRoot("no decomposition");
    }
    for (int i = 0; i < d.rank; ++i)
        if (cur[i] == 1) seq.push_back(i);
    return seq;
}

std::vector<int> bipartition(const DynkinDiagram& d) {
    std::vector<int> s(d.rank, 0);
    s[0] = 1;
    bool changed = true;
    const auto e = edges(d);
    while (changed) {
        changed = false;
        for (auto [i, j] : e) {
            if (s[i] && !s[j]) s[j] = -s[i], changed = true;
            if (s[j] && !s[i]) s[i] = -s[j], changed = true;
        }
    }
    return s;
}

}  // namespace ela
