#include "ela/closure.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <map>
#include <string>
#include <thread>

#include "ela/errors.hpp"

namespace ela {

const char* provenance_name(Provenance p) {
    return p == Provenance::RepDerived ? "rep-derived" : "closure-derived";
}

int StructureTable::index_of(const Root& r) const {
    auto it = std::find(roots.begin(), roots.end(), r);
    return it == roots.end() ? -1 : static_cast<int>(it - roots.begin());
}

int StructureTable::generator(int node) const { return index_of(simple_root(diagram, node)); }

SparseVec StructureTable::bracket(const SparseVec& x, const SparseVec& y) const {
    SparseVec out;
    for (const auto& [a, ca] : x)
        for (const auto& [b, cb] : y) {
            const auto& t = constants[a][b];
            if (!t.empty()) sv::axpy(out, ca * cb, t);
        }
    return out;
}

SparseVec StructureTable::evaluate(const BracketTree& t) const {
    if (t.is_leaf()) {
        if (t.node() < 0 || t.node() >= diagram.rank) throw MissingGenerator("leaf outside " + diagram.name());
        return sv::unit(generator(t.node()));
    }
    return bracket(evaluate(t.left()), evaluate(t.right()));
}

SparseVec StructureTable::evaluate(const LieElement& x) const {
    if (!(x.diagram() == diagram)) throw DiagramMismatch(x.diagram().name() + " vs " + diagram.name());
    SparseVec out;
    for (const auto& [t, c] : x.terms()) sv::axpy(out, c, evaluate(t));
    return out;
}

bool StructureTable::same_constants(const StructureTable& o) const {
    return diagram == o.diagram && roots == o.roots && words == o.words && constants == o.constants;
}

StructureTable empty_table(const DynkinDiagram& d, Provenance p) {
    StructureTable t;
    t.diagram = d;
    t.roots = positive_roots(d);
    for (const auto& r : t.roots) t.words.push_back(spanning_word(r, d));
    t.constants.assign(t.roots.size(), std::vector<SparseVec>(t.roots.size()));
    t.provenance = p;
    return t;
}

namespace {

// tail[a] = basis index of the inner word of b_a, -1 for generators
std::vector<int> tails(const StructureTable& t) {
    std::map<Root, int> idx;
    for (int a = 0; a < t.size(); ++a) idx[t.roots[a]] = a;
    std::vector<int> out(t.size(), -1);
    for (int a = 0; a < t.size(); ++a) {
        if (t.words[a].is_leaf()) continue;
        Root r = t.roots[a];
        --r[t.words[a].left().node()];
        out[a] = idx.at(r);
    }
    return out;
}

}  // namespace

StructureTable table_from_representation(const DynkinDiagram& d, const Representation& rho) {
    if (!(rho.diagram == d)) throw DiagramMismatch("representation is over " + rho.diagram.name());
    StructureTable t = empty_table(d, Provenance::RepDerived);
    const int n = t.size();
    const auto tail = tails(t);
    std::vector<SparseMatrix> img(n);
    SpanBasis span;
    for (int a = 0; a < n; ++a) {
        const auto& w = t.words[a];
        img[a] = w.is_leaf() ? rho.images.at(w.node()) : commutator(rho.images.at(w.left().node()), img[tail[a]]);
        if (!span.push(img[a].flatten()))
            throw NotFaithfulAtThisRank("spanning-word images are dependent in " + d.name());
    }
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            auto c = span.coordinates(commutator(img[a], img[b]).flatten());
            if (!c) throw NotClosed("bracket escapes the span of the basis images");
            t.constants[a][b] = *c;
            t.constants[b][a] = sv::scaled(*c, -1);
        }
    return t;
}

std::size_t default_iteration_cap(const DynkinDiagram& d) {
    if (const char* env = std::getenv("ELA_ITER_CAP")) {
        try {
            return static_cast<std::size_t>(std::stoull(env));
        } catch (const std::exception&) {
            throw ParseError(std::string("ELA_ITER_CAP is not a number: ") + env);
        }
    }
    const std::size_t n = positive_root_count(d);
    return 10 * n * n;
}

namespace {

SparseMatrix unit_matrix(int size, int i, int j, const Q& c) {
    SparseMatrix m(size, size);
    m.add(i - 1, j - 1, c);
    return m;
}

}  // namespace

std::vector<SparseMatrix> classical_nplus(const DynkinDiagram& d) {
    const int r = d.rank;
    std::vector<SparseMatrix> out;
    switch (d.family) {
        case Family::A:
            for (int k = 1; k <= r; ++k) out.push_back(unit_matrix(r + 1, k, k + 1, 1));
            return out;
        case Family::C: {
            // so_{2r+1}, node p <-> Bourbaki r+1-p
            const int m = 2 * r + 1;
            std::vector<SparseMatrix> g(r + 1);
            for (int k = 1; k < r; ++k) g[k] = unit_matrix(m, k, k + 1, 1) - unit_matrix(m, m - k, m + 1 - k, 1);
            g[r] = unit_matrix(m, r, r + 1, 1) - unit_matrix(m, r + 1, r + 2, 1);
            for (int p = 1; p <= r; ++p) out.push_back(g[r + 1 - p]);
            return out;
        }
        case Family::B: {
            // sp_{2r}, reversed
            const int m = 2 * r;
            std::vector<SparseMatrix> g(r + 1);
            for (int k = 1; k < r; ++k) g[k] = unit_matrix(m, k, k + 1, 1) - unit_matrix(m, m - k, m + 1 - k, 1);
            g[r] = unit_matrix(m, r, r + 1, 1);
            for (int p = 1; p <= r; ++p) out.push_back(g[r + 1 - p]);
            return out;
        }
        case Family::D: {
            // so_{2r}; 1b <-> r, node 1 <-> r-1, node p <-> r-p
            const int m = 2 * r;
            std::vector<SparseMatrix> g(r + 1);
            for (int k = 1; k < r; ++k) g[k] = unit_matrix(m, k, k + 1, 1) - unit_matrix(m, m - k, m + 1 - k, 1);
            g[r] = unit_matrix(m, r - 1, r + 1, 1) - unit_matrix(m, r, r + 2, 1);
            out.push_back(g[r]);
            out.push_back(g[r - 1]);
            for (int p = 2; p < r; ++p) out.push_back(g[r - p]);
            return out;
        }
    }
    throw UnsupportedType(d.name());
}

namespace {

// Affine form in the unknowns of one order: index 0 is the constant,
// index v+1 is unknown v. Products of two unknowns are dropped.
using Aff = SparseVec;
using Col = std::map<int, Aff>;
using Op = std::vector<Col>;

Aff amul(const Aff& a, const Aff& b) {
    const Q ca = sv::get(a, 0), cb = sv::get(b, 0);
    Aff out;
    if (ca != 0) out = sv::scaled(b, ca);
    if (cb != 0) {
        Aff av;
        for (const auto& [k, v] : a)
            if (k != 0) av.emplace_back(k, v);
        sv::axpy(out, cb, av);
    }
    return out;
}

void acc(Col& out, int c, const Aff& x, const Q& s) {
    if (x.empty()) return;
    auto& slot = out[c];
    sv::axpy(slot, s, x);
    if (slot.empty()) out.erase(c);
}

// M applied to v, keeping only components with height `keep` (all if < 0)
Col apply(const Op& m, const Col& v, const std::vector<int>& ht, int keep = -1) {
    Col out;
    for (const auto& [b, coef] : v)
        for (const auto& [c, aff] : m[b]) {
            if (keep >= 0 && ht[c] != keep) continue;
            acc(out, c, amul(coef, aff), 1);
        }
    return out;
}

class Echelon {
public:
    Echelon(std::size_t unknowns, std::size_t& counter, std::size_t cap)
        : n_(unknowns), counter_(counter), cap_(cap) {}

    bool full() const { return piv_.size() == n_; }
    std::size_t rank() const { return piv_.size(); }

    void add(const Aff& row) {
        if (++counter_ > cap_)
            throw ClosureDiverged("iteration cap " + std::to_string(cap_) + " reached");
        Aff r = row;
        for (const auto& [k, c] : row) {
            if (k == 0) continue;
            auto it = piv_.find(k);
            if (it != piv_.end()) sv::axpy(r, -c, it->second);
        }
        auto lead = std::find_if(r.begin(), r.end(), [](const auto& e) { return e.first != 0; });
        if (lead == r.end()) {
            if (!r.empty()) throw InconsistentPresentation("relations force a nonzero constant to vanish");
            return;
        }
        const int k = lead->first;
        r = sv::scaled(r, 1 / Q(lead->second));
        for (auto& [kk, p] : piv_) {
            const Q f = sv::get(p, k);
            if (f != 0) sv::axpy(p, -f, r);
        }
        piv_.emplace(k, std::move(r));
    }

    Q value(int v) const {
        auto it = piv_.find(v + 1);
        return it == piv_.end() ? Q(0) : Q(-sv::get(it->second, 0));
    }

private:
    std::size_t n_;
    std::size_t& counter_;
    std::size_t cap_;
    std::map<int, Aff> piv_;
};

}  // namespace

StructureTable table_from_presentation(const DynkinDiagram& d, std::optional<std::size_t> max_iterations,
                                       ClosureStats* stats) {
    StructureTable t = empty_table(d, Provenance::ClosureDerived);
    const int n = t.size(), r = d.rank;
    const std::size_t cap = max_iterations ? *max_iterations : default_iteration_cap(d);
    const auto a = cartan_matrix(d);
    const auto sgn = bipartition(d);
    const auto tail = tails(t);
    std::vector<int> ht(n), g(n), simple(r);
    for (int b = 0; b < n; ++b) {
        ht[b] = height(t.roots[b]);
        for (int i = 0; i < r; ++i) g[b] += sgn[i] * t.roots[b][i];
    }
    for (int i = 0; i < r; ++i) simple[i] = t.generator(i);

    // order zero: the classical n+
    Representation cl{d, 0, classical_nplus(d)};
    cl.dim = cl.images[0].rows();
    std::vector<SparseMatrix> img(n);
    SpanBasis span;
    for (int b = 0; b < n; ++b) {
        const auto& w = t.words[b];
        img[b] = w.is_leaf() ? cl.images[w.node()] : commutator(cl.images[w.left().node()], img[tail[b]]);
        if (!span.push(img[b].flatten())) throw NotFaithfulAtThisRank("classical words dependent");
    }
    std::vector<std::vector<SparseVec>> x(r, std::vector<SparseVec>(n));
    for (int i = 0; i < r; ++i)
        for (int b = 0; b < n; ++b) {
            auto c = span.coordinates(commutator(cl.images[i], img[b]).flatten());
            if (!c) throw NotClosed("classical n+ not closed");
            x[i][b] = *c;
        }

    std::vector<std::vector<bool>> defining(r, std::vector<bool>(n, false));
    for (int b = 0; b < n; ++b)
        if (tail[b] >= 0) defining[t.words[b].left().node()][tail[b]] = true;

    struct Rel {
        int i, j, m;
        bool deformed;
    };
    std::vector<Rel> rels;
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j)
            if (i != j) rels.push_back({i, j, 1 - a[i][j], a[i][j] == -1});

    std::size_t equations = 0, unknowns = 0;
    int orders = 0;
    const int max_order = *std::max_element(ht.begin(), ht.end());
    std::vector<int> order(n);
    for (int b = 0; b < n; ++b) order[b] = b;  // roots are sorted by height

    for (int k = 1; k <= max_order; ++k) {
        struct Var {
            int i, b, c;
        };
        std::vector<Var> vars;
        std::vector<Op> xa(r, Op(n));
        for (int i = 0; i < r; ++i)
            for (int b = 0; b < n; ++b) {
                for (const auto& [c, v] : x[i][b]) xa[i][b][c] = sv::unit(0, v);
                if (defining[i][b]) continue;
                const int h = ht[b] + 1 - 2 * k;
                if (h < 1) continue;
                for (int c = 0; c < n; ++c)
                    if (ht[c] == h && g[c] == g[b] + sgn[i]) {
                        acc(xa[i][b], c, sv::unit(static_cast<int>(vars.size()) + 1), 1);
                        vars.push_back({i, b, c});
                    }
            }
        if (vars.empty()) continue;
        ++orders;
        unknowns += vars.size();

        std::vector<Op> ad(n);
        for (int b : order) {
            const auto& w = t.words[b];
            if (w.is_leaf()) {
                ad[b] = xa[w.node()];
                continue;
            }
            const Op& xi = xa[w.left().node()];
            const Op& tl = ad[tail[b]];
            Op cols(n);
            for (int c = 0; c < n; ++c) {
                Col v = apply(xi, tl[c], ht);
                for (const auto& [e, aff] : apply(tl, xi[c], ht)) acc(v, e, aff, -1);
                cols[c] = std::move(v);
            }
            ad[b] = std::move(cols);
        }

        Echelon ech(vars.size(), equations, cap);
        auto emit = [&](const Col& v, int top) {
            const int keep = top - 2 * k;
            for (const auto& [c, aff] : v)
                if (ht[c] == keep && !ech.full()) ech.add(aff);
        };

        for (const auto& rel : rels) {
            if (ech.full()) break;
            Col v;
            v[simple[rel.j]] = sv::unit(0);
            for (int s = 0; s < rel.m; ++s) v = apply(xa[rel.i], v, ht);
            if (rel.deformed) acc(v, simple[rel.i], sv::unit(0, 2), 1);
            emit(v, rel.m + 1);
        }
        for (int b = 0; b < n && !ech.full(); ++b)
            for (int c = b; c < n && !ech.full(); ++c) {
                const int keep = ht[b] + ht[c] - 2 * k;
                if (keep < 1) continue;
                Col v;
                for (const auto& [e, aff] : ad[b][c])
                    if (ht[e] == keep) acc(v, e, aff, 1);
                for (const auto& [e, aff] : ad[c][b])
                    if (ht[e] == keep) acc(v, e, aff, 1);
                emit(v, ht[b] + ht[c]);
            }
        // b in order of height: generator b first pins the remaining unknowns early
        for (int hb = 1; hb <= max_order && !ech.full(); ++hb)
            for (int i = 0; i < r && !ech.full(); ++i)
                for (int b = 0; b < n && !ech.full(); ++b) {
                    if (ht[b] != hb) continue;
                    for (int c = 0; c < n && !ech.full(); ++c) {
                        const int keep = 1 + ht[b] + ht[c] - 2 * k;
                        if (keep < 1) continue;
                        // X_i [b,c] - [X_i b, c] - [b, X_i c]
                        Col v = apply(xa[i], ad[b][c], ht, keep);
                        for (const auto& [e, coef] : xa[i][b])
                            for (const auto& [f, aff] : ad[e][c])
                                if (ht[f] == keep) acc(v, f, amul(coef, aff), -1);
                        for (const auto& [e, aff] : apply(ad[b], xa[i][c], ht, keep)) acc(v, e, aff, -1);
                        emit(v, 1 + ht[b] + ht[c]);
                    }
                }
        if (!ech.full())
            throw Underdetermined("order " + std::to_string(k) + ": " + std::to_string(ech.rank()) + " of " +
                                  std::to_string(vars.size()) + " unknowns determined");
        for (std::size_t v = 0; v < vars.size(); ++v) {
            const Q val = ech.value(static_cast<int>(v));
            if (val != 0) sv::axpy(x[vars[v].i][vars[v].b], val, sv::unit(vars[v].c));
        }
    }
    if (stats) *stats = {equations, unknowns, orders};

    // numeric adjoint matrices from the solved generator actions
    auto act = [&](const std::vector<SparseVec>& m, const SparseVec& v) {
        SparseVec out;
        for (const auto& [b, c] : v) sv::axpy(out, c, m[b]);
        return out;
    };
    std::vector<std::vector<SparseVec>> adn(n);
    for (int b = 0; b < n; ++b) {
        const auto& w = t.words[b];
        if (w.is_leaf()) {
            adn[b] = x[w.node()];
            continue;
        }
        const auto& xi = x[w.left().node()];
        const auto& tl = adn[tail[b]];
        adn[b].resize(n);
        for (int c = 0; c < n; ++c) adn[b][c] = sv::sub(act(xi, tl[c]), act(tl, xi[c]));
    }
    for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c) t.constants[b][c] = adn[b][c];
    return t;
}

TableCertificate certify_table(const StructureTable& t, const DynkinDiagram& d, int threads) {
    TableCertificate cert;
    const int n = t.size();
    cert.dimension = n;
    cert.total_triples = static_cast<std::size_t>(n) * (n - 1) * (n - 2) / 6;
    if (!(t.diagram == d) || n != static_cast<int>(positive_root_count(d))) return cert;

    cert.antisymmetry_ok = true;
    for (int a = 0; a < n && cert.antisymmetry_ok; ++a) {
        if (!t.at(a, a).empty()) cert.antisymmetry_ok = false;
        for (int b = a + 1; b < n; ++b)
            if (sv::add(t.at(a, b), t.at(b, a)) != SparseVec{}) {
                cert.antisymmetry_ok = false;
                break;
            }
    }

    std::atomic<bool> jac{true};
    std::atomic<std::size_t> checked{0};
    auto ad = [&](int a, const SparseVec& v) {
        SparseVec out;
        for (const auto& [b, c] : v) {
            const auto& col = t.at(a, b);
            if (!col.empty()) sv::axpy(out, c, col);
        }
        return out;
    };
    auto work = [&](int start, int stride) {
        std::size_t local = 0;
        for (int a = start; a < n; a += stride)
            for (int b = a + 1; b < n; ++b)
                for (int c = b + 1; c < n; ++c) {
                    SparseVec s = ad(a, t.at(b, c));
                    sv::axpy(s, 1, ad(b, t.at(c, a)));
                    sv::axpy(s, 1, ad(c, t.at(a, b)));
                    ++local;
                    if (!s.empty()) jac = false;
                }
        checked += local;
    };
    threads = std::max(1, threads);
    if (threads == 1) {
        work(0, 1);
    } else {
        std::vector<std::thread> pool;
        for (int k = 0; k < threads; ++k) pool.emplace_back(work, k, threads);
        for (auto& th : pool) th.join();
    }
    cert.jacobi_ok = jac;
    cert.checked_triples = checked;

    cert.relations_ok = true;
    for (const auto& rel : electrical_relators(d))
        if (!t.evaluate(rel.lhs).empty()) {
            cert.relations_ok = false;
            break;
        }

    // the basis words, evaluated through the table, must span it
    SpanBasis span;
    for (int a = 0; a < n; ++a) span.push(t.evaluate(t.words[a]));
    cert.generated_ok = span.rank() == static_cast<std::size_t>(n);
    return cert;
}

StructureTable build_table(const DynkinDiagram& d, std::optional<std::size_t> max_iterations) {
    if (d.family == Family::D) return table_from_presentation(d, max_iterations);
    return table_from_representation(d, faithful_representation(d));
}

}  // namespace ela
