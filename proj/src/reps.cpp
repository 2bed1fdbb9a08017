#include "ela/reps.hpp"

#include <functional>

#include "ela/errors.hpp"

namespace ela {

SparseMatrix SymplecticForm::matrix() const {
    const int h = n + 1;
    SparseMatrix m(2 * h, 2 * h);
    for (int i = 0; i < h; ++i) {
        m.add(i, h + i, 1);
        m.add(h + i, i, -1);
    }
    return m;
}

std::vector<LieElement> apply(const Homomorphism& h, const LieElement& x) {
    if (!(x.diagram() == h.source)) throw DiagramMismatch("element not over " + h.source.name());
    std::vector<LieElement> out;
    for (std::size_t s = 0; s < h.targets.size(); ++s) {
        std::map<int, LieElement> a;
        for (const auto& [node, imgs] : h.assignment) a.emplace(node, imgs.at(s));
        out.push_back(substitute(x, a, h.targets[s]));
    }
    return out;
}

SparseMatrix evaluate(const BracketTree& t, const Representation& rho) {
    if (t.is_leaf()) {
        if (t.node() < 0 || t.node() >= static_cast<int>(rho.images.size()))
            throw MissingGenerator("no image for node " + std::to_string(t.node()));
        return rho.images[t.node()];
    }
    return commutator(evaluate(t.left(), rho), evaluate(t.right(), rho));
}

SparseMatrix evaluate(const LieElement& x, const Representation& rho) {
    SparseMatrix out(rho.dim, rho.dim);
    for (const auto& [t, c] : x.terms()) out = out + evaluate(t, rho).scaled(c);
    return out;
}

Representation restrict_to(const Representation& rho, const DynkinDiagram& d) {
    if (d.rank > static_cast<int>(rho.images.size())) throw MissingGenerator("restriction needs more nodes");
    Representation r{d, rho.dim, {}};
    r.images.assign(rho.images.begin(), rho.images.begin() + d.rank);
    return r;
}

Representation direct_sum(const Representation& a, const Representation& b, const DynkinDiagram& d) {
    if (a.images.size() != b.images.size()) throw SizeMismatch("summands cover different node sets");
    Representation r{d, a.dim + b.dim, {}};
    for (std::size_t k = 0; k < a.images.size(); ++k)
        r.images.push_back(SparseMatrix::block_diag(a.images[k], b.images[k]));
    return r;
}

Representation rep_A_even(int n) {
    if (n < 0) throw UnsupportedType("rep_A_even needs n >= 0");
    const int h = n + 1;
    Representation r{make_diagram(Family::A, 2 * h), 2 * h, {}};
    for (int i = 1; i <= h; ++i) {
        // a_1 = eps_1, a_i = eps_{i-1} + eps_i
        std::vector<int> a = {i - 1};
        if (i > 1) a = {i - 2, i - 1};
        SparseMatrix up(2 * h, 2 * h);
        for (int p : a)
            for (int q : a) up.add(p, h + q, 1);
        SparseMatrix low(2 * h, 2 * h);
        low.add(h + i - 1, i - 1, 1);
        r.images.push_back(up);
        r.images.push_back(low);
    }
    return r;
}

Representation rep_A(int m) {
    const auto d = make_diagram(Family::A, m);
    return restrict_to(rep_A_even((m + 1) / 2 - 1), d);
}

bool is_symplectic(const SparseMatrix& m, const SymplecticForm& b) {
    if (m.rows() != b.size() || m.cols() != b.size()) throw SizeMismatch("matrix size does not match form");
    const SparseMatrix j = b.matrix();
    return (m.transpose() * j + j * m).is_zero();
}

bool odd_symplectic_membership(const SparseMatrix& m, int n) {
    if (m.rows() != 2 * n + 2 || m.cols() != 2 * n + 2) throw SizeMismatch("expected size 2n+2");
    if (!is_symplectic(m, SymplecticForm{n})) return false;
    for (int r = 0; r < m.rows(); ++r)
        if (m.at(r, n) != 0) return false;
    return m.row(2 * n + 1).empty();
}

Homomorphism hom_B_to_AplusA(int n) {
    const auto b = make_diagram(Family::B, n);
    const auto a1 = make_diagram(Family::A, n);
    const auto a2 = make_diagram(Family::A, n - 1);
    Homomorphism h{b, {a1, a2}, {}};
    h.assignment[0] = {LieElement::generator(a1, 0), LieElement(a2)};
    for (int k = 1; k < n; ++k) h.assignment[k] = {LieElement::generator(a1, k), LieElement::generator(a2, k - 1)};
    return h;
}

Representation rep_B(int n) {
    const auto h = hom_B_to_AplusA(n);
    const Representation ra = rep_A(n), rb = rep_A(n - 1);
    Representation r{h.source, ra.dim + rb.dim, {}};
    for (int k = 0; k < n; ++k) {
        const auto& img = h.assignment.at(k);
        r.images.push_back(SparseMatrix::block_diag(evaluate(img[0], ra), evaluate(img[1], rb)));
    }
    return r;
}

namespace {

struct FBuilder {
    int size;
    SparseMatrix m;
    explicit FBuilder(int s) : size(s), m(s, s) {}
    // 1-based; entries outside the matrix are dropped
    void F(long i, long j, const Q& c = 1) {
        if (i < 1 || j < 1 || i > size || j > size) return;
        m.add(static_cast<int>(i - 1), static_cast<int>(j - 1), c);
    }
};

}  // namespace

Representation rep_C_gl(int n) {
    if (n < 1) throw UnsupportedType("rep_C_gl needs n >= 1");
    const int r = 2 * n;
    const int m = r * r;
    Representation rho{make_diagram(Family::C, r), m, {}};
    {
        FBuilder f(m);
        f.F(3, 2);
        f.F(4, 3);
        f.F(8, 16, -1);
        for (long j = 3; j <= r; ++j) {
            const long b = (j - 1) * (j - 1);
            f.F(b + j, b + j - 1);
            f.F(b + j + 1, b + j);
            f.F(b + j + 1, b + j + 2);
        }
        rho.images.push_back(f.m);
    }
    for (long k = 2; k <= r; ++k) {
        FBuilder f(m);
        const long p = (k - 1) * (k - 1), q = (k - 2) * (k - 2), s = k * k;
        for (long i = 2; i <= 2 * k - 2; ++i) f.F(p + i, q + i - 1, -1);
        f.F(p + 1, p + 2, 2);
        if (k >= 3) f.F(p + 2 * k - 2, p + 2 * k - 1);
        else f.F(3, 4, 2);
        f.F(s + 2, s + 1);
        f.F(s + 2, s + 3);
        f.F(p + 1, s + 2, -2);
        for (long i = 3; i <= 2 * k - 1; ++i) f.F(p + i - 1, s + i, -1);
        f.F(s + 2 * k + 1, s + 2 * k);
        f.F((k + 1) * (k + 1) + 2 * k + 2, (k + 2) * (k + 2) + 2 * k + 5, -1);
        for (long j = k + 2; j <= r; ++j) {
            const long b = (j - 1) * (j - 1);
            f.F(b + j - k + 1, b + j - k);
            f.F(b + j - k + 1, b + j - k + 2);
            f.F(b + j + k, b + j + k - 1);
            f.F(b + j + k, b + j + k + 1);
        }
        rho.images.push_back(f.m);
    }
    return rho;
}

Representation rep_C_scalar(int n) {
    if (n < 1) throw UnsupportedType("rep_C_scalar needs n >= 1");
    Representation rho{make_diagram(Family::C, 2 * n), 1, {}};
    for (int k = 0; k < 2 * n; ++k) {
        SparseMatrix m(1, 1);
        if (k == 0) m.add(0, 0, 1);
        rho.images.push_back(m);
    }
    return rho;
}

Representation rep_C(int rank) {
    const auto d = make_diagram(Family::C, rank);
    const int n = (rank + 1) / 2;
    return restrict_to(direct_sum(rep_C_gl(n), rep_C_scalar(n), make_diagram(Family::C, 2 * n)), d);
}

Homomorphism hom_C_into_D(int n) {
    if (n < 1) throw UnsupportedType("hom_C_into_D needs n >= 1");
    const auto c = make_diagram(Family::C, 2 * n);
    const auto d = make_diagram(Family::D, 2 * n + 1);
    Homomorphism h{c, {d}, {}};
    LieElement f1 = LieElement::generator(d, 1, Q(1, 2));
    f1 += LieElement::generator(d, 0, Q(1, 2));
    h.assignment[0] = {f1};
    for (int k = 1; k < 2 * n; ++k) h.assignment[k] = {LieElement::generator(d, k + 1)};
    return h;
}

Representation faithful_representation(const DynkinDiagram& d) {
    switch (d.family) {
        case Family::A: return rep_A(d.rank);
        case Family::B: return rep_B(d.rank);
        case Family::C: return rep_C(d.rank);
        case Family::D: break;
    }
    throw UnsupportedType("no matrix model for " + d.name());
}

bool satisfies_relators(const Representation& rho) {
    for (const auto& rel : electrical_relators(rho.diagram))
        if (!evaluate(rel.lhs, rho).is_zero()) return false;
    return true;
}

}  // namespace ela
