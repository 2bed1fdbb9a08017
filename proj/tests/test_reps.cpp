#include <doctest.h>

#include "ela/closure.hpp"
#include "ela/errors.hpp"
#include "ela/reps.hpp"
#include "ela/verify.hpp"

using namespace ela;

TEST_SUITE("reps") {

TEST_CASE("rep_A_even at n = 0") {
    const auto r = rep_A_even(0);
    REQUIRE(r.images.size() == 2);
    CHECK(r.images[0].at(0, 1) == 1);
    CHECK(r.images[0].nnz() == 1);
    CHECK(r.images[1].at(1, 0) == 1);
    CHECK(r.images[1].nnz() == 1);
}

TEST_CASE("rep_A_even lies in sp and satisfies the relators") {
    for (int n = 0; n <= 4; ++n) {
        const auto r = rep_A_even(n);
        for (const auto& m : r.images) CHECK(is_symplectic(m, SymplecticForm{n}));
        CHECK(satisfies_relators(r));
    }
}

TEST_CASE("evaluation") {
    const auto r = rep_A(2);
    const auto d = r.diagram;
    CHECK(evaluate(LieElement::generator(d, 0), r) == r.images[0]);
    CHECK(evaluate(parse_element(d, "[e1e1]"), r).is_zero());
    CHECK(evaluate(parse_element(d, "[e1[e1e2]] + 2*e1"), r).is_zero());
}

TEST_CASE("odd symplectic membership") {
    CHECK(odd_symplectic_membership(SparseMatrix(4, 4), 1));
    const auto a3 = rep_A(3);
    for (const auto& m : a3.images) CHECK(odd_symplectic_membership(m, 1));
    const auto a4 = rep_A_even(1);
    CHECK_FALSE(odd_symplectic_membership(a4.images[3], 1));
    CHECK_THROWS_AS(odd_symplectic_membership(SparseMatrix(3, 3), 1), SizeMismatch);
}

TEST_CASE("type B map") {
    const auto h = hom_B_to_AplusA(3);
    CHECK(h.assignment.at(0)[0] == LieElement::generator(h.targets[0], 0));
    CHECK(h.assignment.at(0)[1].is_zero());
    for (int n = 2; n <= 6; ++n) CHECK(satisfies_relators(rep_B(n)));
    const auto b = make_diagram(Family::B, 3);
    const auto t1 = table_from_representation(h.targets[0], rep_A(3));
    const auto t2 = table_from_representation(h.targets[1], rep_A(2));
    const auto im = apply(h, parse_element(b, "-1/2*[e2[e2e1]]"));
    CHECK(t1.evaluate(im[0]) == sv::unit(t1.generator(1)));
    CHECK(t2.evaluate(im[1]).empty());
    const auto im2 = apply(h, parse_element(b, "e2 + 1/2*[e2[e2e1]]"));
    CHECK(t1.evaluate(im2[0]).empty());
    CHECK(t2.evaluate(im2[1]) == sv::unit(t2.generator(0)));
}

TEST_CASE("type C matrices") {
    const auto gl = rep_C_gl(2);
    CHECK(gl.dim == 16);
    CHECK(satisfies_relators(gl));
    const auto d = gl.diagram;
    const auto m = evaluate(parse_element(d, "[e1[e1[e2e3]]]"), gl);
    CHECK(m.at(13, 9) == 1);
    CHECK(satisfies_relators(rep_C_gl(3)));

    const auto sc = rep_C_scalar(2);
    CHECK(satisfies_relators(sc));
    CHECK(evaluate(LieElement::generator(d, 1), sc).is_zero());
    CHECK(evaluate(parse_element(d, "[e1e2]"), sc).is_zero());
    // only e1 survives in the scalar model
    const auto skel = empty_table(d, Provenance::RepDerived);
    for (const auto& w : skel.words)
        if (!w.is_leaf() || w.node() != 0) CHECK(evaluate(w, sc).is_zero());

    const auto full = rep_C(4);
    std::vector<SparseVec> rows;
    SpanBasis b;
    for (const auto& w : skel.words) b.push(evaluate(w, full).flatten());
    CHECK(b.rank() == 16);

    // the gl part alone misses the center
    SpanBasis g;
    for (const auto& w : skel.words) g.push(evaluate(w, gl).flatten());
    CHECK(g.rank() == 15);
    CHECK(evaluate(center_element_C(2).element, gl).is_zero());
}

TEST_CASE("C into D") {
    const auto h = hom_C_into_D(2);
    CHECK(h.assignment.at(1)[0] == LieElement::generator(h.targets[0], 2));
    CHECK(h.assignment.at(0)[0] == parse_element(h.targets[0], "1/2*e1 + 1/2*e1b"));
    CHECK_THROWS_AS(faithful_representation(make_diagram(Family::D, 4)), UnsupportedType);
}

TEST_CASE("restriction needs enough nodes") {
    CHECK_THROWS_AS(restrict_to(rep_A(2), make_diagram(Family::A, 3)), MissingGenerator);
}

}
