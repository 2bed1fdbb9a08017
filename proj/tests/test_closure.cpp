#include <doctest.h>

#include <cstdlib>

#include "ela/closure.hpp"
#include "ela/errors.hpp"

using namespace ela;

TEST_SUITE("closure") {

TEST_CASE("A2 from its matrices") {
    const auto d = make_diagram(Family::A, 2);
    const auto t = table_from_representation(d, faithful_representation(d));
    CHECK(t.size() == 3);
    const auto x = t.evaluate(parse_element(d, "[e1[e1e2]]"));
    CHECK(x == sv::unit(t.generator(0), -2));
    const auto c = certify_table(t, d);
    CHECK(c.ok());
    CHECK(c.dimension == 3);
}

TEST_CASE("small tables") {
    const auto a1 = make_diagram(Family::A, 1);
    const auto t1 = build_table(a1);
    CHECK(t1.size() == 1);
    CHECK(t1.at(0, 0).empty());
    CHECK(build_table(make_diagram(Family::B, 2)).size() == 4);
    CHECK(build_table(make_diagram(Family::D, 4)).size() == 12);
    CHECK(build_table(make_diagram(Family::A, 4)).size() == 10);
}

TEST_CASE("C4 table certifies and is generated") {
    const auto d = make_diagram(Family::C, 4);
    const auto t = build_table(d);
    const auto c = certify_table(t, d, 2);
    CHECK(c.ok());
    CHECK(c.dimension == 16);
    CHECK(c.checked_triples == c.total_triples);
}

TEST_CASE("matrix and presentation routes agree") {
    for (Family f : {Family::A, Family::B, Family::C})
        for (int r = 2; r <= 6; ++r) {
            const auto d = make_diagram(f, r);
            const auto a = table_from_representation(d, faithful_representation(d));
            const auto b = table_from_presentation(d);
            CHECK_MESSAGE(a.same_constants(b), d.name());
            CHECK(a.provenance == Provenance::RepDerived);
            CHECK(b.provenance == Provenance::ClosureDerived);
        }
}

TEST_CASE("presentation route certifies D") {
    for (int r = 3; r <= 6; ++r) {
        const auto d = make_diagram(Family::D, r);
        const auto c = certify_table(table_from_presentation(d), d);
        CHECK(c.ok());
        CHECK(c.dimension == r * r - r);
    }
}

TEST_CASE("a perturbed constant is caught") {
    for (const auto& d : {make_diagram(Family::A, 4), make_diagram(Family::C, 4), make_diagram(Family::D, 5)}) {
        const auto t = build_table(d);
        for (int a = 0; a < t.size(); a += 3)
            for (int b = a + 1; b < t.size(); b += 4) {
                auto m = t;
                const int g = (a * 7 + b) % t.size();
                sv::axpy(m.constants[a][b], 1, sv::unit(g));
                sv::axpy(m.constants[b][a], -1, sv::unit(g));
                const auto c = certify_table(m, d);
                CHECK((!c.jacobi_ok || !c.relations_ok));
            }
    }
}

TEST_CASE("rescaling a basis word keeps the certificate") {
    const auto d = make_diagram(Family::C, 4);
    const auto t = build_table(d);
    const int k = t.size() - 1;  // a non-generator word
    const Q s(3, 2);
    // new basis b'_k = s b_k
    auto m = t;
    for (int a = 0; a < t.size(); ++a)
        for (int b = 0; b < t.size(); ++b) {
            Q f = 1;
            if (a == k) f *= s;
            if (b == k) f *= s;
            SparseVec v;
            for (const auto& [g, c] : t.at(a, b)) v.emplace_back(g, g == k ? Q(c * f / s) : Q(c * f));
            m.constants[a][b] = v;
        }
    const auto c0 = certify_table(t, d), c1 = certify_table(m, d);
    CHECK(c1.antisymmetry_ok == c0.antisymmetry_ok);
    CHECK(c1.jacobi_ok == c0.jacobi_ok);
    CHECK(c1.relations_ok == c0.relations_ok);
    CHECK(c1.generated_ok == c0.generated_ok);
    CHECK(c1.ok());
    CHECK(c1.dimension == c0.dimension);
}

TEST_CASE("building twice gives the same table") {
    const auto d = make_diagram(Family::D, 5);
    CHECK(table_from_presentation(d).same_constants(table_from_presentation(d)));
}

TEST_CASE("iteration cap") {
    const auto d = make_diagram(Family::D, 5);
    CHECK(default_iteration_cap(d) == 4000);
    CHECK_THROWS_AS(table_from_presentation(d, std::size_t{5}), ClosureDiverged);
    ClosureStats st;
    table_from_presentation(d, std::nullopt, &st);
    CHECK(st.equations <= 4000);
    CHECK(st.unknowns > 0);
}

}
