#include <doctest.h>

#include <random>

#include "ela/errors.hpp"
#include "ela/freelie.hpp"

using namespace ela;

namespace {

const DynkinDiagram A3 = make_diagram(Family::A, 3);

LieElement e(const DynkinDiagram& d, int k, const Q& c = 1) { return LieElement::generator(d, k, c); }

LieElement random_element(std::mt19937& g, const DynkinDiagram& d, int depth) {
    std::uniform_int_distribution<int> node(0, d.rank - 1), coef(-2, 2), split(0, 2);
    if (depth == 0 || split(g) == 0) return e(d, node(g), coef(g) ? coef(g) : 1);
    LieElement x = bracket(random_element(g, d, depth - 1), random_element(g, d, depth - 1));
    if (split(g) == 1) x += random_element(g, d, depth - 1);
    return x;
}

}  // namespace

TEST_SUITE("freelie") {

TEST_CASE("brackets are alternating and bilinear") {
    CHECK(bracket(e(A3, 0), e(A3, 0)).is_zero());
    CHECK((bracket(e(A3, 0), e(A3, 1)) + bracket(e(A3, 1), e(A3, 0))).is_zero());
    CHECK(bracket(e(A3, 0, 2), e(A3, 1, 3)) == Q(6) * bracket(e(A3, 0), e(A3, 1)));
}

TEST_CASE("formal Jacobi identity on random trees") {
    std::mt19937 g(2024);
    for (int t = 0; t < 60; ++t) {
        const auto x = random_element(g, A3, 2), y = random_element(g, A3, 2), z = random_element(g, A3, 2);
        const auto j = bracket(x, bracket(y, z)) + bracket(y, bracket(z, x)) + bracket(z, bracket(x, y));
        CHECK(expand_associative(j).empty());
        CHECK(expand_associative(bracket(x, y) + bracket(y, x)).empty());
    }
}

TEST_CASE("normalization is idempotent") {
    std::mt19937 g(5);
    for (int t = 0; t < 40; ++t) {
        const auto x = random_element(g, A3, 3);
        for (const auto& [tree, c] : x.terms()) {
            auto n = normalize(tree);
            REQUIRE(n);
            CHECK(n->first == 1);
            CHECK(n->second == tree);
        }
    }
}

TEST_CASE("electrical relators") {
    const auto a2 = make_diagram(Family::A, 2);
    const auto r = electrical_relators(a2);
    REQUIRE(r.size() == 2);
    CHECK(format_element(r[0].lhs) == format_element(parse_element(a2, "[e1[e1e2]] + 2*e1")));
    CHECK(r[1].lhs == parse_element(a2, "[e2[e2e1]] + 2e2"));
    for (int n = 1; n <= 7; ++n)
        CHECK(electrical_relators(make_diagram(Family::A, n)).size() == static_cast<std::size_t>(n * (n - 1)));

    const auto c2 = make_diagram(Family::C, 2);
    bool cubic = false;
    for (const auto& x : electrical_relators(c2)) cubic = cubic || x.lhs == parse_element(c2, "[e1[e1[e1e2]]]");
    CHECK(cubic);

    const auto b2 = make_diagram(Family::B, 2);
    bool b_cubic = false;
    for (const auto& x : electrical_relators(b2)) b_cubic = b_cubic || x.lhs == parse_element(b2, "[e2[e2[e2e1]]]");
    CHECK(b_cubic);

    const auto d4 = make_diagram(Family::D, 4);
    bool commute = false, fork = false;
    for (const auto& x : electrical_relators(d4)) {
        commute = commute || x.lhs == parse_element(d4, "[e1be1]");
        fork = fork || x.lhs == parse_element(d4, "[e1b[e1be2]] + 2*e1b");
    }
    CHECK(commute);
    CHECK(fork);
}

TEST_CASE("spanning words") {
    const auto a3 = A3;
    CHECK(spanning_word(Root{1, 0, 0}, a3) == BracketTree::leaf(0));
    CHECK(format_tree(a3, spanning_word(Root{1, 1, 1}, a3)) == "[e1[e2e3]]");
    const auto c3 = make_diagram(Family::C, 3);
    CHECK(format_tree(c3, spanning_word(Root{2, 1, 1}, c3)) == "[e1[e1[e2e3]]]");
}

TEST_CASE("substitution") {
    const auto a2 = make_diagram(Family::A, 2);
    const auto x = parse_element(a2, "[e1e2]");
    CHECK(substitute(x, {{0, e(a2, 0)}, {1, e(a2, 1)}}, a2) == x);
    CHECK(substitute(parse_element(a2, "[e1[e1e2]]"), {{0, LieElement(a2)}, {1, e(a2, 1)}}, a2).is_zero());
    const auto d3 = make_diagram(Family::D, 3);
    const auto c2 = make_diagram(Family::C, 2);
    const auto half = parse_element(d3, "1/2*e1 + 1/2*e1b");
    CHECK(substitute(e(c2, 0), {{0, half}, {1, e(d3, 2)}}, d3) == half);
    CHECK_THROWS_AS(substitute(x, {{0, e(a2, 0)}}, a2), MissingAssignment);
}

TEST_CASE("parse and format round trip") {
    const auto d = make_diagram(Family::D, 5);
    for (const std::string s : {"e1b", "[e1b[e1e2]]", "2*[e1e2] - e1", "-1/2*[e2[e1b[e1[e2e3]]]] + e4"}) {
        const auto x = parse_element(d, s);
        CHECK(parse_element(d, format_element(x)) == x);
    }
    CHECK(format_element(parse_element(d, "[e2e1]")) == "-[e1e2]");
    CHECK(parse_element(d, "0").is_zero());
    CHECK_THROWS_AS(parse_element(d, "[e1e2"), ParseError);
    CHECK_THROWS_AS(parse_element(d, "e9"), ParseError);
    CHECK_THROWS_AS(parse_element(d, "3"), ParseError);
    CHECK_THROWS_AS(LieElement::generator(A3, 4), MissingGenerator);
}

}
