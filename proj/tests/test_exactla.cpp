#include <doctest.h>

#include <random>

#include "ela/errors.hpp"
#include "ela/exactla.hpp"
#include "ela/reps.hpp"

using namespace ela;

namespace {

Q frac(int a, int b) {
    Q q(a, b);
    q.canonicalize();
    return q;
}

RationalMatrix random_matrix(std::mt19937& g, std::size_t r, std::size_t c) {
    std::uniform_int_distribution<int> num(-3, 3), den(1, 4), zero(0, 2);
    RationalMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j)
            if (zero(g)) m(i, j) = frac(num(g), den(g));
    return m;
}

}  // namespace

TEST_SUITE("exactla") {

TEST_CASE("rationals print in lowest terms") {
    CHECK(to_string(frac(6, 4)) == "3/2");
    CHECK(to_string(frac(-4, 2)) == "-2");
    CHECK(parse_rational("-10/4") == Q(-5, 2));
    CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
    CHECK_THROWS_AS(parse_rational("x"), ParseError);
}

TEST_CASE("rank of small matrices") {
    CHECK(rank(RationalMatrix::identity(3)) == 3);
    CHECK(rank(RationalMatrix(3, 3)) == 0);
    const auto rho = rep_A_even(0);
    std::vector<SparseVec> rows;
    for (const auto& m : rho.images) rows.push_back(m.flatten());
    RationalMatrix f(rows.size(), 4);
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (const auto& [k, v] : rows[i]) f(i, k) = v;
    CHECK(rank(f) == 2);
}

TEST_CASE("rank is transpose invariant") {
    std::mt19937 g(7);
    for (int t = 0; t < 40; ++t) {
        const auto m = random_matrix(g, 1 + t % 5, 1 + (t * 3) % 6);
        CHECK(rank(m) == rank(m.transpose()));
        SpanBasis b;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            std::vector<Q> row(m.cols());
            for (std::size_t j = 0; j < m.cols(); ++j) row[j] = m(i, j);
            b.push(sv::from_dense(row));
        }
        CHECK(b.rank() == rank(m));
    }
}

TEST_CASE("solve_in_span") {
    const std::vector<std::vector<Q>> span = {{1, 0}};
    auto s = solve_in_span(span, {2, 0});
    REQUIRE(s);
    CHECK((*s)[0] == 2);
    CHECK_FALSE(solve_in_span(span, {0, 1}));

    std::mt19937 g(11);
    for (int t = 0; t < 20; ++t) {
        const auto m = random_matrix(g, 3, 5);
        std::vector<std::vector<Q>> vs(3, std::vector<Q>(5));
        std::vector<Q> target(5);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 5; ++j) {
                vs[i][j] = m(i, j);
                target[j] += frac(i + 1, 2) * m(i, j);
            }
        auto c = solve_in_span(vs, target);
        REQUIRE(c);
        std::vector<Q> back(5);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 5; ++j) back[j] += (*c)[i] * vs[i][j];
        CHECK(back == target);
    }
}

TEST_CASE("A2 relator through solve_in_span gives -2 on e1") {
    const auto rho = rep_A(2);
    const auto lhs = commutator(rho.images[0], commutator(rho.images[0], rho.images[1]));
    std::vector<std::vector<Q>> span;
    for (const auto& m : {rho.images[0], rho.images[1], commutator(rho.images[0], rho.images[1])})
        span.push_back(sv::to_dense(m.flatten(), 16));
    auto c = solve_in_span(span, sv::to_dense(lhs.flatten(), 16));
    REQUIRE(c);
    CHECK((*c)[0] == -2);
    CHECK((*c)[1] == 0);
}

TEST_CASE("nullspace") {
    CHECK(nullspace(RationalMatrix::identity(3)).empty());
    CHECK(nullspace(RationalMatrix(2, 2)).size() == 2);
    std::mt19937 g(3);
    for (int t = 0; t < 20; ++t) {
        const auto m = random_matrix(g, 3, 6);
        const auto ns = nullspace(m);
        CHECK(ns.size() + rank(m) == 6);
        for (const auto& v : ns)
            for (std::size_t i = 0; i < m.rows(); ++i) {
                Q s = 0;
                for (std::size_t j = 0; j < m.cols(); ++j) s += m(i, j) * v[j];
                CHECK(s == 0);
            }
    }
}

TEST_CASE("sparse matrices") {
    SparseMatrix a(2, 2), b(2, 2);
    a.add(0, 1, 1);
    b.add(1, 0, 1);
    const auto h = commutator(a, b);
    CHECK(h.at(0, 0) == 1);
    CHECK(h.at(1, 1) == -1);
    CHECK(h.nnz() == 2);
    CHECK((a.transpose() == b));
    const auto d = SparseMatrix::block_diag(a, b);
    CHECK(d.rows() == 4);
    CHECK(d.at(0, 1) == 1);
    CHECK(d.at(3, 2) == 1);
    CHECK(SparseMatrix::from_dense(d.to_dense()) == d);
    a.add(0, 1, -1);
    CHECK(a.is_zero());
}

TEST_CASE("span basis coordinates recombine") {
    SpanBasis b;
    CHECK(b.push(sv::from_dense({1, 1, 0})));
    CHECK(b.push(sv::from_dense({0, 1, 1})));
    CHECK_FALSE(b.push(sv::from_dense({1, 2, 1})));
    const auto t = sv::from_dense({2, 3, 1});
    auto c = b.coordinates(t);
    REQUIRE(c);
    const std::vector<SparseVec> in = {sv::from_dense({1, 1, 0}), sv::from_dense({0, 1, 1}), sv::from_dense({1, 2, 1})};
    SparseVec back;
    for (const auto& [i, v] : *c) sv::axpy(back, v, in[i]);
    CHECK(back == t);
    CHECK_FALSE(b.contains(sv::unit(0)));
}

}
