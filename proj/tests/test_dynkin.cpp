#include <doctest.h>

#include <algorithm>
#include <set>

#include "ela/dynkin.hpp"
#include "ela/errors.hpp"

using namespace ela;

TEST_SUITE("dynkin") {

TEST_CASE("Cartan matrices") {
    CHECK(cartan_matrix(make_diagram(Family::A, 2)) == CartanMatrix{{2, -1}, {-1, 2}});
    const auto b = cartan_matrix(make_diagram(Family::B, 2));
    CHECK(b[1][0] == -2);
    CHECK(b[0][1] == -1);
    const auto c = cartan_matrix(make_diagram(Family::C, 2));
    CHECK(c[0][1] == -2);
    CHECK(c[1][0] == -1);
    const auto d = make_diagram(Family::D, 4);
    const auto m = cartan_matrix(d);
    CHECK(m[0][1] == 0);
    CHECK(m[0][2] == -1);
    CHECK(m[1][2] == -1);
}

TEST_CASE("Cartan matrices are symmetrizable") {
    for (Family f : {Family::A, Family::B, Family::C, Family::D})
        for (int r = (f == Family::D ? 4 : 2); r <= 7; ++r) {
            const auto a = cartan_matrix(make_diagram(f, r));
            for (int i = 0; i < r; ++i)
                for (int j = 0; j < r; ++j) CHECK((a[i][j] == 0) == (a[j][i] == 0));
            for (int i = 0; i < r; ++i)
                for (int j = 0; j < r; ++j)
                    for (int k = 0; k < r; ++k)
                        CHECK(a[i][j] * a[j][k] * a[k][i] == a[i][k] * a[k][j] * a[j][i]);
        }
}

TEST_CASE("positive root counts") {
    CHECK(positive_roots(make_diagram(Family::A, 3)).size() == 6);
    CHECK(positive_roots(make_diagram(Family::C, 4)).size() == 16);
    CHECK(positive_roots(make_diagram(Family::D, 5)).size() == 20);
    for (Family f : {Family::A, Family::B, Family::C, Family::D})
        for (int r = (f == Family::D ? 3 : f == Family::A ? 1 : 2); r <= 8; ++r) {
            const auto d = make_diagram(f, r);
            CHECK(positive_roots(d).size() == positive_root_count(d));
        }
}

TEST_CASE("decompositions have positive inner tails") {
    for (Family f : {Family::A, Family::B, Family::C, Family::D})
        for (int r = (f == Family::D ? 4 : 2); r <= 6; ++r) {
            const auto d = make_diagram(f, r);
            const auto roots = positive_roots(d);
            const std::set<Root> all(roots.begin(), roots.end());
            for (const auto& a : roots) {
                const auto w = root_decomposition(a, d);
                CHECK(static_cast<int>(w.size()) == height(a));
                Root acc(r, 0);
                for (auto it = w.rbegin(); it != w.rend(); ++it) {
                    acc[*it] += 1;
                    CHECK(all.count(acc) == 1);
                }
                CHECK(acc == a);
            }
        }
}

TEST_CASE("decomposition is the lexicographically smallest valid one") {
    const auto d = make_diagram(Family::C, 3);
    for (const auto& a : positive_roots(d)) {
        std::vector<int> letters;
        for (int i = 0; i < 3; ++i) letters.insert(letters.end(), a[i], i);
        std::vector<int> best;
        do {
            Root acc(3, 0);
            bool ok = true;
            for (auto it = letters.rbegin(); it != letters.rend() && ok; ++it) {
                acc[*it] += 1;
                ok = is_positive_root(acc, d);
            }
            if (ok) {
                best = letters;
                break;
            }
        } while (std::next_permutation(letters.begin(), letters.end()));
        CHECK(root_decomposition(a, d) == best);
    }
}

TEST_CASE("simple roots and labels") {
    const auto a2 = make_diagram(Family::A, 2);
    CHECK(root_decomposition(simple_root(a2, 0), a2) == std::vector<int>{0});
    CHECK(root_decomposition(Root{1, 1}, a2) == std::vector<int>{0, 1});
    const auto d = make_diagram(Family::D, 5);
    CHECK(node_label(d, 0) == "1b");
    CHECK(node_label(d, 1) == "1");
    CHECK(node_index(d, "3") == 3);
    CHECK(d.name() == "D5");
    CHECK_THROWS_AS(parse_family("E"), UnsupportedType);
    CHECK_THROWS_AS(make_diagram(Family::D, 2), UnsupportedType);
    CHECK_THROWS_AS(make_diagram(Family::B, 1), UnsupportedType);
    CHECK_THROWS_AS(node_index(d, "9"), MissingGenerator);
}

TEST_CASE("bipartition is a proper colouring") {
    for (Family f : {Family::A, Family::B, Family::C, Family::D}) {
        const auto d = make_diagram(f, 5);
        const auto a = cartan_matrix(d);
        const auto col = bipartition(d);
        CHECK(col[0] == 1);
        for (int i = 0; i < 5; ++i)
            for (int j = 0; j < 5; ++j)
                if (i != j && a[i][j]) CHECK(col[i] != col[j]);
    }
}

}
