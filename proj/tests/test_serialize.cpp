#include <doctest.h>

#include "ela/errors.hpp"
#include "ela/serialize.hpp"

using namespace ela;

TEST_SUITE("serialize") {

TEST_CASE("table round trip") {
    for (const auto& d : {make_diagram(Family::C, 4), make_diagram(Family::D, 4), make_diagram(Family::B, 3)}) {
        const auto t = build_table(d);
        const auto j = to_json(t);
        CHECK(j["schema"] == 1);
        CHECK(j["basis"].size() == static_cast<std::size_t>(t.size()));
        const auto back = table_from_json(Json::parse(dump(j)));
        CHECK(back.same_constants(t));
        CHECK(back.provenance == t.provenance);
    }
}

TEST_CASE("fractions are exact strings") {
    const auto d = make_diagram(Family::A, 2);
    const auto j = to_json(build_table(d));
    CHECK(j["basis"][2] == "[e1e2]");
    bool saw = false;
    for (const auto& e : j["constants"])
        for (const auto& term : e["terms"]) saw = saw || term[1] == "-2";
    CHECK(saw);
}

TEST_CASE("bad documents") {
    auto j = to_json(build_table(make_diagram(Family::A, 3)));
    auto k = j;
    k["basis"][0] = "[e1e2]";
    CHECK_THROWS_AS(table_from_json(k), BasisMismatch);
    k = j;
    k["schema"] = 2;
    CHECK_THROWS_AS(table_from_json(k), ParseError);
    k = j;
    k.erase("constants");
    CHECK_THROWS_AS(table_from_json(k), ParseError);
}

TEST_CASE("representation triplets") {
    const auto j = to_json(rep_A_even(0));
    CHECK(j["dim"] == 2);
    CHECK(j["images"][0]["node"] == "1");
    CHECK(j["images"][0]["triplets"][0] == Json::array({0, 1, "1"}));
}

TEST_CASE("certificates are deterministic") {
    const auto d = make_diagram(Family::C, 4);
    const auto a = dump(to_json(run_suite("ideal", d)));
    const auto b = dump(to_json(run_suite("ideal", d)));
    CHECK(a == b);
    CHECK(a.find("\"c4.ideal.Iprime.ideal\"") != std::string::npos);
}

}
