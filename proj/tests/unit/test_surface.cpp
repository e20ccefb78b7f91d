#include <algorithm>

#include "curvecx/surface.hpp"
#include "doctest.h"

using namespace ccx;

TEST_CASE("one-holed torus model") {
    RibbonSurface s = build_surface(1, 1);
    CHECK(s.rank == 2);
    CHECK(s.genus == 1);
    CHECK(s.boundary == 1);
    REQUIRE(s.walks.size() == 1);
    CHECK(word_to_string(s.walk_classes[0]) == "abAB");
}

TEST_CASE("four-holed sphere model") {
    RibbonSurface s = build_surface(0, 4);
    CHECK(s.rank == 3);
    REQUIRE(s.walks.size() == 4);
    // three petals plus the inverse of their product
    std::vector<std::string> walks;
    for (const auto& w : s.walk_classes) walks.push_back(word_to_string(w));
    std::sort(walks.begin(), walks.end());
    CHECK(std::find(walks.begin(), walks.end(), "a") != walks.end());
    CHECK(std::find(walks.begin(), walks.end(), "b") != walks.end());
    CHECK(std::find(walks.begin(), walks.end(), "c") != walks.end());
    CHECK(walks.size() == 4);
    RibbonSurface s5 = build_surface(0, 5);
    CHECK(s5.walks.size() == 5);
}

TEST_CASE("two-holed torus and three-holed sphere models") {
    RibbonSurface s = build_surface(1, 2);
    CHECK(s.rank == 3);
    CHECK(s.walks.size() == 2);
    RibbonSurface p = build_surface(0, 3);
    CHECK(p.rank == 2);
    CHECK(p.walks.size() == 3);
}

TEST_CASE("unsupported surfaces are rejected") {
    CHECK_THROWS_AS(build_surface(2, 1), Error);
    CHECK_THROWS_AS(build_surface(0, 2), Error);
    CHECK_THROWS_AS(build_surface(1, 0), Error);
    CHECK_THROWS_AS(build_surface(9, 9), Error);
}

TEST_CASE("face tracing rejects inconsistent expectations") {
    std::vector<Letter> order = {make_letter(0, false), make_letter(1, false),
                                 make_letter(0, true), make_letter(1, true)};
    CHECK_THROWS_AS(make_ribbon_surface(2, order, 0, 3), Error);
    RibbonSurface torus = make_ribbon_surface(2, order, 1, 1);
    CHECK(torus.genus == 1);
}

TEST_CASE("surface serialization") {
    RibbonSurface s = build_surface(1, 1);
    CHECK(surface_to_json(s) == "{\"g\":1,\"n\":1,\"cyclic_order\":[\"a\",\"b\",\"A\",\"B\"]}");
}

TEST_CASE("dart orientation in the ribbon order") {
    RibbonSurface s = build_surface(1, 1);
    Letter a = make_letter(0, false), b = make_letter(1, false);
    Letter A = make_letter(0, true), B = make_letter(1, true);
    CHECK(s.orient_darts(a, b, A) == 1);
    CHECK(s.orient_darts(a, B, A) == -1);
    CHECK(s.orient_darts(b, A, B) == 1);
}
