#include "curvecx/curves.hpp"
#include "doctest.h"

using namespace ccx;

namespace {

using Pieces = std::vector<std::pair<int, int>>;

Pieces cut(const RibbonSurface& s, const std::string& w) {
    return cut_along(s, canon_curve(s, parse_word(w, s.rank)));
}

}  // namespace

TEST_CASE("cutting the one-holed torus") {
    RibbonSurface t = build_surface(1, 1);
    CHECK(cut(t, "a") == Pieces{{0, 3}});
    CHECK(cut(t, "b") == Pieces{{0, 3}});
    CHECK(cut(t, "ab") == Pieces{{0, 3}});
    CHECK(cut(t, "aab") == Pieces{{0, 3}});
    // the boundary-parallel curve splits off an annulus
    CHECK(cut(t, "abAB") == Pieces{{1, 1}, {0, 2}});
    CHECK_THROWS_AS(cut(t, "abaB"), Error);
}

TEST_CASE("cutting the two-holed torus") {
    RibbonSurface s = build_surface(1, 2);
    CHECK(cut(s, "a") == Pieces{{0, 4}});
    CHECK(cut(s, "abAB") == Pieces{{1, 1}, {0, 3}});
}

TEST_CASE("cutting planar surfaces") {
    RibbonSurface s4 = build_surface(0, 4);
    CHECK(cut(s4, "ab") == Pieces{{0, 3}, {0, 3}});
    RibbonSurface s5 = build_surface(0, 5);
    CHECK(cut(s5, "ab") == Pieces{{0, 3}, {0, 4}});
    CHECK(cut(s5, "abc") == Pieces{{0, 3}, {0, 4}});
    RibbonSurface s6 = build_surface(0, 6);
    CHECK(cut(s6, "abc") == Pieces{{0, 4}, {0, 4}});
}

TEST_CASE("classification of curves") {
    RibbonSurface t2 = build_surface(1, 2);
    CHECK(classify_curve(t2, canon_curve(t2, parse_word("a", 3))) == CurveType::nonseparating);
    CHECK(classify_curve(t2, canon_curve(t2, parse_word("abAB", 3))) ==
          CurveType::boundary_class);
    RibbonSurface s5 = build_surface(0, 5);
    for (const char* w : {"ab", "bc", "abc"}) {
        auto c = canon_curve(s5, parse_word(w, 4));
        CHECK(classify_curve(s5, c) != CurveType::nonseparating);
    }
    RibbonSurface s6 = build_surface(0, 6);
    auto c = canon_curve(s6, parse_word("abc", 5));
    CHECK(classify_curve(s6, c) == CurveType::separating);  // a (0,4)+(0,4) split
}

TEST_CASE("cut bookkeeping invariants") {
    RibbonSurface s = build_surface(1, 2);
    for (const char* w : {"a", "b", "ab", "ac", "abAB", "abc", "aabAB"}) {
        CurveClass c = canon_curve(s, parse_word(w, s.rank));
        if (!is_essential(s, c)) continue;
        auto pieces = cut_along(s, c);
        int chi = 0, circles = 0;
        for (auto [g, n] : pieces) {
            chi += 2 - 2 * g - n;
            circles += n;
        }
        CHECK(chi == 2 - 2 * s.genus - s.boundary);
        CHECK(circles == s.boundary + 2);
    }
}
