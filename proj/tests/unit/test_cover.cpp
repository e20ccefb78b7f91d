#include <set>

#include "curvecx/ball.hpp"
#include "curvecx/cover.hpp"
#include "doctest.h"

using namespace ccx;

namespace {

CurveClass cc(const RibbonSurface& s, const std::string& w) {
    return canon_curve(s, parse_word(w, s.rank));
}

}  // namespace

TEST_CASE("the standard cover is a two-holed torus over the five-holed sphere") {
    CoverSpec spec = CoverSpec::standard();
    CHECK(spec.base.genus == 0);
    CHECK(spec.base.boundary == 5);
    CHECK(spec.cover.genus == 1);
    CHECK(spec.cover.boundary == 2);
    CHECK(spec.cover.rank == 3);
}

TEST_CASE("monodromy is the word-length parity") {
    CoverSpec spec = CoverSpec::standard();
    CHECK(monodromy(spec, parse_word("ab", 4)) == 0);
    CHECK(monodromy(spec, parse_word("abc", 4)) == 1);
    CHECK(monodromy(spec, parse_word("aBc", 4)) == 1);
}

TEST_CASE("lifting two-cone and three-cone classes") {
    CoverSpec spec = CoverSpec::standard();
    CurveClass two = lift_double_cover(spec, cc(spec.base, "ab"));
    CHECK(two.str() == "a");
    CHECK(classify_curve(spec.cover, two) == CurveType::nonseparating);

    CurveClass three = lift_double_cover(spec, cc(spec.base, "abc"));
    CHECK(three.str() == "abAB");
    CHECK(classify_curve(spec.cover, three) != CurveType::nonseparating);

    CHECK_THROWS_AS(lift_double_cover(spec, cc(spec.base, "aa")), Error);
}

TEST_CASE("lifting preserves disjointness and is injective on a ball") {
    CoverSpec spec = CoverSpec::standard();
    ComplexBall ball = build_ball(spec.base, 4);
    std::vector<CurveClass> lifts;
    for (int v = 0; v < ball.size(); ++v)
        lifts.push_back(lift_double_cover(spec, ball.vertices[v].curve));

    std::set<CurveClass> distinct(lifts.begin(), lifts.end());
    CHECK(distinct.size() == lifts.size());

    for (int u = 0; u < ball.size(); ++u)
        for (int v = u + 1; v < ball.size(); ++v) {
            bool disj_base = ball.rel(u, v).kind == Rel::disjoint;
            bool disj_cover =
                intersection_profile(spec.cover, lifts[u], lifts[v]).kind == Rel::disjoint;
            CHECK(disj_base == disj_cover);
        }
}

TEST_CASE("the deck involution fixes every lift") {
    CoverSpec spec = CoverSpec::standard();
    ComplexBall ball = build_ball(spec.base, 4);
    for (int v = 0; v < ball.size(); ++v) {
        CurveClass lift = lift_double_cover(spec, ball.vertices[v].curve);
        CHECK(apply_mapping_class(spec.cover, spec.deck, lift) == lift);
    }
}

TEST_CASE("both separating and nonseparating lifts occur") {
    CoverSpec spec = CoverSpec::standard();
    ComplexBall ball = build_ball(spec.base, 4);
    bool sep = false, nonsep = false;
    for (int v = 0; v < ball.size(); ++v) {
        CurveClass lift = lift_double_cover(spec, ball.vertices[v].curve);
        if (classify_curve(spec.cover, lift) == CurveType::nonseparating)
            nonsep = true;
        else
            sep = true;
    }
    CHECK(sep);
    CHECK(nonsep);
}
