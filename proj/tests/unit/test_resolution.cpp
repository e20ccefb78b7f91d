#include <algorithm>

#include "curvecx/resolution.hpp"
#include "doctest.h"

using namespace ccx;

namespace {

CurveClass cc(const RibbonSurface& s, const std::string& w) {
    return canon_curve(s, parse_word(w, s.rank));
}

}  // namespace

TEST_CASE("resolution on the one-holed torus matches the slope product") {
    RibbonSurface t = build_surface(1, 1);
    auto a = cc(t, "a"), b = cc(t, "b");
    CurveClass ab = resolve_curves(t, a, b);
    CurveClass ba = resolve_curves(t, b, a);
    CHECK(ab.str() == "ab");   // slope 1/1 for the chart a -> inf, b -> 0
    CHECK(ba.str() == "aB");   // slope -1/1
    CHECK(ab != ba);
    CHECK_FALSE(intersection_profile(t, ab, ba).top());
    CHECK(intersection_profile(t, ab, a).kind == Rel::perp);
    CHECK(intersection_profile(t, ab, b).kind == Rel::perp);

    CHECK_THROWS_AS(resolve_curves(t, a, cc(t, "abAB")), Error);
}

TEST_CASE("resolution on the four-holed sphere is the unique perp0 companion") {
    RibbonSurface s = build_surface(0, 4);
    auto u = cc(s, "ab"), v = cc(s, "bc");
    CurveClass uv = resolve_curves(s, u, v);
    CurveClass vu = resolve_curves(s, v, u);
    CHECK(uv != vu);
    CHECK(intersection_profile(s, uv, u).kind == Rel::perp0);
    CHECK(intersection_profile(s, uv, v).kind == Rel::perp0);
    CHECK(intersection_profile(s, vu, u).kind == Rel::perp0);
    CHECK(intersection_profile(s, vu, v).kind == Rel::perp0);
    CHECK_FALSE(intersection_profile(s, uv, vu).top());

    // bounded-exhaustive: the two products are exactly the classes of the
    // ball that are perp0 companions of both factors and not top-related
    // to each other
    auto ball = enumerate_curves(s, u.length() + v.length());
    std::vector<CurveClass> companions;
    for (const auto& w : ball) {
        if (w == u || w == v) continue;
        if (intersection_profile(s, w, u).kind != Rel::perp0) continue;
        if (intersection_profile(s, w, v).kind != Rel::perp0) continue;
        companions.push_back(w);
    }
    std::vector<CurveClass> expected = {uv, vu};
    std::sort(expected.begin(), expected.end());
    std::vector<CurveClass> nontop;
    for (const auto& w : companions) {
        bool other_found = false;
        for (const auto& x : companions)
            if (!(w == x) && !intersection_profile(s, w, x).top()) other_found = true;
        if (other_found) nontop.push_back(w);
    }
    CHECK(nontop == expected);
}

TEST_CASE("pairs of opposite products never top-relate across surfaces") {
    RibbonSurface t = build_surface(1, 1);
    auto curves = enumerate_curves(t, 3);
    for (const auto& x : curves)
        for (const auto& y : curves) {
            if (!(x < y)) continue;
            if (!intersection_profile(t, x, y).top()) continue;
            auto xy = resolve_curves(t, x, y), yx = resolve_curves(t, y, x);
            CHECK(xy != yx);
            CHECK_FALSE(intersection_profile(t, xy, yx).top());
        }
}

TEST_CASE("reduce_step lowers intersection with the pivot") {
    RibbonSurface t = build_surface(1, 1);
    FNSystem fn = make_fn_system(t, {cc(t, "a")});  // pivot slope inf

    auto half = cc(t, "abb");  // slope 1/2
    auto [b1, b2] = reduce_step(t, fn, half);
    CHECK(b1 == cc(t, "ab"));
    CHECK(b2 == cc(t, "b"));
    CHECK(resolve_curves(t, b1, b2) == half);

    FNSystem fn0 = make_fn_system(t, {cc(t, "b")});  // pivot slope 0
    auto two = cc(t, "aab");  // slope 2/1
    auto [c1, c2] = reduce_step(t, fn0, two);
    CHECK(resolve_curves(t, c1, c2) == two);
    int before = intersection_profile(t, two, fn0.classes[0]).geo;
    CHECK(intersection_profile(t, c1, fn0.classes[0]).geo < before);
    CHECK(intersection_profile(t, c2, fn0.classes[0]).geo < before);
    CHECK(intersection_profile(t, resolve_curves(t, c2, c1), fn0.classes[0]).geo < before);

    CHECK_THROWS_AS(reduce_step(t, fn, cc(t, "b")), Error);  // intersection too small
}

TEST_CASE("express writes a class as a product tree over the generator set") {
    RibbonSurface t = build_surface(1, 1);
    FNSystem fn = make_fn_system(t, {cc(t, "a")});

    GenExpr leaf = express(t, fn, cc(t, "ab"));
    CHECK(leaf.leaf());

    GenExpr e = express(t, fn, cc(t, "abb"));
    CHECK_FALSE(e.leaf());
    CHECK(evaluate(t, e) == cc(t, "abb"));
    CHECK(genexpr_to_json(e) == "[\"mul\",[\"leaf\",\"ab\"],[\"leaf\",\"b\"]]");

    GenExpr deep = express(t, fn, cc(t, "abbb"));  // slope 1/3
    CHECK(evaluate(t, deep) == cc(t, "abbb"));
    // every leaf lies in the generator set
    auto check_leaves = [&](auto&& self, const GenExpr& n) -> void {
        if (n.leaf()) {
            CHECK(in_generator_set(t, fn, n.value));
            return;
        }
        self(self, *n.left);
        self(self, *n.right);
    };
    check_leaves(check_leaves, deep);

    // a class equal to a system member unfolds into generator leaves
    GenExpr member = express(t, fn, cc(t, "a"));
    CHECK_FALSE(member.leaf());
    CHECK(evaluate(t, member) == cc(t, "a"));
}
