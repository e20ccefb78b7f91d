#include <algorithm>

#include "curvecx/ball.hpp"
#include "doctest.h"

using namespace ccx;

namespace {

CurveClass cc(const RibbonSurface& s, const std::string& w) {
    return canon_curve(s, parse_word(w, s.rank));
}

}  // namespace

TEST_CASE("small ball on the one-holed torus") {
    ComplexBall ball = build_ball(build_surface(1, 1), 2);
    REQUIRE(ball.size() == 4);  // slopes inf, 0, 1, -1
    int perp_pairs = 0, other_pairs = 0;
    for (int u = 0; u < 4; ++u)
        for (int v = u + 1; v < 4; ++v) {
            if (ball.rel(u, v).kind == Rel::perp) ++perp_pairs;
            if (ball.rel(u, v).kind == Rel::other) ++other_pairs;
        }
    CHECK(perp_pairs == 5);   // the slope pair (1,-1) meets twice with like signs
    CHECK(other_pairs == 1);
    CHECK(max_simplex(ball).first == 1);
    CHECK(max_separating_simplex(ball) == 0);
}

TEST_CASE("pentagon classes appear in the five-holed sphere ball") {
    ComplexBall ball = build_ball(build_surface(0, 5), 3);
    const char* pent[5] = {"ab", "bc", "cd", "abc", "bcd"};
    for (const char* w : pent) CHECK(ball.index_of(cc(ball.surface, w)) >= 0);
    // consecutive pairs around the pentagon are perp0, skips disjoint
    const char* cyc[5] = {"ab", "bc", "cd", "abc", "bcd"};
    // pentagon order: {12},{23},{34},{45}=abc-complement? consecutive pairs
    // share a hole, next-but-one pairs do not
    auto rel = [&](const char* x, const char* y) {
        int u = ball.index_of(cc(ball.surface, x));
        int v = ball.index_of(cc(ball.surface, y));
        return ball.rel(u, v).kind;
    };
    (void)cyc;
    CHECK(rel("ab", "bc") == Rel::perp0);
    CHECK(rel("bc", "cd") == Rel::perp0);
    CHECK(rel("ab", "cd") == Rel::disjoint);
    CHECK(rel("ab", "abc") == Rel::disjoint);
    CHECK(rel("cd", "abc") == Rel::perp0);
}

TEST_CASE("ball of a pair of pants is empty") {
    ComplexBall ball = build_ball(build_surface(0, 3), 5);
    CHECK(ball.size() == 0);
}

TEST_CASE("maximal simplices have the expected size") {
    CHECK(max_simplex(build_ball(build_surface(0, 4), 3)).first == 1);
    ComplexBall s5 = build_ball(build_surface(0, 5), 4);
    auto [size5, witness5] = max_simplex(s5);
    CHECK(size5 == 2);
    CHECK(witness5.size() == 2);
    CHECK(intersection_profile(s5.surface, witness5[0], witness5[1]).kind == Rel::disjoint);
    ComplexBall t2 = build_ball(build_surface(1, 2), 4);
    CHECK(max_simplex(t2).first == 2);
    CHECK(max_separating_simplex(t2) == 1);
    CHECK(max_separating_simplex(s5) == 2);
}

TEST_CASE("charts on the one-holed torus cover the ball") {
    ComplexBall ball = build_ball(build_surface(1, 1), 3);
    Chart chart = fit_chart(ball, cc(ball.surface, "a"), cc(ball.surface, "b"));
    CHECK(chart.size() == ball.size());
    CHECK(chart.coord_of(cc(ball.surface, "a")) == canon(1, 0));
    CHECK(chart.coord_of(cc(ball.surface, "b")) == canon(0, 1));
    // the dictionary realizes all small slopes
    std::vector<Slope> want = {canon(1, 0), canon(0, 1), canon(1, 1), canon(-1, 1),
                               canon(2, 1), canon(-2, 1), canon(1, 2), canon(-1, 2)};
    for (const Slope& s : want) {
        bool found = false;
        for (const auto& [curve, sl] : chart.coord)
            if (sl == s) found = true;
        CHECK(found);
    }
    // chart equivariance with the slope product on top-related pairs
    for (const auto& [cu, su] : chart.coord)
        for (const auto& [cv, sv] : chart.coord) {
            if (cu == cv) continue;
            if (!intersection_profile(ball.surface, cu, cv).top()) continue;
            CurveClass r = resolve_curves(ball.surface, cu, cv);
            if (chart.has(r)) CHECK(chart.coord_of(r) == resolve(su, sv));
        }
}

TEST_CASE("chart transitions are projective integer maps") {
    ComplexBall ball = build_ball(build_surface(1, 1), 3);
    Chart c1 = fit_chart(ball, cc(ball.surface, "a"), cc(ball.surface, "b"));
    Chart c2 = fit_chart(ball, cc(ball.surface, "b"), cc(ball.surface, "ab"));
    auto m = check_transitions(c1, c2);
    REQUIRE(m.has_value());
    std::int64_t d = m->determinant();
    CHECK((d == 1 || d == -1));
    for (const auto& [curve, s1] : c1.coord)
        if (c2.has(curve)) CHECK(act(*m, s1) == c2.coord_of(curve));
    CHECK(check_transitions(c1, c1) == ModularMatrix::identity());
}

TEST_CASE("chart seeds must be top-related") {
    ComplexBall ball = build_ball(build_surface(0, 5), 3);
    CHECK_THROWS_AS(fit_chart(ball, cc(ball.surface, "ab"), cc(ball.surface, "cd")), Error);
}

TEST_CASE("chart on an embedded four-holed sphere") {
    ComplexBall ball = build_ball(build_surface(0, 5), 4);
    auto u = cc(ball.surface, "ab"), v = cc(ball.surface, "bc");
    Chart chart = fit_chart(ball, u, v);
    CHECK(chart.size() >= 3);
    REQUIRE(chart.anchor.has_value());
    CHECK(*chart.anchor == cc(ball.surface, "abc"));
    // the domain consists of classes disjoint from the anchor
    for (const auto& [curve, sl] : chart.coord) {
        auto p = intersection_profile(ball.surface, curve, *chart.anchor);
        CHECK(p.kind == Rel::disjoint);
    }
}

TEST_CASE("ball export and parse round-trip") {
    ComplexBall ball = build_ball(build_surface(1, 1), 2);
    std::string text = export_ball(ball, ExportFormat::json);
    ComplexBall back = parse_ball_json(text);
    CHECK(back.size() == ball.size());
    CHECK(back.max_len == ball.max_len);
    for (int v = 0; v < ball.size(); ++v) {
        CHECK(back.vertices[v].curve == ball.vertices[v].curve);
        CHECK(back.vertices[v].separating == ball.vertices[v].separating);
    }
    for (int u = 0; u < ball.size(); ++u)
        for (int v = u + 1; v < ball.size(); ++v) {
            CHECK(back.rel(u, v).kind == ball.rel(u, v).kind);
            CHECK(back.rel(u, v).geo == ball.rel(u, v).geo);
        }
    CHECK(export_ball(back, ExportFormat::json) == text);

    ComplexBall empty = build_ball(build_surface(0, 3), 3);
    CHECK(export_ball(empty, ExportFormat::json) ==
          "{\"surface\":{\"g\":0,\"n\":3},\"max_len\":3,\"curves\":[],\"pairs\":[]}");

    std::string dot = export_ball(ball, ExportFormat::dot);
    CHECK(dot.find("graph ball {") == 0);
    CHECK(dot.find("label=\"ab\"") != std::string::npos);
}
