#include "curvecx/intersect.hpp"
#include "doctest.h"

using namespace ccx;

namespace {

int geo(const RibbonSurface& s, const std::string& u, const std::string& v) {
    return geometric_intersection(s, parse_word(u, s.rank), parse_word(v, s.rank));
}

int alg(const RibbonSurface& s, const std::string& u, const std::string& v) {
    return algebraic_intersection_abs(s, parse_word(u, s.rank), parse_word(v, s.rank));
}

int self(const RibbonSurface& s, const std::string& u) {
    return self_intersection_count(s, parse_word(u, s.rank));
}

}  // namespace

TEST_CASE("intersections of handle curves on the one-holed torus") {
    RibbonSurface t = build_surface(1, 1);
    CHECK(geo(t, "a", "b") == 1);
    CHECK(alg(t, "a", "b") == 1);
    CHECK(geo(t, "a", "ab") == 1);
    CHECK(geo(t, "b", "ab") == 1);
    CHECK(geo(t, "ab", "aB") == 2);
    CHECK(alg(t, "ab", "aB") == 2);
    CHECK(geo(t, "a", "aab") == 1);   // slopes inf and 2/1
    CHECK(geo(t, "b", "aab") == 2);   // slopes 0 and 2/1
    CHECK(alg(t, "b", "aab") == 2);
    CHECK(geo(t, "a", "abAB") == 0);  // boundary is disjoint from everything
    CHECK(geo(t, "b", "abAB") == 0);
}

TEST_CASE("self-intersections on the one-holed torus") {
    RibbonSurface t = build_surface(1, 1);
    CHECK(self(t, "a") == 0);
    CHECK(self(t, "ab") == 0);
    CHECK(self(t, "aab") == 0);
    CHECK(self(t, "abAB") == 0);  // boundary parallel, embedded
    CHECK(self(t, "abaB") == 1);  // homology (2,0) but not the double of a
    CHECK(self(t, "aabb") == 1);
}

TEST_CASE("intersections on the four-holed sphere") {
    RibbonSurface s = build_surface(0, 4);
    CHECK(geo(s, "ab", "bc") == 2);
    CHECK(alg(s, "ab", "bc") == 0);
    CHECK(geo(s, "ab", "ac") == 2);
    CHECK(alg(s, "ab", "ac") == 0);
    CHECK(geo(s, "ab", "c") == 0);
    CHECK(self(s, "ab") == 0);
    CHECK(self(s, "ac") == 0);
}

TEST_CASE("crossing enumeration data is consistent") {
    RibbonSurface t = build_surface(1, 1);
    Word u = parse_word("ab", 2), v = parse_word("bc", 3);
    RibbonSurface s4 = build_surface(0, 4);
    auto cs = enumerate_crossings(s4, u, v, false);
    REQUIRE(cs.size() == 2);
    CHECK(cs[0].sign * cs[1].sign == -1);

    // symmetry of the count
    Word x = parse_word("a", 2), y = parse_word("aab", 2);
    CHECK(enumerate_crossings(t, x, y, false).size() ==
          enumerate_crossings(t, y, x, false).size());
}

TEST_CASE("rays compare lazily") {
    Word w = parse_word("ab", 2);
    Ray fwd{&w, 0, true};
    CHECK(ray_at(fwd, 0) == make_letter(0, false));
    CHECK(ray_at(fwd, 1) == make_letter(1, false));
    CHECK(ray_at(fwd, 2) == make_letter(0, false));
    Ray bwd{&w, 0, false};
    CHECK(ray_at(bwd, 0) == make_letter(1, true));
    CHECK(ray_at(bwd, 1) == make_letter(0, true));
    Ray other{&w, 1, true};
    CHECK(common_prefix_len(fwd, other, 16) == 0);
    CHECK(same_end(fwd, Ray{&w, 0, true}));
    CHECK_FALSE(same_end(fwd, bwd));
}
