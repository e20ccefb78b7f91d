#include "curvecx/lab.hpp"
#include "doctest.h"

using namespace ccx;

TEST_CASE("pentagon relation holds on small balls") {
    ComplexBall ball = build_ball(build_surface(0, 5), 4);
    VerificationReport rep = verify_pentagon(ball);
    CHECK(rep.ok());
    CHECK(rep.instances_checked > 0);
    CHECK(rep.bounded);
    CHECK(rep.max_len == 4);
    CHECK_THROWS_AS(verify_pentagon(build_ball(build_surface(0, 4), 3)), Error);
}

TEST_CASE("at most one common disjoint class") {
    VerificationReport r5 = verify_unique_common_neighbor(build_ball(build_surface(0, 5), 4));
    CHECK(r5.ok());
    CHECK(r5.instances_checked > 0);
    VerificationReport r12 = verify_unique_common_neighbor(build_ball(build_surface(1, 2), 4));
    CHECK(r12.ok());
    CHECK_THROWS_AS(verify_unique_common_neighbor(build_ball(build_surface(0, 4), 3)), Error);
}

TEST_CASE("report serialization") {
    VerificationReport rep;
    rep.lemma = "pentagon";
    rep.instances_checked = 3;
    rep.bounded = true;
    rep.max_len = 4;
    CHECK(report_to_json(rep) ==
          "{\"lemma\":\"pentagon\",\"checked\":3,\"failures\":[],\"bounded\":true,\"max_len\":4}");
}

TEST_CASE("configuration identities on the five-holed sphere") {
    VerificationReport rep = verify_config_identities(build_surface(0, 5), 4);
    CHECK(rep.ok());
    CHECK(rep.instances_checked == 4);
}

TEST_CASE("configuration identities on the two-holed torus") {
    VerificationReport rep = verify_config_identities(build_surface(1, 2), 6);
    CHECK(rep.ok());
    CHECK(rep.instances_checked == 8);
}

TEST_CASE("exceptional automorphism at small radius") {
    ExceptionalResult res = exceptional_automorphism(4);
    CHECK(res.report.ok());
    CHECK(res.phi.preserves_disjointness);
    CHECK_FALSE(res.phi.preserves_separating);
    REQUIRE(res.phi.separating_witness.has_value());
    auto [w_from, w_to] = *res.phi.separating_witness;
    CoverSpec spec = CoverSpec::standard();
    CHECK(classify_curve(spec.cover, w_from) != CurveType::nonseparating);
    CHECK(classify_curve(spec.cover, w_to) == CurveType::nonseparating);
    CHECK(res.lifted_separating > 0);
    CHECK(res.lifted_nonseparating > 0);
    CHECK_FALSE(res.moves.empty());
}
