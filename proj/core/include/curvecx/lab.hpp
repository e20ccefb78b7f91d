#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "curvecx/ball.hpp"
#include "curvecx/cover.hpp"
#include "curvecx/curves.hpp"

namespace ccx {

struct VerificationReport {
    std::string lemma;
    std::uint64_t instances_checked = 0;
    std::vector<std::string> failures;
    bool bounded = true;  // quantifiers truncated by the ball radius
    int max_len = 0;

    bool ok() const { return failures.empty(); }
};

std::string report_to_json(const VerificationReport& r);

// Every five-tuple with consecutive members intersecting and next-but-one
// members disjoint must have all consecutive pairs in the perp0 relation.
VerificationReport verify_pentagon(const ComplexBall& ball);

// Any two distinct classes admit at most one class disjoint from both.
VerificationReport verify_unique_common_neighbor(const ComplexBall& ball);

// Product identities of one explicit chain configuration: a perp0 chain of
// three on the five-holed sphere, a perp0/perp chain of four on the
// two-holed torus.
VerificationReport verify_config_identities(const ComplexBall& ball);
VerificationReport verify_config_identities(const RibbonSurface& s, int max_len);

struct PartialAutomorphism {
    std::vector<std::pair<CurveClass, CurveClass>> mapping;  // cover classes
    bool preserves_disjointness = false;
    bool preserves_perp = false;
    bool preserves_perp0 = false;
    bool preserves_separating = false;
    std::optional<std::pair<CurveClass, CurveClass>> separating_witness;
};

struct ExceptionalResult {
    PartialAutomorphism phi;
    VerificationReport report;
    CurveClass base_from;        // separating lift
    CurveClass base_to;          // nonseparating lift
    std::vector<std::string> moves;  // half-twist word with h(base_from) = base_to
    int lifted_separating = 0;
    int lifted_nonseparating = 0;
};

struct ExceptionalLimits {
    std::uint64_t orbit_budget = 2'000'000;
    int word_cap = 64;  // orbit states above this length are pruned
};

// Conjugates a half-twist by the covering correspondence: the result is a
// disjointness-preserving self-map of the lifted ball that moves a
// separating class onto a nonseparating one, so no homeomorphism induces it.
ExceptionalResult exceptional_automorphism(int max_len, int jobs = 0,
                                           const ExceptionalLimits& lim = {});

std::string exceptional_to_json(const ExceptionalResult& r);

// ---- slope dictionaries and whole-model cross-validation ----

// Word realizations of every reduced slope within a box, generated from the
// seed classes by Euclidean descent through twist moves.
struct SlopeDictionary {
    RibbonSurface surface;
    int factor = 1;  // geometric intersection equals factor * |det|
    std::vector<std::pair<Slope, CurveClass>> entries;  // sorted by slope

    const CurveClass& word_of(const Slope& s) const;
};

// Supported models: (1,1) with factor 1 and (0,4) with factor 2.
SlopeDictionary build_slope_dictionary(int g, int n, int bound);

// Geometric intersection in the word model equals factor * |det| for every
// slope pair in the box, on both model surfaces.
VerificationReport verify_farey_model(int bound, int jobs = 0);

// resolve(s,t) and resolve(t,s) are exactly the two mutually non-Farey
// common neighbours found by brute force.
VerificationReport verify_resolution_characterization(int bound);

// Charts fitted on the model balls and on embedded four-holed spheres of
// the (0,5) ball are relation-exact with projective integer transitions.
VerificationReport verify_charts(int max_len_models, int max_len_05, int jobs = 0);

// Maximal simplex sizes against the dimension formulas on fixture balls.
VerificationReport verify_dimensions(int jobs = 0);

}  // namespace ccx
