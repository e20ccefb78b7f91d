#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "curvecx/curves.hpp"
#include "curvecx/resolution.hpp"
#include "curvecx/slope.hpp"

namespace ccx {

struct BallVertex {
    CurveClass curve;
    bool separating = false;
    bool boundary_class = false;
};

// A finite decorated piece of the curve complex: every essential class up
// to a word-length bound, with the full table of pairwise relations.
struct ComplexBall {
    RibbonSurface surface;
    int max_len = 0;
    std::vector<BallVertex> vertices;
    std::vector<RelationProfile> table;  // unordered pairs u < v

    int size() const { return static_cast<int>(vertices.size()); }
    const RelationProfile& rel(int u, int v) const;
    int index_of(const CurveClass& c) const;  // -1 when absent
};

ComplexBall build_ball(const RibbonSurface& s, int max_len, int jobs = 0,
                       const EnumLimits& limits = {});

// Maximum clique of the disjointness graph, exact, with a witness.
std::pair<int, std::vector<CurveClass>> max_simplex(const ComplexBall& ball);

// Maximum clique among separating vertices.
int max_separating_simplex(const ComplexBall& ball);

// Injective slope chart grown from a seed pair, compatible with the Farey
// relation and with the resolution product on its domain.
struct Chart {
    std::optional<CurveClass> anchor;
    std::vector<std::pair<CurveClass, Slope>> coord;  // sorted by curve

    bool has(const CurveClass& c) const;
    Slope coord_of(const CurveClass& c) const;
    int size() const { return static_cast<int>(coord.size()); }
};

Chart fit_chart(const ComplexBall& ball, const CurveClass& seed1, const CurveClass& seed2);

// Projective integer matrix realizing coord2 o coord1^{-1} on the overlap;
// nullopt when no determinant +-1 matrix fits.
std::optional<ModularMatrix> check_transitions(const Chart& c1, const Chart& c2);

enum class ExportFormat { dot, json };

std::string export_ball(const ComplexBall& ball, ExportFormat format, bool overlay_top = false);

ComplexBall parse_ball_json(const std::string& text);

}  // namespace ccx
