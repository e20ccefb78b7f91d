#pragma once

#include <vector>

#include "curvecx/surface.hpp"
#include "curvecx/word.hpp"

namespace ccx {

// An end of the universal-cover tree, described from a base vertex as the
// purely periodic continuation of a cyclic word at a phase. fwd reads the
// word forward, !fwd reads the inverse word backward from the phase.
struct Ray {
    const Word* w;
    int phase;
    bool fwd;
};

Letter ray_at(const Ray& r, int k);

// First index where the rays differ, capped at bound.
int common_prefix_len(const Ray& a, const Ray& b, int bound);

// Same boundary point of the tree (decided with a periodicity bound).
bool same_end(const Ray& a, const Ray& b);

// Orientation of three distinct ends in the boundary circle induced by the
// ribbon structure: +1 when counterclockwise.
int orient3(const RibbonSurface& s, const Ray& a, const Ray& b, const Ray& c);

// One transverse crossing of the closed curves [u] and [v], anchored where
// the crossing lift first meets the reference axis of u: i and j are the
// phases of u and v at the anchor vertex, sign is the crossing sign for the
// chosen word orientations.
struct Crossing {
    int i;
    int j;
    int sign;
};

// All crossings of the geodesic representatives, one entry per double point.
// Inputs must be cyclically reduced and primitive; for the self case pass
// same_class = true (each double point then appears twice, once per
// normalization of the ordered lift pair).
std::vector<Crossing> enumerate_crossings(const RibbonSurface& s, const Word& u, const Word& v,
                                          bool same_class);

// Minimal geometric intersection number of two distinct classes.
int geometric_intersection(const RibbonSurface& s, const Word& u, const Word& v);

// |signed sum| over a minimal-position pair; orientation independent.
int algebraic_intersection_abs(const RibbonSurface& s, const Word& u, const Word& v);

// Minimal self-intersection number of a primitive class.
int self_intersection_count(const RibbonSurface& s, const Word& u);

}  // namespace ccx
