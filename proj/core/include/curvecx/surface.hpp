#pragma once

#include <string>
#include <vector>

#include "curvecx/word.hpp"

namespace ccx {

// One-vertex fat graph spine of an oriented surface with boundary.
// Darts around the vertex are labelled by letters: the dart for letter l
// is the end you leave along when the next letter of a curve word is l.
// The cyclic order is counterclockwise; it determines the surface.
struct RibbonSurface {
    int genus = 0;
    int boundary = 0;                  // number of boundary circles
    int rank = 0;                      // free-group rank 2g + n - 1
    std::vector<Letter> cyclic_order;  // the 2*rank darts
    std::vector<int> dart_pos;         // position of letter in cyclic_order
    std::vector<Word> walks;           // face words, one per boundary circle
    std::vector<Word> walk_classes;    // their canonical unoriented forms

    int dart_count() const { return 2 * rank; }
    int pos(Letter l) const { return dart_pos[l]; }

    // +1 if the darts (x, y, z) are in counterclockwise cyclic order.
    int orient_darts(Letter x, Letter y, Letter z) const;

    bool peripheral(const Word& canonical_word) const;
};

// Face words of the fattened graph, traced with next(d) = sigma^{-1}(inv d).
std::vector<Word> trace_faces(const std::vector<Letter>& cyclic_order, int rank);

// Surface with an explicit cyclic order; genus and boundary are derived by
// face tracing. Throws ModelMismatch when expected (g,n) is supplied and
// the trace disagrees.
RibbonSurface make_ribbon_surface(int rank, std::vector<Letter> cyclic_order,
                                  int expect_g = -1, int expect_n = -1);

// Standard models: the (0,n) rose x1..x_{n-1} with order
// (x1+,x1-,x2+,x2-,...), and (1,n) with handle generators a,b prefixed as
// (a+,b+,a-,b-,...). Supported: any (0,n>=3) and (1,n) for n in {1,2,3}.
RibbonSurface build_surface(int g, int n);

std::vector<Word> boundary_walks(const RibbonSurface& s);

std::string surface_to_json(const RibbonSurface& s);

}  // namespace ccx
