#pragma once

#include "curvecx/curves.hpp"
#include "curvecx/surface.hpp"

namespace ccx {

// The double cover of the five-holed sphere branched over its four inner
// holes, with total space a two-holed torus. Curves lift by coset
// rewriting into the index-two kernel of the monodromy followed by the
// branched filling that kills the squares of the cone generators.
struct CoverSpec {
    RibbonSurface base;   // (0,5) rose on x1..x4, all cone generators
    RibbonSurface cover;  // rank-3 spine of the filled cover, a (1,2) model
    MappingClassWord deck;  // hyperelliptic involution: every generator inverted

    static CoverSpec standard();
};

// Z/2 monodromy of a based word: exponent-sum parity over the cone set.
int monodromy(const CoverSpec& spec, const Word& base_word);

// Class of one component of the preimage: the word itself when the
// monodromy vanishes, the square otherwise (connected double lift).
CurveClass lift_double_cover(const CoverSpec& spec, const CurveClass& base_class);

}  // namespace ccx
