#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "curvecx/curves.hpp"

namespace ccx {

// Resolution product: smooth every crossing from a to b following the
// surface orientation. Defined for perp and perp0 pairs; the result is
// top-related to both factors with the same relation kind, and
// resolve_curves(a,b) differs from resolve_curves(b,a).
CurveClass resolve_curves(const RibbonSurface& s, const CurveClass& a, const CurveClass& b);

// Pairwise disjoint essential classes on a fixed surface.
struct FNSystem {
    std::vector<CurveClass> classes;
};

FNSystem make_fn_system(const RibbonSurface& s, std::vector<CurveClass> classes);

struct SearchLimits {
    int extra_len = 2;              // candidate words up to |a| + |fn pivot| + extra_len
    std::uint64_t pool_budget = 200'000'000;
};

// One reduction step against fn.classes[0]: returns (b1, b2) with b1 top b2,
// resolve_curves(b1,b2) = a, strictly smaller intersection with the pivot
// for b1, b2 and the opposite product, and no growth against the other fn
// classes. Witnesses are found by certified search in increasing word
// length; the postconditions are re-checked before returning.
std::pair<CurveClass, CurveClass> reduce_step(const RibbonSurface& s, const FNSystem& fn,
                                              const CurveClass& a, const SearchLimits& lim = {});

// Product tree whose leaves avoid or top-relate to every fn class.
struct GenExpr {
    CurveClass value;
    std::unique_ptr<GenExpr> left, right;  // both null for a leaf

    bool leaf() const { return !left; }
};

GenExpr express(const RibbonSurface& s, const FNSystem& fn, const CurveClass& a,
                const SearchLimits& lim = {});

// Re-evaluates the tree bottom-up through resolve_curves.
CurveClass evaluate(const RibbonSurface& s, const GenExpr& e);

std::string genexpr_to_json(const GenExpr& e);

// Classes that are disjoint from or top-related to every fn class.
bool in_generator_set(const RibbonSurface& s, const FNSystem& fn, const CurveClass& c);

}  // namespace ccx
