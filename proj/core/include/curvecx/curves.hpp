#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "curvecx/intersect.hpp"
#include "curvecx/surface.hpp"
#include "curvecx/word.hpp"

namespace ccx {

// Canonical cyclically reduced unoriented cyclic word; one isotopy class.
struct CurveClass {
    Word word;

    int length() const { return static_cast<int>(word.size()); }
    std::string str() const { return word_to_string(word); }
    bool operator==(const CurveClass&) const = default;
    bool operator<(const CurveClass& o) const {
        if (word.size() != o.word.size()) return word.size() < o.word.size();
        return word < o.word;
    }
};

enum class Rel { equal, disjoint, perp, perp0, other };

const char* rel_name(Rel r);

struct RelationProfile {
    Rel kind = Rel::other;
    int geo = 0;  // geometric intersection number
    int alg = 0;  // |algebraic intersection number|

    bool top() const { return kind == Rel::perp || kind == Rel::perp0; }
};

// Cyclic reduction then canonical rotation/inversion form.
// Throws EmptyAfterReduction when the input is trivial.
CurveClass canon_curve(const RibbonSurface& s, const Word& w);

int self_intersection(const RibbonSurface& s, const CurveClass& c);

// Primitive, simple, and not parallel to a boundary circle.
bool is_essential(const RibbonSurface& s, const CurveClass& c);

RelationProfile intersection_profile(const RibbonSurface& s, const CurveClass& a,
                                     const CurveClass& b);

// Homeomorphism types (g, n) of the pieces of the surface cut along c,
// sorted by descending genus then ascending boundary count.
std::vector<std::pair<int, int>> cut_along(const RibbonSurface& s, const CurveClass& c);

enum class CurveType { nonseparating, separating, boundary_class };

const char* curve_type_name(CurveType t);

// Fast mod-2 homology test, cross-checked against the cut decomposition.
CurveType classify_curve(const RibbonSurface& s, const CurveClass& c);

bool separating_fast(const RibbonSurface& s, const CurveClass& c);

struct EnumLimits {
    std::uint64_t candidate_budget = 200'000'000;
};

// All essential classes with canonical word length <= max_len, sorted.
std::vector<CurveClass> enumerate_curves(const RibbonSurface& s, int max_len,
                                         const EnumLimits& limits = {});

// ---- mapping classes ----

struct MappingMove {
    std::string name;           // preset name, or "explicit"
    std::vector<Word> images;   // image of each generator
};

struct MappingClassWord {
    std::vector<MappingMove> moves;
};

// Preset moves. For (0,n): half twists s1..s{n-1} and inverses S1..S{n-1}
// (s{n-1} exchanges the last hole with the outer boundary). For (1,n):
// handle twists ta, tb and inverses Ta, Tb.
MappingMove preset_move(const RibbonSurface& s, const std::string& name);

MappingMove explicit_move(const RibbonSurface& s, std::vector<Word> images);

// Throws InvalidMappingClass when a move does not preserve the peripheral
// structure (the multiset of boundary walk classes).
void validate_move(const RibbonSurface& s, const MappingMove& m);

MappingClassWord parse_mapping_class(const RibbonSurface& s, const std::string& text);

Word apply_move_to_word(const RibbonSurface& s, const MappingMove& m, const Word& w);

CurveClass apply_mapping_class(const RibbonSurface& s, const MappingClassWord& m,
                               const CurveClass& c);

}  // namespace ccx
