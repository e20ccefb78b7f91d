#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "curvecx/errors.hpp"

namespace ccx {

// Reduced fraction p/q in Q u {inf}, canonical form q > 0 or (p,q) = (1,0).
struct Slope {
    std::int64_t p = 0;
    std::int64_t q = 1;

    bool is_infinity() const { return q == 0; }
    bool operator==(const Slope&) const = default;
    auto operator<=>(const Slope&) const = default;
};

Slope canon(std::int64_t p, std::int64_t q);

// lambda = p*q' - p'*q; |lambda| is the intersection number of the two
// slopes on the one-holed torus.
std::int64_t det(const Slope& s, const Slope& t);

// Farey neighbours: |det| = 1.
bool farey_rel(const Slope& s, const Slope& t);

// Boundary circular order on Q u {inf}; the convention makes
// (0, -1, inf) a positive triple.
bool positively_ordered(const Slope& a, const Slope& b, const Slope& c);

// Resolution product of a Farey pair: u = (p + lambda*p')/(q + lambda*q')
// with lambda = det(s,t). u is a common Farey neighbour of s and t and
// (s, u, t) is positively ordered. Throws NotFareyRelated otherwise.
Slope resolve(const Slope& s, const Slope& t);

std::string to_string(const Slope& s);
Slope parse_slope(const std::string& text);

// Projective integer 2x2 matrix with det +-1; negation identified.
// det -1 marks an orientation-reversing map.
struct ModularMatrix {
    std::int64_t a = 1, b = 0, c = 0, d = 1;

    static ModularMatrix identity() { return ModularMatrix{}; }
    std::int64_t determinant() const;
    bool orientation_reversing() const { return determinant() == -1; }
    ModularMatrix inverse() const;
    ModularMatrix compose(const ModularMatrix& rhs) const;  // this o rhs
    void normalize();  // projective sign normalization
    bool operator==(const ModularMatrix&) const = default;
};

ModularMatrix make_matrix(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d);

Slope act(const ModularMatrix& m, const Slope& s);

// Unique projective integer matrix of det +-1 consistent with all pairs,
// fitted from the first three and verified on the rest. Empty optional =
// no such matrix (Inconsistent reported through the error).
ModularMatrix fit_modular_map(const std::vector<std::pair<Slope, Slope>>& pairs);

struct SlopeSet {
    std::set<Slope> elements;
    int depth = 0;           // generation depth actually reached
    bool fixpoint = false;   // true when closure stabilized before max_depth
};

// Iterates X_{n+1} = X_n u { resolve(b,g) | b,g,resolve(g,b) in X_n, b,g Farey }
// until fixpoint or max_depth.
SlopeSet closure(const std::set<Slope>& start, int max_depth);

std::string slope_set_to_json(const SlopeSet& s);

}  // namespace ccx
