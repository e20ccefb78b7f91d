#include "curvecx/curves.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>

namespace ccx {

const char* rel_name(Rel r) {
    switch (r) {
        case Rel::equal: return "equal";
        case Rel::disjoint: return "disjoint";
        case Rel::perp: return "perp";
        case Rel::perp0: return "perp0";
        case Rel::other: return "other";
    }
    return "?";
}

const char* curve_type_name(CurveType t) {
    switch (t) {
        case CurveType::nonseparating: return "nonseparating";
        case CurveType::separating: return "separating";
        case CurveType::boundary_class: return "boundary_class";
    }
    return "?";
}

CurveClass canon_curve(const RibbonSurface& s, const Word& w) {
    for (Letter l : w)
        CCX_CHECK(l >= 0 && l < 2 * s.rank, "letter outside the surface alphabet");
    Word r = cyclic_reduce(w);
    if (r.empty()) fail(Err::EmptyAfterReduction, "word is trivial in the free group");
    return CurveClass{canonical_cyclic(r)};
}

int self_intersection(const RibbonSurface& s, const CurveClass& c) {
    return self_intersection_count(s, c.word);
}

bool is_essential(const RibbonSurface& s, const CurveClass& c) {
    if (c.word.empty()) return false;
    if (!is_primitive(c.word)) return false;
    if (self_intersection_count(s, c.word) != 0) return false;
    return !s.peripheral(c.word);
}

RelationProfile intersection_profile(const RibbonSurface& s, const CurveClass& a,
                                     const CurveClass& b) {
    RelationProfile p;
    if (a == b) {
        p.kind = Rel::equal;
        return p;
    }
    int sum = 0;
    auto cs = enumerate_crossings(s, a.word, b.word, false);
    for (const Crossing& c : cs) sum += c.sign;
    p.geo = static_cast<int>(cs.size());
    p.alg = std::abs(sum);
    if (p.geo == 0)
        p.kind = Rel::disjoint;
    else if (p.geo == 1)
        p.kind = Rel::perp;
    else if (p.geo == 2 && p.alg == 0)
        p.kind = Rel::perp0;
    else
        p.kind = Rel::other;
    return p;
}

bool separating_fast(const RibbonSurface& s, const CurveClass& c) {
    // Mod-2 pairing of petal loops: generators intersect once exactly when
    // their dart pairs interleave in the ribbon order.
    int r = s.rank;
    auto ab = abelianization(c.word, r);
    for (int f = 0; f < r; ++f) {
        int pairing = 0;
        int f0 = s.pos(make_letter(f, false)), f1 = s.pos(make_letter(f, true));
        for (int e = 0; e < r; ++e) {
            if ((ab[e] & 1) == 0 || e == f) continue;
            int e0 = s.pos(make_letter(e, false)), e1 = s.pos(make_letter(e, true));
            auto between = [&](int x) {
                int n = s.dart_count();
                return (((x - f0) % n + n) % n) < (((f1 - f0) % n + n) % n);
            };
            if (between(e0) != between(e1)) pairing ^= 1;
        }
        if (pairing) return false;
    }
    return true;
}

CurveType classify_curve(const RibbonSurface& s, const CurveClass& c) {
    auto pieces = cut_along(s, c);
    bool separating = pieces.size() >= 2;
    CCX_CHECK(separating == separating_fast(s, c),
              "homology separating test disagrees with the cut decomposition");
    if (!separating) return CurveType::nonseparating;
    for (auto [g, n] : pieces)
        if (g == 0 && n == 3) return CurveType::boundary_class;
    return CurveType::separating;
}

std::vector<CurveClass> enumerate_curves(const RibbonSurface& s, int max_len,
                                         const EnumLimits& limits) {
    CCX_CHECK(max_len >= 1, "max_len must be positive");
    std::vector<CurveClass> out;
    std::uint64_t examined = 0;
    Word w;
    int alphabet = 2 * s.rank;

    auto consider = [&](const Word& cand) {
        if (cand.back() == inv(cand.front())) return;       // not cyclically reduced
        if (canonical_cyclic(cand) != cand) return;         // not the canonical rotation
        CurveClass c{cand};
        if (is_essential(s, c)) out.push_back(c);
    };

    // depth-first over reduced words
    auto rec = [&](auto&& self, int remaining) -> void {
        if (++examined > limits.candidate_budget)
            fail(Err::BudgetExceeded, "curve enumeration exceeded the candidate budget");
        if (!w.empty()) consider(w);
        if (remaining == 0) return;
        for (Letter l = 0; l < alphabet; ++l) {
            if (w.empty() && is_inverse(l)) continue;   // canonical words start lowercase
            if (!w.empty() && l == inv(w.back())) continue;
            if (!w.empty() && l < w.front()) continue;  // canonical words start minimal
            w.push_back(l);
            self(self, remaining - 1);
            w.pop_back();
        }
    };
    rec(rec, max_len);

    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

// ---- mapping classes ----

namespace {

std::vector<Word> identity_images(int rank) {
    std::vector<Word> im(rank);
    for (int g = 0; g < rank; ++g) im[g] = Word{make_letter(g, false)};
    return im;
}

}  // namespace

MappingMove preset_move(const RibbonSurface& s, const std::string& name) {
    MappingMove m;
    m.name = name;
    m.images = identity_images(s.rank);
    bool genus1 = s.genus == 1;

    if (genus1 && (name == "ta" || name == "Ta")) {
        // twist along the a-handle curve
        if (name == "ta")
            m.images[1] = Word{make_letter(1, false), make_letter(0, false)};  // b -> ba
        else
            m.images[1] = Word{make_letter(1, false), make_letter(0, true)};  // b -> bA
        validate_move(s, m);
        return m;
    }
    if (genus1 && (name == "tb" || name == "Tb")) {
        if (name == "tb")
            m.images[0] = Word{make_letter(0, false), make_letter(1, false)};  // a -> ab
        else
            m.images[0] = Word{make_letter(0, false), make_letter(1, true)};  // a -> aB
        validate_move(s, m);
        return m;
    }
    if (s.genus == 0 && name.size() >= 2 && (name[0] == 's' || name[0] == 'S')) {
        int holes = s.boundary;           // n holes, generators x1..x_{n-1}
        int i = std::atoi(name.c_str() + 1);  // half twist index, 1-based
        bool inverse = name[0] == 'S';
        if (i >= 1 && i <= holes - 2) {
            int g0 = i - 1, g1 = i;  // exchanges holes i and i+1
            if (!inverse) {
                m.images[g0] = Word{make_letter(g0, false), make_letter(g1, false),
                                    make_letter(g0, true)};
                m.images[g1] = Word{make_letter(g0, false)};
            } else {
                m.images[g0] = Word{make_letter(g1, false)};
                m.images[g1] = Word{make_letter(g1, true), make_letter(g0, false),
                                    make_letter(g1, false)};
            }
            validate_move(s, m);
            return m;
        }
        if (i == holes - 1) {
            // exchanges the last hole with the outer boundary:
            //   s:  x_l -> x_{l-1}^{-1} ... x_1^{-1} x_l^{-1}
            //   S:  x_l -> x_l^{-1} x_{l-1}^{-1} ... x_1^{-1}
            int gl = holes - 2;
            Word w;
            if (inverse) w.push_back(make_letter(gl, true));
            for (int g = gl - 1; g >= 0; --g) w.push_back(make_letter(g, true));
            if (!inverse) w.push_back(make_letter(gl, true));
            m.images[gl] = w;
            validate_move(s, m);
            return m;
        }
    }
    fail(Err::InvalidMappingClass, "unknown preset move '" + name + "'");
}

MappingMove explicit_move(const RibbonSurface& s, std::vector<Word> images) {
    MappingMove m;
    m.name = "explicit";
    m.images = std::move(images);
    CCX_CHECK(static_cast<int>(m.images.size()) == s.rank, "one image per generator required");
    validate_move(s, m);
    return m;
}

void validate_move(const RibbonSurface& s, const MappingMove& m) {
    if (static_cast<int>(m.images.size()) != s.rank)
        fail(Err::InvalidMappingClass, "move must give an image for every generator");
    std::multiset<Word> expect(s.walk_classes.begin(), s.walk_classes.end());
    std::multiset<Word> got;
    for (const Word& walk : s.walks) {
        Word image = apply_move_to_word(s, m, walk);
        Word r = cyclic_reduce(image);
        if (r.empty()) fail(Err::InvalidMappingClass, "boundary walk maps to a trivial loop");
        got.insert(canonical_cyclic(r));
    }
    if (expect != got)
        fail(Err::InvalidMappingClass, "move does not preserve the peripheral structure");
}

MappingClassWord parse_mapping_class(const RibbonSurface& s, const std::string& text) {
    MappingClassWord mc;
    if (text.empty() || text == "id") return mc;
    size_t start = 0;
    while (start <= text.size()) {
        size_t comma = text.find(',', start);
        std::string tok = text.substr(start, comma == std::string::npos ? comma : comma - start);
        if (!tok.empty()) mc.moves.push_back(preset_move(s, tok));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return mc;
}

Word apply_move_to_word(const RibbonSurface& s, const MappingMove& m, const Word& w) {
    Word out;
    out.reserve(w.size() * 2);
    for (Letter l : w) {
        const Word& im = m.images[gen_of(l)];
        if (!is_inverse(l))
            out.insert(out.end(), im.begin(), im.end());
        else {
            Word r = inverse_word(im);
            out.insert(out.end(), r.begin(), r.end());
        }
    }
    return free_reduce(out);
}

CurveClass apply_mapping_class(const RibbonSurface& s, const MappingClassWord& mc,
                               const CurveClass& c) {
    Word w = c.word;
    for (const MappingMove& m : mc.moves) w = apply_move_to_word(s, m, w);
    return canon_curve(s, w);
}

}  // namespace ccx
