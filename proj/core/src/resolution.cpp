#include "curvecx/resolution.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>

namespace ccx {

namespace {

// Order of two crossings that anchor at the same vertex of the reference
// axis: b is later along the reference direction when the chord of b's
// lift lies entirely on the forward side of a's chord.
bool before_on_reference(const RibbonSurface& s, const Word& u, const Word& v, const Crossing& a,
                         const Crossing& b) {
    CCX_CHECK(a.i == b.i, "reference tie-break needs a shared anchor");
    Ray pu{&u, a.i, true};
    Ray pva{&v, a.j, true}, nva{&v, a.j, false};
    Ray pvb{&v, b.j, true}, nvb{&v, b.j, false};
    int fwd = orient3(s, pva, pu, nva);
    int s1 = orient3(s, pva, pvb, nva);
    int s2 = orient3(s, pva, nvb, nva);
    return s1 == fwd && s2 == fwd;
}

// Same question along the other curve, for crossings sharing its phase.
bool before_on_other(const RibbonSurface& s, const Word& u, const Word& v, const Crossing& a,
                     const Crossing& b) {
    CCX_CHECK(a.j == b.j, "other-curve tie-break needs a shared phase");
    Ray pv{&v, a.j, true};
    Ray pua{&u, a.i, true}, nua{&u, a.i, false};
    Ray pub{&u, b.i, true}, nub{&u, b.i, false};
    int fwd = orient3(s, pua, pv, nua);
    int s1 = orient3(s, pua, pub, nua);
    int s2 = orient3(s, pua, nub, nua);
    return s1 == fwd && s2 == fwd;
}

Word slice(const Word& w, int from, int count) {
    Word out;
    int n = static_cast<int>(w.size());
    out.reserve(count);
    for (int k = 0; k < count; ++k) out.push_back(w[(from + k) % n]);
    return out;
}

void append(Word& w, const Word& piece) { w.insert(w.end(), piece.begin(), piece.end()); }

}  // namespace

CurveClass resolve_curves(const RibbonSurface& s, const CurveClass& a, const CurveClass& b) {
    RelationProfile prof = intersection_profile(s, a, b);
    if (!prof.top())
        fail(Err::NotTopRelated,
             "resolution needs intersection one, or two of opposite sign; got " +
                 std::string(rel_name(prof.kind)));

    auto cs = enumerate_crossings(s, a.word, b.word, false);
    CurveClass result;

    if (cs.size() == 1) {
        const Crossing& c = cs[0];
        Word w = slice(a.word, c.i, a.length());
        Word rb = slice(b.word, c.j, b.length());
        if (c.sign < 0) rb = inverse_word(rb);
        append(w, rb);
        result = canon_curve(s, w);
    } else {
        CCX_CHECK(cs.size() == 2 && cs[0].sign * cs[1].sign == -1,
                  "a perp0 pair must cross twice with opposite signs");
        const Crossing& plus = cs[0].sign > 0 ? cs[0] : cs[1];
        const Crossing& minus = cs[0].sign > 0 ? cs[1] : cs[0];
        int la = a.length(), lb = b.length();

        int di = ((minus.i - plus.i) % la + la) % la;
        if (plus.i == minus.i && !before_on_reference(s, a.word, b.word, plus, minus)) di = la;
        int dj = ((minus.j - plus.j) % lb + lb) % lb;
        if (plus.j == minus.j && !before_on_other(s, a.word, b.word, plus, minus)) dj = lb;

        Word x1 = slice(a.word, plus.i, di);
        Word x2 = slice(a.word, plus.i + di, la - di);
        Word y1 = slice(b.word, plus.j, dj);
        Word y2 = slice(b.word, plus.j + dj, lb - dj);

        Word w = x1;
        append(w, inverse_word(y1));
        append(w, inverse_word(x2));
        append(w, y2);
        result = canon_curve(s, w);
    }

    // postconditions of the smoothing; a failure is a model bug
    RelationProfile ra = intersection_profile(s, result, a);
    RelationProfile rb = intersection_profile(s, result, b);
    CCX_CHECK(ra.kind == prof.kind && rb.kind == prof.kind,
              "resolution must relate to both factors like the factors relate");
    CCX_CHECK(is_essential(s, result), "resolution left the essential curve set");
    return result;
}

FNSystem make_fn_system(const RibbonSurface& s, std::vector<CurveClass> classes) {
    CCX_CHECK(!classes.empty(), "empty system");
    for (const auto& c : classes)
        CCX_CHECK(is_essential(s, c), "system members must be essential: " + c.str());
    for (size_t i = 0; i < classes.size(); ++i)
        for (size_t j = i + 1; j < classes.size(); ++j)
            if (intersection_profile(s, classes[i], classes[j]).kind != Rel::disjoint)
                fail(Err::PreconditionFailed, "system classes must be pairwise disjoint");
    return FNSystem{std::move(classes)};
}

bool in_generator_set(const RibbonSurface& s, const FNSystem& fn, const CurveClass& c) {
    for (const auto& f : fn.classes) {
        Rel k = intersection_profile(s, c, f).kind;
        if (k != Rel::disjoint && k != Rel::perp && k != Rel::perp0) return false;
    }
    return true;
}

namespace {

// Candidate pools are whole-surface enumerations, cached per (surface, length).
const std::vector<CurveClass>& candidate_pool(const RibbonSurface& s, int max_len,
                                              std::uint64_t budget) {
    static std::mutex mu;
    static std::map<std::pair<std::vector<Letter>, int>, std::vector<CurveClass>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(s.cyclic_order, max_len);
    auto it = cache.find(key);
    if (it == cache.end()) {
        EnumLimits lim;
        lim.candidate_budget = budget;
        it = cache.emplace(key, enumerate_curves(s, max_len, lim)).first;
    }
    return it->second;
}

struct ReduceChecks {
    int pivot_before;
    std::vector<int> other_before;
};

}  // namespace

std::pair<CurveClass, CurveClass> reduce_step(const RibbonSurface& s, const FNSystem& fn,
                                              const CurveClass& a, const SearchLimits& lim) {
    CCX_CHECK(!fn.classes.empty(), "reduce_step needs a system");
    const CurveClass& pivot = fn.classes[0];
    RelationProfile pa = intersection_profile(s, a, pivot);
    if (pa.geo < 2 || pa.kind == Rel::perp0)
        fail(Err::PreconditionFailed,
             "reduce_step needs intersection >= 2 with the pivot and not perp0");

    int bound = a.length() + pivot.length() + lim.extra_len;
    const auto& pool = candidate_pool(s, bound, lim.pool_budget);

    std::vector<int> before_other(fn.classes.size(), 0);
    for (size_t j = 1; j < fn.classes.size(); ++j)
        before_other[j] = intersection_profile(s, a, fn.classes[j]).geo;

    // Candidates must already be closer to the pivot and no farther from
    // the rest; both factors of a product of this kind are top-related to a.
    std::vector<const CurveClass*> cand;
    for (const auto& w : pool) {
        RelationProfile pw = intersection_profile(s, w, a);
        if (!pw.top()) continue;
        if (intersection_profile(s, w, pivot).geo >= pa.geo) continue;
        bool ok = true;
        for (size_t j = 1; j < fn.classes.size() && ok; ++j)
            if (intersection_profile(s, w, fn.classes[j]).geo > before_other[j]) ok = false;
        if (ok) cand.push_back(&w);
    }

    for (const CurveClass* b1 : cand) {
        Rel k1 = intersection_profile(s, *b1, a).kind;
        for (const CurveClass* b2 : cand) {
            if (*b1 == *b2) continue;
            if (intersection_profile(s, *b2, a).kind != k1) continue;
            if (intersection_profile(s, *b1, *b2).kind != k1) continue;
            CurveClass r = resolve_curves(s, *b1, *b2);
            if (!(r == a)) continue;
            CurveClass r2 = resolve_curves(s, *b2, *b1);
            if (intersection_profile(s, r2, pivot).geo >= pa.geo) continue;
            bool ok = true;
            for (size_t j = 1; j < fn.classes.size() && ok; ++j)
                if (intersection_profile(s, r2, fn.classes[j]).geo > before_other[j]) ok = false;
            if (ok) return {*b1, *b2};
        }
    }
    fail(Err::SearchExhausted, "no reduction witness within the length budget for " + a.str());
}

namespace {

GenExpr leaf_expr(const CurveClass& c) { return GenExpr{c, nullptr, nullptr}; }

GenExpr mul_expr(const CurveClass& value, GenExpr l, GenExpr r) {
    GenExpr e;
    e.value = value;
    e.left = std::make_unique<GenExpr>(std::move(l));
    e.right = std::make_unique<GenExpr>(std::move(r));
    return e;
}

// A class equal to a system member is peeled into a product of two
// generator-set classes by bounded search.
GenExpr express_member(const RibbonSurface& s, const FNSystem& fn, const CurveClass& a,
                       const SearchLimits& lim) {
    int bound = a.length() + lim.extra_len + 2;
    const auto& pool = candidate_pool(s, bound, lim.pool_budget);
    std::vector<const CurveClass*> cand;
    for (const auto& w : pool)
        if (intersection_profile(s, w, a).top() && in_generator_set(s, fn, w))
            cand.push_back(&w);
    for (const CurveClass* b1 : cand)
        for (const CurveClass* b2 : cand) {
            if (*b1 == *b2) continue;
            if (!intersection_profile(s, *b1, *b2).top()) continue;
            if (resolve_curves(s, *b1, *b2) == a)
                return mul_expr(a, leaf_expr(*b1), leaf_expr(*b2));
        }
    fail(Err::SearchExhausted, "no generator product for system member " + a.str());
}

GenExpr express_rec(const RibbonSurface& s, const FNSystem& fn, const CurveClass& a,
                    const SearchLimits& lim, int depth) {
    CCX_CHECK(depth < 64, "expression recursion is too deep");
    if (in_generator_set(s, fn, a)) return leaf_expr(a);
    for (const auto& f : fn.classes)
        if (a == f) return express_member(s, fn, a, lim);

    // pick the first system class the reduction lemma applies to
    size_t pivot = fn.classes.size();
    for (size_t i = 0; i < fn.classes.size(); ++i) {
        RelationProfile p = intersection_profile(s, a, fn.classes[i]);
        if (p.geo >= 2 && p.kind != Rel::perp0) {
            pivot = i;
            break;
        }
    }
    CCX_CHECK(pivot < fn.classes.size(), "class outside the generator set must admit a pivot");

    FNSystem rotated;
    rotated.classes.push_back(fn.classes[pivot]);
    for (size_t i = 0; i < fn.classes.size(); ++i)
        if (i != pivot) rotated.classes.push_back(fn.classes[i]);

    auto [b1, b2] = reduce_step(s, rotated, a, lim);
    GenExpr l = express_rec(s, fn, b1, lim, depth + 1);
    GenExpr r = express_rec(s, fn, b2, lim, depth + 1);
    return mul_expr(a, std::move(l), std::move(r));
}

}  // namespace

GenExpr express(const RibbonSurface& s, const FNSystem& fn, const CurveClass& a,
                const SearchLimits& lim) {
    CCX_CHECK(is_essential(s, a), "express needs an essential class");
    GenExpr e = express_rec(s, fn, a, lim, 0);
    CCX_CHECK(evaluate(s, e) == a, "expression must re-evaluate to its input");
    return e;
}

CurveClass evaluate(const RibbonSurface& s, const GenExpr& e) {
    if (e.leaf()) return e.value;
    CurveClass l = evaluate(s, *e.left);
    CurveClass r = evaluate(s, *e.right);
    CurveClass v = resolve_curves(s, l, r);
    CCX_CHECK(v == e.value, "expression node disagrees with its product");
    return v;
}

std::string genexpr_to_json(const GenExpr& e) {
    if (e.leaf()) return "[\"leaf\",\"" + e.value.str() + "\"]";
    return "[\"mul\"," + genexpr_to_json(*e.left) + "," + genexpr_to_json(*e.right) + "]";
}

}  // namespace ccx
