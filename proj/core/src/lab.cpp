#include "curvecx/lab.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <numeric>
#include <set>

#include "curvecx/parallel.hpp"
#include "curvecx/resolution.hpp"
#include "json.hpp"

namespace ccx {

using json = nlohmann::ordered_json;

std::string report_to_json(const VerificationReport& r) {
    json out;
    out["lemma"] = r.lemma;
    out["checked"] = r.instances_checked;
    out["failures"] = r.failures;
    out["bounded"] = r.bounded;
    out["max_len"] = r.max_len;
    return out.dump();
}

namespace {

std::vector<std::vector<std::uint64_t>> disjointness_bitsets(const ComplexBall& ball) {
    int n = ball.size();
    std::vector<std::vector<std::uint64_t>> adj(n, std::vector<std::uint64_t>((n + 63) / 64, 0));
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u)
            if (ball.rel(u, v).kind == Rel::disjoint) {
                adj[u][v >> 6] |= 1ull << (v & 63);
                adj[v][u >> 6] |= 1ull << (u & 63);
            }
    return adj;
}

}  // namespace

VerificationReport verify_pentagon(const ComplexBall& ball) {
    if (ball.surface.genus != 0 || ball.surface.boundary != 5)
        fail(Err::WrongSurface, "the pentagon property lives on the five-holed sphere");
    VerificationReport rep;
    rep.lemma = "pentagon";
    rep.max_len = ball.max_len;
    rep.bounded = true;

    int n = ball.size();
    auto adj = disjointness_bitsets(ball);
    auto edge = [&](int u, int v) { return adj[u][v >> 6] >> (v & 63) & 1; };

    // Five-cycles of the disjointness graph, smallest vertex first and one
    // direction only; the pentagon order is the complement cycle.
    for (int v0 = 0; v0 < n; ++v0)
        for (int v1 = v0 + 1; v1 < n; ++v1) {
            if (!edge(v0, v1)) continue;
            for (int v2 = v0 + 1; v2 < n; ++v2) {
                if (v2 == v1 || !edge(v1, v2) || edge(v0, v2)) continue;
                for (int v3 = v0 + 1; v3 < n; ++v3) {
                    if (v3 == v1 || v3 == v2 || !edge(v2, v3)) continue;
                    if (edge(v0, v3) || edge(v1, v3)) continue;
                    for (int v4 = v1 + 1; v4 < n; ++v4) {
                        if (v4 == v2 || v4 == v3) continue;
                        if (!edge(v3, v4) || !edge(v4, v0)) continue;
                        if (edge(v1, v4) || edge(v2, v4)) continue;
                        // induced disjointness graph is exactly this 5-cycle
                        ++rep.instances_checked;
                        int pent[5] = {v0, v2, v4, v1, v3};
                        for (int k = 0; k < 5; ++k) {
                            int a = pent[k], b = pent[(k + 1) % 5];
                            if (ball.rel(a, b).kind != Rel::perp0)
                                rep.failures.push_back(
                                    "consecutive pair not perp0: " + ball.vertices[a].curve.str() +
                                    " , " + ball.vertices[b].curve.str());
                        }
                    }
                }
            }
        }
    return rep;
}

VerificationReport verify_unique_common_neighbor(const ComplexBall& ball) {
    const auto& s = ball.surface;
    bool ok_surface = (s.genus == 0 && s.boundary == 5) || (s.genus == 1 && s.boundary == 2);
    if (!ok_surface)
        fail(Err::WrongSurface, "the unique-neighbour property needs (0,5) or (1,2)");
    VerificationReport rep;
    rep.lemma = "unique-common-neighbor";
    rep.max_len = ball.max_len;
    rep.bounded = true;

    int n = ball.size();
    auto adj = disjointness_bitsets(ball);
    size_t words = adj.empty() ? 0 : adj[0].size();
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            int common = 0;
            for (size_t w = 0; w < words; ++w)
                common += __builtin_popcountll(adj[u][w] & adj[v][w]);
            ++rep.instances_checked;
            if (common > 1)
                rep.failures.push_back("pair with " + std::to_string(common) +
                                       " common disjoint classes: " + ball.vertices[u].curve.str() +
                                       " , " + ball.vertices[v].curve.str());
        }
    return rep;
}

namespace {

void check_rel(VerificationReport& rep, const ComplexBall& ball, const CurveClass& x,
               const CurveClass& y, bool want_disjoint, const std::string& label) {
    ++rep.instances_checked;
    Rel k = intersection_profile(ball.surface, x, y).kind;
    bool disjoint = k == Rel::disjoint;
    if (disjoint != want_disjoint)
        rep.failures.push_back(label + ": got " + rel_name(k));
}

void check_kind(VerificationReport& rep, const ComplexBall& ball, const CurveClass& x,
                const CurveClass& y, Rel want, const std::string& label) {
    ++rep.instances_checked;
    Rel k = intersection_profile(ball.surface, x, y).kind;
    if (k != want)
        rep.failures.push_back(label + ": got " + std::string(rel_name(k)) + ", want " +
                               rel_name(want));
}

void check_not_top(VerificationReport& rep, const ComplexBall& ball, const CurveClass& x,
                   const CurveClass& y, const std::string& label) {
    ++rep.instances_checked;
    RelationProfile p = intersection_profile(ball.surface, x, y);
    if (p.top()) rep.failures.push_back(label + ": unexpectedly " + rel_name(p.kind));
}

}  // namespace

VerificationReport verify_config_identities(const ComplexBall& ball) {
    const auto& s = ball.surface;
    VerificationReport rep;
    rep.lemma = "config-identities";
    rep.max_len = ball.max_len;
    rep.bounded = true;
    int n = ball.size();

    if (s.genus == 0 && s.boundary == 5) {
        // chain a perp0 b perp0 c with a, c disjoint
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) {
                if (b == a || ball.rel(std::min(a, b), std::max(a, b)).kind != Rel::perp0) continue;
                for (int c = 0; c < n; ++c) {
                    if (c == a || c == b) continue;
                    if (ball.rel(std::min(b, c), std::max(b, c)).kind != Rel::perp0) continue;
                    if (ball.rel(std::min(a, c), std::max(a, c)).kind != Rel::disjoint) continue;
                    const CurveClass &A = ball.vertices[a].curve, &B = ball.vertices[b].curve,
                                     &C = ball.vertices[c].curve;
                    CurveClass ab = resolve_curves(s, A, B), ba = resolve_curves(s, B, A);
                    CurveClass cb = resolve_curves(s, C, B), bc = resolve_curves(s, B, C);
                    check_rel(rep, ball, ab, cb, true, "ab and cb must be disjoint");
                    check_rel(rep, ball, ab, bc, false, "ab and bc must intersect");
                    check_rel(rep, ball, ba, cb, false, "ba and cb must intersect");
                    check_rel(rep, ball, ba, bc, true, "ba and bc must be disjoint");
                    return rep;
                }
            }
        fail(Err::ConfigNotFound, "no perp0 chain of three with disjoint ends in the ball");
    }

    if (s.genus == 1 && s.boundary == 2) {
        // chain a perp0 b perp c perp d with non-consecutive members disjoint
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) {
                if (b == a || ball.rel(std::min(a, b), std::max(a, b)).kind != Rel::perp0) continue;
                for (int c = 0; c < n; ++c) {
                    if (c == a || c == b) continue;
                    if (ball.rel(std::min(b, c), std::max(b, c)).kind != Rel::perp) continue;
                    if (ball.rel(std::min(a, c), std::max(a, c)).kind != Rel::disjoint) continue;
                    for (int d = 0; d < n; ++d) {
                        if (d == a || d == b || d == c) continue;
                        if (ball.rel(std::min(c, d), std::max(c, d)).kind != Rel::perp) continue;
                        if (ball.rel(std::min(a, d), std::max(a, d)).kind != Rel::disjoint)
                            continue;
                        if (ball.rel(std::min(b, d), std::max(b, d)).kind != Rel::disjoint)
                            continue;
                        const CurveClass &A = ball.vertices[a].curve, &B = ball.vertices[b].curve,
                                         &C = ball.vertices[c].curve, &D = ball.vertices[d].curve;
                        CurveClass ab = resolve_curves(s, A, B), ba = resolve_curves(s, B, A);
                        CurveClass bc = resolve_curves(s, B, C), cb = resolve_curves(s, C, B);
                        CurveClass cd = resolve_curves(s, C, D), dc = resolve_curves(s, D, C);
                        check_kind(rep, ball, ab, cb, Rel::perp, "ab perp cb");
                        check_not_top(rep, ball, ab, bc, "ab not top-related to bc");
                        check_not_top(rep, ball, ba, cb, "ba not top-related to cb");
                        check_kind(rep, ball, ba, bc, Rel::perp, "ba perp bc");
                        check_rel(rep, ball, dc, bc, true, "dc and bc must be disjoint");
                        check_rel(rep, ball, cd, cb, true, "cd and cb must be disjoint");
                        check_rel(rep, ball, dc, cb, false, "dc and cb must intersect");
                        check_rel(rep, ball, cd, bc, false, "cd and bc must intersect");
                        return rep;
                    }
                }
            }
        fail(Err::ConfigNotFound, "no perp0/perp chain of four in the ball");
    }
    fail(Err::WrongSurface, "configuration identities live on (0,5) or (1,2)");
}

VerificationReport verify_config_identities(const RibbonSurface& s, int max_len) {
    return verify_config_identities(build_ball(s, max_len));
}

// ---- exceptional automorphism ----

namespace {

std::vector<MappingMove> half_twist_alphabet(const RibbonSurface& base) {
    std::vector<MappingMove> moves;
    for (int i = 1; i <= base.boundary - 1; ++i) {
        moves.push_back(preset_move(base, "s" + std::to_string(i)));
        moves.push_back(preset_move(base, "S" + std::to_string(i)));
    }
    return moves;
}

// Shortest preset word taking `from` to `to` in the curve orbit, by
// breadth-first search with a word-length cap.
std::optional<std::vector<std::string>> orbit_path(const RibbonSurface& base,
                                                   const CurveClass& from, const CurveClass& to,
                                                   const ExceptionalLimits& lim) {
    auto alphabet = half_twist_alphabet(base);
    std::map<CurveClass, std::pair<CurveClass, int>> parent;  // class -> (previous, move index)
    std::deque<CurveClass> queue;
    parent.emplace(from, std::make_pair(from, -1));
    queue.push_back(from);
    std::uint64_t expanded = 0;
    while (!queue.empty()) {
        CurveClass cur = queue.front();
        queue.pop_front();
        if (cur == to) {
            std::vector<std::string> path;
            CurveClass at = to;
            while (true) {
                auto [prev, move] = parent.at(at);
                if (move < 0) break;
                path.push_back(alphabet[move].name);
                at = prev;
            }
            std::reverse(path.begin(), path.end());
            return path;
        }
        if (++expanded > lim.orbit_budget) break;
        for (size_t m = 0; m < alphabet.size(); ++m) {
            Word w = apply_move_to_word(base, alphabet[m], cur.word);
            CurveClass next = canon_curve(base, w);
            if (next.length() > lim.word_cap) continue;
            if (parent.count(next)) continue;
            parent.emplace(next, std::make_pair(cur, static_cast<int>(m)));
            queue.push_back(next);
        }
    }
    return std::nullopt;
}

}  // namespace

ExceptionalResult exceptional_automorphism(int max_len, int jobs, const ExceptionalLimits& lim) {
    CoverSpec spec = CoverSpec::standard();
    ComplexBall base_ball = build_ball(spec.base, max_len, jobs);
    int n = base_ball.size();
    CCX_CHECK(n > 0, "empty base ball");

    std::vector<CurveClass> lifts(n);
    std::vector<bool> lift_sep(n);
    parallel_for(n, jobs, [&](int v) {
        lifts[v] = lift_double_cover(spec, base_ball.vertices[v].curve);
        lift_sep[v] = classify_curve(spec.cover, lifts[v]) != CurveType::nonseparating;
    });

    ExceptionalResult res;
    for (int v = 0; v < n; ++v) (lift_sep[v] ? res.lifted_separating : res.lifted_nonseparating)++;

    // a separating-lift source and a nonseparating-lift target joined by a
    // half-twist word
    std::optional<std::vector<std::string>> path;
    int from = -1, to = -1;
    for (int u = 0; u < n && !path; ++u) {
        if (!lift_sep[u]) continue;
        for (int v = 0; v < n && !path; ++v) {
            if (lift_sep[v]) continue;
            path = orbit_path(spec.base, base_ball.vertices[u].curve, base_ball.vertices[v].curve,
                              lim);
            if (path) {
                from = u;
                to = v;
            }
        }
    }
    if (!path)
        fail(Err::SearchExhausted, "no half-twist word joining a separating lift to a "
                                   "nonseparating one within the budget");
    res.base_from = base_ball.vertices[from].curve;
    res.base_to = base_ball.vertices[to].curve;
    res.moves = *path;

    MappingClassWord h;
    for (const auto& name : res.moves) h.moves.push_back(preset_move(spec.base, name));

    // the induced self-map of the lifted ball
    std::vector<CurveClass> images(n);
    parallel_for(n, jobs, [&](int v) {
        CurveClass moved = apply_mapping_class(spec.base, h, base_ball.vertices[v].curve);
        images[v] = lift_double_cover(spec, moved);
    });

    PartialAutomorphism& phi = res.phi;
    for (int v = 0; v < n; ++v) phi.mapping.push_back({lifts[v], images[v]});

    // certification, recomputed from raw intersection data
    phi.preserves_disjointness = true;
    phi.preserves_perp = true;
    phi.preserves_perp0 = true;
    phi.preserves_separating = true;
    VerificationReport& rep = res.report;
    rep.lemma = "exceptional-automorphism";
    rep.max_len = max_len;
    rep.bounded = true;

    std::vector<std::vector<std::pair<Rel, Rel>>> rels(n);
    parallel_for(n, jobs, [&](int v) {
        rels[v].reserve(v);
        for (int u = 0; u < v; ++u)
            rels[v].push_back({intersection_profile(spec.cover, lifts[u], lifts[v]).kind,
                               intersection_profile(spec.cover, images[u], images[v]).kind});
    });
    for (int v = 0; v < n; ++v)
        for (int u = 0; u < v; ++u) {
            auto [before, after] = rels[v][u];
            ++rep.instances_checked;
            if ((before == Rel::disjoint) != (after == Rel::disjoint)) {
                phi.preserves_disjointness = false;
                rep.failures.push_back("disjointness broken at " + lifts[u].str() + " , " +
                                       lifts[v].str());
            }
            if ((before == Rel::perp) != (after == Rel::perp)) phi.preserves_perp = false;
            if ((before == Rel::perp0) != (after == Rel::perp0)) phi.preserves_perp0 = false;
        }
    for (int v = 0; v < n; ++v) {
        bool sep_before = lift_sep[v];
        bool sep_after = classify_curve(spec.cover, images[v]) != CurveType::nonseparating;
        if (sep_before != sep_after) {
            phi.preserves_separating = false;
            if (!phi.separating_witness && sep_before)
                phi.separating_witness = std::make_pair(lifts[v], images[v]);
        }
    }
    CCX_CHECK(phi.separating_witness.has_value(),
              "the half-twist word must move a separating lift off the separating set");
    return res;
}

// ---- slope dictionaries ----

const CurveClass& SlopeDictionary::word_of(const Slope& s) const {
    auto it = std::lower_bound(entries.begin(), entries.end(), s,
                               [](const auto& e, const Slope& k) { return e.first < k; });
    CCX_CHECK(it != entries.end() && it->first == s, "slope outside the dictionary box");
    return it->second;
}

namespace {

struct DictSeed {
    std::vector<CurveClass> base;    // classes of slopes inf, 0, 1, -1
    std::vector<MappingMove> twists;
    int factor;
};

// Identify the slope of a word from its intersections with the seed
// classes: |q|, |p| and |p - q| up to the overall projective sign.
Slope recognize_slope(const RibbonSurface& s, const DictSeed& seed, const CurveClass& c) {
    auto geo_div = [&](const CurveClass& x) {
        int g = intersection_profile(s, c, x).geo;
        CCX_CHECK(g % seed.factor == 0, "intersection is not a multiple of the model factor");
        return g / seed.factor;
    };
    int iq = geo_div(seed.base[0]);
    int ip = geo_div(seed.base[1]);
    int id = geo_div(seed.base[2]);
    CCX_CHECK(ip != 0 || iq != 0, "word meets neither seed class");
    if (iq == 0) return canon(1, 0);
    if (ip == 0) return canon(0, 1);
    // q > 0 canonical; the sign of p is decided by |p - q|
    if (std::abs(ip - iq) == id) return canon(ip, iq);
    CCX_CHECK(ip + iq == id, "slope recognition failed");
    return canon(-ip, iq);
}

DictSeed make_dict_seed(const RibbonSurface& s) {
    DictSeed seed;
    if (s.genus == 1 && s.boundary == 1) {
        seed.factor = 1;
        CurveClass a = canon_curve(s, parse_word("a", 2)), b = canon_curve(s, parse_word("b", 2));
        seed.base = {a, b, resolve_curves(s, a, b), resolve_curves(s, b, a)};
        for (const char* name : {"ta", "Ta", "tb", "Tb"})
            seed.twists.push_back(preset_move(s, name));
        return seed;
    }
    CCX_CHECK(s.genus == 0 && s.boundary == 4, "dictionary models are (1,1) and (0,4)");
    seed.factor = 2;
    CurveClass u = canon_curve(s, parse_word("ab", 3)), v = canon_curve(s, parse_word("bc", 3));
    seed.base = {u, v, resolve_curves(s, u, v), resolve_curves(s, v, u)};
    // twists along the two seed curves: conjugate the enclosed generators
    auto conjugating_move = [&](int g0, int g1, bool inverse) {
        Word w = {make_letter(g0, false), make_letter(g1, false)};
        if (inverse) w = inverse_word(w);
        std::vector<Word> images(s.rank);
        for (int g = 0; g < s.rank; ++g) {
            if (g == g0 || g == g1) {
                Word im = w;
                im.push_back(make_letter(g, false));
                Word wi = inverse_word(w);
                im.insert(im.end(), wi.begin(), wi.end());
                images[g] = free_reduce(im);
            } else {
                images[g] = Word{make_letter(g, false)};
            }
        }
        return explicit_move(s, images);
    };
    seed.twists.push_back(conjugating_move(0, 1, false));
    seed.twists.push_back(conjugating_move(0, 1, true));
    seed.twists.push_back(conjugating_move(1, 2, false));
    seed.twists.push_back(conjugating_move(1, 2, true));
    return seed;
}

}  // namespace

SlopeDictionary build_slope_dictionary(int g, int n, int bound) {
    SlopeDictionary dict;
    dict.surface = build_surface(g, n);
    const RibbonSurface& s = dict.surface;
    DictSeed seed = make_dict_seed(s);
    dict.factor = seed.factor;

    // slope action of each twist, fitted from the images of the seeds
    std::vector<ModularMatrix> action;
    std::vector<Slope> base_slopes = {canon(1, 0), canon(0, 1), canon(1, 1)};
    for (const auto& tw : seed.twists) {
        std::vector<std::pair<Slope, Slope>> pairs;
        for (int k = 0; k < 3; ++k) {
            CurveClass img =
                canon_curve(s, apply_move_to_word(s, tw, seed.base[k].word));
            pairs.push_back({base_slopes[k], recognize_slope(s, seed, img)});
        }
        action.push_back(fit_modular_map(pairs));
    }

    std::map<Slope, CurveClass> table;
    table[canon(1, 0)] = seed.base[0];
    table[canon(0, 1)] = seed.base[1];
    table[canon(1, 1)] = seed.base[2];
    table[canon(-1, 1)] = seed.base[3];

    // Euclidean descent: some twist pulls any other slope strictly closer
    auto weight = [](const Slope& x) { return std::abs(x.p) + std::abs(x.q); };
    std::function<CurveClass(const Slope&)> word_for = [&](const Slope& target) -> CurveClass {
        auto it = table.find(target);
        if (it != table.end()) return it->second;
        for (size_t k = 0; k < seed.twists.size(); ++k) {
            Slope pulled = act(action[k].inverse(), target);
            if (weight(pulled) < weight(target)) {
                CurveClass inner = word_for(pulled);
                CurveClass out =
                    canon_curve(s, apply_move_to_word(s, seed.twists[k], inner.word));
                CCX_CHECK(recognize_slope(s, seed, out) == target,
                          "descent produced a word of the wrong slope");
                table[target] = out;
                return out;
            }
        }
        CCX_CHECK(false, "no twist reduces " + to_string(target));
        return CurveClass{};
    };

    for (int p = -bound; p <= bound; ++p)
        for (int q = 0; q <= bound; ++q) {
            if ((p == 0 && q == 0) || (q == 0 && p != 1)) continue;
            if (q > 0 && std::gcd(std::abs(p), q) != 1) continue;
            Slope target = canon(p, q);
            dict.entries.push_back({target, word_for(target)});
        }
    std::sort(dict.entries.begin(), dict.entries.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return dict;
}

VerificationReport verify_farey_model(int bound, int jobs) {
    VerificationReport rep;
    rep.lemma = "farey-cross-validation";
    rep.max_len = bound;
    rep.bounded = true;
    for (auto [g, n] : {std::pair<int, int>{1, 1}, {0, 4}}) {
        SlopeDictionary dict = build_slope_dictionary(g, n, bound);
        const auto& e = dict.entries;
        int m = static_cast<int>(e.size());
        std::vector<std::vector<std::string>> fails(m);
        std::vector<int> counted(m, 0);
        parallel_for(m, jobs, [&](int i) {
            for (int j = i + 1; j < m; ++j) {
                ++counted[i];
                int geo = intersection_profile(dict.surface, e[i].second, e[j].second).geo;
                std::int64_t want = dict.factor * std::abs(det(e[i].first, e[j].first));
                if (geo != want)
                    fails[i].push_back("(" + std::to_string(g) + "," + std::to_string(n) +
                                       ") slopes " + to_string(e[i].first) + "," +
                                       to_string(e[j].first) + ": geo " + std::to_string(geo) +
                                       " != " + std::to_string(want));
            }
        });
        for (int i = 0; i < m; ++i) {
            rep.instances_checked += counted[i];
            for (auto& f : fails[i]) rep.failures.push_back(std::move(f));
        }
    }
    return rep;
}

VerificationReport verify_resolution_characterization(int bound) {
    VerificationReport rep;
    rep.lemma = "resolution-characterization";
    rep.max_len = bound;
    rep.bounded = true;
    std::vector<Slope> box;
    for (int p = -bound; p <= bound; ++p)
        for (int q = 0; q <= bound; ++q) {
            if (p == 0 && q == 0) continue;
            if (q == 0 && p != 1) continue;
            if (q > 0 && std::gcd(std::abs(p), q) != 1) continue;
            box.push_back(canon(p, q));
        }
    int big = 2 * bound + 2;
    for (const Slope& s : box)
        for (const Slope& t : box) {
            if (s == t || !farey_rel(s, t)) continue;
            ++rep.instances_checked;
            std::set<Slope> neighbours;
            for (int p = -big; p <= big; ++p)
                for (int q = -big; q <= big; ++q) {
                    if (p == 0 && q == 0) continue;
                    Slope u = canon(p, q);
                    if (farey_rel(u, s) && farey_rel(u, t)) neighbours.insert(u);
                }
            std::set<Slope> got = {resolve(s, t), resolve(t, s)};
            bool ok = neighbours == got && got.size() == 2;
            if (ok)
                for (const Slope& x : got)
                    for (const Slope& y : got)
                        if (x != y && farey_rel(x, y)) ok = false;
            if (!ok)
                rep.failures.push_back("pair " + to_string(s) + "," + to_string(t));
        }
    return rep;
}

VerificationReport verify_charts(int max_len_models, int max_len_05, int jobs) {
    VerificationReport rep;
    rep.lemma = "chart-atlas";
    rep.max_len = std::max(max_len_models, max_len_05);
    rep.bounded = true;

    auto run_surface = [&](const ComplexBall& ball, size_t max_charts) {
        std::vector<Chart> charts;
        for (int u = 0; u < ball.size() && charts.size() < max_charts; ++u)
            for (int v = u + 1; v < ball.size() && charts.size() < max_charts; ++v) {
                if (!ball.rel(u, v).top()) continue;
                try {
                    charts.push_back(
                        fit_chart(ball, ball.vertices[u].curve, ball.vertices[v].curve));
                    ++rep.instances_checked;  // one relation-exact chart
                } catch (const Error& e) {
                    if (e.code() != Err::ChartInconsistent) throw;
                    rep.failures.push_back(std::string("chart inconsistent: ") + e.what());
                }
            }
        for (size_t i = 0; i < charts.size(); ++i)
            for (size_t j = i + 1; j < charts.size(); ++j) {
                int overlap = 0;
                for (const auto& [curve, sl] : charts[i].coord)
                    if (charts[j].has(curve)) ++overlap;
                if (overlap < 3) continue;
                ++rep.instances_checked;
                auto m = check_transitions(charts[i], charts[j]);
                if (!m)
                    rep.failures.push_back("transition not projective integer");
                else if (std::abs(m->determinant()) != 1)
                    rep.failures.push_back("transition determinant not a unit");
            }
    };

    run_surface(build_ball(build_surface(1, 1), max_len_models, jobs), 12);
    run_surface(build_ball(build_surface(0, 4), max_len_models, jobs), 12);
    run_surface(build_ball(build_surface(0, 5), max_len_05, jobs), 12);
    return rep;
}

VerificationReport verify_dimensions(int jobs) {
    VerificationReport rep;
    rep.lemma = "dimension-checks";
    rep.bounded = true;
    struct Fixture {
        int g, n, max_len;
    };
    // smallest radii at which the maximal simplex sizes stabilize
    std::vector<Fixture> fixtures = {{0, 5, 4}, {1, 2, 4}, {1, 3, 4}, {0, 6, 4}};
    for (const auto& f : fixtures) {
        rep.max_len = std::max(rep.max_len, f.max_len);
        ComplexBall ball = build_ball(build_surface(f.g, f.n), f.max_len, jobs);
        int want_full = 3 * f.g + f.n - 3;
        int want_sep = 2 * f.g + f.n - 3;
        ++rep.instances_checked;
        int got_full = max_simplex(ball).first;
        if (got_full != want_full)
            rep.failures.push_back("(" + std::to_string(f.g) + "," + std::to_string(f.n) +
                                   ") max simplex " + std::to_string(got_full) + " != " +
                                   std::to_string(want_full));
        ++rep.instances_checked;
        int got_sep = max_separating_simplex(ball);
        if (got_sep != want_sep)
            rep.failures.push_back("(" + std::to_string(f.g) + "," + std::to_string(f.n) +
                                   ") separating simplex " + std::to_string(got_sep) + " != " +
                                   std::to_string(want_sep));
    }
    return rep;
}

std::string exceptional_to_json(const ExceptionalResult& r) {
    json out;
    out["base_from"] = r.base_from.str();
    out["base_to"] = r.base_to.str();
    out["moves"] = r.moves;
    out["lifted_separating"] = r.lifted_separating;
    out["lifted_nonseparating"] = r.lifted_nonseparating;
    out["mapping"] = json::array();
    for (const auto& [a, b] : r.phi.mapping)
        out["mapping"].push_back({{"from", a.str()}, {"to", b.str()}});
    out["certification"] = {
        {"preserves_disjointness", r.phi.preserves_disjointness},
        {"preserves_perp", r.phi.preserves_perp},
        {"preserves_perp0", r.phi.preserves_perp0},
        {"preserves_separating", r.phi.preserves_separating},
    };
    if (r.phi.separating_witness)
        out["separating_witness"] = {{"from", r.phi.separating_witness->first.str()},
                                     {"to", r.phi.separating_witness->second.str()}};
    out["report"] = json::parse(report_to_json(r.report));
    return out.dump();
}

}  // namespace ccx
