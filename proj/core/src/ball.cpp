#include "curvecx/ball.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

#include "curvecx/parallel.hpp"
#include "json.hpp"

namespace ccx {

using json = nlohmann::ordered_json;

namespace {

inline size_t pair_index(int u, int v) {
    // requires u < v
    return static_cast<size_t>(v) * (v - 1) / 2 + u;
}

}  // namespace

const RelationProfile& ComplexBall::rel(int u, int v) const {
    CCX_CHECK(u != v && u >= 0 && v >= 0 && u < size() && v < size(), "bad vertex pair");
    if (u > v) std::swap(u, v);
    return table[pair_index(u, v)];
}

int ComplexBall::index_of(const CurveClass& c) const {
    auto it = std::lower_bound(vertices.begin(), vertices.end(), c,
                               [](const BallVertex& a, const CurveClass& b) { return a.curve < b; });
    if (it == vertices.end() || !(it->curve == c)) return -1;
    return static_cast<int>(it - vertices.begin());
}

ComplexBall build_ball(const RibbonSurface& s, int max_len, int jobs, const EnumLimits& limits) {
    ComplexBall ball;
    ball.surface = s;
    ball.max_len = max_len;
    auto curves = enumerate_curves(s, max_len, limits);
    ball.vertices.reserve(curves.size());
    for (auto& c : curves) ball.vertices.push_back(BallVertex{std::move(c), false, false});

    int n = ball.size();
    parallel_for(n, jobs, [&](int v) {
        CurveType t = classify_curve(s, ball.vertices[v].curve);
        ball.vertices[v].separating = t != CurveType::nonseparating;
        ball.vertices[v].boundary_class = t == CurveType::boundary_class;
    });

    size_t pairs = static_cast<size_t>(n) * (n - 1) / 2;
    ball.table.resize(pairs);
    parallel_for(static_cast<int>(pairs), jobs, [&](int idx) {
        // invert the triangular index
        int v = static_cast<int>((1 + std::sqrt(1.0 + 8.0 * idx)) / 2);
        while (pair_index(0, v) > static_cast<size_t>(idx)) --v;
        while (pair_index(0, v + 1) <= static_cast<size_t>(idx)) ++v;
        int u = idx - static_cast<int>(pair_index(0, v));
        ball.table[idx] = intersection_profile(s, ball.vertices[u].curve, ball.vertices[v].curve);
    });
    return ball;
}

// ---- exact maximum clique (branch and bound with greedy colouring) ----

namespace {

struct CliqueSolver {
    int n;
    std::vector<std::vector<std::uint64_t>> adj;
    std::vector<int> best;

    bool edge(int u, int v) const { return adj[u][v >> 6] >> (v & 63) & 1; }

    void expand(std::vector<int>& cur, const std::vector<int>& cand) {
        if (cand.empty()) {
            if (cur.size() > best.size()) best = cur;
            return;
        }
        // greedy colouring gives the pruning bound
        std::vector<int> colour(cand.size());
        for (size_t i = 0; i < cand.size(); ++i) {
            int c = 0;
            for (bool clash = true; clash;) {
                clash = false;
                for (size_t j = 0; j < i; ++j)
                    if (colour[j] == c && edge(cand[i], cand[j])) {
                        clash = true;
                        ++c;
                        break;
                    }
            }
            colour[i] = c;
        }
        std::vector<size_t> order(cand.size());
        std::iota(order.begin(), order.end(), size_t{0});
        std::stable_sort(order.begin(), order.end(),
                         [&](size_t a, size_t b) { return colour[a] < colour[b]; });
        std::vector<int> sorted(cand.size()), scolour(cand.size());
        for (size_t i = 0; i < order.size(); ++i) {
            sorted[i] = cand[order[i]];
            scolour[i] = colour[order[i]];
        }

        for (size_t i = sorted.size(); i-- > 0;) {
            if (cur.size() + scolour[i] + 1 <= best.size()) return;
            int v = sorted[i];
            std::vector<int> next;
            for (size_t j = 0; j < i; ++j)
                if (edge(v, sorted[j])) next.push_back(sorted[j]);
            cur.push_back(v);
            expand(cur, next);
            cur.pop_back();
        }
    }
};

}  // namespace

std::pair<int, std::vector<CurveClass>> max_simplex(const ComplexBall& ball) {
    CCX_CHECK(ball.size() > 0, "max_simplex of an empty ball");
    int n = ball.size();
    CliqueSolver solver;
    solver.n = n;
    solver.adj.assign(n, std::vector<std::uint64_t>((n + 63) / 64, 0));
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u)
            if (ball.rel(u, v).kind == Rel::disjoint) {
                solver.adj[u][v >> 6] |= 1ull << (v & 63);
                solver.adj[v][u >> 6] |= 1ull << (u & 63);
            }
    std::vector<int> cur, cand(n);
    for (int i = 0; i < n; ++i) cand[i] = i;
    solver.expand(cur, cand);
    std::vector<CurveClass> witness;
    for (int v : solver.best) witness.push_back(ball.vertices[v].curve);
    std::sort(witness.begin(), witness.end());
    return {static_cast<int>(solver.best.size()), witness};
}

int max_separating_simplex(const ComplexBall& ball) {
    // restrict to separating vertices and reuse the solver on the subball
    std::vector<int> keep;
    for (int v = 0; v < ball.size(); ++v)
        if (ball.vertices[v].separating) keep.push_back(v);
    if (keep.empty()) return 0;
    ComplexBall sub;
    sub.surface = ball.surface;
    sub.max_len = ball.max_len;
    for (int v : keep) sub.vertices.push_back(ball.vertices[v]);
    int m = static_cast<int>(keep.size());
    sub.table.resize(static_cast<size_t>(m) * (m - 1) / 2);
    for (int v = 1; v < m; ++v)
        for (int u = 0; u < v; ++u)
            sub.table[pair_index(u, v)] = ball.rel(keep[u], keep[v]);
    return max_simplex(sub).first;
}

// ---- charts ----

bool Chart::has(const CurveClass& c) const {
    auto it = std::lower_bound(coord.begin(), coord.end(), c,
                               [](const auto& p, const CurveClass& k) { return p.first < k; });
    return it != coord.end() && it->first == c;
}

Slope Chart::coord_of(const CurveClass& c) const {
    auto it = std::lower_bound(coord.begin(), coord.end(), c,
                               [](const auto& p, const CurveClass& k) { return p.first < k; });
    CCX_CHECK(it != coord.end() && it->first == c, "curve outside the chart domain");
    return it->second;
}

Chart fit_chart(const ComplexBall& ball, const CurveClass& seed1, const CurveClass& seed2) {
    int i1 = ball.index_of(seed1), i2 = ball.index_of(seed2);
    if (i1 < 0 || i2 < 0) fail(Err::ChartInconsistent, "seed classes must lie in the ball");
    if (!ball.rel(i1, i2).top())
        fail(Err::ChartInconsistent, "seed pair must intersect once or twice with opposite sign");

    std::map<int, Slope> coord;
    coord[i1] = Slope{1, 0};
    coord[i2] = Slope{0, 1};

    bool changed = true;
    while (changed) {
        changed = false;
        std::vector<int> assigned;
        for (auto& [v, sl] : coord) assigned.push_back(v);
        for (int x : assigned)
            for (int y : assigned) {
                if (x == y) continue;
                if (!ball.rel(x, y).top()) continue;
                if (!farey_rel(coord[x], coord[y])) continue;
                CurveClass r =
                    resolve_curves(ball.surface, ball.vertices[x].curve, ball.vertices[y].curve);
                int rv = ball.index_of(r);
                if (rv < 0) continue;
                Slope sl = resolve(coord[x], coord[y]);
                auto it = coord.find(rv);
                if (it == coord.end()) {
                    coord[rv] = sl;
                    changed = true;
                } else if (!(it->second == sl)) {
                    fail(Err::ChartInconsistent,
                         "product of charted classes lands on a conflicting slope");
                }
            }
    }

    // relation exactness and injectivity over the whole domain
    for (auto& [x, sx] : coord)
        for (auto& [y, sy] : coord) {
            if (x >= y) continue;
            bool top = ball.rel(x, y).top();
            if (top != farey_rel(sx, sy))
                fail(Err::ChartInconsistent, "chart is not relation-exact on its domain");
            if (sx == sy) fail(Err::ChartInconsistent, "chart coordinates must be injective");
        }

    Chart chart;
    for (auto& [v, sl] : coord) chart.coord.push_back({ball.vertices[v].curve, sl});
    std::sort(chart.coord.begin(), chart.coord.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });

    // anchor: the class disjoint from the whole domain, when unique
    std::vector<int> anchors;
    for (int v = 0; v < ball.size(); ++v) {
        if (coord.count(v)) continue;
        bool disjoint_all = true;
        for (auto& [x, sl] : coord)
            if (ball.rel(v, x).kind != Rel::disjoint) {
                disjoint_all = false;
                break;
            }
        if (disjoint_all) anchors.push_back(v);
    }
    if (anchors.size() == 1) chart.anchor = ball.vertices[anchors[0]].curve;
    return chart;
}

std::optional<ModularMatrix> check_transitions(const Chart& c1, const Chart& c2) {
    std::vector<std::pair<Slope, Slope>> pairs;
    for (const auto& [curve, s1] : c1.coord)
        if (c2.has(curve)) pairs.push_back({s1, c2.coord_of(curve)});
    if (pairs.size() < 3)
        fail(Err::InsufficientOverlap, "chart transition needs at least 3 shared classes");
    try {
        return fit_modular_map(pairs);
    } catch (const Error& e) {
        if (e.code() == Err::Inconsistent) return std::nullopt;
        throw;
    }
}

// ---- serialization ----

std::string export_ball(const ComplexBall& ball, ExportFormat format, bool overlay_top) {
    if (format == ExportFormat::json) {
        json out;
        out["surface"] = {{"g", ball.surface.genus}, {"n", ball.surface.boundary}};
        out["max_len"] = ball.max_len;
        out["curves"] = json::array();
        for (int v = 0; v < ball.size(); ++v) {
            const auto& vert = ball.vertices[v];
            out["curves"].push_back({{"id", v},
                                     {"word", vert.curve.str()},
                                     {"separating", vert.separating},
                                     {"boundary_class", vert.boundary_class}});
        }
        out["pairs"] = json::array();
        for (int u = 0; u < ball.size(); ++u)
            for (int v = u + 1; v < ball.size(); ++v) {
                const auto& r = ball.rel(u, v);
                out["pairs"].push_back({{"u", u},
                                        {"v", v},
                                        {"kind", rel_name(r.kind)},
                                        {"geo", r.geo},
                                        {"alg", r.alg}});
            }
        return out.dump();
    }

    std::string dot = "graph ball {\n";
    for (int v = 0; v < ball.size(); ++v) {
        dot += "  " + std::to_string(v) + " [label=\"" + ball.vertices[v].curve.str() + "\"";
        if (ball.vertices[v].boundary_class)
            dot += " shape=doubleoctagon";
        else if (ball.vertices[v].separating)
            dot += " shape=doublecircle";
        dot += "];\n";
    }
    for (int u = 0; u < ball.size(); ++u)
        for (int v = u + 1; v < ball.size(); ++v) {
            const auto& r = ball.rel(u, v);
            if (r.kind == Rel::disjoint)
                dot += "  " + std::to_string(u) + " -- " + std::to_string(v) + ";\n";
            else if (overlay_top && r.top())
                dot += "  " + std::to_string(u) + " -- " + std::to_string(v) + " [style=dashed label=\"" +
                       rel_name(r.kind) + "\"];\n";
        }
    dot += "}\n";
    return dot;
}

ComplexBall parse_ball_json(const std::string& text) {
    json in = json::parse(text);
    ComplexBall ball;
    ball.surface = build_surface(in["surface"]["g"].get<int>(), in["surface"]["n"].get<int>());
    ball.max_len = in["max_len"].get<int>();
    for (const auto& c : in["curves"]) {
        BallVertex v;
        v.curve = CurveClass{parse_word(c["word"].get<std::string>(), ball.surface.rank)};
        v.separating = c["separating"].get<bool>();
        v.boundary_class = c["boundary_class"].get<bool>();
        ball.vertices.push_back(std::move(v));
    }
    int n = ball.size();
    ball.table.resize(static_cast<size_t>(n) * (n - 1) / 2);
    for (const auto& p : in["pairs"]) {
        int u = p["u"].get<int>(), v = p["v"].get<int>();
        RelationProfile r;
        r.geo = p["geo"].get<int>();
        r.alg = p["alg"].get<int>();
        std::string kind = p["kind"].get<std::string>();
        r.kind = kind == "equal"      ? Rel::equal
                 : kind == "disjoint" ? Rel::disjoint
                 : kind == "perp"     ? Rel::perp
                 : kind == "perp0"    ? Rel::perp0
                                      : Rel::other;
        CCX_CHECK(u < v && v < n, "bad pair indices in ball JSON");
        ball.table[pair_index(u, v)] = r;
    }
    return ball;
}

}  // namespace ccx
