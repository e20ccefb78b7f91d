#include <algorithm>
#include <map>
#include <numeric>
#include <vector>

#include "curvecx/curves.hpp"
#include "curvecx/intersect.hpp"

namespace ccx {

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

struct Passage {
    int t;     // position along the curve word
    bool out;  // leaving the vertex disc (else arriving)
    Ray ray;   // outward reading; first letter equals the dart
};

}  // namespace

// Cuts the fattened surface along a taut embedded representative of c.
// The curve meets each band in parallel strands and the vertex disc in
// disjoint chords; the pieces are reassembled and classified by Euler
// characteristic and boundary bookkeeping.
std::vector<std::pair<int, int>> cut_along(const RibbonSurface& s, const CurveClass& c) {
    CCX_CHECK(!c.word.empty(), "cut along an empty word");
    CCX_CHECK(is_primitive(c.word), "cut along a non-primitive class");
    if (self_intersection_count(s, c.word) != 0)
        fail(Err::NotSimple, "cut requires a simple class: " + c.str());

    const Word& w = c.word;
    const int m = c.length();
    const int darts = s.dart_count();

    // Transversal order of the curve's passages through each dart,
    // induced by the boundary circle of the universal cover.
    std::vector<std::vector<Passage>> at_dart(darts);
    for (int t = 0; t < m; ++t) {
        at_dart[w[t]].push_back(Passage{t, true, Ray{&w, t, true}});
        at_dart[inv(w[t])].push_back(Passage{t, false, Ray{&w, (t + 1) % m, false}});
    }
    for (int d = 0; d < darts; ++d) {
        auto& ps = at_dart[d];
        std::sort(ps.begin(), ps.end(), [&](const Passage& x, const Passage& y) {
            int bound = 4 * m + 4;
            int k = common_prefix_len(x.ray, y.ray, bound);
            CCX_CHECK(k >= 1 && k < bound, "passage rays must split strictly");
            Letter y1 = ray_at(x.ray, k), y2 = ray_at(y.ray, k);
            Letter back = inv(ray_at(x.ray, k - 1));
            int n = darts;
            int d1 = ((s.pos(y1) - s.pos(back)) % n + n) % n;
            int d2 = ((s.pos(y2) - s.pos(back)) % n + n) % n;
            return d1 < d2;
        });
    }

    // Strands of a band appear in opposite transversal order at its two
    // ends; this is forced by the oriented gluing and certifies the order
    // convention.
    for (int g = 0; g < s.rank; ++g) {
        const auto& plus = at_dart[make_letter(g, false)];
        const auto& minus = at_dart[make_letter(g, true)];
        CCX_CHECK(plus.size() == minus.size(), "band strand counts disagree");
        size_t p = plus.size();
        for (size_t k = 0; k < p; ++k)
            CCX_CHECK(plus[k].t == minus[p - 1 - k].t, "band strand order is not reversed");
    }

    // Chord endpoints around the vertex disc. Chord t joins the arrival of
    // letter t-1 to the departure of letter t.
    auto chord_of = [&](const Passage& p) { return p.out ? p.t : (p.t + 1) % m; };

    // Sweep the disc boundary, assigning faces of the chord diagram by the
    // set of chords separating each boundary arc from the start arc.
    std::map<std::vector<int>, int> face_ids;
    auto face_of_stack = [&](const std::vector<int>& st) {
        auto [it, fresh] = face_ids.emplace(st, static_cast<int>(face_ids.size()));
        (void)fresh;
        return it->second;
    };
    std::vector<int> stack;
    std::vector<std::vector<int>> interval_face(darts);
    std::vector<int> corner_face(darts, -1);
    std::vector<std::pair<int, int>> chord_faces(m, {-1, -1});
    std::vector<bool> open_chord(m, false);

    int current = face_of_stack(stack);
    for (int p = 0; p < darts; ++p) {
        Letter d = s.cyclic_order[p];
        interval_face[d].push_back(current);
        for (const Passage& ps : at_dart[d]) {
            int chord = chord_of(ps);
            if (!open_chord[chord]) {
                open_chord[chord] = true;
                stack.push_back(chord);
                int after = face_of_stack(stack);
                chord_faces[chord] = {current, after};
                current = after;
            } else {
                CCX_CHECK(!stack.empty() && stack.back() == chord,
                          "chords of a simple curve must be non-crossing");
                stack.pop_back();
                current = face_of_stack(stack);
            }
            interval_face[d].push_back(current);
        }
        corner_face[p] = current;
    }
    CCX_CHECK(stack.empty(), "unbalanced chord endpoints");
    int faces = static_cast<int>(face_ids.size());
    CCX_CHECK(faces == m + 1, "a disc with m disjoint chords has m+1 faces");

    // Nodes: disc faces, then band pieces (edge g has strands+1 pieces).
    std::vector<int> piece_base(s.rank + 1, 0);
    piece_base[0] = faces;
    for (int g = 0; g < s.rank; ++g)
        piece_base[g + 1] = piece_base[g] + static_cast<int>(at_dart[make_letter(g, false)].size()) + 1;
    int nodes = piece_base[s.rank];

    UnionFind uf(nodes);
    int gluings = 0;
    for (int d = 0; d < darts; ++d) {
        int g = gen_of(d);
        int p = static_cast<int>(at_dart[make_letter(g, false)].size());
        for (int k = 0; k <= p; ++k) {
            int piece = is_inverse(d) ? p - k : k;
            uf.unite(interval_face[d][k], piece_base[g] + piece);
            ++gluings;
        }
    }

    std::map<int, int> comp_index;
    auto comp_of = [&](int node) {
        int root = uf.find(node);
        auto [it, fresh] = comp_index.emplace(root, static_cast<int>(comp_index.size()));
        (void)fresh;
        return it->second;
    };
    for (int node = 0; node < nodes; ++node) comp_of(node);
    int ncomp = static_cast<int>(comp_index.size());

    std::vector<int> chi(ncomp, 0), circles(ncomp, 0);
    for (int node = 0; node < nodes; ++node) chi[comp_of(node)] += 1;
    for (int d = 0; d < darts; ++d) {
        int g = gen_of(d);
        int p = static_cast<int>(at_dart[make_letter(g, false)].size());
        for (int k = 0; k <= p; ++k) chi[comp_of(interval_face[d][k])] -= 1;
    }

    // Original boundary circles keep their component; every corner a walk
    // crosses must agree.
    for (const Word& walk : s.walks) {
        int comp = -1;
        for (Letter d : walk) {
            int cpos = ((s.pos(inv(d)) - 1) % darts + darts) % darts;
            int cc = comp_of(corner_face[cpos]);
            CCX_CHECK(comp == -1 || comp == cc, "boundary walk split across components");
            comp = cc;
        }
        circles[comp] += 1;
    }
    // The two copies of the cut curve border the faces beside any chord.
    circles[comp_of(chord_faces[0].first)] += 1;
    circles[comp_of(chord_faces[0].second)] += 1;

    int total_chi = 0, total_circles = 0;
    std::vector<std::pair<int, int>> out;
    for (int comp = 0; comp < ncomp; ++comp) {
        total_chi += chi[comp];
        total_circles += circles[comp];
        CCX_CHECK(circles[comp] >= 1, "component without boundary");
        int twice_g = 2 - chi[comp] - circles[comp];
        CCX_CHECK(twice_g >= 0 && twice_g % 2 == 0, "cut piece is not an orientable surface");
        out.push_back({twice_g / 2, circles[comp]});
    }
    CCX_CHECK(total_chi == 1 - s.rank, "Euler characteristic not preserved by the cut");
    CCX_CHECK(total_circles == s.boundary + 2, "cut must add exactly two boundary circles");

    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.first != b.first ? a.first > b.first : a.second < b.second; });
    return out;
}

}  // namespace ccx
