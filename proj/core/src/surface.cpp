#include "curvecx/surface.hpp"

#include <algorithm>
#include <sstream>

namespace ccx {

int RibbonSurface::orient_darts(Letter x, Letter y, Letter z) const {
    int px = pos(x), py = pos(y), pz = pos(z);
    CCX_CHECK(px != py && py != pz && px != pz, "orient_darts needs distinct darts");
    int n = dart_count();
    int dy = ((py - px) % n + n) % n;
    int dz = ((pz - px) % n + n) % n;
    return dy < dz ? 1 : -1;
}

bool RibbonSurface::peripheral(const Word& canonical_word) const {
    for (const Word& w : walk_classes)
        if (w == canonical_word) return true;
    return false;
}

std::vector<Word> trace_faces(const std::vector<Letter>& cyclic_order, int rank) {
    int n = static_cast<int>(cyclic_order.size());
    CCX_CHECK(n == 2 * rank, "cyclic order must list every dart once");
    std::vector<int> pos(n, -1);
    for (int i = 0; i < n; ++i) {
        Letter l = cyclic_order[i];
        CCX_CHECK(l >= 0 && l < n && pos[l] == -1, "cyclic order must be a permutation of darts");
        pos[l] = i;
    }
    auto next = [&](Letter d) {
        int p = pos[inv(d)];
        return cyclic_order[(p - 1 + n) % n];
    };
    std::vector<bool> seen(n, false);
    std::vector<Word> faces;
    for (int i = 0; i < n; ++i) {
        Letter start = cyclic_order[i];
        if (seen[start]) continue;
        Word face;
        Letter d = start;
        do {
            CCX_CHECK(!seen[d], "face tracing revisited a dart");
            seen[d] = true;
            face.push_back(d);
            d = next(d);
        } while (d != start);
        faces.push_back(std::move(face));
    }
    return faces;
}

RibbonSurface make_ribbon_surface(int rank, std::vector<Letter> cyclic_order, int expect_g,
                                  int expect_n) {
    RibbonSurface s;
    s.rank = rank;
    s.cyclic_order = std::move(cyclic_order);
    s.dart_pos.assign(2 * rank, -1);
    for (int i = 0; i < 2 * rank; ++i) s.dart_pos[s.cyclic_order[i]] = i;

    s.walks = trace_faces(s.cyclic_order, rank);
    int n = static_cast<int>(s.walks.size());
    int chi = 1 - rank;
    int twice_g = 2 - n - chi;
    CCX_CHECK(twice_g >= 0 && twice_g % 2 == 0, "face tracing produced a non-surface");
    s.boundary = n;
    s.genus = twice_g / 2;
    if ((expect_g >= 0 && s.genus != expect_g) || (expect_n >= 0 && s.boundary != expect_n))
        fail(Err::ModelMismatch, "face tracing yields (" + std::to_string(s.genus) + "," +
                                     std::to_string(s.boundary) + ")");

    s.walk_classes.reserve(n);
    for (const Word& w : s.walks) s.walk_classes.push_back(canonical_cyclic(cyclic_reduce(w)));
    return s;
}

RibbonSurface build_surface(int g, int n) {
    bool supported = (g == 0 && n >= 3) || (g == 1 && n >= 1 && n <= 3);
    if (!supported || 2 - 2 * g - n >= 0)
        fail(Err::UnsupportedSurface,
             "no model for (" + std::to_string(g) + "," + std::to_string(n) + ")");

    int rank = 2 * g + n - 1;
    std::vector<Letter> order;
    order.reserve(2 * rank);
    int next_gen = 0;
    if (g == 1) {
        int a = next_gen++, b = next_gen++;
        order.push_back(make_letter(a, false));
        order.push_back(make_letter(b, false));
        order.push_back(make_letter(a, true));
        order.push_back(make_letter(b, true));
    }
    while (next_gen < rank) {
        int x = next_gen++;
        order.push_back(make_letter(x, false));
        order.push_back(make_letter(x, true));
    }
    return make_ribbon_surface(rank, std::move(order), g, n);
}

std::vector<Word> boundary_walks(const RibbonSurface& s) { return s.walks; }

std::string surface_to_json(const RibbonSurface& s) {
    std::ostringstream os;
    os << "{\"g\":" << s.genus << ",\"n\":" << s.boundary << ",\"cyclic_order\":[";
    for (int i = 0; i < s.dart_count(); ++i) {
        if (i) os << ",";
        os << '"' << letter_to_char(s.cyclic_order[i]) << '"';
    }
    os << "]}";
    return os.str();
}

}  // namespace ccx
