#include "curvecx/intersect.hpp"

#include <cstdlib>

namespace ccx {

Letter ray_at(const Ray& r, int k) {
    int n = static_cast<int>(r.w->size());
    if (r.fwd) return (*r.w)[(r.phase + k) % n];
    int idx = ((r.phase - 1 - k) % n + n) % n;
    return inv((*r.w)[idx]);
}

int common_prefix_len(const Ray& a, const Ray& b, int bound) {
    for (int k = 0; k < bound; ++k)
        if (ray_at(a, k) != ray_at(b, k)) return k;
    return bound;
}

static int periodicity_bound(const Ray& a, const Ray& b) {
    return 2 * static_cast<int>(a.w->size() + b.w->size()) + 4;
}

bool same_end(const Ray& a, const Ray& b) {
    int bound = periodicity_bound(a, b);
    return common_prefix_len(a, b, bound) == bound;
}

int orient3(const RibbonSurface& s, const Ray& a, const Ray& b, const Ray& c) {
    int kab = common_prefix_len(a, b, periodicity_bound(a, b));
    int kac = common_prefix_len(a, c, periodicity_bound(a, c));
    int kbc = common_prefix_len(b, c, periodicity_bound(b, c));
    CCX_CHECK(kab < periodicity_bound(a, b) && kac < periodicity_bound(a, c) &&
                  kbc < periodicity_bound(b, c),
              "orient3 requires three distinct ends");
    int kmin = std::min({kab, kac, kbc});
    if (kab == kmin && kac == kmin && kbc == kmin)
        return s.orient_darts(ray_at(a, kmin), ray_at(b, kmin), ray_at(c, kmin));
    if (kab > kmin)
        return s.orient_darts(ray_at(a, kab), ray_at(b, kab), inv(ray_at(a, kab - 1)));
    if (kac > kmin)
        return s.orient_darts(ray_at(a, kac), inv(ray_at(a, kac - 1)), ray_at(c, kac));
    return s.orient_darts(inv(ray_at(b, kbc - 1)), ray_at(b, kbc), ray_at(c, kbc));
}

std::vector<Crossing> enumerate_crossings(const RibbonSurface& s, const Word& u, const Word& v,
                                          bool same_class) {
    int lu = static_cast<int>(u.size());
    int lv = static_cast<int>(v.size());
    CCX_CHECK(lu > 0 && lv > 0, "crossings of empty words");
    std::vector<Crossing> out;
    for (int i = 0; i < lu; ++i) {
        Letter back = u[(i - 1 + lu) % lu];
        for (int j = 0; j < lv; ++j) {
            if (same_class && i == j) continue;
            // Anchor normalization: the vertex one step back along the
            // reference axis must not lie on the other lift, so each
            // crossing is counted at the start of the shared segment.
            if (back == v[(j - 1 + lv) % lv]) continue;
            if (back == inv(v[j])) continue;
            Ray pu{&u, i, true}, nu{&u, i, false};
            Ray pv{&v, j, true}, nv{&v, j, false};
            int o1 = orient3(s, pu, pv, nu);
            int o2 = orient3(s, pu, nv, nu);
            if (o1 != o2) out.push_back(Crossing{i, j, o1});
        }
    }
    return out;
}

int geometric_intersection(const RibbonSurface& s, const Word& u, const Word& v) {
    return static_cast<int>(enumerate_crossings(s, u, v, false).size());
}

int algebraic_intersection_abs(const RibbonSurface& s, const Word& u, const Word& v) {
    int sum = 0;
    for (const Crossing& c : enumerate_crossings(s, u, v, false)) sum += c.sign;
    return std::abs(sum);
}

int self_intersection_count(const RibbonSurface& s, const Word& u) {
    CCX_CHECK(is_primitive(u), "self-intersection needs a primitive word");
    auto cs = enumerate_crossings(s, u, u, true);
    CCX_CHECK(cs.size() % 2 == 0, "self-crossing normalizations must pair up");
    return static_cast<int>(cs.size() / 2);
}

}  // namespace ccx
