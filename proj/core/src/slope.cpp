#include "curvecx/slope.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <sstream>

namespace ccx {

namespace {

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) fail(Err::Overflow, "integer multiply overflow");
    return r;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) fail(Err::Overflow, "integer add overflow");
    return r;
}

std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_sub_overflow(a, b, &r)) fail(Err::Overflow, "integer subtract overflow");
    return r;
}

std::int64_t igcd(std::int64_t a, std::int64_t b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        std::int64_t t = a % b;
        a = b;
        b = t;
    }
    return a;
}

}  // namespace

Slope canon(std::int64_t p, std::int64_t q) {
    if (p == 0 && q == 0) fail(Err::ZeroSlopePair, "0/0 is not a slope");
    std::int64_t g = igcd(p, q);
    p /= g;
    q /= g;
    if (q < 0 || (q == 0 && p < 0)) {
        p = -p;
        q = -q;
    }
    return Slope{p, q};
}

std::int64_t det(const Slope& s, const Slope& t) {
    return checked_sub(checked_mul(s.p, t.q), checked_mul(t.p, s.q));
}

bool farey_rel(const Slope& s, const Slope& t) {
    std::int64_t d = det(s, t);
    return d == 1 || d == -1;
}

bool positively_ordered(const Slope& a, const Slope& b, const Slope& c) {
    std::int64_t d1 = det(a, b), d2 = det(b, c), d3 = det(c, a);
    CCX_CHECK(d1 != 0 && d2 != 0 && d3 != 0, "circular order needs distinct slopes");
    int sign = (d1 > 0 ? 1 : -1) * (d2 > 0 ? 1 : -1) * (d3 > 0 ? 1 : -1);
    return sign < 0;
}

Slope resolve(const Slope& s, const Slope& t) {
    std::int64_t lambda = det(s, t);
    if (lambda != 1 && lambda != -1)
        fail(Err::NotFareyRelated, "resolve requires |det| = 1, got " + std::to_string(lambda));
    return canon(checked_add(s.p, checked_mul(lambda, t.p)),
                 checked_add(s.q, checked_mul(lambda, t.q)));
}

std::string to_string(const Slope& s) {
    if (s.is_infinity()) return "inf";
    return std::to_string(s.p) + "/" + std::to_string(s.q);
}

Slope parse_slope(const std::string& text) {
    if (text == "inf" || text == "1/0") return Slope{1, 0};
    auto pos = text.find('/');
    try {
        if (pos == std::string::npos) return canon(std::stoll(text), 1);
        return canon(std::stoll(text.substr(0, pos)), std::stoll(text.substr(pos + 1)));
    } catch (const std::logic_error&) {
        fail(Err::Usage, "cannot parse slope '" + text + "'");
    }
}

std::int64_t ModularMatrix::determinant() const {
    return checked_sub(checked_mul(a, d), checked_mul(b, c));
}

void ModularMatrix::normalize() {
    std::array<std::int64_t*, 4> e{&a, &b, &c, &d};
    for (auto* x : e) {
        if (*x != 0) {
            if (*x < 0)
                for (auto* y : e) *y = -*y;
            break;
        }
    }
}

ModularMatrix make_matrix(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d) {
    ModularMatrix m{a, b, c, d};
    std::int64_t dd = m.determinant();
    if (dd != 1 && dd != -1)
        fail(Err::Inconsistent, "matrix determinant must be +-1, got " + std::to_string(dd));
    m.normalize();
    return m;
}

ModularMatrix ModularMatrix::inverse() const {
    std::int64_t dd = determinant();
    // adjugate; for det -1 the sign flip is absorbed projectively
    ModularMatrix m{d, -b, -c, a};
    if (dd == -1) m = ModularMatrix{-d, b, c, -a};
    m.normalize();
    return m;
}

ModularMatrix ModularMatrix::compose(const ModularMatrix& r) const {
    ModularMatrix m{
        checked_add(checked_mul(a, r.a), checked_mul(b, r.c)),
        checked_add(checked_mul(a, r.b), checked_mul(b, r.d)),
        checked_add(checked_mul(c, r.a), checked_mul(d, r.c)),
        checked_add(checked_mul(c, r.b), checked_mul(d, r.d)),
    };
    m.normalize();
    return m;
}

Slope act(const ModularMatrix& m, const Slope& s) {
    return canon(checked_add(checked_mul(m.a, s.p), checked_mul(m.b, s.q)),
                 checked_add(checked_mul(m.c, s.p), checked_mul(m.d, s.q)));
}

namespace {

// Kernel vector of a 3x4 integer matrix of rank 3, via signed 3x3 minors.
std::array<std::int64_t, 4> kernel3x4(const std::array<std::array<std::int64_t, 4>, 3>& m) {
    auto det3 = [](std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d,
                   std::int64_t e, std::int64_t f, std::int64_t g, std::int64_t h,
                   std::int64_t i) {
        return checked_sub(
            checked_add(checked_mul(a, checked_sub(checked_mul(e, i), checked_mul(f, h))),
                        checked_mul(c, checked_sub(checked_mul(d, h), checked_mul(e, g)))),
            checked_mul(b, checked_sub(checked_mul(d, i), checked_mul(f, g))));
    };
    std::array<std::int64_t, 4> v{};
    for (int drop = 0; drop < 4; ++drop) {
        std::array<std::int64_t, 9> e;
        int k = 0;
        for (int r = 0; r < 3; ++r)
            for (int col = 0; col < 4; ++col)
                if (col != drop) e[k++] = m[r][col];
        std::int64_t minor = det3(e[0], e[1], e[2], e[3], e[4], e[5], e[6], e[7], e[8]);
        v[drop] = (drop % 2 == 0) ? minor : -minor;
    }
    return v;
}

}  // namespace

ModularMatrix fit_modular_map(const std::vector<std::pair<Slope, Slope>>& pairs) {
    if (pairs.size() < 3) fail(Err::InsufficientData, "need at least 3 slope pairs");
    for (size_t i = 0; i < pairs.size(); ++i)
        for (size_t j = i + 1; j < pairs.size(); ++j)
            if (pairs[i].first == pairs[j].first && pairs[i].second != pairs[j].second)
                fail(Err::Inconsistent, "same source mapped to two targets");

    // Each pair (p/q -> p'/q') gives q'(ap+bq) - p'(cp+dq) = 0, a linear
    // condition on (a,b,c,d). Three pairs with distinct sources have rank 3.
    std::array<std::array<std::int64_t, 4>, 3> rows{};
    for (int k = 0; k < 3; ++k) {
        auto [s, t] = pairs[k];
        rows[k] = {checked_mul(t.q, s.p), checked_mul(t.q, s.q),
                   checked_mul(-t.p, s.p), checked_mul(-t.p, s.q)};
    }
    auto v = kernel3x4(rows);
    std::int64_t g = 0;
    for (auto x : v) g = std::gcd(g, x < 0 ? -x : x);
    if (g == 0) fail(Err::Inconsistent, "degenerate pair system");
    for (auto& x : v) x /= g;

    ModularMatrix m{v[0], v[1], v[2], v[3]};
    std::int64_t dd = m.determinant();
    if (dd != 1 && dd != -1)
        fail(Err::Inconsistent, "fitted map is not projective integer invertible");
    m.normalize();
    for (const auto& [s, t] : pairs)
        if (act(m, s) != t) fail(Err::Inconsistent, "pair not matched by fitted matrix");
    return m;
}

SlopeSet closure(const std::set<Slope>& start, int max_depth) {
    CCX_CHECK(!start.empty(), "closure of an empty set");
    SlopeSet out;
    out.elements = start;
    for (int depth = 0; depth < max_depth; ++depth) {
        std::vector<Slope> cur(out.elements.begin(), out.elements.end());
        std::set<Slope> added;
        for (const Slope& b : cur)
            for (const Slope& g : cur) {
                if (b == g || !farey_rel(b, g)) continue;
                if (!out.elements.count(resolve(g, b))) continue;
                Slope r = resolve(b, g);
                if (!out.elements.count(r)) added.insert(r);
            }
        if (added.empty()) {
            out.fixpoint = true;
            out.depth = depth;
            return out;
        }
        out.elements.insert(added.begin(), added.end());
        out.depth = depth + 1;
    }
    // one more sweep to detect a fixpoint reached exactly at max_depth
    std::vector<Slope> cur(out.elements.begin(), out.elements.end());
    bool stable = true;
    for (const Slope& b : cur) {
        for (const Slope& g : cur) {
            if (b == g || !farey_rel(b, g)) continue;
            if (!out.elements.count(resolve(g, b))) continue;
            if (!out.elements.count(resolve(b, g))) {
                stable = false;
                break;
            }
        }
        if (!stable) break;
    }
    out.fixpoint = stable;
    return out;
}

std::string slope_set_to_json(const SlopeSet& s) {
    std::vector<std::string> reps;
    reps.reserve(s.elements.size());
    for (const auto& e : s.elements) reps.push_back(to_string(e));
    std::sort(reps.begin(), reps.end());
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < reps.size(); ++i) {
        if (i) os << ",";
        os << '"' << reps[i] << '"';
    }
    os << "]";
    return os.str();
}

}  // namespace ccx
