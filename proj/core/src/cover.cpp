#include "curvecx/cover.hpp"

namespace ccx {

CoverSpec CoverSpec::standard() {
    CoverSpec spec;
    spec.base = build_surface(0, 5);

    // Spine of the filled cover: contract one lift of x1 in the lifted
    // rose, fill the four cone discs, and retract. The three survivors
    // w_i = x1*x_i (i = 2,3,4) inherit the cyclic order (w2+ w3+ w4+ w2- w3- w4-),
    // which face-traces to a one-vertex (1,2) model.
    std::vector<Letter> order = {
        make_letter(0, false), make_letter(1, false), make_letter(2, false),
        make_letter(0, true),  make_letter(1, true),  make_letter(2, true),
    };
    spec.cover = make_ribbon_surface(3, std::move(order), 1, 2);

    std::vector<Word> inverted(3);
    for (int g = 0; g < 3; ++g) inverted[g] = Word{make_letter(g, true)};
    spec.deck.moves.push_back(explicit_move(spec.cover, std::move(inverted)));
    return spec;
}

int monodromy(const CoverSpec& spec, const Word& base_word) {
    (void)spec;
    return static_cast<int>(base_word.size()) % 2;  // every generator is a cone generator
}

namespace {

// Rewrites a kernel word through the Schreier transversal {1, x1} and
// projects through the branched filling: x1^2 and x_i*x1^{-1} die (the
// latter onto w_i^{-1}), x1*x_i maps to w_i.
Word rewrite_to_cover(const Word& w) {
    Word out;
    int state = 0;
    auto emit_positive = [&](int st, int g) {
        if (g == 0) return;                      // Schreier generator x1, or x1^2
        Letter l = make_letter(g - 1, st == 0);  // state 0: v_g -> w_g^{-1}; state 1: w_g
        out.push_back(l);
    };
    for (Letter l : w) {
        int g = gen_of(l);
        if (!is_inverse(l)) {
            emit_positive(state, g);
            state ^= 1;
        } else {
            state ^= 1;
            // inverse of the positive letter read from the flipped state
            if (g != 0) out.push_back(make_letter(g - 1, state != 0));
        }
    }
    CCX_CHECK(state == 0, "rewriting requires a kernel word");
    return out;
}

}  // namespace

CurveClass lift_double_cover(const CoverSpec& spec, const CurveClass& base_class) {
    if (!is_essential(spec.base, base_class))
        fail(Err::NotEssential, "lift needs an essential base class: " + base_class.str());
    Word w = base_class.word;
    if (monodromy(spec, w) == 1) {
        Word sq = w;
        sq.insert(sq.end(), w.begin(), w.end());
        w = std::move(sq);
    }
    Word lifted = rewrite_to_cover(w);
    CurveClass out = canon_curve(spec.cover, lifted);
    CCX_CHECK(is_essential(spec.cover, out), "lift left the essential curve set");
    return out;
}

}  // namespace ccx
