#include "curvecx/word.hpp"

#include <algorithm>

namespace ccx {

char letter_to_char(Letter l) {
    int g = gen_of(l);
    CCX_CHECK(g >= 0 && g < 26, "generator index out of printable range");
    return static_cast<char>((is_inverse(l) ? 'A' : 'a') + g);
}

Letter char_to_letter(char c, int rank) {
    int g;
    bool inverse;
    if (c >= 'a' && c <= 'z') {
        g = c - 'a';
        inverse = false;
    } else if (c >= 'A' && c <= 'Z') {
        g = c - 'A';
        inverse = true;
    } else {
        fail(Err::Usage, std::string("invalid word character '") + c + "'");
    }
    if (g >= rank) fail(Err::Usage, std::string("letter '") + c + "' outside surface alphabet");
    return make_letter(g, inverse);
}

std::string word_to_string(const Word& w) {
    std::string s;
    s.reserve(w.size());
    for (Letter l : w) s.push_back(letter_to_char(l));
    return s;
}

Word parse_word(const std::string& text, int rank) {
    Word w;
    w.reserve(text.size());
    for (char c : text) w.push_back(char_to_letter(c, rank));
    return w;
}

Word free_reduce(const Word& w) {
    Word out;
    out.reserve(w.size());
    for (Letter l : w) {
        if (!out.empty() && out.back() == inv(l))
            out.pop_back();
        else
            out.push_back(l);
    }
    return out;
}

Word cyclic_reduce(const Word& w) {
    Word r = free_reduce(w);
    size_t lo = 0, hi = r.size();
    while (hi - lo >= 2 && r[lo] == inv(r[hi - 1])) {
        ++lo;
        --hi;
    }
    return Word(r.begin() + lo, r.begin() + hi);
}

Word inverse_word(const Word& w) {
    Word out;
    out.reserve(w.size());
    for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(inv(*it));
    return out;
}

Word rotate(const Word& w, int k) {
    if (w.empty()) return w;
    int n = static_cast<int>(w.size());
    k = ((k % n) + n) % n;
    Word out;
    out.reserve(n);
    out.insert(out.end(), w.begin() + k, w.end());
    out.insert(out.end(), w.begin(), w.begin() + k);
    return out;
}

namespace {

Word least_rotation(const Word& w) {
    Word best = w;
    for (size_t k = 1; k < w.size(); ++k) {
        Word r = rotate(w, static_cast<int>(k));
        if (r < best) best = r;
    }
    return best;
}

}  // namespace

Word canonical_cyclic(const Word& w) {
    if (w.empty()) return w;
    Word a = least_rotation(w);
    Word b = least_rotation(inverse_word(w));
    return std::min(a, b);
}

bool is_primitive(const Word& w) {
    int n = static_cast<int>(w.size());
    if (n == 0) return false;
    for (int d = 1; d < n; ++d) {
        if (n % d != 0) continue;
        bool periodic = true;
        for (int i = 0; i < n && periodic; ++i)
            if (w[i] != w[i % d]) periodic = false;
        if (periodic) return false;
    }
    return true;
}

std::vector<std::int64_t> abelianization(const Word& w, int rank) {
    std::vector<std::int64_t> e(rank, 0);
    for (Letter l : w) e[gen_of(l)] += is_inverse(l) ? -1 : 1;
    return e;
}

}  // namespace ccx
