#include "curvecx/word.hpp"
#include "doctest.h"

using namespace ccx;

TEST_CASE("letter coding and alphabet order") {
    CHECK(letter_to_char(make_letter(0, false)) == 'a');
    CHECK(letter_to_char(make_letter(0, true)) == 'A');
    CHECK(letter_to_char(make_letter(2, false)) == 'c');
    CHECK(make_letter(0, false) < make_letter(0, true));
    CHECK(make_letter(0, true) < make_letter(1, false));
    CHECK(inv(make_letter(1, false)) == make_letter(1, true));
}

TEST_CASE("free and cyclic reduction") {
    CHECK(word_to_string(free_reduce(parse_word("abB", 2))) == "a");
    CHECK(word_to_string(free_reduce(parse_word("aA", 2))).empty());
    CHECK(word_to_string(cyclic_reduce(parse_word("BabAb", 2))) == "b");
    CHECK(word_to_string(cyclic_reduce(parse_word("Bab", 2))) == "a");
    CHECK(word_to_string(cyclic_reduce(parse_word("abA", 2))) == "b");
}

TEST_CASE("canonical cyclic form folds rotation and inversion") {
    CHECK(word_to_string(canonical_cyclic(parse_word("ba", 2))) == "ab");
    CHECK(word_to_string(canonical_cyclic(parse_word("AB", 2))) == "ab");
    CHECK(word_to_string(canonical_cyclic(parse_word("bA", 2))) == "aB");
    CHECK(word_to_string(canonical_cyclic(parse_word("aB", 2))) == "aB");
}

TEST_CASE("primitivity") {
    CHECK(is_primitive(parse_word("ab", 2)));
    CHECK_FALSE(is_primitive(parse_word("abab", 2)));
    CHECK_FALSE(is_primitive(parse_word("aa", 2)));
    CHECK(is_primitive(parse_word("aab", 2)));
}

TEST_CASE("abelianization") {
    auto e = abelianization(parse_word("abAB", 2), 2);
    CHECK(e[0] == 0);
    CHECK(e[1] == 0);
    auto f = abelianization(parse_word("aab", 2), 2);
    CHECK(f[0] == 2);
    CHECK(f[1] == 1);
}
