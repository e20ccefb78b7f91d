#pragma once

#include <string>
#include <vector>

#include "curvecx/errors.hpp"

namespace ccx {

// A letter encodes a free-group generator or its inverse:
//   letter = 2*gen     for the generator (printed lowercase),
//   letter = 2*gen + 1 for its inverse  (printed uppercase).
// Integer order gives the fixed alphabet order a < A < b < B < ...
using Letter = int;
using Word = std::vector<Letter>;

inline Letter make_letter(int gen, bool inverse) { return 2 * gen + (inverse ? 1 : 0); }
inline Letter inv(Letter l) { return l ^ 1; }
inline int gen_of(Letter l) { return l >> 1; }
inline bool is_inverse(Letter l) { return l & 1; }

char letter_to_char(Letter l);
Letter char_to_letter(char c, int rank);

std::string word_to_string(const Word& w);
Word parse_word(const std::string& text, int rank);

// Free reduction of a linear word.
Word free_reduce(const Word& w);

// Free reduction followed by removal of cancelling pairs across the wrap.
Word cyclic_reduce(const Word& w);

Word inverse_word(const Word& w);
Word rotate(const Word& w, int k);

// Lexicographically least rotation of w and of its inverse; the unoriented
// canonical representative of the free homotopy class. Input must be
// cyclically reduced.
Word canonical_cyclic(const Word& w);

// w is not a proper power as a cyclic word.
bool is_primitive(const Word& w);

// Exponent sum per generator.
std::vector<std::int64_t> abelianization(const Word& w, int rank);

}  // namespace ccx
