#pragma once

#include <string>
#include <vector>

namespace surfwind {

// Word in the deck group generators, written in traversal order: the loop
// for [ {a,2}, {b,-1} ] runs a, then a, then b backwards.
struct Letter {
  std::string gen;
  int exp = 1;
};

using GroupWord = std::vector<Letter>;

bool word_equal(const GroupWord& w1, const GroupWord& w2);

// merge adjacent letters with the same generator, drop zero exponents
GroupWord reduce_word(const GroupWord& w);

GroupWord invert_word(const GroupWord& w);
GroupWord concat_words(const GroupWord& w1, const GroupWord& w2);
GroupWord conjugate_word(const GroupWord& x, const GroupWord& w);  // x w x^-1

// cyclic reduction of a reduced word; also yields x with input = x out x^-1
GroupWord cyclic_reduce(const GroupWord& w, GroupWord* conjugator = nullptr);

// smallest r with w (cyclically reduced, nonempty) a positive power of r
GroupWord primitive_root(const GroupWord& w);

// "a.b^-2.a" or "a b^-2 a"; empty string is the identity
GroupWord parse_word(const std::string& text);
std::string word_to_string(const GroupWord& w);

}  // namespace surfwind
