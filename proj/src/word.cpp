#include "surfwind/word.hpp"

#include <cctype>
#include <cstdlib>

#include "surfwind/errors.hpp"

namespace surfwind {

bool word_equal(const GroupWord& w1, const GroupWord& w2) {
  if (w1.size() != w2.size()) return false;
  for (std::size_t k = 0; k < w1.size(); ++k)
    if (w1[k].gen != w2[k].gen || w1[k].exp != w2[k].exp) return false;
  return true;
}

GroupWord reduce_word(const GroupWord& w) {
  GroupWord out;
  for (const Letter& l : w) {
    if (l.exp == 0) continue;
    if (!out.empty() && out.back().gen == l.gen) {
      out.back().exp += l.exp;
      if (out.back().exp == 0) out.pop_back();
    } else {
      out.push_back(l);
    }
  }
  return out;
}

GroupWord invert_word(const GroupWord& w) {
  GroupWord out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back({it->gen, -it->exp});
  return out;
}

GroupWord concat_words(const GroupWord& w1, const GroupWord& w2) {
  GroupWord out = w1;
  out.insert(out.end(), w2.begin(), w2.end());
  return reduce_word(out);
}

GroupWord conjugate_word(const GroupWord& x, const GroupWord& w) {
  return concat_words(concat_words(x, w), invert_word(x));
}

namespace {

// unit-exponent expansion, e.g. a^-2 -> a^-1 a^-1
GroupWord expand(const GroupWord& w) {
  GroupWord out;
  for (const Letter& l : w) {
    int n = std::abs(l.exp);
    int s = l.exp > 0 ? 1 : -1;
    for (int k = 0; k < n; ++k) out.push_back({l.gen, s});
  }
  return out;
}

bool cancels(const Letter& x, const Letter& y) {
  return x.gen == y.gen && x.exp == -y.exp;
}

}  // namespace

GroupWord cyclic_reduce(const GroupWord& w, GroupWord* conjugator) {
  GroupWord core = expand(reduce_word(w));
  GroupWord x;
  while (core.size() >= 2 && cancels(core.front(), core.back())) {
    x.push_back(core.front());
    core.erase(core.begin());
    core.pop_back();
  }
  if (conjugator) *conjugator = reduce_word(x);
  return reduce_word(core);
}

GroupWord primitive_root(const GroupWord& w) {
  GroupWord units = expand(cyclic_reduce(w));
  std::size_t n = units.size();
  if (n == 0) return {};
  for (std::size_t p = 1; p <= n; ++p) {
    if (n % p != 0) continue;
    bool periodic = true;
    for (std::size_t k = 0; k + p < n && periodic; ++k) {
      if (units[k].gen != units[k + p].gen || units[k].exp != units[k + p].exp)
        periodic = false;
    }
    if (periodic)
      return reduce_word(GroupWord(units.begin(), units.begin() + static_cast<long>(p)));
  }
  return reduce_word(units);
}

GroupWord parse_word(const std::string& text) {
  GroupWord out;
  std::size_t k = 0;
  auto skip = [&] {
    while (k < text.size() && (std::isspace(static_cast<unsigned char>(text[k])) ||
                               text[k] == '.' || text[k] == '*'))
      ++k;
  };
  skip();
  while (k < text.size()) {
    if (!(std::isalpha(static_cast<unsigned char>(text[k])) || text[k] == '_'))
      throw Error(ErrorCode::InvalidInput, "bad generator name in word: " + text);
    std::string name;
    while (k < text.size() && (std::isalnum(static_cast<unsigned char>(text[k])) ||
                               text[k] == '_'))
      name += text[k++];
    int exp = 1;
    if (k < text.size() && text[k] == '^') {
      ++k;
      std::size_t start = k;
      if (k < text.size() && (text[k] == '-' || text[k] == '+')) ++k;
      while (k < text.size() && std::isdigit(static_cast<unsigned char>(text[k]))) ++k;
      if (k == start)
        throw Error(ErrorCode::InvalidInput, "bad exponent in word: " + text);
      exp = std::atoi(text.substr(start, k - start).c_str());
    }
    out.push_back({name, exp});
    skip();
  }
  return reduce_word(out);
}

std::string word_to_string(const GroupWord& w) {
  std::string s;
  for (const Letter& l : w) {
    if (!s.empty()) s += '.';
    s += l.gen;
    if (l.exp != 1) s += "^" + std::to_string(l.exp);
  }
  return s;
}

}  // namespace surfwind
