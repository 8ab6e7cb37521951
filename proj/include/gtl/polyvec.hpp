// Words over generator indices and finitely supported Word -> Laurent maps.
// The same vector type backs both the t-basis of TL(X) and the T-basis of
// the Hecke algebra; the owning algebra gives it meaning.

#pragma once

#include "gtl/laurent.hpp"

#include <map>
#include <vector>

namespace gtl {

using Gen = int;                 // 0-based generator index
using Word = std::vector<Gen>;   // canonical = ShortLex-least reduced word

enum class Side { Left, Right };

// Length first, then lexicographic: the total refinement of Bruhat order
// used everywhere for triangular solves and stable output.
struct LenLex {
  bool operator()(const Word& a, const Word& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

using PolyVec = std::map<Word, Laurent, LenLex>;

inline void vec_add_term(PolyVec& acc, const Word& w, const Laurent& c) {
  if (c.is_zero()) return;
  Laurent& slot = acc[w];
  slot += c;
  if (slot.is_zero()) acc.erase(w);
}

inline void vec_add_scaled(PolyVec& acc, const PolyVec& v, const Laurent& c) {
  if (c.is_zero()) return;
  for (const auto& [w, p] : v) vec_add_term(acc, w, p * c);
}

inline void vec_add(PolyVec& acc, const PolyVec& v) {
  for (const auto& [w, p] : v) vec_add_term(acc, w, p);
}

inline void vec_sub(PolyVec& acc, const PolyVec& v) {
  for (const auto& [w, p] : v) vec_add_term(acc, w, -p);
}

inline PolyVec vec_scaled(const PolyVec& v, const Laurent& c) {
  PolyVec r;
  vec_add_scaled(r, v, c);
  return r;
}

}  // namespace gtl
