// The generalized Temperley-Lieb algebra TL(X) in the t-basis.  Vectors are
// supported on W_c only; any product that would leave the span is rewritten
// on the fly through the rank-two relation
//     t_{w_ij} = - sum_{y < w_ij} t_y,
// which is what the D-expansion below implements.

#pragma once

#include "gtl/coxeter.hpp"
#include "gtl/polyvec.hpp"

#include <map>
#include <vector>

namespace gtl {

struct TransitionTables {
  // Column w holds x -> entry_{x,w}; both matrices are unitriangular with
  // respect to the (length, ShortLex) order.
  std::map<Word, PolyVec, LenLex> qtilde;
  std::map<Word, PolyVec, LenLex> ptilde;
};

class TLAlgebra {
 public:
  explicit TLAlgebra(CoxeterGraph graph) : w_(std::move(graph)) {}

  const CoxeterGroup& group() const { return w_; }

  PolyVec one() const;                  // t_e
  PolyVec t(const Word& w) const;       // pre: w canonical and in W_c
  PolyVec b(Gen s) const;               // v^-1 t_s + v^-1 t_e
  PolyVec monomial(const Word& w) const;  // b_w; throws if w is complex

  PolyVec mul_gen(Gen s, const PolyVec& vec, Side side) const;
  PolyVec mul_word(PolyVec vec, const Word& word, Side side) const;
  PolyVec mul(const PolyVec& a, const PolyVec& b) const;
  PolyVec bar(const PolyVec& vec) const;

  // Coefficients D_{x,w} of t_w over the t-basis, for w given by any
  // canonical (reduced) word, complex or not.  Cached per element.
  const PolyVec& d_expand(const Word& w) const;
  const PolyVec& bar_t(const Word& w) const;  // bar(t_w); pre: w in W_c

  // elements must be a LenLex-sorted subset of W_c closed under Bruhat
  // restriction (every expansion support must stay inside it).
  TransitionTables transition_tables(const std::vector<Word>& elements) const;

  // Re-expansion of a t-basis vector over the monomial basis.
  PolyVec expand_over_monomial(PolyVec tvec) const;
  // Structure constants of the monomial basis: b_x b_y over {b_z}.
  PolyVec structure_constants_monomial(const Word& x, const Word& y) const;

 private:
  CoxeterGroup w_;
  mutable std::map<Word, PolyVec, LenLex> dexp_cache_;
  mutable std::map<Word, PolyVec, LenLex> bart_cache_;
  mutable std::map<Word, PolyVec, LenLex> monomial_cache_;
};

}  // namespace gtl
