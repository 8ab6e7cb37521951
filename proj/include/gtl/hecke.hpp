// The Hecke algebra of X in the T-basis, its bar involution and
// Kazhdan-Lusztig basis, the projection onto TL(X), and the analysis of
// which KL elements span the kernel of that projection.

#pragma once

#include "gtl/coxeter.hpp"
#include "gtl/ic_solver.hpp"
#include "gtl/polyvec.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace gtl {

class TLAlgebra;

struct BudgetError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

class HeckeAlgebra {
 public:
  explicit HeckeAlgebra(CoxeterGraph graph) : w_(std::move(graph)) {}

  const CoxeterGroup& group() const { return w_; }

  PolyVec one() const;
  PolyVec T(const Word& w) const;  // any canonical word, no W_c restriction

  PolyVec mul_gen(Gen s, const PolyVec& vec, Side side) const;
  PolyVec mul_word(PolyVec vec, const Word& word, Side side) const;
  PolyVec mul(const PolyVec& a, const PolyVec& b) const;

  const PolyVec& bar_T(const Word& w) const;  // T_w -> (T_{w^-1})^-1
  PolyVec bar(const PolyVec& vec) const;

 private:
  CoxeterGroup w_;
  mutable std::map<Word, PolyVec, LenLex> bart_cache_;
};

ICContext hecke_ic_context(const HeckeAlgebra& algebra);

// Kazhdan-Lusztig elements C'_w in T-basis coordinates for every index in
// the Bruhat closure of targets.
std::map<Word, PolyVec, LenLex> kl_basis(const HeckeAlgebra& algebra,
                                         const std::vector<Word>& targets);

// Linear extension of T_w -> t_w; the kernel is the defining ideal of the
// quotient.
PolyVec project_to_tl(const TLAlgebra& tl, const PolyVec& hvec);

struct KernelReport {
  std::string graph;
  long dim_J = 0;          // |W| - |W_c|
  long kl_in_kernel = 0;   // #{w : project(C'_w) = 0}
  bool spanned = false;    // kl_in_kernel == dim_J
  bool projected_equals_ic = false;
  std::vector<Word> witnesses;  // w in W_c with project(C'_w) != c_w
};

// Full enumeration analysis; throws BudgetError when the group is infinite
// or larger than budget.
KernelReport kernel_analysis(const CoxeterGraph& graph, long budget = 10000);

}  // namespace gtl
