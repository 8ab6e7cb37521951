// Generic triangular machinery for bar-invariant canonical bases: given a
// based module with a bar involution expressed over the rescaled basis
// {m'_i}, produce the unique basis {c_i} with bar(c_i) = c_i and
// c_i = m'_i modulo the v^-1-lattice.

#pragma once

#include "gtl/polyvec.hpp"

#include <functional>
#include <string>
#include <vector>

namespace gtl {

class TLAlgebra;
class HeckeAlgebra;

struct ICContext {
  // Coefficients of bar(m'_w) over the m'-basis; support must stay within
  // the Bruhat down-set of w and carry 1 on the diagonal.
  std::function<PolyVec(const Word&)> bar_row;
  // Total refinement of the underlying partial order; any comparator that
  // refines it yields the same basis.
  std::function<bool(const Word&, const Word&)> less = LenLex{};
};

// Rows keyed by w: coefficients h_{x,w} of c_w over the m'-basis, with
// h_{w,w} = 1 and h_{x,w} in v^-1 Z[v^-1] for x < w.
struct ICTable {
  std::map<Word, PolyVec, LenLex> rows;
};

struct ICVerifyReport {
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

// bar of an arbitrary m'-coordinate vector.
PolyVec ic_bar_vec(const ICContext& ctx, const PolyVec& vec);

// Solve for every index in the down-closure of targets (the closure is
// taken automatically through bar_row supports).
ICTable solve_ic(const ICContext& ctx, const std::vector<Word>& targets);

// Re-checks both defining conditions row by row and re-solves under a
// reversed tie-break of the total order to confirm uniqueness.
ICVerifyReport verify_ic(const ICContext& ctx, const ICTable& table);

// Whether vec (in m'-coordinates) is the canonical element at w.
bool is_ic_element(const ICContext& ctx, const PolyVec& vec, const Word& w);

// Ready-made contexts for TL(X) and the Hecke algebra, both with
// r_w = -l(w) over their natural bases.
ICContext tl_ic_context(const TLAlgebra& algebra);
ICContext hecke_ic_context(const HeckeAlgebra& algebra);

// m'-coordinates -> t-basis (or T-basis) coordinates and back.
PolyVec mprime_to_basis(const PolyVec& vec);
PolyVec basis_to_mprime(const PolyVec& vec);

}  // namespace gtl
