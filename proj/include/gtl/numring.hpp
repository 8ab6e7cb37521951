// The real ring Z[a] with a = 2cos(pi/M), used as the coordinate ring of the
// geometric reflection representation.  M is the lcm of the bond strengths m
// whose cosine value 2cos(pi/m) is irrational (m >= 4); when there are none
// the ring degenerates to Z.  Elements carry exact integer coordinates over
// the power basis of the minimal polynomial of a, and sign tests are decided
// exactly by interval bisection against that polynomial.

#pragma once

#include "gtl/laurent.hpp"

#include <vector>

namespace gtl {

using Rat = boost::multiprecision::cpp_rational;

class NumberRing {
 public:
  // Coordinates over 1, a, ..., a^{degree-1}; always of size degree().
  using Elem = std::vector<Int>;

  // finite_bonds: the bond strengths m (3 <= m <= 12) appearing in the graph;
  // values outside [4, 12] are ignored (their cosines are rational).
  explicit NumberRing(const std::vector<int>& finite_bonds);

  int level() const { return m_; }  // the M above; 1 for the plain-Z ring
  int degree() const { return static_cast<int>(minpoly_.size()) - 1; }
  const std::vector<Int>& minpoly() const { return minpoly_; }  // ascending, monic

  Elem zero() const { return Elem(degree(), Int(0)); }
  Elem one() const { return integer(1); }
  Elem integer(long c) const;
  Elem gen() const;            // a itself; pre: degree() > 1
  Elem cosval(int m) const;    // 2cos(pi/m); m == 0 encodes an infinite bond

  bool is_zero(const Elem& x) const;
  Elem add(const Elem& x, const Elem& y) const;
  Elem sub(const Elem& x, const Elem& y) const;
  Elem neg(const Elem& x) const;
  Elem mul(const Elem& x, const Elem& y) const;
  Elem mul_int(const Elem& x, const Int& c) const;
  int sign(const Elem& x) const;  // -1, 0, or +1 at the real embedding
  Elem exact_div(const Elem& num, const Elem& den) const;  // pre: exact in Z[a]

 private:
  int m_;
  std::vector<Int> minpoly_;
  mutable Rat lo_, hi_;  // isolating interval for a, refined on demand

  void refine_interval() const;
};

}  // namespace gtl
