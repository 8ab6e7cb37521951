// Exact arithmetic in the coefficient ring Z[v, v^-1], with the bar
// involution v -> v^-1 and membership tests for the subrings that show up
// in triangularity and positivity statements.

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <string>

namespace gtl {

using Int = boost::multiprecision::cpp_int;

enum class Subring {
  AMinus,      // Z[v^-1]: exponents <= 0
  APlus,       // Z[v]: exponents >= 0
  ZOfQ,        // Z[q] with q = v^2: exponents even and >= 0
  NOfVVinv,    // N[v, v^-1]: all coefficients >= 0
  VinvAMinus,  // v^-1 Z[v^-1]: exponents <= -1
};

// A Laurent polynomial, stored as a sorted exponent -> coefficient map with
// no zero coefficients.  Equal ring elements have identical term maps, so
// operator== is structural comparison.  Immutable in spirit: all operations
// return canonical values.
class Laurent {
 public:
  Laurent() = default;
  explicit Laurent(long c) { put(0, Int(c)); }
  explicit Laurent(Int c) { put(0, std::move(c)); }

  static Laurent term(Int c, int exp);
  static Laurent v(int exp = 1) { return term(1, exp); }
  static Laurent q() { return term(1, 2); }
  static Laurent q_inv() { return term(1, -2); }
  static Laurent qc();  // v + v^-1

  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  const std::map<int, Int>& terms() const { return terms_; }
  Int coeff(int exp) const;
  int min_exp() const { return terms_.begin()->first; }   // pre: nonzero
  int max_exp() const { return terms_.rbegin()->first; }  // pre: nonzero

  Laurent operator-() const;
  Laurent& operator+=(const Laurent& o);
  Laurent& operator-=(const Laurent& o);
  friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
  friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }
  friend Laurent operator*(const Laurent& a, const Laurent& b);
  Laurent& operator*=(const Laurent& o) { return *this = *this * o; }
  friend bool operator==(const Laurent&, const Laurent&) = default;

  Laurent bar() const;           // negate every exponent
  Laurent shifted(int k) const;  // multiply by v^k
  Laurent neg_part() const;      // terms with exponent < 0
  bool in(Subring r) const;

  std::string str() const;
  std::string latex() const;

 private:
  std::map<int, Int> terms_;

  void put(int exp, Int c);
};

}  // namespace gtl
