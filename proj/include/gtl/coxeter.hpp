// Coxeter graphs and groups.  Elements are kept in canonical normal form
// (the ShortLex-least reduced word); multiplication, length and descent
// tests run through the geometric reflection representation with exact
// coordinates in a NumberRing.

#pragma once

#include "gtl/numring.hpp"
#include "gtl/polyvec.hpp"

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace gtl {

// Unordered node pairs absent from bonds commute (m = 2); a stored strength
// of 0 encodes an infinite bond.  Nodes are externally 1-based, internally
// generators are 0-based.
struct CoxeterGraph {
  int nodes = 0;
  std::map<std::pair<int, int>, int> bonds;  // key (i, j) 0-based, i < j

  int m(Gen i, Gen j) const;  // 2 if no bond; 0 means infinity
  bool adjacent(Gen i, Gen j) const { return m(i, j) != 2; }
  std::vector<int> finite_bond_strengths() const;
  std::string canonical_text() const;  // stable serialization, used for hashing

  // Named types (A5, D4, E6, B3, H3, H4, I2:m, affA3, ...) or an explicit
  // JSON object {"nodes": n, "edges": [[i, j, m], ...]} with 1-based nodes.
  static CoxeterGraph parse(const std::string& spec);
};

// The alternating word s t s t ... of the given length.
Word alternating_word(Gen s, Gen t, int len);

struct ComplexWitness {
  Word reduced_word;  // a reduced word of w in the commutation class
  int pos;            // start of the long alternating factor
  Gen s, t;           // the adjacent pair
  int m;              // its bond strength = factor length
};

class CoxeterGroup {
 public:
  explicit CoxeterGroup(CoxeterGraph g);

  const CoxeterGraph& graph() const { return g_; }
  const NumberRing& ring() const { return ring_; }
  int rank() const { return g_.nodes; }
  bool is_finite() const { return finite_; }

  // Normal form of the element represented by an arbitrary word.
  Word canonical(const Word& any) const;
  Word mult_gen(const Word& canon, Gen s, Side side) const;
  Word inverse(const Word& canon) const;
  std::vector<Gen> left_descents(const Word& canon) const;

  bool bruhat_leq(const Word& x, const Word& w) const;
  // All x <= w (not restricted to W_c), each canonical, sorted LenLex.
  std::vector<Word> bruhat_downset(const Word& w) const;
  // {x in W_c : x <= w}, sorted LenLex.
  std::vector<Word> bruhat_ideal(const Word& w) const;

  bool is_complex(const Word& canon) const;
  std::optional<ComplexWitness> complex_witness(const Word& canon) const;

  // All elements with length <= cap (all of W when finite and no cap),
  // sorted LenLex, each flagged with W_c membership.  Throws if the group is
  // infinite and no cap is given.
  std::vector<std::pair<Word, bool>> enumerate(std::optional<int> cap) const;
  // Same BFS pruned to W_c only; valid because complexity is inherited along
  // length-additive extension.
  std::vector<Word> enumerate_wc(std::optional<int> cap) const;

 private:
  using Elem = NumberRing::Elem;
  using Matrix = std::vector<Elem>;  // rank x rank, row-major

  CoxeterGraph g_;
  NumberRing ring_;
  std::vector<Matrix> sigma_;  // reflection matrix per generator
  bool finite_;

  mutable std::map<Word, std::vector<Gen>> descent_cache_;
  mutable std::map<Word, std::optional<ComplexWitness>> complex_cache_;
  mutable std::map<std::pair<Word, Word>, bool> bruhat_cache_;
  mutable std::map<std::pair<Word, Gen>, Word> lmult_cache_, rmult_cache_;

  Matrix identity() const;
  Matrix mat_mul(const Matrix& a, const Matrix& b) const;
  // Sign of the root whose coordinates form column j: +1 positive root,
  // -1 negative.
  int column_sign(const Matrix& m, int j) const;
  Word canonical_from_inverse_matrix(Matrix minv) const;
  bool finite_by_form() const;

  template <bool WcOnly>
  std::vector<std::pair<Word, bool>> bfs(std::optional<int> cap) const;
};

}  // namespace gtl
