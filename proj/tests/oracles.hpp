// Independent brute-force oracles used only by tests.  These deliberately
// avoid the exact reflection-representation path of the library: group
// orders come from permutation or floating-point matrix models, and reduced
// word sets from plain braid-move search on words.

#pragma once

#include "gtl/coxeter.hpp"

#include <cmath>
#include <deque>
#include <map>
#include <set>
#include <vector>

namespace oracles {

using gtl::CoxeterGraph;
using gtl::Gen;
using gtl::Word;

// |W(A_n)| by BFS over words, elements modelled as permutations of 0..n.
inline long symmetric_group_order(int rank) {
  using Perm = std::vector<int>;
  Perm id(rank + 1);
  for (int i = 0; i <= rank; ++i) id[i] = i;
  std::set<Perm> seen{id};
  std::deque<Perm> todo{id};
  while (!todo.empty()) {
    Perm p = todo.front();
    todo.pop_front();
    for (int s = 0; s < rank; ++s) {
      Perm q = p;
      std::swap(q[s], q[s + 1]);
      if (seen.insert(q).second) todo.push_back(q);
    }
  }
  return static_cast<long>(seen.size());
}

// |W| by BFS over words, elements modelled as numeric reflection matrices
// rounded to a coarse grid for deduplication.
inline long matrix_group_order(const CoxeterGraph& g) {
  int n = g.nodes;
  using Mat = std::vector<double>;
  std::vector<Mat> sigma(n, Mat(n * n, 0.0));
  for (int s = 0; s < n; ++s) {
    for (int i = 0; i < n; ++i) sigma[s][i * n + i] = 1.0;
    for (int t = 0; t < n; ++t)
      sigma[s][s * n + t] = (t == s) ? -1.0 : 2.0 * std::cos(M_PI / g.m(s, t));
  }
  auto key = [n](const Mat& m) {
    std::vector<long> k(n * n);
    for (int i = 0; i < n * n; ++i) k[i] = std::lround(m[i] * 4096.0);
    return k;
  };
  Mat id(n * n, 0.0);
  for (int i = 0; i < n; ++i) id[i * n + i] = 1.0;
  std::set<std::vector<long>> seen{key(id)};
  std::deque<Mat> todo{id};
  while (!todo.empty()) {
    Mat m = todo.front();
    todo.pop_front();
    for (int s = 0; s < n; ++s) {
      Mat r(n * n, 0.0);
      for (int i = 0; i < n; ++i)
        for (int k2 = 0; k2 < n; ++k2)
          for (int j = 0; j < n; ++j)
            r[i * n + j] += m[i * n + k2] * sigma[s][k2 * n + j];
      if (seen.insert(key(r)).second) todo.push_back(r);
    }
  }
  return static_cast<long>(seen.size());
}

// Every reduced word of the element with the given reduced word: closure
// under commutation and braid moves (Tits' theorem).
inline std::set<Word> all_reduced_words(const CoxeterGraph& g, const Word& reduced) {
  std::set<Word> seen{reduced};
  std::deque<Word> todo{reduced};
  while (!todo.empty()) {
    Word u = todo.front();
    todo.pop_front();
    size_t n = u.size();
    for (size_t p = 0; p + 1 < n; ++p) {
      Gen a = u[p], b = u[p + 1];
      if (a == b) continue;
      int m = g.m(a, b);
      if (m == 0 || p + m > n) continue;
      bool alt = true;
      for (int k = 0; k < m && alt; ++k)
        if (u[p + k] != (k % 2 == 0 ? a : b)) alt = false;
      if (!alt) continue;
      Word v = u;
      for (int k = 0; k < m; ++k) v[p + k] = (k % 2 == 0 ? b : a);
      if (seen.insert(v).second) todo.push_back(v);
    }
  }
  return seen;
}

// Complexity check straight from the reduced-word set.
inline bool complex_by_exhaustion(const CoxeterGraph& g, const Word& reduced) {
  for (const Word& u : all_reduced_words(g, reduced)) {
    for (size_t p = 0; p + 1 < u.size(); ++p) {
      Gen a = u[p], b = u[p + 1];
      if (a == b) continue;
      int m = g.m(a, b);
      if (m < 3 || p + m > u.size()) continue;
      bool alt = true;
      for (int k = 0; k < m && alt; ++k)
        if (u[p + k] != (k % 2 == 0 ? a : b)) alt = false;
      if (alt) return true;
    }
  }
  return false;
}

}  // namespace oracles
