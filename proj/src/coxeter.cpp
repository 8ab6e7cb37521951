#include "gtl/coxeter.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace gtl {

int CoxeterGraph::m(Gen i, Gen j) const {
  if (i == j) return 1;
  if (i > j) std::swap(i, j);
  auto it = bonds.find({i, j});
  return it == bonds.end() ? 2 : it->second;
}

std::vector<int> CoxeterGraph::finite_bond_strengths() const {
  std::vector<int> out;
  for (const auto& [pair, m] : bonds)
    if (m != 0) out.push_back(m);
  return out;
}

std::string CoxeterGraph::canonical_text() const {
  std::ostringstream os;
  os << nodes;
  for (const auto& [pair, m] : bonds)
    os << ";" << pair.first + 1 << "-" << pair.second + 1 << ":" << m;
  return os.str();
}

namespace {

void add_bond(CoxeterGraph& g, int i, int j, int m) {  // 1-based nodes
  if (i == j || i < 1 || j < 1 || i > g.nodes || j > g.nodes)
    throw std::invalid_argument("graph: node index out of range");
  if (m == 2) return;
  if (m != 0 && m < 2) throw std::invalid_argument("graph: bond strength < 2");
  if (m > 12)
    throw std::invalid_argument("graph: bond strength above supported range");
  if (i > j) std::swap(i, j);
  g.bonds[{i - 1, j - 1}] = m;
}

CoxeterGraph path_graph(int n, std::map<int, int> special = {}) {
  CoxeterGraph g;
  g.nodes = n;
  for (int i = 1; i < n; ++i) {
    auto it = special.find(i);
    add_bond(g, i, i + 1, it == special.end() ? 3 : it->second);
  }
  return g;
}

}  // namespace

CoxeterGraph CoxeterGraph::parse(const std::string& spec) {
  if (!spec.empty() && spec[0] == '{') {
    auto j = nlohmann::json::parse(spec);
    CoxeterGraph g;
    g.nodes = j.at("nodes").get<int>();
    if (g.nodes < 1) throw std::invalid_argument("graph: empty node set");
    for (const auto& e : j.at("edges"))
      add_bond(g, e.at(0).get<int>(), e.at(1).get<int>(), e.at(2).get<int>());
    return g;
  }
  auto rank_after = [&](size_t off) {
    int n = std::stoi(spec.substr(off));
    if (n < 1) throw std::invalid_argument("graph: bad rank in " + spec);
    return n;
  };
  if (spec.rfind("affA", 0) == 0) {
    int l = rank_after(4);  // affine A_l: an (l+1)-cycle, all bonds 3
    if (l < 2) throw std::invalid_argument("graph: affA needs rank >= 2");
    CoxeterGraph g;
    g.nodes = l + 1;
    for (int i = 1; i <= l; ++i) add_bond(g, i, i + 1, 3);
    add_bond(g, l + 1, 1, 3);
    return g;
  }
  if (spec.rfind("I2:", 0) == 0) {
    std::string ms = spec.substr(3);
    int m = (ms == "inf") ? 0 : std::stoi(ms);
    if (m != 0 && m < 3) throw std::invalid_argument("graph: I2 needs m >= 3");
    CoxeterGraph g;
    g.nodes = 2;
    add_bond(g, 1, 2, m);
    return g;
  }
  switch (spec.empty() ? '?' : spec[0]) {
    case 'A':
      return path_graph(rank_after(1));
    case 'B': {
      int n = rank_after(1);
      if (n < 2) throw std::invalid_argument("graph: B needs rank >= 2");
      return path_graph(n, {{n - 1, 4}});
    }
    case 'H': {
      int n = rank_after(1);
      if (n < 2 || n > 4) throw std::invalid_argument("graph: H rank in 2..4");
      return path_graph(n, {{1, 5}});
    }
    case 'D': {
      int n = rank_after(1);
      if (n < 3) throw std::invalid_argument("graph: D needs rank >= 3");
      CoxeterGraph g = path_graph(n - 1);
      g.nodes = n;
      add_bond(g, n - 2, n, 3);
      return g;
    }
    case 'E': {
      // Straight line 1..n-1 plus node n attached to node 3; this extends
      // the usual E6..E8 convention to arbitrary rank.
      int n = rank_after(1);
      if (n < 4) throw std::invalid_argument("graph: E needs rank >= 4");
      CoxeterGraph g = path_graph(n - 1);
      g.nodes = n;
      add_bond(g, 3, n, 3);
      return g;
    }
    default:
      throw std::invalid_argument("graph: unknown name " + spec);
  }
}

Word alternating_word(Gen s, Gen t, int len) {
  Word w;
  w.reserve(len);
  for (int i = 0; i < len; ++i) w.push_back(i % 2 == 0 ? s : t);
  return w;
}

CoxeterGroup::CoxeterGroup(CoxeterGraph g)
    : g_(std::move(g)), ring_(g_.finite_bond_strengths()) {
  int n = g_.nodes;
  sigma_.reserve(n);
  for (Gen s = 0; s < n; ++s) {
    Matrix mat = identity();
    for (Gen t = 0; t < n; ++t)
      mat[s * n + t] = (t == s) ? ring_.integer(-1) : ring_.cosval(g_.m(s, t));
    sigma_.push_back(std::move(mat));
  }
  finite_ = finite_by_form();
}

CoxeterGroup::Matrix CoxeterGroup::identity() const {
  int n = rank();
  Matrix m(n * n, ring_.zero());
  for (int i = 0; i < n; ++i) m[i * n + i] = ring_.one();
  return m;
}

CoxeterGroup::Matrix CoxeterGroup::mat_mul(const Matrix& a, const Matrix& b) const {
  int n = rank();
  Matrix r(n * n, ring_.zero());
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      const Elem& aik = a[i * n + k];
      if (ring_.is_zero(aik)) continue;
      for (int j = 0; j < n; ++j) {
        const Elem& bkj = b[k * n + j];
        if (ring_.is_zero(bkj)) continue;
        r[i * n + j] = ring_.add(r[i * n + j], ring_.mul(aik, bkj));
      }
    }
  return r;
}

int CoxeterGroup::column_sign(const Matrix& m, int j) const {
  int n = rank();
  for (int i = 0; i < n; ++i) {
    int s = ring_.sign(m[i * n + j]);
    if (s != 0) return s;  // root coordinates share one sign
  }
  return 0;
}

Word CoxeterGroup::canonical_from_inverse_matrix(Matrix minv) const {
  // Peel off the least left descent until the identity remains; column s of
  // the inverse matrix is w^-1(alpha_s), negative exactly for left descents.
  Word out;
  for (;;) {
    Gen s = -1;
    for (Gen c = 0; c < rank(); ++c)
      if (column_sign(minv, c) < 0) {
        s = c;
        break;
      }
    if (s < 0) break;
    out.push_back(s);
    minv = mat_mul(minv, sigma_[s]);
  }
  return out;
}

Word CoxeterGroup::canonical(const Word& any) const {
  Matrix minv = identity();
  for (auto it = any.rbegin(); it != any.rend(); ++it)
    minv = mat_mul(minv, sigma_[*it]);
  return canonical_from_inverse_matrix(std::move(minv));
}

Word CoxeterGroup::mult_gen(const Word& canon, Gen s, Side side) const {
  auto& cache = side == Side::Left ? lmult_cache_ : rmult_cache_;
  auto it = cache.find({canon, s});
  if (it != cache.end()) return it->second;
  Word input;
  if (side == Side::Left) {
    input.reserve(canon.size() + 1);
    input.push_back(s);
    input.insert(input.end(), canon.begin(), canon.end());
  } else {
    input = canon;
    input.push_back(s);
  }
  Word result = canonical(input);
  cache.emplace(std::make_pair(canon, s), result);
  return result;
}

Word CoxeterGroup::inverse(const Word& canon) const {
  Word rev(canon.rbegin(), canon.rend());
  return canonical(rev);
}

std::vector<Gen> CoxeterGroup::left_descents(const Word& canon) const {
  auto it = descent_cache_.find(canon);
  if (it != descent_cache_.end()) return it->second;
  Matrix minv = identity();
  for (auto r = canon.rbegin(); r != canon.rend(); ++r)
    minv = mat_mul(minv, sigma_[*r]);
  std::vector<Gen> out;
  for (Gen s = 0; s < rank(); ++s)
    if (column_sign(minv, s) < 0) out.push_back(s);
  descent_cache_.emplace(canon, out);
  return out;
}

bool CoxeterGroup::bruhat_leq(const Word& x, const Word& w) const {
  if (x.empty()) return true;
  if (x.size() > w.size()) return false;
  if (x == w) return true;
  auto key = std::make_pair(x, w);
  auto it = bruhat_cache_.find(key);
  if (it != bruhat_cache_.end()) return it->second;
  // w's canonical word starts with its least left descent s; recurse on sw.
  Gen s = w[0];
  Word sw(w.begin() + 1, w.end());
  auto lds = left_descents(x);
  bool res;
  if (std::find(lds.begin(), lds.end(), s) != lds.end())
    res = bruhat_leq(mult_gen(x, s, Side::Left), sw);
  else
    res = bruhat_leq(x, sw);
  bruhat_cache_.emplace(std::move(key), res);
  return res;
}

std::vector<Word> CoxeterGroup::bruhat_downset(const Word& w) const {
  // Closure under single-letter deletion from canonical (reduced) words
  // reaches exactly the Bruhat interval [e, w].
  std::set<Word, LenLex> seen;
  std::deque<Word> todo{w};
  seen.insert(w);
  while (!todo.empty()) {
    Word u = todo.front();
    todo.pop_front();
    for (size_t i = 0; i < u.size(); ++i) {
      Word del;
      del.reserve(u.size() - 1);
      del.insert(del.end(), u.begin(), u.begin() + i);
      del.insert(del.end(), u.begin() + i + 1, u.end());
      Word c = canonical(del);
      if (seen.insert(c).second) todo.push_back(c);
    }
  }
  return {seen.begin(), seen.end()};
}

std::vector<Word> CoxeterGroup::bruhat_ideal(const Word& w) const {
  std::vector<Word> out;
  for (const Word& x : bruhat_downset(w))
    if (!is_complex(x)) out.push_back(x);
  return out;
}

std::optional<ComplexWitness> CoxeterGroup::complex_witness(const Word& canon) const {
  auto cached = complex_cache_.find(canon);
  if (cached != complex_cache_.end()) return cached->second;
  std::optional<ComplexWitness> result;
  // Search the commutation class of the canonical reduced word for a
  // contiguous alternating factor of full bond length.  Finding one is the
  // complexity witness (a braid move applied to it would only certify
  // the same thing), and exhausting the class without one is conclusive.
  std::set<Word> visited{canon};
  std::deque<Word> todo{canon};
  while (!todo.empty() && !result) {
    Word u = todo.front();
    todo.pop_front();
    size_t n = u.size();
    for (size_t p = 0; p + 1 < n && !result; ++p) {
      Gen a = u[p], b = u[p + 1];
      if (a == b) continue;
      int mm = g_.m(a, b);
      if (mm < 3 || p + mm > n) continue;  // mm == 0: infinite, no relation
      bool alt = true;
      for (int k = 0; k < mm && alt; ++k)
        if (u[p + k] != (k % 2 == 0 ? a : b)) alt = false;
      if (alt) result = ComplexWitness{u, static_cast<int>(p), a, b, mm};
    }
    if (result) break;
    for (size_t p = 0; p + 1 < n; ++p) {
      if (g_.m(u[p], u[p + 1]) != 2) continue;
      Word v = u;
      std::swap(v[p], v[p + 1]);
      if (visited.insert(v).second) todo.push_back(v);
    }
  }
  complex_cache_.emplace(canon, result);
  return result;
}

bool CoxeterGroup::is_complex(const Word& canon) const {
  return complex_witness(canon).has_value();
}

template <bool WcOnly>
std::vector<std::pair<Word, bool>> CoxeterGroup::bfs(std::optional<int> cap) const {
  if (!cap && !finite_)
    throw std::invalid_argument("enumerate: length cap required for infinite group");
  std::vector<std::pair<Word, bool>> out;
  out.emplace_back(Word{}, true);
  struct Node {
    Matrix mw, minv;
    Word word;
  };
  std::vector<Node> frontier{{identity(), identity(), {}}};
  int len = 0;
  while (!frontier.empty() && (!cap || len < *cap)) {
    ++len;
    std::vector<Node> next;
    std::set<Word> seen;
    for (const Node& node : frontier) {
      for (Gen s = 0; s < rank(); ++s) {
        if (column_sign(node.mw, s) < 0) continue;  // right descent
        Matrix minv2 = mat_mul(sigma_[s], node.minv);
        Word cw = canonical_from_inverse_matrix(minv2);
        if (!seen.insert(cw).second) continue;
        bool complex = is_complex(cw);
        if (WcOnly && complex) continue;
        out.emplace_back(cw, !complex);
        next.push_back({mat_mul(node.mw, sigma_[s]), std::move(minv2), std::move(cw)});
      }
    }
    frontier = std::move(next);
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return LenLex{}(a.first, b.first);
  });
  return out;
}

std::vector<std::pair<Word, bool>> CoxeterGroup::enumerate(std::optional<int> cap) const {
  return bfs<false>(cap);
}

std::vector<Word> CoxeterGroup::enumerate_wc(std::optional<int> cap) const {
  std::vector<Word> out;
  for (auto& [w, in_wc] : bfs<true>(cap)) out.push_back(std::move(w));
  return out;
}

bool CoxeterGroup::finite_by_form() const {
  // W is finite iff the symmetrized form is positive definite; test the
  // leading principal minors with fraction-free elimination.  The doubled
  // form keeps every entry in the ring: diagonal 2, off-diagonal -2cos(pi/m).
  int n = rank();
  std::vector<Elem> a(n * n, ring_.zero());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      a[i * n + j] = (i == j) ? ring_.integer(2)
                              : ring_.neg(ring_.cosval(g_.m(i, j)));
  Elem prev = ring_.one();
  for (int k = 0; k < n; ++k) {
    const Elem pivot = a[k * n + k];
    if (ring_.sign(pivot) <= 0) return false;
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j)
        a[i * n + j] = ring_.exact_div(
            ring_.sub(ring_.mul(pivot, a[i * n + j]),
                      ring_.mul(a[i * n + k], a[k * n + j])),
            prev);
    prev = pivot;
  }
  return true;
}

}  // namespace gtl
