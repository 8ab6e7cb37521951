#include "gtl/tl_algebra.hpp"

#include <stdexcept>

namespace gtl {

PolyVec TLAlgebra::one() const { return {{Word{}, Laurent(1)}}; }

PolyVec TLAlgebra::t(const Word& w) const {
  if (w_.is_complex(w)) throw std::invalid_argument("t: complex index");
  return {{w, Laurent(1)}};
}

PolyVec TLAlgebra::b(Gen s) const {
  return {{Word{}, Laurent::v(-1)}, {Word{s}, Laurent::v(-1)}};
}

PolyVec TLAlgebra::monomial(const Word& w) const {
  if (w_.is_complex(w)) throw std::invalid_argument("monomial: complex index");
  auto cached = monomial_cache_.find(w);
  if (cached != monomial_cache_.end()) return cached->second;
  PolyVec acc = one();
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    // acc := b_s * acc = v^-1 (t_s * acc + acc)
    PolyVec next = mul_gen(*it, acc, Side::Left);
    vec_add(next, acc);
    acc = vec_scaled(next, Laurent::v(-1));
  }
  return monomial_cache_.emplace(w, std::move(acc)).first->second;
}

PolyVec TLAlgebra::mul_gen(Gen s, const PolyVec& vec, Side side) const {
  PolyVec acc;
  const Laurent q = Laurent::q();
  const Laurent qm1 = Laurent::q() - Laurent(1);
  for (const auto& [x, p] : vec) {
    Word sx = w_.mult_gen(x, s, side);
    if (sx.size() > x.size()) {
      if (w_.is_complex(sx))
        vec_add_scaled(acc, d_expand(sx), p);
      else
        vec_add_term(acc, sx, p);
    } else {
      // sx is shorter, hence automatically in W_c
      vec_add_term(acc, sx, p * q);
      vec_add_term(acc, x, p * qm1);
    }
  }
  return acc;
}

PolyVec TLAlgebra::mul_word(PolyVec vec, const Word& word, Side side) const {
  if (side == Side::Right) {
    for (Gen s : word) vec = mul_gen(s, vec, Side::Right);
  } else {
    for (auto it = word.rbegin(); it != word.rend(); ++it)
      vec = mul_gen(*it, vec, Side::Left);
  }
  return vec;
}

PolyVec TLAlgebra::mul(const PolyVec& a, const PolyVec& b) const {
  PolyVec acc;
  for (const auto& [y, c] : b) vec_add_scaled(acc, mul_word(a, y, Side::Right), c);
  return acc;
}

const PolyVec& TLAlgebra::d_expand(const Word& w) const {
  auto it = dexp_cache_.find(w);
  if (it != dexp_cache_.end()) return it->second;
  PolyVec result;
  auto wit = w_.complex_witness(w);
  if (!wit) {
    result = {{w, Laurent(1)}};
  } else {
    // w = x1 * w_ij * x2 with additive lengths; rewrite the middle factor
    // and multiply out.  Everything on the right involves elements strictly
    // shorter than w, so the recursion through mul_gen terminates.
    const Word& u = wit->reduced_word;
    Word x1(u.begin(), u.begin() + wit->pos);
    Word x2(u.begin() + wit->pos + wit->m, u.end());
    PolyVec mid;
    for (int len = 0; len < wit->m; ++len) {
      if (len == 0) {
        vec_add_term(mid, Word{}, Laurent(-1));
        continue;
      }
      vec_add_term(mid, alternating_word(wit->s, wit->t, len), Laurent(-1));
      vec_add_term(mid, alternating_word(wit->t, wit->s, len), Laurent(-1));
    }
    result = mul_word(mul(mul_word(one(), x1, Side::Right), mid), x2, Side::Right);
  }
  return dexp_cache_.emplace(w, std::move(result)).first->second;
}

const PolyVec& TLAlgebra::bar_t(const Word& w) const {
  auto it = bart_cache_.find(w);
  if (it != bart_cache_.end()) return it->second;
  PolyVec result;
  if (w.empty()) {
    result = one();
  } else {
    // bar(t_w) = bar(t_s) bar(t_u) for w = su; bar(t_s) = q^-1 t_s + (q^-1 - 1) t_e
    Gen s = w.front();
    const PolyVec& rest = bar_t(Word(w.begin() + 1, w.end()));
    result = vec_scaled(mul_gen(s, rest, Side::Left), Laurent::q_inv());
    vec_add_scaled(result, rest, Laurent::q_inv() - Laurent(1));
  }
  return bart_cache_.emplace(w, std::move(result)).first->second;
}

PolyVec TLAlgebra::bar(const PolyVec& vec) const {
  PolyVec acc;
  for (const auto& [x, p] : vec) vec_add_scaled(acc, bar_t(x), p.bar());
  return acc;
}

PolyVec TLAlgebra::expand_over_monomial(PolyVec tvec) const {
  // The monomial b_z has t-leading term v^{-l(z)} t_z; peel from the top.
  PolyVec coords;
  while (!tvec.empty()) {
    auto top = std::prev(tvec.end());
    const Word z = top->first;
    Laurent f = top->second.shifted(static_cast<int>(z.size()));
    coords[z] = f;
    vec_add_scaled(tvec, monomial(z), -f);
  }
  return coords;
}

PolyVec TLAlgebra::structure_constants_monomial(const Word& x, const Word& y) const {
  return expand_over_monomial(mul(monomial(x), monomial(y)));
}

TransitionTables TLAlgebra::transition_tables(const std::vector<Word>& elements) const {
  std::set<Word, LenLex> index(elements.begin(), elements.end());
  auto sign = [](const Word& w) { return w.size() % 2 == 0 ? 1 : -1; };
  TransitionTables tables;
  for (const Word& w : elements) {
    if (w_.is_complex(w)) throw std::invalid_argument("transition_tables: complex index");
    PolyVec bw = monomial(w);
    // Ptilde column: b_w = sum_x Ptilde_{x,w} v^{-l(x)} t_x
    PolyVec pt;
    for (const auto& [x, c] : bw) {
      if (!index.count(x))
        throw std::invalid_argument("transition_tables: elements not ideal-closed");
      pt[x] = c.shifted(static_cast<int>(x.size()));
    }
    tables.ptilde[w] = std::move(pt);
    // Qtilde column from v^{-l(w)} t_w = eps_w sum_x eps_x Qtilde_{x,w} b_x
    PolyVec coords = expand_over_monomial(
        {{w, Laurent::v(-static_cast<int>(w.size()))}});
    PolyVec qt;
    for (const auto& [x, c] : coords) {
      if (!index.count(x))
        throw std::invalid_argument("transition_tables: elements not ideal-closed");
      qt[x] = sign(w) * sign(x) > 0 ? c : -c;
    }
    tables.qtilde[w] = std::move(qt);
  }
  return tables;
}

}  // namespace gtl
