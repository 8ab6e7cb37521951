#include "gtl/hecke.hpp"

#include "gtl/tl_algebra.hpp"

namespace gtl {

PolyVec HeckeAlgebra::one() const { return {{Word{}, Laurent(1)}}; }

PolyVec HeckeAlgebra::T(const Word& w) const { return {{w, Laurent(1)}}; }

PolyVec HeckeAlgebra::mul_gen(Gen s, const PolyVec& vec, Side side) const {
  PolyVec acc;
  const Laurent q = Laurent::q();
  const Laurent qm1 = Laurent::q() - Laurent(1);
  for (const auto& [x, p] : vec) {
    Word sx = w_.mult_gen(x, s, side);
    if (sx.size() > x.size()) {
      vec_add_term(acc, sx, p);
    } else {
      vec_add_term(acc, sx, p * q);
      vec_add_term(acc, x, p * qm1);
    }
  }
  return acc;
}

PolyVec HeckeAlgebra::mul_word(PolyVec vec, const Word& word, Side side) const {
  if (side == Side::Right) {
    for (Gen s : word) vec = mul_gen(s, vec, Side::Right);
  } else {
    for (auto it = word.rbegin(); it != word.rend(); ++it)
      vec = mul_gen(*it, vec, Side::Left);
  }
  return vec;
}

PolyVec HeckeAlgebra::mul(const PolyVec& a, const PolyVec& b) const {
  PolyVec acc;
  for (const auto& [y, c] : b) vec_add_scaled(acc, mul_word(a, y, Side::Right), c);
  return acc;
}

const PolyVec& HeckeAlgebra::bar_T(const Word& w) const {
  auto it = bart_cache_.find(w);
  if (it != bart_cache_.end()) return it->second;
  PolyVec result;
  if (w.empty()) {
    result = one();
  } else {
    // bar(T_w) = bar(T_s) bar(T_u) for w = su with additive lengths, and
    // bar(T_s) = T_s^-1 = q^-1 T_s + (q^-1 - 1) T_e
    Gen s = w.front();
    const PolyVec& rest = bar_T(Word(w.begin() + 1, w.end()));
    result = vec_scaled(mul_gen(s, rest, Side::Left), Laurent::q_inv());
    vec_add_scaled(result, rest, Laurent::q_inv() - Laurent(1));
  }
  return bart_cache_.emplace(w, std::move(result)).first->second;
}

PolyVec HeckeAlgebra::bar(const PolyVec& vec) const {
  PolyVec acc;
  for (const auto& [x, p] : vec) vec_add_scaled(acc, bar_T(x), p.bar());
  return acc;
}

ICContext hecke_ic_context(const HeckeAlgebra& algebra) {
  ICContext ctx;
  ctx.bar_row = [alg = &algebra](const Word& w) {
    PolyVec row;
    int lw = static_cast<int>(w.size());
    for (const auto& [x, p] : alg->bar_T(w))
      row[x] = p.shifted(lw + static_cast<int>(x.size()));
    return row;
  };
  return ctx;
}

std::map<Word, PolyVec, LenLex> kl_basis(const HeckeAlgebra& algebra,
                                         const std::vector<Word>& targets) {
  ICTable table = solve_ic(hecke_ic_context(algebra), targets);
  std::map<Word, PolyVec, LenLex> basis;
  for (const auto& [w, row] : table.rows)
    basis.emplace(w, mprime_to_basis(row));
  return basis;
}

PolyVec project_to_tl(const TLAlgebra& tl, const PolyVec& hvec) {
  PolyVec acc;
  for (const auto& [x, p] : hvec) vec_add_scaled(acc, tl.d_expand(x), p);
  return acc;
}

KernelReport kernel_analysis(const CoxeterGraph& graph, long budget) {
  HeckeAlgebra hecke{graph};
  const CoxeterGroup& g = hecke.group();
  if (!g.is_finite())
    throw BudgetError("kernel_analysis: group is infinite");
  auto all = g.enumerate(std::nullopt);
  if (static_cast<long>(all.size()) > budget)
    throw BudgetError("kernel_analysis: group order " +
                      std::to_string(all.size()) + " exceeds budget " +
                      std::to_string(budget));

  TLAlgebra tl{graph};
  std::vector<Word> words, wc;
  for (const auto& [w, in_wc] : all) {
    words.push_back(w);
    if (in_wc) wc.push_back(w);
  }
  auto kl = kl_basis(hecke, words);
  ICTable ic = solve_ic(tl_ic_context(tl), wc);

  KernelReport report;
  report.graph = graph.canonical_text();
  report.dim_J = static_cast<long>(words.size() - wc.size());
  report.projected_equals_ic = true;
  for (const auto& [w, cw] : kl) {
    PolyVec image = project_to_tl(tl, cw);
    if (image.empty()) ++report.kl_in_kernel;
    if (g.is_complex(w)) continue;
    if (image != mprime_to_basis(ic.rows.at(w))) {
      report.projected_equals_ic = false;
      report.witnesses.push_back(w);
    }
  }
  report.spanned = report.kl_in_kernel == report.dim_J;
  return report;
}

}  // namespace gtl
