#include "gtl/ic_solver.hpp"

#include "gtl/tl_algebra.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>
#include <stdexcept>

namespace gtl {

namespace {

std::string word_str(const Word& w) {
  if (w.empty()) return "e";
  std::ostringstream out;
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) out << '.';
    out << w[i] + 1;
  }
  return out.str();
}

// The closure of targets under bar_row supports, sorted ascending by less.
std::vector<Word> closure(const ICContext& ctx, const std::vector<Word>& targets) {
  std::set<Word, LenLex> seen(targets.begin(), targets.end());
  std::deque<Word> todo(targets.begin(), targets.end());
  while (!todo.empty()) {
    Word w = todo.front();
    todo.pop_front();
    for (const auto& [x, c] : ctx.bar_row(w))
      if (seen.insert(x).second) todo.push_back(x);
  }
  std::vector<Word> order(seen.begin(), seen.end());
  std::sort(order.begin(), order.end(), ctx.less);
  return order;
}

}  // namespace

PolyVec ic_bar_vec(const ICContext& ctx, const PolyVec& vec) {
  PolyVec acc;
  for (const auto& [x, c] : vec) vec_add_scaled(acc, ctx.bar_row(x), c.bar());
  return acc;
}

ICTable solve_ic(const ICContext& ctx, const std::vector<Word>& targets) {
  ICTable table;
  for (const Word& w : closure(ctx, targets)) {
    PolyVec c{{w, Laurent(1)}};
    // defect d = bar(c) - c; bar_row(w) has 1 on the diagonal, so d_w = 0
    PolyVec d = ctx.bar_row(w);
    vec_sub(d, c);
    while (!d.empty()) {
      // top surviving index under the total refinement
      Word y = d.begin()->first;
      for (const auto& [x, dx] : d)
        if (ctx.less(y, x)) y = x;
      Laurent dy = d.at(y);
      if (!(ctx.less(y, w)) || dy.bar() != -dy)
        throw std::logic_error("solve_ic: bar involution is not triangular at " +
                               word_str(w));
      // corrections run through already-solved rows, which are bar-invariant:
      // c += p c_y with p = neg_part(d_y) cancels the defect at y exactly
      const PolyVec& cy = table.rows.at(y);
      vec_add_scaled(c, cy, dy.neg_part());
      vec_add_scaled(d, cy, -dy);
    }
    table.rows.emplace(w, std::move(c));
  }
  return table;
}

ICVerifyReport verify_ic(const ICContext& ctx, const ICTable& table) {
  ICVerifyReport report;
  std::vector<Word> index;
  for (const auto& [w, row] : table.rows) {
    index.push_back(w);
    auto diag = row.find(w);
    if (diag == row.end() || !diag->second.is_one())
      report.violations.push_back("row " + word_str(w) + ": diagonal is not 1");
    for (const auto& [x, h] : row) {
      if (x == w) continue;
      if (!ctx.less(x, w))
        report.violations.push_back("row " + word_str(w) + ": support at " +
                                    word_str(x) + " is not below the index");
      else if (!h.in(Subring::VinvAMinus))
        report.violations.push_back("row " + word_str(w) + ": coefficient " +
                                    h.str() + " at " + word_str(x) +
                                    " escapes v^-1 Z[v^-1]");
    }
    if (ic_bar_vec(ctx, row) != row)
      report.violations.push_back("row " + word_str(w) + ": not bar-invariant");
  }
  // Uniqueness: any total refinement of the length order gives the same
  // basis.  Re-solve with the tie-break reversed and compare.
  ICContext flipped = ctx;
  flipped.less = [](const Word& a, const Word& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return b < a;
  };
  ICTable redo = solve_ic(flipped, index);
  for (const Word& w : index) {
    auto it = redo.rows.find(w);
    if (it == redo.rows.end() || it->second != table.rows.at(w))
      report.violations.push_back("row " + word_str(w) +
                                  ": depends on the order refinement");
  }
  return report;
}

bool is_ic_element(const ICContext& ctx, const PolyVec& vec, const Word& w) {
  auto diag = vec.find(w);
  if (diag == vec.end() || !diag->second.is_one()) return false;
  for (const auto& [x, h] : vec) {
    if (x == w) continue;
    if (!ctx.less(x, w) || !h.in(Subring::VinvAMinus)) return false;
  }
  return ic_bar_vec(ctx, vec) == vec;
}

ICContext tl_ic_context(const TLAlgebra& algebra) {
  ICContext ctx;
  ctx.bar_row = [alg = &algebra](const Word& w) {
    // m'_w = v^-l(w) t_w, so bar(m'_w) = v^l(w) bar(t_w); re-scaling the
    // t-coordinates by v^l(x) lands back in m'-coordinates.
    PolyVec row;
    int lw = static_cast<int>(w.size());
    for (const auto& [x, p] : alg->bar_t(w))
      row[x] = p.shifted(lw + static_cast<int>(x.size()));
    return row;
  };
  return ctx;
}

PolyVec mprime_to_basis(const PolyVec& vec) {
  PolyVec out;
  for (const auto& [x, c] : vec)
    out[x] = c.shifted(-static_cast<int>(x.size()));
  return out;
}

PolyVec basis_to_mprime(const PolyVec& vec) {
  PolyVec out;
  for (const auto& [x, c] : vec)
    out[x] = c.shifted(static_cast<int>(x.size()));
  return out;
}

}  // namespace gtl
