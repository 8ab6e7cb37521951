#include "gtl/harness.hpp"

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace gtl {

namespace {

// ---- graph classification for expectations -------------------------------

bool simply_laced(const CoxeterGraph& g) {
  for (const auto& [pair, m] : g.bonds)
    if (m != 3) return false;
  return true;
}

bool has_wide_bond(const CoxeterGraph& g) {
  for (const auto& [pair, m] : g.bonds)
    if (m >= 4 || m == 0) return true;
  return false;
}

std::vector<int> degrees(const CoxeterGraph& g) {
  std::vector<int> deg(g.nodes, 0);
  for (const auto& [pair, m] : g.bonds) {
    ++deg[pair.first];
    ++deg[pair.second];
  }
  return deg;
}

// Path graph with all bonds 3: type A.
bool is_type_a(const CoxeterGraph& g) {
  if (!simply_laced(g)) return false;
  if (g.nodes == 1) return g.bonds.empty();
  auto deg = degrees(g);
  int leaves = 0;
  for (int d : deg) {
    if (d == 0 || d > 2) return false;
    if (d == 1) ++leaves;
  }
  return leaves == 2 && static_cast<int>(g.bonds.size()) == g.nodes - 1;
}

// Tree with all bonds 3 and exactly one degree-3 node whose removal leaves
// two single-node branches: type D.
bool is_type_d(const CoxeterGraph& g) {
  if (!simply_laced(g) || g.nodes < 4) return false;
  if (static_cast<int>(g.bonds.size()) != g.nodes - 1) return false;
  auto deg = degrees(g);
  int forks = 0, leaves = 0;
  for (int d : deg) {
    if (d == 0 || d > 3) return false;
    if (d == 3) ++forks;
    if (d == 1) ++leaves;
  }
  return forks == 1 && leaves == 3;
}

// Single cycle with an even number of nodes and all bonds 3: the affine
// graphs where the monomial basis is known to miss the canonical one.
bool is_even_cycle(const CoxeterGraph& g) {
  if (!simply_laced(g) || g.nodes < 4 || g.nodes % 2 != 0) return false;
  if (static_cast<int>(g.bonds.size()) != g.nodes) return false;
  for (int d : degrees(g))
    if (d != 2) return false;
  return true;
}

// H-type line: one bond of 5 at the end of an all-3 path.
bool is_type_h(const CoxeterGraph& g) {
  int fives = 0;
  for (const auto& [pair, m] : g.bonds) {
    if (m == 5)
      ++fives;
    else if (m != 3)
      return false;
  }
  if (fives != 1 || static_cast<int>(g.bonds.size()) != g.nodes - 1) return false;
  for (int d : degrees(g))
    if (d == 0 || d > 2) return false;
  return true;
}

enum class Expect { Yes, No, Unspecified };

// Does the canonical basis coincide with the monomial basis on this graph?
Expect expect_monomial_equal(const CoxeterGraph& g, bool finite) {
  if (has_wide_bond(g)) return Expect::No;
  if (simply_laced(g) && finite) return Expect::Yes;
  if (is_even_cycle(g)) return Expect::No;
  return Expect::Unspecified;
}

// ---- shared plumbing -----------------------------------------------------

std::vector<Word> wc_scope(const CoxeterGroup& g, const ExperimentConfig& cfg) {
  if (!g.is_finite() && !cfg.cap)
    throw UsageError("--cap is required for infinite graphs");
  auto wc = g.enumerate_wc(cfg.cap);
  if (static_cast<long>(wc.size()) > cfg.budget)
    throw BudgetError("index set of size " + std::to_string(wc.size()) +
                      " exceeds budget " + std::to_string(cfg.budget));
  return wc;
}

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

constexpr int kCacheSchema = 1;

void write_atomic(const std::filesystem::path& path, const std::string& data) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    out << data;
    if (!out) throw std::runtime_error("cannot write " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

ICTable solve_ic_cached(const ExperimentConfig& cfg, const CoxeterGraph& graph,
                        const ICContext& ctx, const std::vector<Word>& wc) {
  if (cfg.cache_dir.empty()) return solve_ic(ctx, wc);
  std::ostringstream key;
  key << graph.canonical_text() << '|' << (cfg.cap ? *cfg.cap : -1) << '|'
      << kCacheSchema;
  std::filesystem::path dir(cfg.cache_dir);
  std::filesystem::create_directories(dir);
  std::filesystem::path file =
      dir / ("ic_" + std::to_string(fnv1a(key.str())) + ".json");
  if (std::filesystem::exists(file)) {
    std::ifstream in(file, std::ios::binary);
    std::stringstream buf;
    buf << in.rdbuf();
    try {
      ICTable cached = ic_table_from_json(Json::parse(buf.str()));
      bool covers = true;
      for (const Word& w : wc)
        if (!cached.rows.count(w)) covers = false;
      if (covers && verify_ic(ctx, cached).ok()) return cached;
    } catch (const std::exception&) {
      // fall through to recompute; a corrupt cache entry is replaced
    }
  }
  ICTable table = solve_ic(ctx, wc);
  write_atomic(file, ic_table_to_json(table).dump());
  return table;
}

Json words_json(const std::vector<Word>& words) {
  Json arr = Json::array();
  for (const Word& w : words) arr.push_back(word_to_json(w));
  return arr;
}

std::string table_payload(const ICTable& table, const std::string& format) {
  if (format == "json") return ic_table_to_json(table).dump();
  if (format == "latex") return ic_table_latex(table);
  if (format == "csv") return matrix_csv(table.rows);
  throw UsageError("unknown format: " + format);
}

// ---- experiments ---------------------------------------------------------

void run_group(const ExperimentConfig& cfg, const CoxeterGraph& graph,
               ExperimentReport& rep) {
  CoxeterGroup g(graph);
  if (!g.is_finite() && !cfg.cap)
    throw UsageError("--cap is required for infinite graphs");
  auto elements = g.enumerate(cfg.cap);
  if (static_cast<long>(elements.size()) > cfg.budget)
    throw BudgetError("group enumeration of size " +
                      std::to_string(elements.size()) + " exceeds budget " +
                      std::to_string(cfg.budget));
  long wc = 0;
  for (const auto& [w, in_wc] : elements) wc += in_wc;
  rep.summary = Json{{"count", elements.size()}, {"wc_count", wc}};
  if (cfg.format == "json")
    rep.payload = enumeration_jsonl(elements);
  else if (cfg.format == "csv") {
    std::ostringstream out;
    out << "word,length,in_wc\n";
    for (const auto& [w, in_wc] : elements)
      out << word_text(w) << ',' << w.size() << ',' << (in_wc ? 1 : 0) << '\n';
    rep.payload = out.str();
  } else {
    throw UsageError("group supports json or csv output");
  }
  rep.pass = true;
}

void run_mult(const ExperimentConfig& cfg, const CoxeterGraph& graph,
              ExperimentReport& rep) {
  // Cross-check of the quotient rewriting: multiplying T_x T_y upstairs and
  // projecting must agree with multiplying the projections downstairs.
  HeckeAlgebra h{graph};
  TLAlgebra tl{graph};
  const CoxeterGroup& g = h.group();
  if (!g.is_finite() && !cfg.cap)
    throw UsageError("--cap is required for infinite graphs");
  std::vector<Word> all;
  for (const auto& [w, in_wc] : g.enumerate(cfg.cap)) all.push_back(w);
  if (static_cast<long>(all.size()) * static_cast<long>(all.size()) > cfg.budget)
    throw BudgetError("pair count " + std::to_string(all.size() * all.size()) +
                      " exceeds budget " + std::to_string(cfg.budget));
  long pairs = 0;
  std::vector<Word> bad;
  for (const Word& x : all)
    for (const Word& y : all) {
      ++pairs;
      if (project_to_tl(tl, h.mul(h.T(x), h.T(y))) !=
          tl.mul(tl.d_expand(x), tl.d_expand(y))) {
        bad.push_back(x);
        bad.push_back(y);
      }
    }
  rep.summary = Json{{"pairs", pairs},
                     {"all_equal", bad.empty()},
                     {"witnesses", words_json(bad)}};
  rep.payload = rep.summary.dump();
  rep.pass = bad.empty();
}

void run_ic(const ExperimentConfig& cfg, const CoxeterGraph& graph,
            ExperimentReport& rep) {
  TLAlgebra tl{graph};
  auto wc = wc_scope(tl.group(), cfg);
  ICContext ctx = tl_ic_context(tl);
  ICTable table = solve_ic_cached(cfg, graph, ctx, wc);
  ICVerifyReport check = verify_ic(ctx, table);
  rep.summary = Json{{"rows", table.rows.size()},
                     {"verified", check.ok()},
                     {"violations", check.violations}};
  rep.payload = table_payload(table, cfg.format);
  rep.pass = check.ok();
}

void run_monomial_check(const ExperimentConfig& cfg, const CoxeterGraph& graph,
                        ExperimentReport& rep) {
  TLAlgebra tl{graph};
  auto wc = wc_scope(tl.group(), cfg);
  ICContext ctx = tl_ic_context(tl);
  ICTable table = solve_ic_cached(cfg, graph, ctx, wc);
  std::vector<Word> witnesses;
  for (const Word& w : wc)
    if (mprime_to_basis(table.rows.at(w)) != tl.monomial(w))
      witnesses.push_back(w);
  bool equal = witnesses.empty();
  Expect expected = expect_monomial_equal(graph, tl.group().is_finite());
  rep.summary = Json{
      {"checked", wc.size()},
      {"equal", equal},
      {"expected", expected == Expect::Yes        ? "equal"
                   : expected == Expect::No       ? "unequal"
                                                  : "unspecified"},
      {"witnesses", words_json(witnesses)}};
  rep.payload = rep.summary.dump();
  rep.pass = expected == Expect::Unspecified ||
             equal == (expected == Expect::Yes);
}

void run_counterexample(const ExperimentConfig& cfg, const CoxeterGraph& graph,
                        ExperimentReport& rep) {
  // Hunt for w in W_c whose monomial b_w is not the canonical element c_w,
  // and confirm the triangular solve still produces a valid c_w there.
  TLAlgebra tl{graph};
  auto wc = wc_scope(tl.group(), cfg);
  ICContext ctx = tl_ic_context(tl);
  ICTable table = solve_ic_cached(cfg, graph, ctx, wc);
  std::vector<Word> witnesses;
  for (const Word& w : wc)
    if (!is_ic_element(ctx, basis_to_mprime(tl.monomial(w)), w))
      witnesses.push_back(w);
  bool solver_valid = verify_ic(ctx, table).ok();
  Expect expected = expect_monomial_equal(graph, tl.group().is_finite());
  rep.summary = Json{
      {"checked", wc.size()},
      {"witnesses", words_json(witnesses)},
      {"solver_valid", solver_valid},
      {"expected", expected == Expect::Yes        ? "none"
                   : expected == Expect::No       ? "some"
                                                  : "unspecified"}};
  rep.payload = rep.summary.dump();
  bool found = !witnesses.empty();
  rep.pass = solver_valid &&
             (expected == Expect::Unspecified ||
              found == (expected == Expect::No));
}

void run_positivity(const ExperimentConfig& cfg, const CoxeterGraph& graph,
                    ExperimentReport& rep) {
  TLAlgebra tl{graph};
  auto wc = wc_scope(tl.group(), cfg);
  ICContext ctx = tl_ic_context(tl);
  ICTable table = solve_ic_cached(cfg, graph, ctx, wc);
  std::vector<Word> bad;
  for (const Word& x : wc) {
    PolyVec cx = mprime_to_basis(table.rows.at(x));
    for (const Word& y : wc) {
      PolyVec prod = tl.mul(cx, mprime_to_basis(table.rows.at(y)));
      for (const auto& [z, c] : expand_over_ic(table, std::move(prod)))
        if (!c.in(Subring::NOfVVinv)) {
          bad.push_back(x);
          bad.push_back(y);
          bad.push_back(z);
        }
    }
  }
  bool positive = bad.empty();
  // Positivity is a theorem for ADE and for the H-line graphs; elsewhere it
  // is only measured.
  bool asserted = (simply_laced(graph) && tl.group().is_finite()) ||
                  is_type_h(graph);
  rep.summary = Json{{"pairs", wc.size() * wc.size()},
                     {"positive", positive},
                     {"asserted", asserted},
                     {"witnesses", words_json(bad)}};
  rep.payload = rep.summary.dump();
  rep.pass = !asserted || positive;
}

void run_kl_kernel(const ExperimentConfig& cfg, const CoxeterGraph& graph,
                   ExperimentReport& rep) {
  KernelReport report = kernel_analysis(graph, cfg.budget);
  rep.summary = kernel_report_to_json(report);
  rep.payload = rep.summary.dump();
  if (is_type_a(graph))
    rep.pass = report.spanned && report.projected_equals_ic;
  else if (is_type_d(graph))
    rep.pass = !report.spanned;
  else
    rep.pass = true;  // measured, no documented expectation
}

void run_transitions(const ExperimentConfig& cfg, const CoxeterGraph& graph,
                     ExperimentReport& rep) {
  TLAlgebra tl{graph};
  auto wc = wc_scope(tl.group(), cfg);
  TransitionTables tables = tl.transition_tables(wc);
  std::vector<Word> violations;
  bool diagonal_ok = true;
  for (const Word& w : wc) {
    if (!(tables.qtilde.at(w).at(w).is_one() &&
          tables.ptilde.at(w).at(w).is_one()))
      diagonal_ok = false;
    for (const auto& [x, c] : tables.qtilde.at(w))
      if (x != w && !c.in(Subring::VinvAMinus)) violations.push_back(w);
  }
  bool triangular = violations.empty();
  Expect expected = expect_monomial_equal(graph, tl.group().is_finite());
  rep.summary = Json{
      {"columns", wc.size()},
      {"diagonal_ok", diagonal_ok},
      {"off_diagonal_in_lattice", triangular},
      {"expected", expected == Expect::Yes        ? "triangular"
                   : expected == Expect::No       ? "violation"
                                                  : "unspecified"},
      {"witnesses", words_json(violations)}};
  if (cfg.format == "json") {
    rep.payload = Json{{"qtilde", ic_table_to_json(ICTable{tables.qtilde})},
                       {"ptilde", ic_table_to_json(ICTable{tables.ptilde})}}
                      .dump();
  } else if (cfg.format == "csv") {
    rep.payload = "qtilde\n" + matrix_csv(tables.qtilde) + "ptilde\n" +
                  matrix_csv(tables.ptilde);
  } else {
    throw UsageError("transitions supports json or csv output");
  }
  rep.pass = diagonal_ok &&
             (expected == Expect::Unspecified ||
              triangular == (expected == Expect::Yes));
}

}  // namespace

PolyVec expand_over_ic(const ICTable& table, PolyVec tvec) {
  PolyVec rem = basis_to_mprime(tvec);
  PolyVec coords;
  while (!rem.empty()) {
    auto top = std::prev(rem.end());
    const Word z = top->first;
    auto row = table.rows.find(z);
    if (row == table.rows.end())
      throw std::invalid_argument("expand_over_ic: support escapes the table");
    Laurent f = top->second;
    coords[z] = f;
    vec_add_scaled(rem, row->second, -f);
  }
  return coords;
}

ExperimentReport run(const ExperimentConfig& config) {
  auto start = std::chrono::steady_clock::now();
  CoxeterGraph graph = CoxeterGraph::parse(config.graph);
  ExperimentReport rep;
  rep.experiment = config.experiment;
  if (config.format != "json" && config.format != "csv" &&
      config.format != "latex")
    throw UsageError("unknown format: " + config.format);

  if (config.experiment == "group")
    run_group(config, graph, rep);
  else if (config.experiment == "mult")
    run_mult(config, graph, rep);
  else if (config.experiment == "ic")
    run_ic(config, graph, rep);
  else if (config.experiment == "monomial-check")
    run_monomial_check(config, graph, rep);
  else if (config.experiment == "counterexample")
    run_counterexample(config, graph, rep);
  else if (config.experiment == "positivity")
    run_positivity(config, graph, rep);
  else if (config.experiment == "kl-kernel")
    run_kl_kernel(config, graph, rep);
  else if (config.experiment == "transitions")
    run_transitions(config, graph, rep);
  else
    throw UsageError("unknown experiment: " + config.experiment);

  rep.seconds = std::chrono::duration<double>(
                    std::chrono::steady_clock::now() - start)
                    .count();
  return rep;
}

}  // namespace gtl
