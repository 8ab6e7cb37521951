#include "gtl/coxeter.hpp"

#include <doctest.h>

#include <algorithm>

#include "oracles.hpp"

using namespace gtl;

namespace {

Word W(std::initializer_list<Gen> l) { return Word(l); }

}  // namespace

TEST_CASE("graph parsing") {
  CoxeterGraph a2 = CoxeterGraph::parse("A2");
  CHECK(a2.nodes == 2);
  CHECK(a2.m(0, 1) == 3);

  CoxeterGraph i4 = CoxeterGraph::parse("I2:4");
  CHECK(i4.nodes == 2);
  CHECK(i4.m(0, 1) == 4);

  CoxeterGraph aff = CoxeterGraph::parse("affA3");
  CHECK(aff.nodes == 4);
  CHECK(aff.m(0, 1) == 3);
  CHECK(aff.m(1, 2) == 3);
  CHECK(aff.m(2, 3) == 3);
  CHECK(aff.m(3, 0) == 3);
  CHECK(aff.m(0, 2) == 2);

  CoxeterGraph e6 = CoxeterGraph::parse("E6");
  CHECK(e6.nodes == 6);
  CHECK(e6.m(2, 5) == 3);  // branch node attached to node 3 of the line
  CHECK(e6.m(4, 5) == 2);

  CoxeterGraph js = CoxeterGraph::parse(R"({"nodes":3,"edges":[[1,2,4],[2,3,0]]})");
  CHECK(js.m(0, 1) == 4);
  CHECK(js.m(1, 2) == 0);  // infinite bond

  CHECK_THROWS(CoxeterGraph::parse("Z9"));
  CHECK_THROWS(CoxeterGraph::parse(R"({"nodes":2,"edges":[[1,2,1]]})"));
  CHECK_THROWS(CoxeterGraph::parse(R"({"nodes":2,"edges":[[1,5,3]]})"));
}

TEST_CASE("normal forms and generator multiplication in A2") {
  CoxeterGroup g(CoxeterGraph::parse("A2"));
  CHECK(g.mult_gen({}, 0, Side::Left) == W({0}));
  CHECK(g.mult_gen(W({0, 1}), 0, Side::Left) == W({1}));  // s(st) = t
  // (ts)t = tst = sts; canonical picks the ShortLex-least word
  CHECK(g.mult_gen(W({1, 0}), 1, Side::Right) == W({0, 1, 0}));
  CHECK(g.canonical(W({1, 0, 1})) == W({0, 1, 0}));
  CHECK(g.canonical(W({0, 0})) == Word{});
  CHECK(g.canonical(W({1, 0, 1, 0, 1, 0})) == Word{});  // (tst)(sts) = e... tst=sts so sts*sts=e
}

TEST_CASE("left descents") {
  CoxeterGroup g(CoxeterGraph::parse("A2"));
  CHECK(g.left_descents({}).empty());
  CHECK(g.left_descents(W({0, 1, 0})) == std::vector<Gen>{0, 1});
  CHECK(g.left_descents(W({0, 1})) == std::vector<Gen>{0});
}

TEST_CASE("bruhat order in A2") {
  CoxeterGroup g(CoxeterGraph::parse("A2"));
  for (const auto& [w, wc] : g.enumerate(std::nullopt))
    CHECK(g.bruhat_leq({}, w));
  CHECK(g.bruhat_leq(W({0, 1}), W({0, 1, 0})));
  CHECK_FALSE(g.bruhat_leq(W({0, 1, 0}), W({0, 1})));
  CHECK(g.bruhat_leq(W({1}), W({0, 1})));
}

TEST_CASE("bruhat order axioms on A3") {
  CoxeterGroup g(CoxeterGraph::parse("A3"));
  std::vector<Word> all;
  for (const auto& [w, wc] : g.enumerate(std::nullopt)) all.push_back(w);
  for (const Word& x : all)
    for (const Word& y : all) {
      if (g.bruhat_leq(x, y) && g.bruhat_leq(y, x)) CHECK(x == y);
      for (const Word& z : all)
        if (g.bruhat_leq(x, y) && g.bruhat_leq(y, z)) CHECK(g.bruhat_leq(x, z));
    }
}

TEST_CASE("complex elements") {
  CoxeterGroup a2(CoxeterGraph::parse("A2"));
  CHECK(a2.is_complex(W({0, 1, 0})));
  CHECK_FALSE(a2.is_complex(W({0, 1})));

  CoxeterGroup i4(CoxeterGraph::parse("I2:4"));
  CHECK_FALSE(i4.is_complex(W({0, 1, 0})));
  CHECK(i4.is_complex(W({0, 1, 0, 1})));

  CoxeterGroup aff(CoxeterGraph::parse("affA3"));
  CHECK_FALSE(aff.is_complex(aff.canonical(W({0, 2, 1, 3, 0, 2}))));
}

TEST_CASE("complexity agrees with exhaustive reduced-word search") {
  for (const char* name : {"A2", "A3", "B2", "I2:4"}) {
    CoxeterGraph graph = CoxeterGraph::parse(name);
    CoxeterGroup g(graph);
    for (const auto& [w, in_wc] : g.enumerate(std::nullopt)) {
      CHECK(in_wc == !oracles::complex_by_exhaustion(graph, w));
      // canonical word is the ShortLex-least reduced word
      const auto words = oracles::all_reduced_words(graph, w);
      CHECK(*std::min_element(words.begin(), words.end()) == w);
    }
  }
}

TEST_CASE("enumeration counts") {
  CoxeterGroup a2(CoxeterGraph::parse("A2"));
  auto e2 = a2.enumerate(std::nullopt);
  CHECK(e2.size() == 6);
  CHECK(std::count_if(e2.begin(), e2.end(), [](auto& p) { return p.second; }) == 5);

  CoxeterGroup i4(CoxeterGraph::parse("I2:4"));
  auto e4 = i4.enumerate(std::nullopt);
  CHECK(e4.size() == 8);
  CHECK(std::count_if(e4.begin(), e4.end(), [](auto& p) { return p.second; }) == 7);

  CoxeterGroup a3(CoxeterGraph::parse("A3"));
  auto e3 = a3.enumerate(std::nullopt);
  CHECK(e3.size() == 24);
  CHECK(std::count_if(e3.begin(), e3.end(), [](auto& p) { return p.second; }) == 14);
}

TEST_CASE("group orders against independent oracles") {
  CHECK(CoxeterGroup(CoxeterGraph::parse("A2")).enumerate(std::nullopt).size() ==
        oracles::symmetric_group_order(2));
  CHECK(CoxeterGroup(CoxeterGraph::parse("A3")).enumerate(std::nullopt).size() ==
        oracles::symmetric_group_order(3));
  CHECK(CoxeterGroup(CoxeterGraph::parse("A4")).enumerate(std::nullopt).size() ==
        oracles::symmetric_group_order(4));
  for (const char* name : {"I2:5", "I2:7", "B3", "D4", "H3"}) {
    CoxeterGraph graph = CoxeterGraph::parse(name);
    CHECK(CoxeterGroup(graph).enumerate(std::nullopt).size() ==
          oracles::matrix_group_order(graph));
  }
  // classical orders
  CHECK(CoxeterGroup(CoxeterGraph::parse("D4")).enumerate(std::nullopt).size() == 192);
  CHECK(CoxeterGroup(CoxeterGraph::parse("H3")).enumerate(std::nullopt).size() == 120);
}

TEST_CASE("enumerate_wc matches the filtered full enumeration") {
  for (const char* name : {"A3", "I2:4", "B3"}) {
    CoxeterGroup g(CoxeterGraph::parse(name));
    std::vector<Word> wc_full;
    for (const auto& [w, in_wc] : g.enumerate(std::nullopt))
      if (in_wc) wc_full.push_back(w);
    CHECK(g.enumerate_wc(std::nullopt) == wc_full);
  }
}

TEST_CASE("bruhat ideals") {
  CoxeterGroup a2(CoxeterGraph::parse("A2"));
  CHECK(a2.bruhat_ideal({}) == std::vector<Word>{{}});
  CHECK(a2.bruhat_ideal(W({0, 1})) ==
        std::vector<Word>{{}, {0}, {1}, {0, 1}});
  CoxeterGroup i4(CoxeterGraph::parse("I2:4"));
  CHECK(i4.bruhat_ideal(W({0, 1, 0})) ==
        std::vector<Word>{{}, {0}, {1}, {0, 1}, {1, 0}, {0, 1, 0}});
}

TEST_CASE("length changes by one under generator multiplication") {
  CoxeterGroup g(CoxeterGraph::parse("A3"));
  for (const auto& [w, in_wc] : g.enumerate(std::nullopt)) {
    for (Gen s = 0; s < g.rank(); ++s) {
      Word sw = g.mult_gen(w, s, Side::Left);
      CHECK(std::abs(int(sw.size()) - int(w.size())) == 1);
      CHECK(g.mult_gen(sw, s, Side::Left) == w);
      Word ws = g.mult_gen(w, s, Side::Right);
      CHECK(std::abs(int(ws.size()) - int(w.size())) == 1);
    }
  }
}

TEST_CASE("finiteness detection") {
  for (const char* name : {"A1", "A3", "B3", "D4", "H3", "H4", "E6", "I2:7"})
    CHECK(CoxeterGroup(CoxeterGraph::parse(name)).is_finite());
  for (const char* name : {"affA3", "I2:inf", "E9"})
    CHECK_FALSE(CoxeterGroup(CoxeterGraph::parse(name)).is_finite());
  CoxeterGroup aff(CoxeterGraph::parse("affA3"));
  CHECK_THROWS(aff.enumerate(std::nullopt));
  // capped enumeration of the affine group works
  auto capped = aff.enumerate(3);
  for (const auto& [w, in_wc] : capped) CHECK(w.size() <= 3);
  CHECK(capped.size() > 10);
}

TEST_CASE("inverse") {
  CoxeterGroup g(CoxeterGraph::parse("A3"));
  for (const auto& [w, in_wc] : g.enumerate(std::nullopt)) {
    Word inv = g.inverse(w);
    CHECK(inv.size() == w.size());
    CHECK(g.canonical([&] {
      Word prod = w;
      prod.insert(prod.end(), inv.begin(), inv.end());
      return prod;
    }()) == Word{});
  }
}
