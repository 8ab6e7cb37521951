#include "gtl/laurent.hpp"

#include <doctest.h>

#include <random>

using namespace gtl;

namespace {

Laurent random_poly(std::mt19937& rng) {
  std::uniform_int_distribution<int> exp(-5, 5), coef(-4, 4), nterms(0, 5);
  Laurent p;
  int n = nterms(rng);
  for (int i = 0; i < n; ++i) p += Laurent::term(coef(rng), exp(rng));
  return p;
}

}  // namespace

TEST_CASE("addition") {
  CHECK(Laurent::v(1) + Laurent::v(-1) == Laurent::qc());
  CHECK((Laurent::q() - Laurent(1)) + Laurent(1) == Laurent::q());
  Laurent p = Laurent::term(3, 2) - Laurent::v(-1);
  CHECK(Laurent() + p == p);
}

TEST_CASE("multiplication") {
  Laurent qc = Laurent::qc();
  Laurent sq = Laurent::q() + Laurent(2) + Laurent::q_inv();
  CHECK(qc * qc == sq);
  CHECK(Laurent::v(-1) * Laurent::v(1) == Laurent(1));
  CHECK(Laurent::q() * Laurent::q_inv() == Laurent(1));
}

TEST_CASE("bar involution") {
  CHECK(Laurent::v(1).bar() == Laurent::v(-1));
  CHECK(Laurent::qc().bar() == Laurent::qc());
  Laurent p = Laurent::term(3, 2) - Laurent::v(-1);
  CHECK(p.bar() == Laurent::term(3, -2) - Laurent::v(1));
}

TEST_CASE("subring membership") {
  CHECK((Laurent::q() - Laurent(1)).in(Subring::ZOfQ));
  CHECK(Laurent::v(-1).in(Subring::VinvAMinus));
  // the exponent-0 term that witnesses the rank-two counterexample
  Laurent witness = Laurent(1) + Laurent::v(-2);
  CHECK_FALSE(witness.in(Subring::VinvAMinus));
  CHECK(witness.in(Subring::AMinus));
  CHECK(witness.in(Subring::NOfVVinv));
  CHECK_FALSE((Laurent::v(1) - Laurent(1)).in(Subring::NOfVVinv));
  CHECK_FALSE(Laurent::v(3).in(Subring::AMinus));
  CHECK(Laurent::v(3).in(Subring::APlus));
}

TEST_CASE("randomized ring properties") {
  std::mt19937 rng(12345);
  for (int i = 0; i < 300; ++i) {
    Laurent p = random_poly(rng), r = random_poly(rng);
    CHECK(p.bar().bar() == p);
    CHECK((p * r).bar() == p.bar() * r.bar());
    CHECK((p + r).bar() == p.bar() + r.bar());
    CHECK((p - p).is_zero());
    CHECK(p * r == r * p);
  }
}

TEST_CASE("parts and shifts") {
  Laurent p = Laurent::term(2, 3) - Laurent::v(-1) + Laurent(5);
  CHECK(p.neg_part() == -Laurent::v(-1));
  CHECK(p.shifted(2) == Laurent::term(2, 5) - Laurent::v(1) + Laurent::term(5, 2));
  CHECK(p.coeff(3) == 2);
  CHECK(p.coeff(7) == 0);
  CHECK(p.min_exp() == -1);
  CHECK(p.max_exp() == 3);
}
