#include <doctest.h>

#include <random>

#include "dchow/bounds.hpp"
#include "dchow/errors.hpp"
#include "dchow/frontend.hpp"
#include "dchow/reduction.hpp"
#include "support/oracles.hpp"

using namespace dchow;

namespace {
DiffPoly P(const char* s) { return parse_diffpoly(s, {0, true}); }
DiffPoly C(int k) { return DiffPoly(Var::coeff(k - 1)); }
}  // namespace

TEST_CASE("algebraic pseudo-remainder") {
  const Var x = Var::y(1);
  auto r1 = algebraic_prem(P("y1^2"), P("y1"), x);
  CHECK(r1.quotient == P("y1"));
  CHECK(r1.remainder.is_zero());

  auto r2 = algebraic_prem(P("y1"), P("y1' - 4*y1"), Var::y(1, 1));
  CHECK(r2.quotient.is_zero());
  CHECK(r2.remainder == P("y1"));
  CHECK(r2.exponent == 0);

  auto r3 = algebraic_prem(P("y1'*y1 + 1"), P("2*y1' - y1"), Var::y(1, 1));
  CHECK(r3.exponent == 1);
  CHECK(r3.quotient == P("y1"));
  CHECK(r3.remainder == P("y1^2 + 2"));

  CHECK_THROWS_AS(algebraic_prem(P("y1"), P("y2"), x), NotUnivariateLeader);
}

TEST_CASE("pseudo-remainder identity on random inputs") {
  std::mt19937_64 rng(9001);
  std::uniform_int_distribution<int> pick(1, 3);
  for (int trial = 0; trial < 100; ++trial) {
    const DiffPoly f = oracle::random_poly(rng, {3, 1, 4, 5, 4});
    DiffPoly g = oracle::random_poly(rng, {3, 1, 3, 4, 4});
    const Var x = Var::y(pick(rng));
    if (degree_in(g, x) <= 0) g += DiffPoly(x) * DiffPoly(Var::y(pick(rng), 1));
    const auto pr = algebraic_prem(f, g, x);
    const DiffPoly lc = coefficient(g, x, static_cast<std::uint32_t>(degree_in(g, x)));
    CHECK(pow(lc, pr.exponent) * f == pr.quotient * g + pr.remainder);
    CHECK(degree_in(pr.remainder, x) < degree_in(g, x));
  }
}

TEST_CASE("prem over a chain") {
  const Ranking r = Ranking::default_orderly(1);
  const std::vector<DiffPoly> chain{P("y1' - 4*y1"), P("y1'' - 4*y1'")};
  const ReductionCertificate c = prem_chain(P("y1'' - 16*y1"), chain, r);
  CHECK(c.remainder.is_zero());
  CHECK(check_certificate(P("y1'' - 16*y1"), c, chain, r));
  for (const DiffPoly& a : chain) CHECK(prem_chain(a, chain, r).remainder.is_zero());
}

TEST_CASE("prolongation") {
  const CharSet A({P("y1' - 4*y1")}, Ranking::default_orderly(1), 1);
  const auto p1 = prolong(A, 1);
  REQUIRE(p1.size() == 2);
  CHECK(p1[0] == P("y1' - 4*y1"));
  CHECK(p1[1] == P("y1'' - 4*y1'"));
  CHECK(prolong(A, 0) == A.elements());

  const CharSet B({P("y2 - y1'")}, parse_ranking("elim(y1<y2)"), 2);
  const auto p2 = prolong(B, 1);
  REQUIRE(p2.size() == 2);
  CHECK(p2[0] == P("y2 - y1'"));
  CHECK(p2[1] == P("y2' - y1''"));

  const CharSet E({P("y2*y3 + 1"), P("y1^(3)*y3 + y3^2")}, parse_ranking("elim(y3<y2<y1)"), 3);
  CHECK(prolong(E, std::vector<int>{2, 0}).size() == 4);
}

TEST_CASE("differential remainder examples") {
  const CharSet A({P("y1' - 4*y1")}, Ranking::default_orderly(1), 1);
  const DiffPoly f = C(1) * P("-u0_1*y1") + C(2) * P("u0_1") - C(3) * P("u0_1'*y1 + u0_1*y1'") + C(4) * P("u0_1'");
  const DiffPoly expected = (C(1) + C(3) * Rational(4)) * P("-u0_1*y1") + C(2) * P("u0_1") - C(3) * P("u0_1'*y1") + C(4) * P("u0_1'");
  CHECK(diff_rem(f, A) == expected);
  CHECK(diff_rem(P("y1' - 4*y1"), A).is_zero());
  CHECK(diff_rem(P("y1''"), A) == P("16*y1"));

  const ReductionCertificate cert = diff_rem_certified(P("y1''"), A);
  CHECK(cert.remainder == P("16*y1"));
  CHECK(check_certificate(P("y1''"), cert, A.elements(), A.ranking()));
}

TEST_CASE("differential remainder with nontrivial initial and separant") {
  const CharSet A({P("y1'^2*y2'' - y1")}, parse_ranking("elim(y2<y1)"), 2);
  std::mt19937_64 rng(515);
  for (int trial = 0; trial < 25; ++trial) {
    const DiffPoly f = oracle::random_poly(rng, {2, 2, 3, 4, 3});
    const ReductionCertificate cert = diff_rem_certified(f, A);
    CHECK(is_reduced(cert.remainder, A));
    CHECK(check_certificate(f, cert, A.elements(), A.ranking()));
    CHECK(cert.remainder == diff_rem(f, A));
    const int ord = std::max(order_of(f), 0);
    CHECK(Integer(std::max(total_degree(cert.remainder), 0)) <= reduction_degree_bound(A, ord, total_degree(f)));
  }
}

TEST_CASE("members of the differential ideal reduce to zero") {
  std::mt19937_64 rng(31337);
  std::uniform_int_distribution<int> k(0, 2);
  const CharSet M({P("y2 - y1'"), P("y3 - y1^2")}, parse_ranking("elim(y1<y2<y3)"), 3);
  for (int trial = 0; trial < 20; ++trial) {
    DiffPoly g;
    for (const DiffPoly& a : M.elements()) g += oracle::random_poly(rng, {3, 2, 2, 3, 3}) * derive(a, k(rng));
    CHECK(diff_rem(g, M).is_zero());
  }
}
