#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "dchow/bounds.hpp"
#include "dchow/errors.hpp"
#include "dchow/frontend.hpp"
#include "support/oracles.hpp"

using namespace dchow;

namespace {

std::vector<DiffPoly> example_bound_system(int n) {
  return {parse_diffpoly("y2*y3 + 1"), DiffPoly(Var::y(1, n)) * DiffPoly(Var::y(2, n)) + DiffPoly(Var::y(3))};
}

OrderMatrix random_matrix(std::mt19937_64& rng, int rows, int cols) {
  std::uniform_int_distribution<int> e(-1, 4);
  OrderMatrix E(rows, cols);
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) {
      const int v = e(rng);
      E(i, j) = v < 0 ? kMinusInfinity : v;
    }
  }
  return E;
}

}  // namespace

TEST_CASE("order matrix, Jacobi number and conjectured bound of a three-variable system") {
  for (int n : {1, 3, 4, 5}) {
    const OrderMatrix E = OrderMatrix::of(example_bound_system(n), 3);
    CHECK(E(0, 0) == kMinusInfinity);
    CHECK(E(1, 1) == n);
    CHECK(jacobi_number(E) == n);
    CHECK(conjectured_bound(E) == 2 * n);
  }
}

TEST_CASE("small Jacobi cases") {
  CHECK(jacobi_number(OrderMatrix({{1, kMinusInfinity, kMinusInfinity}, {kMinusInfinity, 2, kMinusInfinity},
                                   {kMinusInfinity, kMinusInfinity, 3}})) == 6);
  CHECK(conjectured_bound(OrderMatrix({{1, 0, 0}, {0, 2, 0}, {0, 0, 3}})) == 6);
  CHECK_THROWS_AS(jacobi_number(OrderMatrix({{kMinusInfinity, 1}, {kMinusInfinity, 2}})), NoFeasibleAssignment);
  CHECK(jacobi_number(OrderMatrix({{0, 5}})) == 5);
}

TEST_CASE("Jacobi number agrees with exhaustive search") {
  std::mt19937_64 rng(123456);
  std::uniform_int_distribution<int> size(1, 6);
  for (int trial = 0; trial < 200; ++trial) {
    const int cols = size(rng);
    const int rows = std::uniform_int_distribution<int>(1, cols)(rng);
    const OrderMatrix E = random_matrix(rng, rows, cols);
    const auto expected = oracle::brute_force_jacobi(E);
    if (!expected) {
      CHECK_THROWS_AS(jacobi_number(E), NoFeasibleAssignment);
      continue;
    }
    CHECK(jacobi_number(E) == *expected);
    CHECK(conjectured_bound(E) >= *expected);
    // Row and column permutations leave it unchanged.
    std::vector<int> rp(static_cast<std::size_t>(rows)), cp(static_cast<std::size_t>(cols));
    std::iota(rp.begin(), rp.end(), 0);
    std::iota(cp.begin(), cp.end(), 0);
    std::shuffle(rp.begin(), rp.end(), rng);
    std::shuffle(cp.begin(), cp.end(), rng);
    OrderMatrix F(rows, cols);
    for (int i = 0; i < rows; ++i) {
      for (int j = 0; j < cols; ++j) F(i, j) = E(rp[static_cast<std::size_t>(i)], cp[static_cast<std::size_t>(j)]);
    }
    CHECK(jacobi_number(F) == *expected);
  }
}

TEST_CASE("order bounds of the worked examples") {
  const CharSet A1({parse_diffpoly("y1' - 4*y1")}, Ranking::default_orderly(1), 1);
  CHECK(order_bound(A1) == 1);
  const CharSet A2({parse_diffpoly("y2 - y1'")}, parse_ranking("elim(y1<y2)"), 2);
  CHECK(order_of(A2) == 0);
  CHECK(order_bound(A2) == 1);
  const CharSet A3({parse_diffpoly("y1'^2*y2'' - y1")}, parse_ranking("elim(y2<y1)"), 2);
  CHECK(order_bound(A3) == 2);
  CHECK(jacobi_number(OrderMatrix::of(A3)) >= order_of(A3));
}

TEST_CASE("degree bounds") {
  const CharSet A1({parse_diffpoly("y1' - 4*y1")}, Ranking::default_orderly(1), 1);
  CHECK(degree_bound_orderly(A1) == 4);
  CHECK(degree_bound_orderly(A1) >= 2);
  const CharSet A2({parse_diffpoly("y2 - y1'")}, parse_ranking("elim(y1<y2)"), 2);
  CHECK(degree_bound_at(A2, 0) == 4);
  CHECK(degree_bound_at(A2, 1) == 16);
  const CharSet A0({parse_diffpoly("y1 - 5")}, Ranking::default_orderly(1), 1);
  CHECK(degree_bound_orderly(A0) == 2);
  CHECK(degree_bound_at(A0, 0) == 2);
}

TEST_CASE("degree bounds are monotone") {
  const std::vector<const char*> lows = {"y1' + y1", "y1'' + y1", "y1' + y1^2", "y1'' + y1'*y1"};
  for (int i = 0; i + 1 < static_cast<int>(lows.size()); ++i) {
    const CharSet A({parse_diffpoly(lows[static_cast<std::size_t>(i)])}, Ranking::default_orderly(1), 1);
    for (int h = 0; h < 4; ++h) CHECK(degree_bound_at(A, h) <= degree_bound_at(A, h + 1));
  }
  const CharSet lin({parse_diffpoly("y1' + y1")}, Ranking::default_orderly(1), 1);
  const CharSet quad({parse_diffpoly("y1' + y1^2")}, Ranking::default_orderly(1), 1);
  CHECK(degree_bound_orderly(lin) <= degree_bound_orderly(quad));
  for (int h = 0; h < 4; ++h) CHECK(degree_bound_at(lin, h) <= degree_bound_at(quad, h));
}
