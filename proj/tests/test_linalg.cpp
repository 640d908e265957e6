#include <doctest.h>

#include <random>

#include "dchow/chow.hpp"
#include "dchow/errors.hpp"
#include "dchow/frontend.hpp"
#include "dchow/linalg.hpp"
#include "dchow/reduction.hpp"
#include "support/oracles.hpp"

using namespace dchow;

namespace {

std::vector<std::vector<Rational>> dense(const LinearSystem& S) {
  std::vector<std::vector<Rational>> out;
  for (const auto& row : S.rows) {
    std::vector<Rational> r(S.cols);
    for (const auto& [c, v] : row) r[c] = Rational(v);
    out.push_back(std::move(r));
  }
  return out;
}

/// Reduced ansatz of the first-order linear example at degree t.
DiffPoly reduced_ansatz(int t, std::vector<Var>& coefficients) {
  const CharSet A({parse_diffpoly("y1' - 4*y1")}, Ranking::default_orderly(1), 1);
  const Ansatz an = generic_ansatz(t, ansatz_variables(0, 1, 1));
  coefficients = an.coefficients;
  return diff_rem(substitute_u0(an.F0, generic_hyperplanes(1, 0)), A);
}

}  // namespace

TEST_CASE("assemble the degree-one system") {
  std::vector<Var> c;
  const DiffPoly F2 = reduced_ansatz(1, c);
  const LinearSystem S = assemble(F2, c);
  CHECK(S.cols == 4);
  CHECK(S.rows.size() == 4);
  // Rows equivalent to c1 + 4 c3, c2, c3, c4.
  const auto D = dense(S);
  CHECK(oracle::rank(D) == 4);
  std::vector<std::vector<Rational>> expected = {{1, 0, 4, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}};
  for (auto row : D) {
    auto both = expected;
    both.push_back(row);
    CHECK(oracle::rank(both) == 4);
  }
  CHECK(nullspace(S).dimension() == 0);
}

TEST_CASE("assemble rejects nonlinear coefficient use") {
  const DiffPoly bad = DiffPoly(Var::coeff(0)) * DiffPoly(Var::coeff(1)) * DiffPoly(Var::u(0, 1));
  CHECK_THROWS_AS(assemble(bad, {Var::coeff(0), Var::coeff(1)}), NotLinearInCoefficients);
  CHECK_THROWS_AS(assemble(DiffPoly(Var::u(0, 1)), {Var::coeff(0)}), NotLinearInCoefficients);
  const LinearSystem empty = assemble(DiffPoly(), {Var::coeff(0), Var::coeff(1)});
  CHECK(empty.rows.empty());
  CHECK(nullspace(empty).dimension() == 2);
}

TEST_CASE("degree-two nullspace of the first-order example") {
  std::vector<Var> c;
  const DiffPoly F2 = reduced_ansatz(2, c);
  const NullspaceBasis B = nullspace(assemble(F2, c));
  REQUIRE(B.dimension() == 1);
  const std::vector<Integer> x = canonical_solution(B);
  const std::vector<Integer> expected = {0, 4, 0, 1, 0, -1, 0, 0, 0, 0};
  CHECK(x == expected);
  // Round trip: substituting the solution annihilates the system.
  Substitution fix;
  for (std::size_t k = 0; k < c.size(); ++k) fix.emplace(c[k], DiffPoly(Rational(x[k])));
  CHECK(substitute(F2, fix).is_zero());
}

TEST_CASE("identity and content normalization") {
  CHECK(nullspace({{1, 0}, {0, 1}}, 2).dimension() == 0);
  NullspaceBasis B;
  B.cols = 2;
  B.vectors = {{2, 4}};
  CHECK(canonical_solution(B) == std::vector<Integer>{1, 2});
  B.vectors = {{Rational(-1, 3), Rational(1, 2)}};
  CHECK(canonical_solution(B) == std::vector<Integer>{2, -3});
  NullspaceBasis none;
  CHECK_THROWS_AS(canonical_solution(none), EmptyNullspace);
  const NullspaceBasis two = nullspace({{1, 1, 1}}, 3);
  CHECK(two.dimension() == 2);
  CHECK(canonical_solution(two) == canonical_solution(nullspace({{1, 1, 1}}, 3)));
}

TEST_CASE("nullspace agrees with naive elimination") {
  std::mt19937_64 rng(2718);
  std::uniform_int_distribution<int> entry(-3, 3), zero(0, 2), dim(1, 9);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t rows = static_cast<std::size_t>(dim(rng));
    const std::size_t cols = static_cast<std::size_t>(dim(rng));
    std::vector<std::vector<Rational>> M(rows, std::vector<Rational>(cols));
    for (auto& r : M) {
      for (auto& v : r) v = zero(rng) == 0 ? 0 : entry(rng);
    }
    const NullspaceBasis B = nullspace(M, cols);
    const std::size_t rk = oracle::rank(M);
    CHECK(B.rank == rk);
    CHECK(B.dimension() + rk == cols);
    for (const auto& x : B.vectors) CHECK(oracle::in_kernel(M, x));
    if (B.dimension() > 0) CHECK(oracle::rank(B.vectors) == B.dimension());
  }
}
