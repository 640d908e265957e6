#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "dchow/linalg.hpp"
#include "dchow/polynomial.hpp"
#include "dchow/ranking.hpp"

namespace dchow {

/// P_i = u_i0 + u_i1 y_1 + ... + u_in y_n for i = 0..d.
struct HyperplaneSystem {
  int n = 0;
  int d = 0;
  std::vector<DiffPoly> planes;
};

HyperplaneSystem generic_hyperplanes(int n, int d);

/// u_ij^(k) for i <= d, j <= n, k <= h in canonical order (k, i, j).
std::vector<Var> ansatz_variables(int d, int n, int h);

/// All degree-t monomials in v, as combinations with repetition in
/// lexicographic order of their positions in v.
std::vector<Monomial> ansatz_monomials(int t, const std::vector<Var>& v);

struct Ansatz {
  DiffPoly F0;
  /// Coefficient symbols c_1, c_2, ... in column order.
  std::vector<Var> coefficients;
  std::vector<Monomial> monomials;
};

/// F0 = sum c_k * mu_k over ansatz_monomials(t, v).
Ansatz generic_ansatz(int t, const std::vector<Var>& v);

/// u_i0^(k) -> delta^k(-(u_i1 y_1 + ... + u_in y_n)) for k <= max_order.
Substitution u0_substitution(const HyperplaneSystem& H, int max_order);

template <CoefficientScalar C>
Polynomial<C> substitute_u0(const Polynomial<C>& F, const HyperplaneSystem& H) {
  int top = 0;
  for (Var v : variables(F)) {
    if (v.is_u()) top = std::max(top, v.order());
  }
  return substitute(F, u0_substitution(H, top));
}

/// One evaluated (order, degree) cell of a search.
struct CellRecord {
  int h = 0;
  int t = 0;
  /// One row per distinct monomial of the reduced polynomial.
  std::size_t rows = 0;
  /// Rows left after merging identical normalized rows.
  std::size_t distinct_rows = 0;
  std::size_t cols = 0;
  std::size_t nullity = 0;
  std::string verdict;
  double seconds = 0;
};

struct SearchOptions {
  /// Refuse cells with more ansatz coefficients than this (0: no limit).
  std::size_t max_columns = 0;
  /// Stop after evaluating this many cells (0: no limit).
  std::size_t max_cells = 0;
  /// Do not start a new cell once this much time has elapsed (0: no limit).
  double max_seconds = 0;
  std::function<void(const CellRecord&)> on_cell;
};

struct ChowResult {
  DiffPoly chow_form;
  int order = 0;
  int total_degree = 0;
  int block_degree = 0;
  int dimension = 0;
  int ideal_order = 0;
  int algorithm = 0;
  int jacobi = 0;
  std::vector<CellRecord> trace;
  std::vector<std::string> warnings;
};

struct CellOutcome {
  CellRecord record;
  /// Normalized polynomial from the canonical nullspace vector, if any.
  std::optional<DiffPoly> solution;
};

/// Ansatz, substitution, reduction by A and nullspace at one cell.
CellOutcome solve_cell(const CharSet& A, int h, int t, std::size_t max_columns = 0);

/// Order fixed at ord(A), increasing degree. Orderly rankings only.
ChowResult dchowform1(const CharSet& A, const SearchOptions& options = {});
/// Order-major search up to the Jacobi number.
ChowResult dchowform2(const CharSet& A, const SearchOptions& options = {});
/// Degree-major search with the verification ladder on candidates.
ChowResult dchowform3(const CharSet& A, const SearchOptions& options = {});

struct HomogeneityVerdict {
  bool ok = false;
  /// Common degree r when ok.
  int degree = 0;
  std::vector<int> block_degrees;
  /// A surviving term of F(lambda*u_i) - lambda^r F when not ok.
  DiffPoly witness;
  std::string reason;
};

/// Differential homogeneity of F in each block u_0..u_{blocks-1}.
HomogeneityVerdict is_diff_homogeneous(const DiffPoly& F, int blocks);

/// F with blocks a and b exchanged.
DiffPoly swap_blocks(const DiffPoly& F, int a, int b);

/// F(u_0 <-> u_i) = +-F for every i = 1..d.
bool block_swap_symmetric(const DiffPoly& F, int d);

/// {F, dF/du_00^(h) y_j - dF/du_0j^(h) : j = 1..n}. Throws DegenerateSeparant.
std::vector<DiffPoly> char_set_CF(const DiffPoly& F, int h, int n);

/// Elimination ranking: other u symbols < u_d0 < ... < u_00 < y_1 < ... < y_n.
Ranking chow_ranking(int n, int d);

/// Largest derivation order of a u symbol in F.
int u_order(const DiffPoly& F);

/// Runs the candidate checks in order and returns the first failure:
/// homogeneity and block symmetry, rem(A_i, C_F) = 0, rem(P_i, C_F) = 0,
/// rem(prod I S, C_F) != 0.
std::optional<std::string> ladder_failure(const DiffPoly& F, const CharSet& A, int h);

struct ChowVerdict {
  bool ok = true;
  std::vector<std::string> failures;
  int order = 0;
  int block_degree = 0;
};

struct VerifyOptions {
  /// Skip the checks against C_F (the most expensive part).
  bool skip_ladder = false;
};

/// Full check of a candidate Chow form of sat(A).
ChowVerdict verify_chow(const DiffPoly& F, const CharSet& A, const VerifyOptions& options = {});

}  // namespace dchow
