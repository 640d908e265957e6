#pragma once

#include <cstdint>
#include <vector>

#include "dchow/polynomial.hpp"

namespace dchow {

/// Sparse row with integer entries, sorted by column, no zeros.
using SparseRow = std::vector<std::pair<std::uint32_t, Integer>>;

/// Homogeneous linear system in the ansatz coefficients.
struct LinearSystem {
  std::size_t cols = 0;
  /// One row per distinct monomial in the non-coefficient symbols, in
  /// canonical monomial order, scaled to primitive integer rows.
  std::vector<SparseRow> rows;
  std::vector<Monomial> row_labels;
  /// Number of rows after merging identical (primitive, sign-normalized) rows.
  std::size_t distinct_rows = 0;
};

/// Groups F by monomials; the c-coefficients of each group form one row.
LinearSystem assemble(const LinearPoly& F, std::size_t cols);

/// Contract form: F is a rational polynomial that must be linear homogeneous
/// in the symbols `c_vars`, which index the columns. Throws NotLinearInCoefficients.
LinearSystem assemble(const DiffPoly& F, const std::vector<Var>& c_vars);

struct NullspaceBasis {
  std::size_t cols = 0;
  std::size_t rank = 0;
  /// One vector per non-pivot column, in increasing column order.
  std::vector<std::vector<Rational>> vectors;
  std::size_t dimension() const { return vectors.size(); }
};

/// Exact nullspace by fraction-free elimination to reduced echelon form.
NullspaceBasis nullspace(const LinearSystem& S);
/// Row-major dense convenience form.
NullspaceBasis nullspace(const std::vector<std::vector<Rational>>& dense, std::size_t cols);

/// First basis vector scaled to integers with content 1 and positive first
/// nonzero entry. Throws EmptyNullspace.
std::vector<Integer> canonical_solution(const NullspaceBasis& B);

/// Primitive integer row with a positive first entry.
SparseRow primitive(SparseRow row);

}  // namespace dchow
