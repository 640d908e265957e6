#pragma once

#include <vector>

#include "dchow/rational.hpp"
#include "dchow/ranking.hpp"

namespace dchow {

/// Orders e_ij = ord(A_i, y_j), kMinusInfinity where y_j is absent.
class OrderMatrix {
 public:
  OrderMatrix() = default;
  OrderMatrix(int rows, int cols) : rows_(rows), cols_(cols), e_(static_cast<std::size_t>(rows * cols), kMinusInfinity) {}
  explicit OrderMatrix(const std::vector<std::vector<int>>& entries);
  /// Columns are y_1..y_n.
  static OrderMatrix of(const CharSet& A);
  static OrderMatrix of(const std::vector<DiffPoly>& system, int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  int operator()(int i, int j) const { return e_[static_cast<std::size_t>(i * cols_ + j)]; }
  int& operator()(int i, int j) { return e_[static_cast<std::size_t>(i * cols_ + j)]; }

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<int> e_;
};

/// Maximum over injective row-to-column assignments of the summed orders.
/// Requires rows <= cols. Throws NoFeasibleAssignment.
int jacobi_number(const OrderMatrix& E);

/// Sum of the |rows| largest column maxima (absent columns count as 0).
int conjectured_bound(const OrderMatrix& E);

/// ord(A): the sum of the orders of the leaders.
int order_of(const CharSet& A);

/// Exact order for orderly rankings, otherwise the Jacobi bound.
int order_bound(const CharSet& A);

/// Degree bound for the orderly case, evaluated at h = ord(A).
Integer degree_bound_orderly(const CharSet& A);

/// Degree bound for an arbitrary ranking at order h.
Integer degree_bound_at(const CharSet& A, int h);

/// Degree bound for the remainder of f modulo A:
/// (m+1)^(p(h+1)) * (D+1) - 1, m = max deg A_i, p = |A|, h = ord(f), D = deg f.
Integer reduction_degree_bound(const CharSet& A, int order, int degree);

}  // namespace dchow
