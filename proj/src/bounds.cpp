#include "dchow/bounds.hpp"

#include <algorithm>
#include <functional>
#include <limits>

#include "dchow/errors.hpp"

namespace dchow {

OrderMatrix::OrderMatrix(const std::vector<std::vector<int>>& entries)
    : OrderMatrix(static_cast<int>(entries.size()), entries.empty() ? 0 : static_cast<int>(entries[0].size())) {
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) (*this)(i, j) = entries[static_cast<std::size_t>(i)].at(static_cast<std::size_t>(j));
  }
}

OrderMatrix OrderMatrix::of(const std::vector<DiffPoly>& system, int n) {
  OrderMatrix E(static_cast<int>(system.size()), n);
  for (int i = 0; i < E.rows(); ++i) {
    for (int j = 0; j < E.cols(); ++j) E(i, j) = order_of(system[static_cast<std::size_t>(i)], Var::y(j + 1));
  }
  return E;
}

OrderMatrix OrderMatrix::of(const CharSet& A) { return of(A.elements(), A.n()); }

// Hungarian algorithm (shortest augmenting paths with potentials) on costs
// -e_ij. Forbidden entries get a cost larger than any feasible total, so a
// feasible assignment is found whenever one exists.
int jacobi_number(const OrderMatrix& E) {
  const int n = E.rows();
  const int m = E.cols();
  if (n == 0) return 0;
  if (n > m) throw NoFeasibleAssignment("more rows than columns");
  long long top = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < m; ++j) {
      if (E(i, j) != kMinusInfinity) top = std::max(top, static_cast<long long>(std::abs(E(i, j))));
    }
  }
  const long long forbidden = (top + 1) * (n + 1) + 1;
  auto cost = [&](int i, int j) -> long long {
    return E(i, j) == kMinusInfinity ? forbidden : -static_cast<long long>(E(i, j));
  };
  const long long inf = std::numeric_limits<long long>::max() / 4;
  std::vector<long long> u(static_cast<std::size_t>(n + 1)), v(static_cast<std::size_t>(m + 1));
  std::vector<int> p(static_cast<std::size_t>(m + 1)), way(static_cast<std::size_t>(m + 1));
  for (int i = 1; i <= n; ++i) {
    p[0] = i;
    int j0 = 0;
    std::vector<long long> minv(static_cast<std::size_t>(m + 1), inf);
    std::vector<char> used(static_cast<std::size_t>(m + 1), 0);
    do {
      used[static_cast<std::size_t>(j0)] = 1;
      const int i0 = p[static_cast<std::size_t>(j0)];
      long long delta = inf;
      int j1 = 0;
      for (int j = 1; j <= m; ++j) {
        if (used[static_cast<std::size_t>(j)]) continue;
        const long long cur = cost(i0 - 1, j - 1) - u[static_cast<std::size_t>(i0)] - v[static_cast<std::size_t>(j)];
        if (cur < minv[static_cast<std::size_t>(j)]) {
          minv[static_cast<std::size_t>(j)] = cur;
          way[static_cast<std::size_t>(j)] = j0;
        }
        if (minv[static_cast<std::size_t>(j)] < delta) {
          delta = minv[static_cast<std::size_t>(j)];
          j1 = j;
        }
      }
      for (int j = 0; j <= m; ++j) {
        if (used[static_cast<std::size_t>(j)]) {
          u[static_cast<std::size_t>(p[static_cast<std::size_t>(j)])] += delta;
          v[static_cast<std::size_t>(j)] -= delta;
        } else {
          minv[static_cast<std::size_t>(j)] -= delta;
        }
      }
      j0 = j1;
    } while (p[static_cast<std::size_t>(j0)] != 0);
    do {
      const int j1 = way[static_cast<std::size_t>(j0)];
      p[static_cast<std::size_t>(j0)] = p[static_cast<std::size_t>(j1)];
      j0 = j1;
    } while (j0 != 0);
  }
  int total = 0;
  for (int j = 1; j <= m; ++j) {
    const int i = p[static_cast<std::size_t>(j)];
    if (i == 0) continue;
    const int e = E(i - 1, j - 1);
    if (e == kMinusInfinity) throw NoFeasibleAssignment("no assignment avoids absent entries");
    total += e;
  }
  return total;
}

int conjectured_bound(const OrderMatrix& E) {
  std::vector<int> maxima;
  for (int j = 0; j < E.cols(); ++j) {
    int best = 0;
    for (int i = 0; i < E.rows(); ++i) best = std::max(best, E(i, j));
    maxima.push_back(best);
  }
  std::sort(maxima.begin(), maxima.end(), std::greater<>());
  int total = 0;
  for (int k = 0; k < E.rows() && k < static_cast<int>(maxima.size()); ++k) total += maxima[static_cast<std::size_t>(k)];
  return total;
}

int order_of(const CharSet& A) {
  int total = 0;
  for (std::size_t i = 0; i < A.size(); ++i) total += A.anatomy(i).leader.order();
  return total;
}

int order_bound(const CharSet& A) {
  return A.ranking().is_orderly() ? order_of(A) : jacobi_number(OrderMatrix::of(A));
}

namespace {

Integer degree_factor(const CharSet& A) {
  Integer sum = 0;
  for (const DiffPoly& a : A.elements()) sum += total_degree(a) - 1;
  return 2 * sum + 1;
}

}  // namespace

Integer degree_bound_orderly(const CharSet& A) {
  const int h = order_of(A);
  const int d = A.dimension();
  Integer out = pow(Integer(2), static_cast<unsigned long>((h + 1) * (d + 1)));
  for (std::size_t i = 0; i < A.size(); ++i) {
    const int e = A.anatomy(i).leader.order();
    out *= pow(Integer(total_degree(A[i])), static_cast<unsigned long>(h - e + 1));
  }
  return out * degree_factor(A);
}

Integer degree_bound_at(const CharSet& A, int h) {
  const int d = A.dimension();
  Integer out = pow(Integer(2), static_cast<unsigned long>((h + 1) * (d + 1)));
  for (const DiffPoly& a : A.elements()) out *= pow(Integer(total_degree(a)), static_cast<unsigned long>(h + 1));
  return out * degree_factor(A);
}

Integer reduction_degree_bound(const CharSet& A, int order, int degree) {
  int m = 0;
  for (const DiffPoly& a : A.elements()) m = std::max(m, total_degree(a));
  const unsigned long p = A.size();
  const unsigned long h = order < 0 ? 0 : static_cast<unsigned long>(order);
  return pow(Integer(m + 1), p * (h + 1)) * (degree + 1) - 1;
}

}  // namespace dchow
