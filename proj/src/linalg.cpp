#include "dchow/linalg.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>

#include "dchow/errors.hpp"

namespace dchow {

namespace {

Integer content(const SparseRow& row) {
  Integer g = 0;
  for (const auto& [c, v] : row) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

SparseRow to_integer_row(const LinearForm& form) {
  Integer den = 1;
  for (const auto& [c, v] : form.entries()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), v.get_den_mpz_t());
  SparseRow row;
  row.reserve(form.entries().size());
  for (const auto& [c, v] : form.entries()) row.emplace_back(c, Integer(v.get_num() * (den / v.get_den())));
  return row;
}

/// a*x - b*y on sparse rows.
SparseRow combine(const Integer& a, const SparseRow& x, const Integer& b, const SparseRow& y) {
  SparseRow out;
  out.reserve(x.size() + y.size());
  auto i = x.begin();
  auto j = y.begin();
  while (i != x.end() || j != y.end()) {
    if (j == y.end() || (i != x.end() && i->first < j->first)) {
      out.emplace_back(i->first, a * i->second);
      ++i;
    } else if (i == x.end() || j->first < i->first) {
      out.emplace_back(j->first, -b * j->second);
      ++j;
    } else {
      Integer v = a * i->second - b * j->second;
      if (v != 0) out.emplace_back(i->first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

const Integer* entry(const SparseRow& row, std::uint32_t col) {
  auto it = std::lower_bound(row.begin(), row.end(), col, [](const auto& e, std::uint32_t c) { return e.first < c; });
  return (it != row.end() && it->first == col) ? &it->second : nullptr;
}

/// Eliminates column `col` from `row` using pivot row `pivot` (leading at col).
void eliminate(SparseRow& row, const SparseRow& pivot, std::uint32_t col) {
  const Integer* rv = entry(row, col);
  if (!rv) return;
  const Integer& pv = pivot.front().second;
  Integer g;
  mpz_gcd(g.get_mpz_t(), pv.get_mpz_t(), rv->get_mpz_t());
  const Integer a = pv / g;
  const Integer b = *rv / g;
  row = primitive(combine(a, row, b, pivot));
}

}  // namespace

SparseRow primitive(SparseRow row) {
  if (row.empty()) return row;
  Integer g = content(row);
  if (sgn(row.front().second) < 0) g = -g;
  if (g != 1) {
    for (auto& [c, v] : row) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
  }
  return row;
}

LinearSystem assemble(const LinearPoly& F, std::size_t cols) {
  LinearSystem S;
  S.cols = cols;
  S.rows.reserve(F.size());
  std::set<SparseRow> seen;
  for (const auto& t : F.terms()) {
    SparseRow row = to_integer_row(t.coeff);
    if (!row.empty() && row.back().first >= cols) throw NotLinearInCoefficients("coefficient index out of range");
    S.row_labels.push_back(t.mono);
    S.rows.push_back(row);
    seen.insert(primitive(std::move(row)));
  }
  S.distinct_rows = seen.size();
  return S;
}

LinearSystem assemble(const DiffPoly& F, const std::vector<Var>& c_vars) {
  std::map<Var, std::uint32_t> column;
  for (std::size_t k = 0; k < c_vars.size(); ++k) column.emplace(c_vars[k], static_cast<std::uint32_t>(k));
  PolyBuilder<LinearForm> b;
  for (const auto& t : F.terms()) {
    std::optional<std::uint32_t> col;
    std::vector<Factor> rest;
    for (const Factor& fa : t.mono.factors()) {
      auto it = column.find(fa.var);
      if (it == column.end()) {
        rest.push_back(fa);
      } else if (fa.exp != 1 || col) {
        throw NotLinearInCoefficients("term " + std::to_string(t.mono.degree()) + " has coefficient degree above one");
      } else {
        col = it->second;
      }
    }
    if (!col) throw NotLinearInCoefficients("term without a coefficient symbol");
    b.add(Monomial::from_factors(std::move(rest)), LinearForm(*col, t.coeff));
  }
  return assemble(b.build(), c_vars.size());
}

NullspaceBasis nullspace(const LinearSystem& S) {
  std::vector<const SparseRow*> order;
  for (const SparseRow& r : S.rows) {
    if (!r.empty()) order.push_back(&r);
  }
  std::stable_sort(order.begin(), order.end(), [](const SparseRow* a, const SparseRow* b) { return a->size() < b->size(); });

  // Echelon insertion: each stored pivot row leads at its key column.
  std::map<std::uint32_t, SparseRow> pivots;
  for (const SparseRow* src : order) {
    if (pivots.size() == S.cols) break;
    SparseRow row = primitive(*src);
    while (!row.empty()) {
      auto it = pivots.find(row.front().first);
      if (it == pivots.end()) break;
      eliminate(row, it->second, it->first);
    }
    if (!row.empty()) {
      const std::uint32_t lead = row.front().first;
      pivots.emplace(lead, std::move(row));
    }
  }
  // Back substitution to reduced echelon form, last pivot first.
  for (auto it = pivots.rbegin(); it != pivots.rend(); ++it) {
    const std::uint32_t col = it->first;
    for (auto jt = pivots.begin(); jt != pivots.end() && jt->first < col; ++jt) eliminate(jt->second, it->second, col);
  }

  NullspaceBasis B;
  B.cols = S.cols;
  B.rank = pivots.size();
  for (std::uint32_t free = 0; free < S.cols; ++free) {
    if (pivots.count(free)) continue;
    std::vector<Rational> x(S.cols);
    x[free] = 1;
    for (const auto& [col, row] : pivots) {
      if (col > free) break;
      if (const Integer* v = entry(row, free)) {
        x[col] = -Rational(*v, row.front().second);
        x[col].canonicalize();
      }
    }
    B.vectors.push_back(std::move(x));
  }
  return B;
}

NullspaceBasis nullspace(const std::vector<std::vector<Rational>>& dense, std::size_t cols) {
  LinearSystem S;
  S.cols = cols;
  for (const auto& r : dense) {
    std::vector<LinearForm::Entry> entries;
    for (std::size_t j = 0; j < cols; ++j) {
      if (!is_zero(r.at(j))) entries.emplace_back(static_cast<std::uint32_t>(j), r[j]);
    }
    S.rows.push_back(to_integer_row(LinearForm::from_sorted(std::move(entries))));
  }
  return nullspace(S);
}

std::vector<Integer> canonical_solution(const NullspaceBasis& B) {
  if (B.vectors.empty()) throw EmptyNullspace("nullspace is trivial");
  const auto& x = B.vectors.front();
  Integer den = 1;
  Integer num = 0;
  for (const Rational& q : x) {
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), q.get_den_mpz_t());
    mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), q.get_num_mpz_t());
  }
  std::vector<Integer> out;
  out.reserve(x.size());
  int sign = 0;
  for (const Rational& q : x) {
    Integer v = q.get_num() * (den / q.get_den()) / num;
    if (sign == 0 && v != 0) sign = sgn(v);
    out.push_back(std::move(v));
  }
  if (sign < 0) {
    for (auto& v : out) v = -v;
  }
  return out;
}

}  // namespace dchow
