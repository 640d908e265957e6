#include "dchow/chow.hpp"

#include <chrono>
#include <map>

#include "dchow/bounds.hpp"
#include "dchow/errors.hpp"
#include "dchow/frontend.hpp"
#include "dchow/reduction.hpp"

namespace dchow {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

bool fits(const Integer& bound, long t) { return Integer(t) <= bound; }

/// Shared bookkeeping for the three searches.
class Search {
 public:
  Search(const CharSet& A, const SearchOptions& options, int algorithm) : A_(A), options_(options) {
    result_.algorithm = algorithm;
    result_.dimension = A.dimension();
    result_.jacobi = jacobi_number(OrderMatrix::of(A));
    result_.warnings = A.warnings();
  }

  CellOutcome run(int h, int t) {
    if (options_.max_cells != 0 && result_.trace.size() >= options_.max_cells) {
      throw BudgetExceeded("cell budget of " + std::to_string(options_.max_cells) + " exhausted before (h, t) = (" +
                           std::to_string(h) + ", " + std::to_string(t) + ")");
    }
    if (options_.max_seconds > 0 && seconds_since(start_) > options_.max_seconds) {
      throw BudgetExceeded("time budget exhausted before (h, t) = (" + std::to_string(h) + ", " + std::to_string(t) + ")");
    }
    CellOutcome out = solve_cell(A_, h, t, options_.max_columns);
    out.record.verdict = out.record.nullity == 0 ? "trivial" : "candidate";
    return out;
  }

  void record(const CellRecord& r) {
    result_.trace.push_back(r);
    if (options_.on_cell) options_.on_cell(r);
  }

  ChowResult finish(const DiffPoly& F, int h, int t) {
    result_.chow_form = F;
    result_.order = h;
    result_.ideal_order = h;
    result_.total_degree = t;
    result_.block_degree = t / (A_.dimension() + 1);
    return std::move(result_);
  }

  ChowResult& result() { return result_; }

 private:
  const CharSet& A_;
  const SearchOptions& options_;
  ChowResult result_;
  Clock::time_point start_ = Clock::now();
};

void require_unique(const CellRecord& r) {
  if (r.nullity > 1) {
    throw NonUniqueSolution("nullspace of dimension " + std::to_string(r.nullity) + " at (h, t) = (" +
                            std::to_string(r.h) + ", " + std::to_string(r.t) + ")");
  }
}

std::vector<std::string> ladder_checks(const DiffPoly& F, const CharSet& A, int h, bool stop_first) {
  std::vector<std::string> failures;
  const int d = A.dimension();
  const int n = A.n();
  auto fail = [&](std::string why) {
    failures.push_back(std::move(why));
    return stop_first;
  };
  const HomogeneityVerdict hom = is_diff_homogeneous(F, d + 1);
  if (!hom.ok && fail("not differentially homogeneous: " + hom.reason)) return failures;
  if (d >= 1 && !block_swap_symmetric(F, d) && fail("not symmetric under exchange of blocks")) return failures;

  std::vector<DiffPoly> cf;
  try {
    cf = char_set_CF(F, h, n);
  } catch (const DegenerateSeparant& e) {
    fail(e.what());
    return failures;
  }
  std::optional<CharSet> C;
  try {
    const int size = static_cast<int>(cf.size());
    C.emplace(std::move(cf), chow_ranking(n, d), size);
  } catch (const InvalidCharSet& e) {
    fail(std::string("C_F is not auto-reduced: ") + e.what());
    return failures;
  }
  for (std::size_t i = 0; i < A.size(); ++i) {
    if (!diff_rem(A[i], *C).is_zero() && fail("rem(A_" + std::to_string(i + 1) + ", C_F) is nonzero")) return failures;
  }
  const HyperplaneSystem H = generic_hyperplanes(n, d);
  for (int i = 0; i <= d; ++i) {
    if (!diff_rem(H.planes[static_cast<std::size_t>(i)], *C).is_zero() &&
        fail("rem(P_" + std::to_string(i) + ", C_F) is nonzero")) {
      return failures;
    }
  }
  DiffPoly prod(Rational(1));
  for (std::size_t i = 0; i < A.size(); ++i) prod = prod * A.anatomy(i).initial * A.anatomy(i).separant;
  if (diff_rem(prod, *C).is_zero()) fail("rem(initials * separants, C_F) is zero");
  return failures;
}

}  // namespace

HyperplaneSystem generic_hyperplanes(int n, int d) {
  if (n < 1 || d < 0 || d >= n) throw std::invalid_argument("hyperplanes need 0 <= d < n");
  HyperplaneSystem H{n, d, {}};
  for (int i = 0; i <= d; ++i) {
    DiffPoly p(Var::u(i, 0));
    for (int j = 1; j <= n; ++j) p += DiffPoly(Var::u(i, j)) * DiffPoly(Var::y(j));
    H.planes.push_back(std::move(p));
  }
  return H;
}

std::vector<Var> ansatz_variables(int d, int n, int h) {
  std::vector<Var> v;
  for (int k = 0; k <= h; ++k) {
    for (int i = 0; i <= d; ++i) {
      for (int j = 0; j <= n; ++j) v.push_back(Var::u(i, j, k));
    }
  }
  return v;
}

std::vector<Monomial> ansatz_monomials(int t, const std::vector<Var>& v) {
  std::vector<Monomial> out;
  if (t < 0 || v.empty()) return out;
  std::vector<std::size_t> idx(static_cast<std::size_t>(t), 0);
  for (;;) {
    std::vector<Factor> fs;
    for (std::size_t i : idx) fs.push_back({v[i], 1});
    out.push_back(Monomial::from_factors(std::move(fs)));
    // Next nondecreasing tuple.
    int pos = t - 1;
    while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == v.size() - 1) --pos;
    if (pos < 0) break;
    const std::size_t next = idx[static_cast<std::size_t>(pos)] + 1;
    for (int q = pos; q < t; ++q) idx[static_cast<std::size_t>(q)] = next;
  }
  return out;
}

Ansatz generic_ansatz(int t, const std::vector<Var>& v) {
  Ansatz a;
  a.monomials = ansatz_monomials(t, v);
  std::vector<Term<Rational>> terms;
  for (std::size_t k = 0; k < a.monomials.size(); ++k) {
    a.coefficients.push_back(Var::coeff(static_cast<int>(k)));
    terms.push_back({a.monomials[k] * Monomial(a.coefficients.back()), Rational(1)});
  }
  a.F0 = DiffPoly::from_terms(std::move(terms));
  return a;
}

Substitution u0_substitution(const HyperplaneSystem& H, int max_order) {
  Substitution map;
  for (int i = 0; i <= H.d; ++i) {
    DiffPoly image;
    for (int j = 1; j <= H.n; ++j) image -= DiffPoly(Var::u(i, j)) * DiffPoly(Var::y(j));
    for (int k = 0; k <= max_order; ++k) {
      map.emplace(Var::u(i, 0, k), image);
      image = derive(image, 1);
    }
  }
  return map;
}

CellOutcome solve_cell(const CharSet& A, int h, int t, std::size_t max_columns) {
  const auto start = Clock::now();
  const int d = A.dimension();
  const int n = A.n();
  const std::vector<Var> v = ansatz_variables(d, n, h);
  const Integer cols = binomial(v.size() + static_cast<unsigned long>(t) - 1, static_cast<unsigned long>(t));
  if (max_columns != 0 && cols > Integer(static_cast<unsigned long>(max_columns))) {
    throw BudgetExceeded("cell (h, t) = (" + std::to_string(h) + ", " + std::to_string(t) + ") needs " + to_string(cols) +
                         " ansatz coefficients, above the budget of " + std::to_string(max_columns));
  }
  const HyperplaneSystem H = generic_hyperplanes(n, d);
  const Substitution sub = u0_substitution(H, h);
  std::vector<DiffPoly> image;
  image.reserve(v.size());
  for (Var x : v) {
    auto it = sub.find(x);
    image.push_back(it == sub.end() ? DiffPoly(x) : it->second);
  }

  // F1 = sum_k c_k * image(mu_k), enumerating mu_k depth-first so each
  // prefix product is formed once.
  PolyBuilder<LinearForm> builder;
  std::uint32_t column = 0;
  std::vector<DiffPoly> prefix(static_cast<std::size_t>(t + 1));
  prefix[0] = DiffPoly(Rational(1));
  std::function<void(int, std::size_t)> walk = [&](int depth, std::size_t from) {
    for (std::size_t i = from; i < v.size(); ++i) {
      DiffPoly p = prefix[static_cast<std::size_t>(depth)] * image[i];
      if (depth + 1 == t) {
        for (const auto& term : p.terms()) builder.add(term.mono, LinearForm(column, term.coeff));
        ++column;
      } else {
        prefix[static_cast<std::size_t>(depth + 1)] = std::move(p);
        walk(depth + 1, i);
      }
    }
  };
  walk(0, 0);
  const LinearPoly F1 = builder.build();
  const LinearPoly F2 = diff_rem(F1, A);
  const LinearSystem S = assemble(F2, column);
  const NullspaceBasis B = nullspace(S);

  CellOutcome out;
  out.record.h = h;
  out.record.t = t;
  out.record.rows = S.rows.size();
  out.record.distinct_rows = S.distinct_rows;
  out.record.cols = S.cols;
  out.record.nullity = B.dimension();
  if (B.dimension() > 0) {
    const std::vector<Integer> c = canonical_solution(B);
    const std::vector<Monomial> monos = ansatz_monomials(t, v);
    std::vector<Term<Rational>> terms;
    for (std::size_t k = 0; k < c.size(); ++k) {
      if (c[k] != 0) terms.push_back({monos[k], Rational(c[k])});
    }
    out.solution = normalized(DiffPoly::from_terms(std::move(terms)));
  }
  out.record.seconds = seconds_since(start);
  return out;
}

ChowResult dchowform1(const CharSet& A, const SearchOptions& options) {
  if (!A.ranking().is_orderly()) throw NotOrderlyRanking("the order-fixed search needs an orderly ranking");
  Search search(A, options, 1);
  const int h = order_of(A);
  const Integer bound = degree_bound_orderly(A);
  for (int t = 1; fits(bound, t); ++t) {
    CellOutcome cell = search.run(h, t);
    if (cell.solution) {
      cell.record.verdict = "accepted";
      search.record(cell.record);
      require_unique(cell.record);
      return search.finish(*cell.solution, h, t);
    }
    search.record(cell.record);
  }
  throw BoundExceeded("no solution up to the degree bound " + to_string(bound));
}

ChowResult dchowform2(const CharSet& A, const SearchOptions& options) {
  Search search(A, options, 2);
  const int jac = search.result().jacobi;
  for (int h = order_of(A); h <= jac; ++h) {
    const Integer bound = degree_bound_at(A, h);
    for (int t = 1; fits(bound, t); ++t) {
      CellOutcome cell = search.run(h, t);
      if (cell.solution) {
        cell.record.verdict = "accepted";
        search.record(cell.record);
        require_unique(cell.record);
        ChowResult result = search.finish(*cell.solution, h, t);
        if (A.dimension() >= 1 && !block_swap_symmetric(result.chow_form, A.dimension())) {
          result.warnings.push_back("result is not symmetric under exchange of blocks");
        }
        return result;
      }
      search.record(cell.record);
    }
  }
  throw BoundExceeded("no solution up to the Jacobi number " + std::to_string(jac));
}

ChowResult dchowform3(const CharSet& A, const SearchOptions& options) {
  Search search(A, options, 3);
  const int low = order_of(A);
  int top = search.result().jacobi;
  for (int t = 1; top >= low && fits(degree_bound_at(A, top), t); ++t) {
    for (int h = low; h <= top; ++h) {
      CellOutcome cell = search.run(h, t);
      if (!cell.solution) {
        search.record(cell.record);
        continue;
      }
      const std::vector<std::string> why = ladder_checks(*cell.solution, A, h, true);
      if (why.empty()) {
        cell.record.verdict = "accepted";
        search.record(cell.record);
        return search.finish(*cell.solution, h, t);
      }
      cell.record.verdict = "rejected: " + why.front();
      search.record(cell.record);
      top = h - 1;
      break;
    }
  }
  throw BoundExceeded("degree-major search exhausted its bounds");
}

HomogeneityVerdict is_diff_homogeneous(const DiffPoly& F, int blocks) {
  HomogeneityVerdict out;
  const Var lambda = Var::aux(0);
  for (int i = 0; i < blocks; ++i) {
    std::optional<int> degree;
    int top = 0;
    for (const auto& term : F.terms()) {
      int deg = 0;
      for (const Factor& fa : term.mono.factors()) {
        if (fa.var.is_u() && fa.var.index() == i) {
          deg += static_cast<int>(fa.exp);
          top = std::max(top, fa.var.order());
        }
      }
      if (degree && *degree != deg) {
        out.reason = "terms of different degrees in block " + std::to_string(i);
        out.witness = DiffPoly(term.mono, term.coeff);
        return out;
      }
      degree = deg;
    }
    const int r = degree.value_or(0);
    out.block_degrees.push_back(r);
    // The coefficient of lambda^(r-1) lambda^(l) in F(lambda u_i) is
    // sum_j sum_k binom(k, l) u_ij^(k-l) dF/du_ij^(k); it must vanish.
    for (int l = 1; l <= top; ++l) {
      DiffPoly E;
      for (Var x : variables(F)) {
        if (!x.is_u() || x.index() != i || x.order() < l) continue;
        const Rational b(binomial(static_cast<unsigned long>(x.order()), static_cast<unsigned long>(l)));
        E += partial_derivative(F, x) * DiffPoly(x.derivative(-l)) * b;
      }
      if (!E.is_zero()) {
        const auto& lt = E.leading_term();
        out.witness = DiffPoly(lt.mono * Monomial(lambda.derivative(l)) * Monomial(lambda, static_cast<std::uint32_t>(r - 1)), lt.coeff);
        out.reason = "block " + std::to_string(i) + " leaves " + format_diffpoly(out.witness);
        return out;
      }
    }
  }
  for (int r : out.block_degrees) {
    if (r != out.block_degrees.front()) {
      out.reason = "block degrees differ";
      return out;
    }
  }
  out.ok = true;
  out.degree = out.block_degrees.empty() ? 0 : out.block_degrees.front();
  return out;
}

DiffPoly swap_blocks(const DiffPoly& F, int a, int b) {
  Substitution map;
  for (Var x : variables(F)) {
    if (!x.is_u()) continue;
    if (x.index() == a) map.emplace(x, DiffPoly(Var::u(b, x.coord(), x.order())));
    if (x.index() == b) map.emplace(x, DiffPoly(Var::u(a, x.coord(), x.order())));
  }
  return substitute(F, map);
}

bool block_swap_symmetric(const DiffPoly& F, int d) {
  for (int i = 1; i <= d; ++i) {
    const DiffPoly G = swap_blocks(F, 0, i);
    if (G != F && G != -F) return false;
  }
  return true;
}

std::vector<DiffPoly> char_set_CF(const DiffPoly& F, int h, int n) {
  const DiffPoly s = partial_derivative(F, Var::u(0, 0, h));
  if (s.is_zero()) throw DegenerateSeparant("F does not involve u0_0 at order " + std::to_string(h));
  std::vector<DiffPoly> out{F};
  for (int j = 1; j <= n; ++j) out.push_back(s * DiffPoly(Var::y(j)) - partial_derivative(F, Var::u(0, j, h)));
  return out;
}

Ranking chow_ranking(int n, int d) {
  std::vector<Var> vars;
  for (int i = d; i >= 0; --i) vars.push_back(Var::u(i, 0));
  for (int j = 1; j <= n; ++j) vars.push_back(Var::y(j));
  return Ranking::elimination(std::move(vars));
}

int u_order(const DiffPoly& F) {
  int top = kMinusInfinity;
  for (Var x : variables(F)) {
    if (x.is_u()) top = std::max(top, x.order());
  }
  return top;
}

std::optional<std::string> ladder_failure(const DiffPoly& F, const CharSet& A, int h) {
  auto why = ladder_checks(F, A, h, true);
  if (why.empty()) return std::nullopt;
  return why.front();
}

ChowVerdict verify_chow(const DiffPoly& F, const CharSet& A, const VerifyOptions& options) {
  ChowVerdict v;
  auto fail = [&](std::string why) {
    v.ok = false;
    v.failures.push_back(std::move(why));
  };
  const int d = A.dimension();
  if (F.is_zero()) {
    fail("candidate is zero");
    return v;
  }
  for (Var x : variables(F)) {
    if (!x.is_u() || x.index() > d || x.coord() > A.n()) {
      fail("candidate involves " + to_string(x) + ", outside the hyperplane coefficients");
      return v;
    }
  }
  v.order = u_order(F);
  for (Var x : variables(F)) {
    if (order_of(F, x) != v.order) {
      fail("order in " + to_string(x.base()) + " differs from " + std::to_string(v.order));
      break;
    }
  }
  const HomogeneityVerdict hom = is_diff_homogeneous(F, d + 1);
  v.block_degree = hom.degree;
  if (!hom.ok) fail("not differentially homogeneous: " + hom.reason);
  if (d >= 1 && !block_swap_symmetric(F, d)) fail("not symmetric under exchange of blocks");

  const DiffPoly on_variety = diff_rem(substitute_u0(F, generic_hyperplanes(A.n(), d)), A);
  if (!on_variety.is_zero()) fail("condition 1: remainder of the substituted candidate is " + format_diffpoly(on_variety));
  if (!options.skip_ladder) {
    for (auto& why : ladder_checks(F, A, v.order, false)) {
      if (why.rfind("not ", 0) == 0) continue;  // already reported above
      fail("condition 2: " + why);
    }
  }
  return v;
}

}  // namespace dchow
