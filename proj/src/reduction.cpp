#include "dchow/reduction.hpp"

#include <algorithm>
#include <map>
#include <optional>

#include "dchow/errors.hpp"

namespace dchow {

namespace {

/// c * p where c is a rational polynomial; constant c becomes a scalar product.
template <CoefficientScalar C>
Polynomial<C> times(const Polynomial<C>& p, const DiffPoly& c) {
  if (c.is_constant()) {
    if (c.is_zero()) return {};
    const Rational& s = c.terms()[0].coeff;
    return s == 1 ? p : p * s;
  }
  return p * c;
}

/// Splits f by powers of x: result[e] is the coefficient of x^e.
template <CoefficientScalar C>
std::vector<Polynomial<C>> split_powers(const Polynomial<C>& f, Var x) {
  std::vector<std::vector<Term<C>>> buckets;
  for (const auto& t : f.terms()) {
    const std::uint32_t e = t.mono.exponent(x);
    if (buckets.size() <= e) buckets.resize(e + 1);
    buckets[e].push_back({e == 0 ? t.mono : t.mono.without(x), t.coeff});
  }
  std::vector<Polynomial<C>> out;
  out.reserve(buckets.size());
  // Removing a common power of x keeps the relative order of terms.
  for (auto& b : buckets) out.push_back(Polynomial<C>::from_canonical_terms(std::move(b)));
  return out;
}

template <CoefficientScalar C>
Polynomial<C> join_powers(const std::vector<Polynomial<C>>& parts, Var x, std::size_t count) {
  PolyBuilder<C> b;
  for (std::size_t e = 0; e < count && e < parts.size(); ++e) {
    if (parts[e].is_zero()) continue;
    const Monomial xe(x, static_cast<std::uint32_t>(e));
    for (const auto& t : parts[e].terms()) b.add(t.mono * xe, t.coeff);
  }
  return b.build();
}

template <CoefficientScalar C>
PremResult<C> prem_impl(const Polynomial<C>& f, const DiffPoly& g, Var x, bool want_quotient) {
  const int m = degree_in(g, x);
  if (m <= 0) throw NotUnivariateLeader("divisor does not involve " + to_string(x));
  const int df = degree_in(f, x);
  PremResult<C> out;
  if (df < m) {
    out.remainder = f;
    return out;
  }
  const int k = df - m;
  const std::vector<DiffPoly> gc = split_powers(g, x);
  const DiffPoly& lc = gc[static_cast<std::size_t>(m)];
  std::vector<Polynomial<C>> rc = split_powers(f, x);
  std::vector<Polynomial<C>> qc(static_cast<std::size_t>(k + 1));
  for (int step = 0; step <= k; ++step) {
    const int e = df - step;
    const Polynomial<C> lead = std::move(rc[static_cast<std::size_t>(e)]);
    rc[static_cast<std::size_t>(e)] = {};
    for (int j = 0; j < e; ++j) rc[static_cast<std::size_t>(j)] = times(rc[static_cast<std::size_t>(j)], lc);
    if (!lead.is_zero()) {
      for (int j = 0; j < m; ++j) {
        if (gc[static_cast<std::size_t>(j)].is_zero()) continue;
        rc[static_cast<std::size_t>(e - m + j)] -= lead * gc[static_cast<std::size_t>(j)];
      }
    }
    if (want_quotient) {
      for (int j = e - m + 1; j <= k; ++j) qc[static_cast<std::size_t>(j)] = times(qc[static_cast<std::size_t>(j)], lc);
      qc[static_cast<std::size_t>(e - m)] = lead;
    }
  }
  out.exponent = static_cast<unsigned>(k + 1);
  out.remainder = join_powers(rc, x, static_cast<std::size_t>(m));
  if (want_quotient) out.quotient = join_powers(qc, x, qc.size());
  return out;
}

struct Offender {
  Var var;
  std::size_t element;
  int derivative;  // 0 means excess degree in the leader itself
};

template <CoefficientScalar C>
std::optional<Offender> highest_offender(const Polynomial<C>& r, const CharSet& A) {
  std::optional<Offender> best;
  for (Var v : variables(r)) {
    for (std::size_t i = 0; i < A.size(); ++i) {
      const PolyAnatomy& an = A.anatomy(i);
      if (!v.same_variable(an.leader)) continue;
      const int k = v.order() - an.leader.order();
      if (k < 0) break;
      if (k == 0 && degree_in(r, v) < an.leader_degree) break;
      if (!best || A.ranking().compare(v, best->var) > 0) best = Offender{v, i, k};
      break;
    }
  }
  return best;
}

class ProlongationCache {
 public:
  explicit ProlongationCache(const CharSet& A) : A_(A) {}
  const DiffPoly& get(std::size_t i, int k) {
    auto key = std::make_pair(i, k);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    return cache_.emplace(key, k == 0 ? A_[i] : derive(A_[i], k)).first->second;
  }

 private:
  const CharSet& A_;
  std::map<std::pair<std::size_t, int>, DiffPoly> cache_;
};

}  // namespace

template <CoefficientScalar C>
PremResult<C> algebraic_prem(const Polynomial<C>& f, const DiffPoly& g, Var x) {
  return prem_impl(f, g, x, true);
}

template PremResult<Rational> algebraic_prem(const DiffPoly&, const DiffPoly&, Var);
template PremResult<LinearForm> algebraic_prem(const LinearPoly&, const DiffPoly&, Var);

ReductionCertificate prem_chain(const DiffPoly& f, const std::vector<DiffPoly>& chain, const Ranking& r) {
  ReductionCertificate cert;
  cert.remainder = f;
  for (std::size_t idx = chain.size(); idx-- > 0;) {
    const PolyAnatomy an = anatomy(chain[idx], r);
    if (degree_in(cert.remainder, an.leader) < an.leader_degree) continue;
    PremResult<Rational> pr = prem_impl(cert.remainder, chain[idx], an.leader, true);
    const DiffPoly scale = pow(an.initial, pr.exponent);
    for (auto& q : cert.quotients) q.quotient = q.quotient * scale;
    cert.multipliers.push_back({idx, false, pr.exponent});
    cert.quotients.push_back({idx, 0, std::move(pr.quotient)});
    cert.remainder = std::move(pr.remainder);
  }
  return cert;
}

std::vector<DiffPoly> prolong(const CharSet& A, const std::vector<int>& extents) {
  std::vector<std::pair<Var, DiffPoly>> out;
  for (std::size_t i = 0; i < A.size(); ++i) {
    DiffPoly cur = A[i];
    for (int k = 0; k <= extents.at(i); ++k) {
      if (k > 0) cur = derive(cur, 1);
      out.emplace_back(A.anatomy(i).leader.derivative(k), cur);
    }
  }
  std::sort(out.begin(), out.end(),
            [&](const auto& a, const auto& b) { return A.ranking().compare(a.first, b.first) < 0; });
  std::vector<DiffPoly> chain;
  chain.reserve(out.size());
  for (auto& [v, p] : out) chain.push_back(std::move(p));
  return chain;
}

std::vector<DiffPoly> prolong(const CharSet& A, int h) {
  return prolong(A, std::vector<int>(A.size(), h));
}

template <CoefficientScalar C>
Polynomial<C> diff_rem(const Polynomial<C>& f, const CharSet& A) {
  ProlongationCache cache(A);
  Polynomial<C> r = f;
  while (auto off = highest_offender(r, A)) {
    const DiffPoly& g = cache.get(off->element, off->derivative);
    r = prem_impl(r, g, off->var, false).remainder;
  }
  return r;
}

template DiffPoly diff_rem(const DiffPoly&, const CharSet&);
template LinearPoly diff_rem(const LinearPoly&, const CharSet&);

ReductionCertificate diff_rem_certified(const DiffPoly& f, const CharSet& A) {
  ProlongationCache cache(A);
  ReductionCertificate cert;
  cert.remainder = f;
  while (auto off = highest_offender(cert.remainder, A)) {
    const DiffPoly& g = cache.get(off->element, off->derivative);
    PremResult<Rational> pr = prem_impl(cert.remainder, g, off->var, true);
    const PolyAnatomy& an = A.anatomy(off->element);
    const bool by_separant = off->derivative > 0;
    const DiffPoly scale = pow(by_separant ? an.separant : an.initial, pr.exponent);
    for (auto& q : cert.quotients) q.quotient = q.quotient * scale;
    cert.multipliers.push_back({off->element, by_separant, pr.exponent});
    auto same = std::find_if(cert.quotients.begin(), cert.quotients.end(), [&](const QuotientEntry& q) {
      return q.element == off->element && q.derivative == off->derivative;
    });
    if (same != cert.quotients.end()) {
      same->quotient += pr.quotient;
    } else {
      cert.quotients.push_back({off->element, off->derivative, std::move(pr.quotient)});
    }
    cert.remainder = std::move(pr.remainder);
  }
  return cert;
}

bool check_certificate(const DiffPoly& f, const ReductionCertificate& cert, const std::vector<DiffPoly>& elements,
                       const Ranking& r) {
  DiffPoly lhs = f;
  for (const Multiplier& m : cert.multipliers) {
    const PolyAnatomy an = anatomy(elements.at(m.element), r);
    lhs = lhs * pow(m.separant ? an.separant : an.initial, m.exponent);
  }
  DiffPoly rhs = cert.remainder;
  for (const QuotientEntry& q : cert.quotients) rhs += q.quotient * derive(elements.at(q.element), q.derivative);
  return lhs == rhs;
}

bool is_reduced(const DiffPoly& f, const CharSet& A) {
  for (const DiffPoly& g : A.elements()) {
    if (!is_reduced(f, g, A.ranking())) return false;
  }
  return true;
}

}  // namespace dchow
