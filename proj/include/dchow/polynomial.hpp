#pragma once

#include <algorithm>
#include <concepts>
#include <cstdint>
#include <unordered_map>
#include <utility>
#include <vector>

#include "dchow/linear_form.hpp"
#include "dchow/monomial.hpp"
#include "dchow/rational.hpp"
#include "dchow/variable.hpp"

namespace dchow {

template <class C>
struct Term {
  Monomial mono;
  C coeff;

  friend bool operator==(const Term&, const Term&) = default;
};

/// Coefficient scalars a Polynomial can carry: exact rationals, or linear
/// forms in the ansatz coefficients.
template <class C>
concept CoefficientScalar = requires(C a, const C& b, const Rational& s) {
  { is_zero(b) } -> std::convertible_to<bool>;
  a += b;
  a -= b;
  a *= s;
  { -b } -> std::convertible_to<C>;
};

/// Sparse distributed polynomial in derivative symbols with scalar type C.
///
/// Terms are stored in canonical monomial order (see compare(Monomial,
/// Monomial)) with no zero coefficients; the zero polynomial has no terms.
template <CoefficientScalar C>
class Polynomial {
 public:
  using Scalar = C;

  Polynomial() = default;
  Polynomial(Monomial m, C c) {
    if (!dchow::is_zero(c)) terms_.push_back({std::move(m), std::move(c)});
  }
  /// Constant polynomial.
  Polynomial(const Rational& c)
    requires std::same_as<C, Rational>
      : Polynomial(Monomial{}, c) {}
  Polynomial(long c)
    requires std::same_as<C, Rational>
      : Polynomial(Monomial{}, Rational(c)) {}
  /// The polynomial consisting of a single symbol.
  Polynomial(Var v)
    requires std::same_as<C, Rational>
      : Polynomial(Monomial(v), Rational(1)) {}

  /// Sorts, merges equal monomials and drops zero coefficients.
  static Polynomial from_terms(std::vector<Term<C>> terms) {
    std::sort(terms.begin(), terms.end(),
              [](const Term<C>& a, const Term<C>& b) { return compare(a.mono, b.mono) < 0; });
    Polynomial out;
    for (auto& t : terms) {
      if (!out.terms_.empty() && out.terms_.back().mono == t.mono) {
        out.terms_.back().coeff += t.coeff;
        if (dchow::is_zero(out.terms_.back().coeff)) out.terms_.pop_back();
      } else if (!dchow::is_zero(t.coeff)) {
        out.terms_.push_back(std::move(t));
      }
    }
    return out;
  }
  /// Terms must already be canonical: sorted, distinct, nonzero.
  static Polynomial from_canonical_terms(std::vector<Term<C>> terms) {
    Polynomial out;
    out.terms_ = std::move(terms);
    return out;
  }

  const std::vector<Term<C>>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }
  const Term<C>& leading_term() const { return terms_.front(); }

  Polynomial& operator+=(const Polynomial& o) { return merge(o, false); }
  Polynomial& operator-=(const Polynomial& o) { return merge(o, true); }
  Polynomial& operator*=(const Rational& s) {
    if (dchow::is_zero(s)) {
      terms_.clear();
    } else if (s != 1) {
      for (auto& t : terms_) t.coeff *= s;
    }
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Rational& s) { return a *= s; }
  friend Polynomial operator*(const Rational& s, Polynomial a) { return a *= s; }
  Polynomial operator-() const {
    Polynomial out = *this;
    for (auto& t : out.terms_) t.coeff = -t.coeff;
    return out;
  }
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  Polynomial& merge(const Polynomial& o, bool subtract) {
    if (o.terms_.empty()) return *this;
    std::vector<Term<C>> out;
    out.reserve(terms_.size() + o.terms_.size());
    auto i = terms_.begin();
    auto j = o.terms_.begin();
    while (i != terms_.end() || j != o.terms_.end()) {
      int c = 0;
      if (i == terms_.end()) {
        c = 1;
      } else if (j == o.terms_.end()) {
        c = -1;
      } else {
        c = compare(i->mono, j->mono);
      }
      if (c < 0) {
        out.push_back(std::move(*i++));
      } else if (c > 0) {
        out.push_back(subtract ? Term<C>{j->mono, -j->coeff} : *j);
        ++j;
      } else {
        if (subtract) {
          i->coeff -= j->coeff;
        } else {
          i->coeff += j->coeff;
        }
        if (!dchow::is_zero(i->coeff)) out.push_back(std::move(*i));
        ++i;
        ++j;
      }
    }
    terms_ = std::move(out);
    return *this;
  }

  std::vector<Term<C>> terms_;
};

using DiffPoly = Polynomial<Rational>;
using LinearPoly = Polynomial<LinearForm>;

/// Hash-map accumulator for building a polynomial from unsorted terms.
template <CoefficientScalar C>
class PolyBuilder {
 public:
  void reserve(std::size_t n) { acc_.reserve(n); }
  void add(const Monomial& m, const C& c) {
    auto [it, inserted] = acc_.try_emplace(m, c);
    if (!inserted) it->second += c;
  }
  void add(Monomial&& m, C&& c) {
    auto it = acc_.find(m);
    if (it == acc_.end()) {
      acc_.emplace(std::move(m), std::move(c));
    } else {
      it->second += c;
    }
  }
  void add(const Polynomial<C>& p) {
    for (const auto& t : p.terms()) add(t.mono, t.coeff);
  }
  Polynomial<C> build() {
    std::vector<Term<C>> terms;
    terms.reserve(acc_.size());
    for (auto& [m, c] : acc_) {
      if (!is_zero(c)) terms.push_back({m, std::move(c)});
    }
    acc_.clear();
    std::sort(terms.begin(), terms.end(),
              [](const Term<C>& a, const Term<C>& b) { return compare(a.mono, b.mono) < 0; });
    return Polynomial<C>::from_canonical_terms(std::move(terms));
  }

 private:
  std::unordered_map<Monomial, C> acc_;
};

/// f * s * m. Multiplication by a monomial preserves the canonical order.
template <CoefficientScalar C>
Polynomial<C> mul_term(const Polynomial<C>& f, const Monomial& m, const Rational& s) {
  if (f.is_zero() || dchow::is_zero(s)) return {};
  std::vector<Term<C>> out;
  out.reserve(f.size());
  for (const auto& t : f.terms()) {
    C c = t.coeff;
    c *= s;
    out.push_back({t.mono * m, std::move(c)});
  }
  return Polynomial<C>::from_canonical_terms(std::move(out));
}

template <CoefficientScalar C>
Polynomial<C> operator*(const Polynomial<C>& f, const DiffPoly& g) {
  if (f.is_zero() || g.is_zero()) return {};
  if (g.size() == 1) return mul_term(f, g.terms()[0].mono, g.terms()[0].coeff);
  if (f.size() == 1 && f.terms()[0].mono.is_one()) {
    // Constant times g: only reachable with scalar-like C.
    PolyBuilder<C> b;
    for (const auto& t : g.terms()) {
      C c = f.terms()[0].coeff;
      c *= t.coeff;
      b.add(t.mono, c);
    }
    return b.build();
  }
  PolyBuilder<C> b;
  b.reserve(f.size() * g.size());
  for (const auto& tg : g.terms()) {
    for (const auto& tf : f.terms()) {
      C c = tf.coeff;
      c *= tg.coeff;
      b.add(tf.mono * tg.mono, std::move(c));
    }
  }
  return b.build();
}

inline LinearPoly operator*(const DiffPoly& g, const LinearPoly& f) { return f * g; }

DiffPoly pow(const DiffPoly& f, unsigned e);

/// Promotes a rational polynomial to one with linear-form coefficients
/// by multiplying every coefficient into the given form.
LinearPoly scale_form(const DiffPoly& f, const LinearForm& form);

// ---------------------------------------------------------------------------
// Structural queries.

template <CoefficientScalar C>
std::vector<Var> variables(const Polynomial<C>& f) {
  std::vector<Var> out;
  for (const auto& t : f.terms()) {
    for (const Factor& fa : t.mono.factors()) out.push_back(fa.var);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

template <CoefficientScalar C>
int total_degree(const Polynomial<C>& f) {
  if (f.is_zero()) return kMinusInfinity;
  return static_cast<int>(f.leading_term().mono.degree());
}

template <CoefficientScalar C>
int degree_in(const Polynomial<C>& f, Var v) {
  if (f.is_zero()) return kMinusInfinity;
  std::uint32_t d = 0;
  for (const auto& t : f.terms()) d = std::max(d, t.mono.exponent(v));
  return static_cast<int>(d);
}

/// ord(f, y): the largest k such that delta^k y occurs; kMinusInfinity if none.
template <CoefficientScalar C>
int order_of(const Polynomial<C>& f, Var variable) {
  const Var base = variable.base();
  int best = kMinusInfinity;
  for (const auto& t : f.terms()) {
    for (const Factor& fa : t.mono.factors()) {
      if (fa.var.base() == base) best = std::max(best, fa.var.order());
    }
  }
  return best;
}

/// ord(f): maximum over all Y variables; kMinusInfinity if f has no Y symbol.
template <CoefficientScalar C>
int order_of(const Polynomial<C>& f) {
  int best = kMinusInfinity;
  for (const auto& t : f.terms()) {
    for (const Factor& fa : t.mono.factors()) {
      if (fa.var.is_y()) best = std::max(best, fa.var.order());
    }
  }
  return best;
}

/// Coefficient of v^e when f is viewed as univariate in v.
template <CoefficientScalar C>
Polynomial<C> coefficient(const Polynomial<C>& f, Var v, std::uint32_t e) {
  PolyBuilder<C> b;
  for (const auto& t : f.terms()) {
    if (t.mono.exponent(v) == e) b.add(t.mono.without(v), t.coeff);
  }
  return b.build();
}

template <CoefficientScalar C>
Polynomial<C> partial_derivative(const Polynomial<C>& f, Var v) {
  PolyBuilder<C> b;
  for (const auto& t : f.terms()) {
    const std::uint32_t e = t.mono.exponent(v);
    if (e == 0) continue;
    C c = t.coeff;
    c *= Rational(e);
    b.add(t.mono.with_exponent(v, e - 1), std::move(c));
  }
  return b.build();
}

/// Formal derivation delta^k, by linearity and the Leibniz rule.
/// Coefficient symbols (VarKind::Coeff) are constants.
template <CoefficientScalar C>
Polynomial<C> derive(const Polynomial<C>& f, int k = 1) {
  Polynomial<C> cur = f;
  for (int step = 0; step < k; ++step) {
    PolyBuilder<C> b;
    b.reserve(cur.size() * 2);
    for (const auto& t : cur.terms()) {
      for (const Factor& fa : t.mono.factors()) {
        if (fa.var.is_constant()) continue;
        Monomial m = t.mono.with_exponent(fa.var, fa.exp - 1);
        m = m * Monomial(fa.var.derivative());
        C c = t.coeff;
        if (fa.exp != 1) c *= Rational(fa.exp);
        b.add(std::move(m), std::move(c));
      }
    }
    cur = b.build();
  }
  return cur;
}

using Substitution = std::unordered_map<Var, DiffPoly>;

/// Replaces every mapped symbol by its image and expands.
template <CoefficientScalar C>
Polynomial<C> substitute(const Polynomial<C>& f, const Substitution& map) {
  std::unordered_map<std::uint64_t, DiffPoly> power_cache;
  auto image_power = [&](Var v, std::uint32_t e) -> const DiffPoly& {
    const std::uint64_t key = v.key() * 131 + e;
    auto it = power_cache.find(key);
    if (it != power_cache.end()) return it->second;
    return power_cache.emplace(key, pow(map.at(v), e)).first->second;
  };
  PolyBuilder<C> b;
  for (const auto& t : f.terms()) {
    std::vector<Factor> kept;
    DiffPoly image(Rational(1));
    for (const Factor& fa : t.mono.factors()) {
      if (map.count(fa.var)) {
        image = image * image_power(fa.var, fa.exp);
      } else {
        kept.push_back(fa);
      }
    }
    const Monomial rest = Monomial::from_factors(std::move(kept));
    for (const auto& ti : image.terms()) {
      C c = t.coeff;
      c *= ti.coeff;
      b.add(ti.mono * rest, std::move(c));
    }
  }
  return b.build();
}

// ---------------------------------------------------------------------------
// Normalization.

/// Integer coefficients with content 1 and a positive leading coefficient.
DiffPoly normalized(const DiffPoly& f);

/// True when a = s * b for some nonzero rational s (both zero counts as true).
bool proportional(const DiffPoly& a, const DiffPoly& b);

}  // namespace dchow
