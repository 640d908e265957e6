#include "dchow/monomial.hpp"

#include <algorithm>
#include <cassert>

namespace dchow {

Monomial::Monomial(Var v, std::uint32_t exp) {
  if (exp != 0) {
    factors_.push_back({v, exp});
    degree_ = exp;
  }
}

Monomial::Monomial(std::initializer_list<Factor> factors)
    : Monomial(from_factors(std::vector<Factor>(factors))) {}

Monomial Monomial::from_factors(std::vector<Factor> factors) {
  std::sort(factors.begin(), factors.end(),
            [](const Factor& a, const Factor& b) { return a.var < b.var; });
  Monomial m;
  for (const Factor& f : factors) {
    if (f.exp == 0) continue;
    if (!m.factors_.empty() && m.factors_.back().var == f.var) {
      m.factors_.back().exp += f.exp;
    } else {
      m.factors_.push_back(f);
    }
    m.degree_ += f.exp;
  }
  return m;
}

std::uint32_t Monomial::exponent(Var v) const {
  auto it = std::lower_bound(factors_.begin(), factors_.end(), v,
                             [](const Factor& f, Var x) { return f.var < x; });
  return (it != factors_.end() && it->var == v) ? it->exp : 0;
}

Monomial Monomial::without(Var v) const { return with_exponent(v, 0); }

Monomial Monomial::with_exponent(Var v, std::uint32_t exp) const {
  Monomial out;
  out.factors_.reserve(factors_.size() + 1);
  bool placed = false;
  for (const Factor& f : factors_) {
    if (!placed && v <= f.var) {
      if (exp != 0) out.factors_.push_back({v, exp});
      placed = true;
      if (f.var == v) continue;
    }
    out.factors_.push_back(f);
  }
  if (!placed && exp != 0) out.factors_.push_back({v, exp});
  for (const Factor& f : out.factors_) out.degree_ += f.exp;
  return out;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial out;
  out.factors_.reserve(a.factors_.size() + b.factors_.size());
  auto i = a.factors_.begin();
  auto j = b.factors_.begin();
  while (i != a.factors_.end() && j != b.factors_.end()) {
    if (i->var == j->var) {
      out.factors_.push_back({i->var, i->exp + j->exp});
      ++i;
      ++j;
    } else if (i->var < j->var) {
      out.factors_.push_back(*i++);
    } else {
      out.factors_.push_back(*j++);
    }
  }
  out.factors_.insert(out.factors_.end(), i, a.factors_.end());
  out.factors_.insert(out.factors_.end(), j, b.factors_.end());
  out.degree_ = a.degree_ + b.degree_;
  return out;
}

bool Monomial::divisible_by(const Monomial& b) const {
  auto i = factors_.begin();
  for (const Factor& f : b.factors_) {
    while (i != factors_.end() && i->var < f.var) ++i;
    if (i == factors_.end() || i->var != f.var || i->exp < f.exp) return false;
  }
  return true;
}

Monomial operator/(const Monomial& a, const Monomial& b) {
  assert(a.divisible_by(b));
  Monomial out;
  out.factors_.reserve(a.factors_.size());
  auto j = b.factors_.begin();
  for (const Factor& f : a.factors_) {
    if (j != b.factors_.end() && j->var == f.var) {
      if (f.exp > j->exp) out.factors_.push_back({f.var, f.exp - j->exp});
      ++j;
    } else {
      out.factors_.push_back(f);
    }
  }
  out.degree_ = a.degree_ - b.degree_;
  return out;
}

std::size_t Monomial::hash() const {
  std::uint64_t h = 1469598103934665603ull;
  for (const Factor& f : factors_) {
    h ^= f.var.key() + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    h ^= f.exp + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return static_cast<std::size_t>(h);
}

int compare(const Monomial& a, const Monomial& b) {
  if (a.degree() != b.degree()) return a.degree() > b.degree() ? -1 : 1;
  auto fa = a.factors();
  auto fb = b.factors();
  std::size_t i = 0;
  for (; i < fa.size() && i < fb.size(); ++i) {
    if (fa[i].var != fb[i].var) return fa[i].var < fb[i].var ? -1 : 1;
    if (fa[i].exp != fb[i].exp) return fa[i].exp > fb[i].exp ? -1 : 1;
  }
  if (fa.size() == fb.size()) return 0;
  // Equal degree with a common prefix cannot leave exactly one side non-empty.
  return fa.size() > fb.size() ? -1 : 1;
}

}  // namespace dchow
