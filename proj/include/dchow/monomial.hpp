#pragma once

#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <vector>

#include "dchow/variable.hpp"

namespace dchow {

struct Factor {
  Var var;
  std::uint32_t exp = 1;

  friend bool operator==(const Factor&, const Factor&) = default;
};

/// A power product of derivative symbols. Factors are kept sorted by the
/// canonical variable key and never carry a zero exponent.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(Var v, std::uint32_t exp = 1);
  Monomial(std::initializer_list<Factor> factors);
  /// Takes an arbitrary factor list; sorts and merges repeated variables.
  static Monomial from_factors(std::vector<Factor> factors);

  std::span<const Factor> factors() const { return factors_; }
  std::size_t size() const { return factors_.size(); }
  bool is_one() const { return factors_.empty(); }
  std::uint32_t degree() const { return degree_; }

  std::uint32_t exponent(Var v) const;
  bool contains(Var v) const { return exponent(v) != 0; }

  /// Removes every power of v (the monomial's cofactor with respect to v).
  Monomial without(Var v) const;
  /// Replaces the exponent of v; exp == 0 drops it.
  Monomial with_exponent(Var v, std::uint32_t exp) const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  /// Exact quotient; requires b | a.
  friend Monomial operator/(const Monomial& a, const Monomial& b);
  bool divisible_by(const Monomial& b) const;

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.degree_ == b.degree_ && a.factors_ == b.factors_;
  }

  std::size_t hash() const;

 private:
  std::vector<Factor> factors_;
  std::uint32_t degree_ = 0;
};

/// Canonical monomial order: higher total degree first, then lexicographic
/// on exponents with the smallest variable key most significant.
/// Returns negative when a precedes b.
int compare(const Monomial& a, const Monomial& b);

struct MonomialBefore {
  bool operator()(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }
};

}  // namespace dchow

template <>
struct std::hash<dchow::Monomial> {
  std::size_t operator()(const dchow::Monomial& m) const noexcept { return m.hash(); }
};
