#include "dchow/polynomial.hpp"

namespace dchow {

DiffPoly pow(const DiffPoly& f, unsigned e) {
  DiffPoly result(Rational(1));
  DiffPoly base = f;
  while (e != 0) {
    if (e & 1u) result = result * base;
    e >>= 1;
    if (e != 0) base = base * base;
  }
  return result;
}

LinearPoly scale_form(const DiffPoly& f, const LinearForm& form) {
  std::vector<Term<LinearForm>> terms;
  terms.reserve(f.size());
  if (form.empty()) return {};
  for (const auto& t : f.terms()) terms.push_back({t.mono, form * t.coeff});
  return LinearPoly::from_canonical_terms(std::move(terms));
}

DiffPoly normalized(const DiffPoly& f) {
  if (f.is_zero()) return f;
  Integer den_lcm = 1;
  Integer num_gcd = 0;
  for (const auto& t : f.terms()) {
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), t.coeff.get_den_mpz_t());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), t.coeff.get_num_mpz_t());
  }
  Rational scale(den_lcm, num_gcd);
  if (sgn(f.leading_term().coeff) < 0) scale = -scale;
  return f * scale;
}

bool proportional(const DiffPoly& a, const DiffPoly& b) {
  if (a.size() != b.size()) return false;
  if (a.is_zero()) return true;
  const Rational ratio = a.terms()[0].coeff / b.terms()[0].coeff;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!(a.terms()[i].mono == b.terms()[i].mono)) return false;
    if (a.terms()[i].coeff != ratio * b.terms()[i].coeff) return false;
  }
  return true;
}

}  // namespace dchow
