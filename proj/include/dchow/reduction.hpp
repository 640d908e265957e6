#pragma once

#include <cstddef>
#include <vector>

#include "dchow/polynomial.hpp"
#include "dchow/ranking.hpp"

namespace dchow {

template <CoefficientScalar C>
struct PremResult {
  Polynomial<C> quotient;
  Polynomial<C> remainder;
  /// The power of lc(g, x) multiplying f: max(deg(f,x) - deg(g,x) + 1, 0).
  unsigned exponent = 0;
};

/// Pseudo-division of f by g in x: lc(g,x)^exponent * f = quotient * g + remainder,
/// with deg(remainder, x) < deg(g, x). Throws NotUnivariateLeader if x is absent from g.
template <CoefficientScalar C>
PremResult<C> algebraic_prem(const Polynomial<C>& f, const DiffPoly& g, Var x);

/// One multiplier factor of a reduction: the initial or separant of a
/// reducing element, raised to a power.
struct Multiplier {
  std::size_t element = 0;
  bool separant = false;
  unsigned exponent = 0;
};

/// A quotient paired with the reducing element delta^derivative(element).
struct QuotientEntry {
  std::size_t element = 0;
  int derivative = 0;
  DiffPoly quotient;
};

/// prod(multipliers) * f = sum(quotient * delta^k element) + remainder.
struct ReductionCertificate {
  DiffPoly remainder;
  std::vector<Multiplier> multipliers;
  std::vector<QuotientEntry> quotients;
};

/// Successive pseudo-remainders by a triangular chain, highest leader first.
/// Multipliers refer to chain indices and are always initials.
ReductionCertificate prem_chain(const DiffPoly& f, const std::vector<DiffPoly>& chain, const Ranking& r);

/// {delta^k A_i : 0 <= k <= h} in increasing leader order.
std::vector<DiffPoly> prolong(const CharSet& A, int h);
/// As above with one extent per element; negative extents drop the element.
std::vector<DiffPoly> prolong(const CharSet& A, const std::vector<int>& extents);

/// Differential remainder of f with respect to A, without a certificate.
/// Repeatedly eliminates the highest-ranked offending symbol: a proper
/// derivative of a leader (by the matching derivative of its element, whose
/// leading coefficient is the separant) or a leader of excess degree (by the
/// element itself, leading coefficient the initial).
template <CoefficientScalar C>
Polynomial<C> diff_rem(const Polynomial<C>& f, const CharSet& A);

/// Same reduction, recording multipliers and quotients.
ReductionCertificate diff_rem_certified(const DiffPoly& f, const CharSet& A);

/// Re-expands a certificate produced against `elements` (whose initials and
/// separants are taken under r) and tests the identity exactly.
bool check_certificate(const DiffPoly& f, const ReductionCertificate& cert, const std::vector<DiffPoly>& elements,
                       const Ranking& r);

/// True when f is reduced with respect to every element of A.
bool is_reduced(const DiffPoly& f, const CharSet& A);

}  // namespace dchow
