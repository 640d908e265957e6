#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace dchow {

#define DCHOW_ERROR(Name)                                \
  class Name : public std::runtime_error {              \
   public:                                              \
    using std::runtime_error::runtime_error;            \
  }

/// A polynomial has no ranked derivative to serve as leader.
DCHOW_ERROR(NoLeader);
/// Pseudo-division by a polynomial of degree zero in the main variable.
DCHOW_ERROR(NotUnivariateLeader);
/// Every injective row assignment uses an absent entry.
DCHOW_ERROR(NoFeasibleAssignment);
DCHOW_ERROR(NotLinearInCoefficients);
DCHOW_ERROR(EmptyNullspace);
DCHOW_ERROR(NotOrderlyRanking);
/// A search exhausted a bound that theory says is sufficient.
DCHOW_ERROR(BoundExceeded);
DCHOW_ERROR(DegenerateSeparant);
/// A caller-imposed resource budget was exhausted.
DCHOW_ERROR(BudgetExceeded);
/// More than one independent solution at an acceptance cell.
DCHOW_ERROR(NonUniqueSolution);
DCHOW_ERROR(InvalidCharSet);
DCHOW_ERROR(UnknownVariable);
DCHOW_ERROR(NegativeExponent);

#undef DCHOW_ERROR

class SyntaxError : public std::runtime_error {
 public:
  SyntaxError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

}  // namespace dchow
