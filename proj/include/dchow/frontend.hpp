#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "dchow/polynomial.hpp"
#include "dchow/ranking.hpp"

namespace dchow {

struct ParseOptions {
  /// Largest admissible y index; 0 accepts any index >= 1.
  int n = 0;
  /// Accept hyperplane coefficient symbols u{i}_{j}.
  bool allow_u = false;
};

/// Grammar: sums and products of rationals, y{i} with postfix primes or
/// ^(k) derivative orders, '^' integer powers, parentheses. Division is
/// allowed only by nonzero constants.
DiffPoly parse_diffpoly(std::string_view text, const ParseOptions& options = {});

enum class FormatStyle { Plain, Json };

std::string format_diffpoly(const DiffPoly& f, FormatStyle style = FormatStyle::Plain);
std::string format_monomial(const Monomial& m);

/// orderly(y1<y2), elim(y3<y2<y1), block([y1,y2]<[y3]).
Ranking parse_ranking(std::string_view text);
std::string format_ranking(const Ranking& r);

struct ProblemSpec {
  int n = 0;
  Ranking ranking;
  std::vector<DiffPoly> char_set;
  /// "1", "2", "3" or "auto".
  std::string algorithm = "auto";

  CharSet to_char_set() const { return CharSet(char_set, ranking, n); }
  friend bool operator==(const ProblemSpec&, const ProblemSpec&) = default;
};

/// {"n": 2, "ranking": "elim(y1<y2)", "char_set": ["y2 - y1'"], "algorithm": "auto"}
ProblemSpec parse_problem(std::string_view json_text);
std::string format_problem(const ProblemSpec& spec);

}  // namespace dchow
