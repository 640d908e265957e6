#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dchow/polynomial.hpp"
#include "dchow/variable.hpp"

namespace dchow {

/// A block ranking on derivative symbols.
///
/// Blocks are listed in increasing rank. Between blocks the ranking is an
/// elimination ranking; inside a block it is orderly (order first, then the
/// position inside the block). One block holding every variable is an orderly
/// ranking, singleton blocks give a pure elimination ranking.
///
/// Symbols whose variable is not listed rank below every listed one and are
/// never chosen as leaders; among themselves they are ranked by elimination
/// on the canonical variable key.
class Ranking {
 public:
  enum class Kind { Orderly, Elimination, Block };

  Ranking() = default;
  /// Variables in increasing rank.
  static Ranking orderly(std::vector<Var> vars);
  static Ranking elimination(std::vector<Var> vars);
  static Ranking block(std::vector<std::vector<Var>> blocks);
  /// orderly(y1 < ... < yn)
  static Ranking default_orderly(int n);

  Kind kind() const { return kind_; }
  bool is_orderly() const { return blocks_.size() == 1; }
  const std::vector<std::vector<Var>>& blocks() const { return blocks_; }
  bool is_listed(Var v) const { return position(v).has_value(); }

  /// Negative, zero or positive as a ranks below, equal to or above b.
  int compare(Var a, Var b) const;
  bool less(Var a, Var b) const { return compare(a, b) < 0; }

  friend bool operator==(const Ranking& a, const Ranking& b) { return a.blocks_ == b.blocks_ && a.kind_ == b.kind_; }

 private:
  struct Position {
    int block;
    int slot;
  };
  std::optional<Position> position(Var v) const;

  Kind kind_ = Kind::Orderly;
  std::vector<std::vector<Var>> blocks_;
};

struct PolyAnatomy {
  Var leader;
  DiffPoly initial;
  DiffPoly separant;
  int leader_degree = 0;
};

/// Leader, initial, separant and leader degree. Throws NoLeader when no
/// ranked symbol occurs.
PolyAnatomy anatomy(const DiffPoly& f, const Ranking& r);

/// The highest-ranked listed symbol of f, if any.
std::optional<Var> leader_of(const DiffPoly& f, const Ranking& r);

/// Rank comparison of polynomials: by leader, then leader degree.
/// Polynomials without a leader rank lowest.
int compare_rank(const DiffPoly& f, const DiffPoly& g, const Ranking& r);

/// f contains no proper derivative of ld(g) and has lower degree in ld(g).
bool is_reduced(const DiffPoly& f, const DiffPoly& g, const Ranking& r);

struct AutoreducedReport {
  bool ok = true;
  /// Pairs (i, j) such that element i is not reduced with respect to element j.
  std::vector<std::pair<std::size_t, std::size_t>> unreduced;
  /// Pairs of elements whose leaders are derivatives of one variable.
  std::vector<std::pair<std::size_t, std::size_t>> shared_leaders;
  /// Elements without a leader.
  std::vector<std::size_t> no_leader;
  /// Set when the input was not listed in increasing rank.
  bool resorted = false;
};

/// Checks an auto-reduced set. Sorts `set` into increasing rank in place.
AutoreducedReport validate_autoreduced(std::vector<DiffPoly>& set, const Ranking& r);

/// An ordered auto-reduced set with cached anatomy.
class CharSet {
 public:
  /// Validates and sorts into increasing rank. Throws InvalidCharSet.
  CharSet(std::vector<DiffPoly> elements, Ranking ranking, int n);

  const std::vector<DiffPoly>& elements() const { return elements_; }
  const DiffPoly& operator[](std::size_t i) const { return elements_[i]; }
  std::size_t size() const { return elements_.size(); }
  const PolyAnatomy& anatomy(std::size_t i) const { return anatomies_[i]; }
  const Ranking& ranking() const { return ranking_; }
  int n() const { return n_; }
  int dimension() const { return n_ - static_cast<int>(elements_.size()); }
  /// Non-fatal diagnostics raised while validating (for example a re-sort).
  const std::vector<std::string>& warnings() const { return warnings_; }

 private:
  std::vector<DiffPoly> elements_;
  std::vector<PolyAnatomy> anatomies_;
  Ranking ranking_;
  int n_ = 0;
  std::vector<std::string> warnings_;
};

}  // namespace dchow
