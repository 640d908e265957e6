#include "dchow/ranking.hpp"

#include <algorithm>
#include <numeric>

#include "dchow/errors.hpp"

namespace dchow {

Ranking Ranking::orderly(std::vector<Var> vars) {
  Ranking r;
  r.kind_ = Kind::Orderly;
  for (Var& v : vars) v = v.base();
  r.blocks_.push_back(std::move(vars));
  return r;
}

Ranking Ranking::elimination(std::vector<Var> vars) {
  Ranking r;
  r.kind_ = Kind::Elimination;
  for (Var v : vars) r.blocks_.push_back({v.base()});
  return r;
}

Ranking Ranking::block(std::vector<std::vector<Var>> blocks) {
  Ranking r;
  r.kind_ = Kind::Block;
  for (auto& b : blocks) {
    for (Var& v : b) v = v.base();
  }
  r.blocks_ = std::move(blocks);
  return r;
}

Ranking Ranking::default_orderly(int n) {
  std::vector<Var> vars;
  for (int i = 1; i <= n; ++i) vars.push_back(Var::y(i));
  return orderly(std::move(vars));
}

std::optional<Ranking::Position> Ranking::position(Var v) const {
  const Var b = v.base();
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    const auto& blk = blocks_[i];
    auto it = std::find(blk.begin(), blk.end(), b);
    if (it != blk.end()) return Position{static_cast<int>(i), static_cast<int>(it - blk.begin())};
  }
  return std::nullopt;
}

int Ranking::compare(Var a, Var b) const {
  if (a == b) return 0;
  const auto pa = position(a);
  const auto pb = position(b);
  if (pa.has_value() != pb.has_value()) return pa.has_value() ? 1 : -1;
  if (!pa) {
    const Var ba = a.base();
    const Var bb = b.base();
    if (ba != bb) return ba < bb ? -1 : 1;
    return a.order() < b.order() ? -1 : 1;
  }
  if (pa->block != pb->block) return pa->block < pb->block ? -1 : 1;
  if (a.order() != b.order()) return a.order() < b.order() ? -1 : 1;
  return pa->slot < pb->slot ? -1 : 1;
}

std::optional<Var> leader_of(const DiffPoly& f, const Ranking& r) {
  std::optional<Var> best;
  for (Var v : variables(f)) {
    if (!r.is_listed(v)) continue;
    if (!best || r.compare(v, *best) > 0) best = v;
  }
  return best;
}

PolyAnatomy anatomy(const DiffPoly& f, const Ranking& r) {
  const auto ld = leader_of(f, r);
  if (!ld) throw NoLeader("polynomial has no ranked derivative");
  PolyAnatomy a;
  a.leader = *ld;
  a.leader_degree = degree_in(f, *ld);
  a.initial = coefficient(f, *ld, static_cast<std::uint32_t>(a.leader_degree));
  a.separant = partial_derivative(f, *ld);
  return a;
}

int compare_rank(const DiffPoly& f, const DiffPoly& g, const Ranking& r) {
  const auto lf = leader_of(f, r);
  const auto lg = leader_of(g, r);
  if (!lf || !lg) return static_cast<int>(lf.has_value()) - static_cast<int>(lg.has_value());
  if (const int c = r.compare(*lf, *lg); c != 0) return c;
  const int df = degree_in(f, *lf);
  const int dg = degree_in(g, *lg);
  return (df > dg) - (df < dg);
}

bool is_reduced(const DiffPoly& f, const DiffPoly& g, const Ranking& r) {
  const auto ld = leader_of(g, r);
  if (!ld) throw NoLeader("reducer has no ranked derivative");
  for (Var v : variables(f)) {
    if (v.same_variable(*ld) && v.order() > ld->order()) return false;
  }
  return f.is_zero() || degree_in(f, *ld) < degree_in(g, *ld);
}

AutoreducedReport validate_autoreduced(std::vector<DiffPoly>& set, const Ranking& r) {
  AutoreducedReport report;
  for (std::size_t i = 0; i < set.size(); ++i) {
    if (!leader_of(set[i], r)) report.no_leader.push_back(i);
  }
  if (!report.no_leader.empty()) {
    report.ok = false;
    return report;
  }
  auto by_rank = [&](const DiffPoly& a, const DiffPoly& b) { return compare_rank(a, b, r) < 0; };
  if (!std::is_sorted(set.begin(), set.end(), by_rank)) {
    std::stable_sort(set.begin(), set.end(), by_rank);
    report.resorted = true;
  }
  for (std::size_t i = 0; i < set.size(); ++i) {
    const Var li = *leader_of(set[i], r);
    for (std::size_t j = 0; j < set.size(); ++j) {
      if (i == j) continue;
      if (!is_reduced(set[i], set[j], r)) report.unreduced.emplace_back(i, j);
      if (j > i && li.same_variable(*leader_of(set[j], r))) report.shared_leaders.emplace_back(i, j);
    }
  }
  report.ok = report.unreduced.empty() && report.shared_leaders.empty();
  return report;
}

CharSet::CharSet(std::vector<DiffPoly> elements, Ranking ranking, int n)
    : elements_(std::move(elements)), ranking_(std::move(ranking)), n_(n) {
  if (elements_.empty()) throw InvalidCharSet("characteristic set is empty");
  const AutoreducedReport report = validate_autoreduced(elements_, ranking_);
  if (!report.no_leader.empty()) throw InvalidCharSet("element without a leader");
  if (!report.unreduced.empty()) {
    const auto [i, j] = report.unreduced.front();
    throw InvalidCharSet("element " + std::to_string(i + 1) + " is not reduced with respect to element " +
                         std::to_string(j + 1));
  }
  if (!report.shared_leaders.empty()) throw InvalidCharSet("two leaders are derivatives of one variable");
  if (n_ < static_cast<int>(elements_.size())) throw InvalidCharSet("more elements than variables");
  if (report.resorted) warnings_.push_back("characteristic set re-sorted into increasing rank");
  for (const DiffPoly& e : elements_) anatomies_.push_back(dchow::anatomy(e, ranking_));
}

}  // namespace dchow
