#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "dchow/rational.hpp"

namespace dchow {

/// A sparse linear combination sum_k a_k * c_k of ansatz coefficients.
///
/// Used as the coefficient scalar of Polynomial while the generic ansatz is
/// pushed through substitution and reduction: the c_k are constants that
/// never become leaders, so every step stays linear in them.
class LinearForm {
 public:
  using Entry = std::pair<std::uint32_t, Rational>;

  LinearForm() = default;
  LinearForm(std::uint32_t index, Rational value) {
    if (!dchow::is_zero(value)) entries_.emplace_back(index, std::move(value));
  }
  /// Entries must be sorted by index and nonzero.
  static LinearForm from_sorted(std::vector<Entry> entries) {
    LinearForm out;
    out.entries_ = std::move(entries);
    return out;
  }

  const std::vector<Entry>& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }

  LinearForm& operator+=(const LinearForm& o) { return axpy(o, 1); }
  LinearForm& operator-=(const LinearForm& o) { return axpy(o, -1); }
  LinearForm& operator*=(const Rational& s) {
    if (dchow::is_zero(s)) {
      entries_.clear();
    } else if (s != 1) {
      for (auto& e : entries_) e.second *= s;
    }
    return *this;
  }
  LinearForm operator-() const {
    LinearForm out = *this;
    for (auto& e : out.entries_) e.second = -e.second;
    return out;
  }
  friend LinearForm operator*(LinearForm a, const Rational& s) { return a *= s; }
  friend bool operator==(const LinearForm&, const LinearForm&) = default;

  /// *this += s * o.
  LinearForm& axpy(const LinearForm& o, const Rational& s) {
    if (o.entries_.empty() || dchow::is_zero(s)) return *this;
    std::vector<Entry> merged;
    merged.reserve(entries_.size() + o.entries_.size());
    auto i = entries_.begin();
    auto j = o.entries_.begin();
    while (i != entries_.end() || j != o.entries_.end()) {
      if (j == o.entries_.end() || (i != entries_.end() && i->first < j->first)) {
        merged.push_back(std::move(*i++));
      } else if (i == entries_.end() || j->first < i->first) {
        merged.emplace_back(j->first, j->second * s);
        ++j;
      } else {
        Rational v = i->second + j->second * s;
        if (!dchow::is_zero(v)) merged.emplace_back(i->first, std::move(v));
        ++i;
        ++j;
      }
    }
    entries_ = std::move(merged);
    return *this;
  }

 private:
  std::vector<Entry> entries_;
};

inline bool is_zero(const LinearForm& f) { return f.empty(); }

}  // namespace dchow
