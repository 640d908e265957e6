#pragma once

#include <cstdint>
#include <functional>
#include <limits>
#include <string>

namespace dchow {

/// Sentinel for the order (or degree) of something that does not occur.
inline constexpr int kMinusInfinity = std::numeric_limits<int>::min();

enum class VarKind : std::uint8_t {
  Coeff = 0,  // ansatz coefficient c_k; a constant, its derivative is zero
  Aux = 1,    // auxiliary differential indeterminate (lambda, x0, ...)
  U = 2,      // hyperplane coefficient u_ij
  Y = 3,      // unknown y_i
};

/// One derivative symbol: a variable identity plus a derivation order.
///
/// The whole symbol is packed into a 64-bit key whose integer order is the
/// canonical variable order: Coeff < Aux < U < Y; U symbols by (order, i, j);
/// Y symbols by index and then by decreasing order. Monomial order, term
/// rendering and ansatz coefficient numbering all derive from this key.
class Var {
 public:
  static constexpr unsigned kFieldBits = 20;
  static constexpr std::uint64_t kFieldMask = (std::uint64_t{1} << kFieldBits) - 1;
  static constexpr int kMaxOrder = static_cast<int>(kFieldMask);

  constexpr Var() = default;

  static Var y(int i, int order = 0);
  static Var u(int block, int coord, int order = 0);
  static Var coeff(int index);
  static Var aux(int index, int order = 0);

  static constexpr Var from_key(std::uint64_t key) {
    Var v;
    v.key_ = key;
    return v;
  }

  constexpr std::uint64_t key() const { return key_; }
  constexpr VarKind kind() const { return static_cast<VarKind>(key_ >> 62); }

  int order() const;
  /// Index of y_i, block i of u_ij, or the index of a Coeff/Aux symbol.
  int index() const;
  /// Coordinate j of u_ij; zero for every other kind.
  int coord() const;

  bool is_y() const { return kind() == VarKind::Y; }
  bool is_u() const { return kind() == VarKind::U; }
  bool is_constant() const { return kind() == VarKind::Coeff; }

  /// The same variable at derivation order zero.
  Var base() const;
  /// delta^k applied to this symbol. Not meaningful for Coeff symbols.
  Var derivative(int k = 1) const;
  /// True when *this == base.derivative(k) for some k >= 0.
  bool same_variable(Var other) const { return base() == other.base(); }

  friend constexpr bool operator==(Var a, Var b) { return a.key_ == b.key_; }
  friend constexpr auto operator<=>(Var a, Var b) { return a.key_ <=> b.key_; }

 private:
  static constexpr std::uint64_t pack(VarKind kind, std::uint64_t f1, std::uint64_t f2,
                                      std::uint64_t f3) {
    return (static_cast<std::uint64_t>(kind) << 62) | ((f1 & kFieldMask) << 40) |
           ((f2 & kFieldMask) << 20) | (f3 & kFieldMask);
  }
  std::uint64_t field(int n) const { return (key_ >> (40 - 20 * n)) & kFieldMask; }

  std::uint64_t key_ = 0;
};

/// Plain rendering: y1', u0_1'', c12, y2^(5).
std::string to_string(Var v);

}  // namespace dchow

template <>
struct std::hash<dchow::Var> {
  std::size_t operator()(dchow::Var v) const noexcept { return std::hash<std::uint64_t>{}(v.key()); }
};
