#include "dchow/variable.hpp"

#include <stdexcept>

namespace dchow {

namespace {

void check_field(int value, const char* what) {
  if (value < 0 || value > Var::kMaxOrder) {
    throw std::out_of_range(std::string("variable field out of range: ") + what);
  }
}

std::string order_suffix(int order) {
  if (order <= 2) return std::string(static_cast<std::size_t>(order), '\'');
  return "^(" + std::to_string(order) + ")";
}

}  // namespace

Var Var::y(int i, int order) {
  check_field(i, "y index");
  check_field(order, "order");
  return from_key(pack(VarKind::Y, static_cast<std::uint64_t>(i),
                       static_cast<std::uint64_t>(kMaxOrder - order), 0));
}

Var Var::u(int block, int coord, int order) {
  check_field(block, "u block");
  check_field(coord, "u coordinate");
  check_field(order, "order");
  return from_key(pack(VarKind::U, static_cast<std::uint64_t>(order),
                       static_cast<std::uint64_t>(block), static_cast<std::uint64_t>(coord)));
}

Var Var::coeff(int index) {
  check_field(index, "coefficient index");
  return from_key(pack(VarKind::Coeff, static_cast<std::uint64_t>(index), 0, 0));
}

Var Var::aux(int index, int order) {
  check_field(index, "aux index");
  check_field(order, "order");
  return from_key(pack(VarKind::Aux, static_cast<std::uint64_t>(index),
                       static_cast<std::uint64_t>(order), 0));
}

int Var::order() const {
  switch (kind()) {
    case VarKind::Y: return kMaxOrder - static_cast<int>(field(1));
    case VarKind::U: return static_cast<int>(field(0));
    case VarKind::Aux: return static_cast<int>(field(1));
    case VarKind::Coeff: return 0;
  }
  return 0;
}

int Var::index() const {
  switch (kind()) {
    case VarKind::U: return static_cast<int>(field(1));
    default: return static_cast<int>(field(0));
  }
}

int Var::coord() const { return kind() == VarKind::U ? static_cast<int>(field(2)) : 0; }

Var Var::base() const { return derivative(-order()); }

Var Var::derivative(int k) const {
  const int target = order() + k;
  switch (kind()) {
    case VarKind::Y: return y(index(), target);
    case VarKind::U: return u(index(), coord(), target);
    case VarKind::Aux: return aux(index(), target);
    case VarKind::Coeff: break;
  }
  return *this;
}

std::string to_string(Var v) {
  switch (v.kind()) {
    case VarKind::Y: return "y" + std::to_string(v.index()) + order_suffix(v.order());
    case VarKind::U:
      return "u" + std::to_string(v.index()) + "_" + std::to_string(v.coord()) +
             order_suffix(v.order());
    case VarKind::Coeff: return "c" + std::to_string(v.index());
    case VarKind::Aux: {
      const std::string name = v.index() == 0 ? "lambda" : "a" + std::to_string(v.index());
      return name + order_suffix(v.order());
    }
  }
  return "?";
}

}  // namespace dchow
