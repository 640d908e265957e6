#include "dchow/frontend.hpp"

#include <cctype>
#include <json.hpp>
#include <sstream>

#include "dchow/errors.hpp"

namespace dchow {

namespace {

using nlohmann::json;

class Parser {
 public:
  Parser(std::string_view text, const ParseOptions& options) : s_(text), opt_(options) {}

  DiffPoly parse() {
    skip();
    if (pos_ == s_.size()) throw SyntaxError("empty expression", pos_);
    DiffPoly out = sum();
    skip();
    if (pos_ != s_.size()) throw SyntaxError(std::string("unexpected '") + s_[pos_] + "'", pos_);
    return out;
  }

 private:
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool accept(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  char peek() {
    skip();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }

  DiffPoly sum() {
    DiffPoly acc = product();
    for (;;) {
      if (accept('+')) {
        acc += product();
      } else if (accept('-')) {
        acc -= product();
      } else {
        return acc;
      }
    }
  }

  DiffPoly product() {
    DiffPoly acc = unary();
    for (;;) {
      if (accept('*')) {
        acc = acc * unary();
      } else if (peek() == '/') {
        const std::size_t at = pos_++;
        const DiffPoly d = unary();
        if (!d.is_constant() || d.is_zero()) throw SyntaxError("division by a non-constant or zero", at);
        acc *= Rational(1) / d.terms()[0].coeff;
      } else {
        return acc;
      }
    }
  }

  DiffPoly unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  DiffPoly power() {
    DiffPoly base = primary();
    while (peek() == '^') {
      ++pos_;
      const unsigned e = exponent();
      base = pow(base, e);
    }
    return base;
  }

  /// Integer after '^', optionally parenthesized.
  unsigned exponent() {
    const bool paren = accept('(');
    skip();
    const std::size_t at = pos_;
    if (accept('-')) throw NegativeExponent("negative exponent at position " + std::to_string(at));
    const unsigned long v = integer();
    if (paren && !accept(')')) throw SyntaxError("expected ')'", pos_);
    return static_cast<unsigned>(v);
  }

  unsigned long integer() {
    skip();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) throw SyntaxError("expected an integer", start);
    if (pos_ - start > 6) throw SyntaxError("integer too large", start);
    return std::stoul(std::string(s_.substr(start, pos_ - start)));
  }

  DiffPoly primary() {
    skip();
    if (pos_ == s_.size()) throw SyntaxError("unexpected end of input", pos_);
    const char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      DiffPoly inner = sum();
      if (!accept(')')) throw SyntaxError("expected ')'", pos_);
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return DiffPoly(Rational(Integer(std::string(s_.substr(start, pos_ - start)))));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) return DiffPoly(symbol());
    throw SyntaxError(std::string("unexpected '") + c + "'", pos_);
  }

  Var symbol() {
    const std::size_t start = pos_;
    while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
    const std::string name(s_.substr(start, pos_ - start));
    Var v = base_symbol(name, start);
    // Derivative order: primes, or ^(k) directly after the name.
    int order = 0;
    while (pos_ < s_.size() && s_[pos_] == '\'') {
      ++order;
      ++pos_;
    }
    if (order == 0 && pos_ + 1 < s_.size() && s_[pos_] == '^' && s_[pos_ + 1] == '(') {
      pos_ += 2;
      skip();
      if (pos_ < s_.size() && s_[pos_] == '-') {
        throw NegativeExponent("negative derivative order at position " + std::to_string(pos_));
      }
      order = static_cast<int>(integer());
      if (!accept(')')) throw SyntaxError("expected ')'", pos_);
    }
    return v.derivative(order);
  }

  static bool all_digits(std::string_view s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); });
  }

  Var base_symbol(const std::string& name, std::size_t at) {
    if (name.size() > 1 && name[0] == 'y' && all_digits(std::string_view(name).substr(1)) && name.size() <= 7) {
      const int i = std::stoi(name.substr(1));
      if (i < 1 || (opt_.n > 0 && i > opt_.n)) throw UnknownVariable("variable " + name + " out of range at position " + std::to_string(at));
      return Var::y(i);
    }
    if (opt_.allow_u && name.size() > 3 && name[0] == 'u') {
      const auto us = name.find('_');
      if (us != std::string::npos && all_digits(std::string_view(name).substr(1, us - 1)) &&
          all_digits(std::string_view(name).substr(us + 1)) && name.size() <= 12) {
        const int i = std::stoi(name.substr(1, us - 1));
        const int j = std::stoi(name.substr(us + 1));
        if (opt_.n > 0 && j > opt_.n) throw UnknownVariable("variable " + name + " out of range at position " + std::to_string(at));
        return Var::u(i, j);
      }
    }
    throw UnknownVariable("unknown variable '" + name + "' at position " + std::to_string(at));
  }

  std::string_view s_;
  ParseOptions opt_;
  std::size_t pos_ = 0;
};

json factor_json(const Factor& f) {
  json j;
  const Var v = f.var;
  switch (v.kind()) {
    case VarKind::Y:
      j["block"] = "y";
      j["index"] = v.index();
      break;
    case VarKind::U:
      j["block"] = "u";
      j["index"] = {v.index(), v.coord()};
      break;
    case VarKind::Coeff:
      j["block"] = "c";
      j["index"] = v.index() + 1;
      break;
    case VarKind::Aux:
      j["block"] = "aux";
      j["index"] = v.index();
      break;
  }
  j["order"] = v.order();
  j["exponent"] = f.exp;
  return j;
}

std::vector<Var> parse_var_list(std::string_view text, std::size_t offset) {
  std::vector<Var> out;
  std::size_t i = 0;
  while (i <= text.size()) {
    std::size_t j = i;
    while (j < text.size() && text[j] != '<' && text[j] != ',') ++j;
    std::string_view item = text.substr(i, j - i);
    while (!item.empty() && std::isspace(static_cast<unsigned char>(item.front()))) item.remove_prefix(1);
    while (!item.empty() && std::isspace(static_cast<unsigned char>(item.back()))) item.remove_suffix(1);
    const DiffPoly p = parse_diffpoly(item);
    if (p.size() != 1 || p.terms()[0].mono.size() != 1 || p.terms()[0].mono.degree() != 1 || p.terms()[0].coeff != 1) {
      throw SyntaxError("expected a variable name", offset + i);
    }
    const Var v = p.terms()[0].mono.factors()[0].var;
    if (v.order() != 0) throw SyntaxError("ranking lists variables, not derivatives", offset + i);
    out.push_back(v);
    i = j + 1;
  }
  return out;
}

}  // namespace

DiffPoly parse_diffpoly(std::string_view text, const ParseOptions& options) { return Parser(text, options).parse(); }

std::string format_monomial(const Monomial& m) {
  std::string out;
  for (const Factor& f : m.factors()) {
    if (!out.empty()) out += '*';
    out += to_string(f.var);
    if (f.exp != 1) out += "^" + std::to_string(f.exp);
  }
  return out;
}

std::string format_diffpoly(const DiffPoly& f, FormatStyle style) {
  if (style == FormatStyle::Json) {
    json terms = json::array();
    for (const auto& t : f.terms()) {
      json factors = json::array();
      for (const Factor& fa : t.mono.factors()) factors.push_back(factor_json(fa));
      terms.push_back({{"coefficient", to_string(t.coeff)}, {"factors", factors}});
    }
    return json{{"terms", terms}}.dump();
  }
  if (f.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : f.terms()) {
    const bool negative = sgn(t.coeff) < 0;
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    const Rational mag = abs(t.coeff);
    if (t.mono.is_one()) {
      out += to_string(mag);
    } else {
      if (mag != 1) out += to_string(mag) + "*";
      out += format_monomial(t.mono);
    }
  }
  return out;
}

Ranking parse_ranking(std::string_view text) {
  auto trimmed = text;
  while (!trimmed.empty() && std::isspace(static_cast<unsigned char>(trimmed.front()))) trimmed.remove_prefix(1);
  while (!trimmed.empty() && std::isspace(static_cast<unsigned char>(trimmed.back()))) trimmed.remove_suffix(1);
  const auto open = trimmed.find('(');
  if (open == std::string_view::npos || trimmed.back() != ')') throw SyntaxError("expected kind(...)", 0);
  const std::string_view kind = trimmed.substr(0, open);
  const std::string_view inner = trimmed.substr(open + 1, trimmed.size() - open - 2);
  if (kind == "orderly") return Ranking::orderly(parse_var_list(inner, open + 1));
  if (kind == "elim") return Ranking::elimination(parse_var_list(inner, open + 1));
  if (kind == "block") {
    std::vector<std::vector<Var>> blocks;
    std::size_t i = 0;
    while (i < inner.size()) {
      const auto lb = inner.find('[', i);
      if (lb == std::string_view::npos) break;
      const auto rb = inner.find(']', lb);
      if (rb == std::string_view::npos) throw SyntaxError("expected ']'", open + 1 + lb);
      blocks.push_back(parse_var_list(inner.substr(lb + 1, rb - lb - 1), open + 2 + lb));
      i = rb + 1;
    }
    if (blocks.empty()) throw SyntaxError("expected at least one block", open + 1);
    return Ranking::block(std::move(blocks));
  }
  throw SyntaxError("unknown ranking kind '" + std::string(kind) + "'", 0);
}

std::string format_ranking(const Ranking& r) {
  auto join = [](const std::vector<Var>& vs, const char* sep) {
    std::string out;
    for (std::size_t i = 0; i < vs.size(); ++i) {
      if (i) out += sep;
      out += to_string(vs[i]);
    }
    return out;
  };
  switch (r.kind()) {
    case Ranking::Kind::Orderly: return "orderly(" + join(r.blocks().front(), "<") + ")";
    case Ranking::Kind::Elimination: {
      std::vector<Var> vs;
      for (const auto& b : r.blocks()) vs.push_back(b.front());
      return "elim(" + join(vs, "<") + ")";
    }
    case Ranking::Kind::Block: {
      std::string out = "block(";
      for (std::size_t i = 0; i < r.blocks().size(); ++i) {
        if (i) out += "<";
        out += "[" + join(r.blocks()[i], ",") + "]";
      }
      return out + ")";
    }
  }
  return {};
}

ProblemSpec parse_problem(std::string_view json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw SyntaxError(std::string("invalid JSON: ") + e.what(), e.byte);
  }
  if (!j.is_object() || !j.contains("char_set") || !j["char_set"].is_array()) {
    throw SyntaxError("problem needs a \"char_set\" array", 0);
  }
  ProblemSpec spec;
  std::vector<std::string> texts = j["char_set"].get<std::vector<std::string>>();
  spec.n = j.value("n", 0);
  if (spec.n <= 0) {
    for (const auto& t : texts) {
      for (Var v : variables(parse_diffpoly(t))) spec.n = std::max(spec.n, v.index());
    }
  }
  for (const auto& t : texts) spec.char_set.push_back(parse_diffpoly(t, {spec.n, false}));
  spec.ranking = j.contains("ranking") ? parse_ranking(j["ranking"].get<std::string>()) : Ranking::default_orderly(spec.n);
  spec.algorithm = j.value("algorithm", std::string("auto"));
  return spec;
}

std::string format_problem(const ProblemSpec& spec) {
  json j;
  j["n"] = spec.n;
  j["ranking"] = format_ranking(spec.ranking);
  j["char_set"] = json::array();
  for (const auto& p : spec.char_set) j["char_set"].push_back(format_diffpoly(p));
  j["algorithm"] = spec.algorithm;
  return j.dump(2);
}

}  // namespace dchow
