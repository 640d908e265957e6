#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "dchow/bounds.hpp"
#include "dchow/chow.hpp"
#include "dchow/errors.hpp"
#include "dchow/frontend.hpp"
#include "dchow/reduction.hpp"

using json = nlohmann::ordered_json;
using namespace dchow;

namespace {

enum Exit { kOk = 0, kInputError = 1, kBoundViolation = 2 };

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string slurp(const std::string& path) {
  if (path == "-") {
    std::ostringstream out;
    out << std::cin.rdbuf();
    return out.str();
  }
  std::ifstream in(path);
  if (!in) throw InputError("cannot read " + path);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

struct Source {
  std::string input = "-";
  std::string ranking;
  int n = 0;
};

// A JSON problem file, or one polynomial per line when --ranking is given.
ProblemSpec load_problem(const Source& src) {
  const std::string text = slurp(src.input);
  if (src.ranking.empty()) {
    ProblemSpec spec = parse_problem(text);
    if (src.n > 0) spec.n = src.n;
    return spec;
  }
  ProblemSpec spec;
  spec.ranking = parse_ranking(src.ranking);
  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    spec.char_set.push_back(parse_diffpoly(line, {src.n, false}));
  }
  int top = src.n;
  for (const DiffPoly& a : spec.char_set) {
    for (Var v : variables(a)) top = std::max(top, v.index());
  }
  for (const auto& block : spec.ranking.blocks()) {
    for (Var v : block) top = std::max(top, v.index());
  }
  spec.n = top;
  return spec;
}

json cell_json(const CellRecord& c, bool timings) {
  json j{{"h", c.h},
         {"t", c.t},
         {"rows", c.rows},
         {"distinct_rows", c.distinct_rows},
         {"cols", c.cols},
         {"nullity", c.nullity},
         {"verdict", c.verdict}};
  if (timings) j["seconds"] = c.seconds;
  return j;
}

int run_chow(const Source& src, std::string algorithm, const std::string& trace_path, std::size_t max_columns,
             double max_seconds, bool timings) {
  const ProblemSpec spec = load_problem(src);
  const CharSet A = spec.to_char_set();
  if (algorithm.empty()) algorithm = spec.algorithm;
  if (algorithm == "auto") algorithm = A.ranking().is_orderly() ? "1" : "3";

  std::ofstream trace;
  if (!trace_path.empty()) {
    trace.open(trace_path);
    if (!trace) throw InputError("cannot write " + trace_path);
  }
  SearchOptions options;
  options.max_columns = max_columns;
  options.max_seconds = max_seconds;
  options.on_cell = [&](const CellRecord& c) {
    if (trace.is_open()) trace << cell_json(c, timings).dump() << '\n';
  };

  ChowResult r;
  if (algorithm == "1") {
    r = dchowform1(A, options);
  } else if (algorithm == "2") {
    r = dchowform2(A, options);
  } else if (algorithm == "3") {
    r = dchowform3(A, options);
  } else {
    throw InputError("unknown algorithm '" + algorithm + "'");
  }

  json out{{"chow_form", format_diffpoly(r.chow_form)},
           {"order", r.order},
           {"total_degree", r.total_degree},
           {"block_degree", r.block_degree},
           {"dimension", r.dimension},
           {"ideal_order", r.ideal_order},
           {"jacobi", r.jacobi},
           {"algorithm", r.algorithm},
           {"terms", r.chow_form.size()},
           {"warnings", r.warnings}};
  json cells = json::array();
  for (const CellRecord& c : r.trace) cells.push_back(cell_json(c, timings));
  out["trace"] = cells;
  std::cout << out.dump(2) << '\n';
  return kOk;
}

int run_bounds(const Source& src) {
  const ProblemSpec spec = load_problem(src);
  const CharSet A = spec.to_char_set();
  const OrderMatrix E = OrderMatrix::of(A);
  json matrix = json::array();
  for (int i = 0; i < E.rows(); ++i) {
    json row = json::array();
    for (int j = 0; j < E.cols(); ++j) {
      if (E(i, j) == kMinusInfinity) {
        row.push_back(nullptr);
      } else {
        row.push_back(E(i, j));
      }
    }
    matrix.push_back(row);
  }
  const int ord = order_of(A);
  const int jac = jacobi_number(E);
  json out{{"n", A.n()},
           {"dimension", A.dimension()},
           {"ranking", format_ranking(A.ranking())},
           {"order_matrix", matrix},
           {"order", ord},
           {"jacobi", jac},
           {"conjectured", conjectured_bound(E)},
           {"order_bound", order_bound(A)}};
  if (A.ranking().is_orderly()) out["degree_bound_orderly"] = degree_bound_orderly(A).get_str();
  json at = json::object();
  for (int h = ord; h <= jac; ++h) at[std::to_string(h)] = degree_bound_at(A, h).get_str();
  out["degree_bound_at"] = at;
  std::cout << out.dump(2) << '\n';
  return kOk;
}

int run_reduce(const Source& src, const std::string& poly) {
  const ProblemSpec spec = load_problem(src);
  const CharSet A = spec.to_char_set();
  const DiffPoly f = parse_diffpoly(poly, {A.n(), false});
  const ReductionCertificate cert = diff_rem_certified(f, A);
  json multipliers = json::array();
  for (const Multiplier& m : cert.multipliers) {
    multipliers.push_back(
        {{"element", m.element}, {"kind", m.separant ? "separant" : "initial"}, {"exponent", m.exponent}});
  }
  json quotients = json::array();
  for (const QuotientEntry& q : cert.quotients) {
    quotients.push_back({{"element", q.element}, {"derivative", q.derivative}, {"quotient", format_diffpoly(q.quotient)}});
  }
  json out{{"input", format_diffpoly(f)},
           {"remainder", format_diffpoly(cert.remainder)},
           {"multipliers", multipliers},
           {"quotients", quotients},
           {"certificate_ok", check_certificate(f, cert, A.elements(), A.ranking())},
           {"reduced", is_reduced(cert.remainder, A)}};
  std::cout << out.dump(2) << '\n';
  return kOk;
}

int run_verify(const Source& src, const std::string& chow, bool skip_ladder) {
  const ProblemSpec spec = load_problem(src);
  const CharSet A = spec.to_char_set();
  const DiffPoly F = parse_diffpoly(chow, {A.n(), true});
  for (Var v : variables(F)) {
    if (!v.is_u()) throw InputError("the candidate may only involve u symbols");
  }
  const ChowVerdict v = verify_chow(F, A, {skip_ladder});
  json out{{"ok", v.ok}, {"order", v.order}, {"block_degree", v.block_degree}, {"failures", v.failures}};
  if (skip_ladder) out["ladder"] = "skipped";
  std::cout << out.dump(2) << '\n';
  return kOk;
}

// Rows of integers; "-" or "-inf" marks an absent entry.
int run_jacobi(const std::string& path) {
  std::istringstream lines(slurp(path));
  std::vector<std::vector<int>> rows;
  std::string line;
  while (std::getline(lines, line)) {
    std::istringstream cells(line);
    std::vector<int> row;
    std::string cell;
    while (cells >> cell) {
      if (cell == "-" || cell == "-inf") {
        row.push_back(kMinusInfinity);
        continue;
      }
      std::size_t used = 0;
      int value = 0;
      try {
        value = std::stoi(cell, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != cell.size()) throw InputError("bad matrix entry '" + cell + "'");
      row.push_back(value);
    }
    if (!row.empty()) rows.push_back(row);
  }
  if (rows.empty()) throw InputError("empty matrix");
  for (const auto& row : rows) {
    if (row.size() != rows.front().size()) throw InputError("ragged matrix");
  }
  const OrderMatrix E(rows);
  json out{{"rows", E.rows()}, {"cols", E.cols()}, {"jacobi", jacobi_number(E)}, {"conjectured", conjectured_bound(E)}};
  std::cout << out.dump(2) << '\n';
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Differential Chow forms of prime differential ideals"};
  app.require_subcommand(1);

  Source src;
  auto add_source = [&](CLI::App* sub) {
    sub->add_option("--input,-i", src.input, "problem JSON, or one polynomial per line with --ranking ('-' = stdin)");
    sub->add_option("--ranking,-r", src.ranking, "ranking for the one-polynomial-per-line mode");
    sub->add_option("--n", src.n, "number of differential indeterminates");
  };

  auto* chow = app.add_subcommand("chow", "compute the differential Chow form");
  add_source(chow);
  std::string algorithm;
  std::string trace_path;
  std::size_t max_columns = 0;
  double max_seconds = 0;
  bool timings = false;
  chow->add_option("--algorithm,-a", algorithm, "1, 2, 3 or auto")->check(CLI::IsMember({"1", "2", "3", "auto"}));
  chow->add_option("--trace", trace_path, "write one JSON line per evaluated cell");
  chow->add_option("--max-columns", max_columns, "refuse cells with more ansatz unknowns");
  chow->add_option("--max-seconds", max_seconds, "stop starting new cells after this long");
  chow->add_flag("--timings", timings, "include wall-clock seconds per cell");

  auto* bounds = app.add_subcommand("bounds", "order, Jacobi and degree bounds");
  add_source(bounds);

  auto* reduce = app.add_subcommand("reduce", "differential remainder with certificate");
  add_source(reduce);
  std::string poly;
  reduce->add_option("--poly,-p", poly, "polynomial to reduce")->required();

  auto* verify = app.add_subcommand("verify", "check a candidate Chow form");
  add_source(verify);
  std::string candidate;
  bool skip_ladder = false;
  verify->add_option("--chow,-c", candidate, "candidate in u{i}_{j} symbols")->required();
  verify->add_flag("--skip-ladder", skip_ladder, "omit the checks against C_F");

  auto* jacobi = app.add_subcommand("jacobi", "Jacobi number of a raw order matrix");
  std::string matrix_path;
  jacobi->add_option("--matrix,-m", matrix_path, "whitespace-separated rows, '-' for absent")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (*chow) return run_chow(src, algorithm, trace_path, max_columns, max_seconds, timings);
    if (*bounds) return run_bounds(src);
    if (*reduce) return run_reduce(src, poly);
    if (*verify) return run_verify(src, candidate, skip_ladder);
    if (*jacobi) return run_jacobi(matrix_path);
  } catch (const BoundExceeded& e) {
    std::cerr << "bound exceeded: " << e.what() << '\n';
    return kBoundViolation;
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exhausted: " << e.what() << '\n';
    return kBoundViolation;
  } catch (const NonUniqueSolution& e) {
    std::cerr << "non-unique solution: " << e.what() << '\n';
    return kBoundViolation;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}
