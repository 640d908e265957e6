#include <doctest.h>

#include <random>

#include "dchow/errors.hpp"
#include "dchow/frontend.hpp"
#include "dchow/ranking.hpp"

using namespace dchow;

namespace {
DiffPoly P(const char* s) { return parse_diffpoly(s); }
}  // namespace

TEST_CASE("compare under the three families") {
  const Ranking orderly = parse_ranking("orderly(y1<y2)");
  CHECK(orderly.compare(Var::y(1, 2), Var::y(2, 1)) > 0);
  CHECK(orderly.compare(Var::y(1, 1), Var::y(2, 1)) < 0);
  const Ranking elim = parse_ranking("elim(y1<y2)");
  CHECK(elim.compare(Var::y(2), Var::y(1, 5)) > 0);
  const Ranking rev = parse_ranking("elim(y2<y1)");
  CHECK(rev.compare(Var::y(1, 1), Var::y(2, 2)) > 0);
  const Ranking blk = parse_ranking("block([y1,y2]<[y3])");
  CHECK(blk.compare(Var::y(3), Var::y(1, 4)) > 0);
  CHECK(blk.compare(Var::y(2, 1), Var::y(1, 1)) > 0);
  CHECK(blk.compare(Var::y(1, 2), Var::y(2, 1)) > 0);
  CHECK(orderly.is_orderly());
  CHECK_FALSE(elim.is_orderly());
}

TEST_CASE("unlisted symbols rank below listed ones") {
  const Ranking r = Ranking::default_orderly(1);
  CHECK(r.compare(Var::u(0, 0, 7), Var::y(1)) < 0);
  CHECK(r.compare(Var::u(0, 0, 1), Var::u(0, 0)) > 0);
}

TEST_CASE("ranking axioms on random triples") {
  std::mt19937_64 rng(4242);
  std::uniform_int_distribution<int> var(1, 3), ord(0, 4);
  const std::vector<Ranking> rankings = {parse_ranking("orderly(y2<y1<y3)"), parse_ranking("elim(y3<y1<y2)"),
                                         parse_ranking("block([y1,y3]<[y2])")};
  for (const Ranking& r : rankings) {
    for (int i = 0; i < 300; ++i) {
      const Var a = Var::y(var(rng), ord(rng));
      const Var b = Var::y(var(rng), ord(rng));
      CHECK(r.compare(a.derivative(), a) > 0);
      if (r.compare(a, b) > 0) CHECK(r.compare(a.derivative(), b.derivative()) > 0);
      CHECK(r.compare(a, b) == -r.compare(b, a));
    }
  }
}

TEST_CASE("anatomy") {
  const PolyAnatomy a = anatomy(P("y1' - 4*y1"), Ranking::default_orderly(1));
  CHECK(a.leader == Var::y(1, 1));
  CHECK(a.initial == DiffPoly(1));
  CHECK(a.separant == DiffPoly(1));

  const PolyAnatomy b = anatomy(P("y2 - y1'"), parse_ranking("elim(y1<y2)"));
  CHECK(b.leader == Var::y(2));
  CHECK(b.initial == DiffPoly(1));

  const DiffPoly f = P("y1'^2*y2'' - y1");
  const PolyAnatomy c = anatomy(f, parse_ranking("elim(y2<y1)"));
  CHECK(c.leader == Var::y(1, 1));
  CHECK(c.initial == P("y2''"));
  CHECK(c.separant == P("2*y1'*y2''"));
  CHECK(c.leader_degree == 2);
  // f = I * ld^deg + lower part.
  const DiffPoly lower = f - c.initial * pow(DiffPoly(c.leader), 2);
  CHECK(degree_in(lower, c.leader) < 2);

  CHECK_THROWS_AS(anatomy(P("5"), Ranking::default_orderly(1)), NoLeader);
}

TEST_CASE("reducedness and auto-reduced sets") {
  const Ranking r = Ranking::default_orderly(1);
  CHECK(is_reduced(P("y1"), P("y1' - 4*y1"), r));
  CHECK_FALSE(is_reduced(P("y1''"), P("y1' - 4*y1"), r));
  CHECK_FALSE(is_reduced(P("y1'^2"), P("y1' - 4*y1"), r));

  std::vector<DiffPoly> set{P("y2*y3 + 1"), P("y1^(3)*y3 + y3^2")};
  const AutoreducedReport ok = validate_autoreduced(set, parse_ranking("elim(y3<y2<y1)"));
  CHECK(ok.ok);
  CHECK_FALSE(ok.resorted);

  std::vector<DiffPoly> reversed{P("y1^(3)*y3 + y3^2"), P("y2*y3 + 1")};
  const AutoreducedReport warn = validate_autoreduced(reversed, parse_ranking("elim(y3<y2<y1)"));
  CHECK(warn.ok);
  CHECK(warn.resorted);
  CHECK(reversed.front() == P("y2*y3 + 1"));

  // y2^(3) is a proper derivative of the first leader y2.
  std::vector<DiffPoly> proper{P("y2*y3 + 1"), P("y1^(3)*y2^(3) + y3")};
  const AutoreducedReport pr = validate_autoreduced(proper, parse_ranking("elim(y3<y2<y1)"));
  CHECK_FALSE(pr.ok);
  CHECK(pr.unreduced == std::vector<std::pair<std::size_t, std::size_t>>{{1, 0}});

  std::vector<DiffPoly> bad{P("y1' - y1"), P("y1'' + 1")};
  const AutoreducedReport fail = validate_autoreduced(bad, Ranking::default_orderly(1));
  CHECK_FALSE(fail.ok);
  CHECK_FALSE(fail.shared_leaders.empty());
}

TEST_CASE("char set construction") {
  const CharSet A({P("y1^(3)*y3 + y3^2"), P("y2*y3 + 1")}, parse_ranking("elim(y3<y2<y1)"), 3);
  CHECK(A.size() == 2);
  CHECK(A.dimension() == 1);
  CHECK(A.anatomy(0).leader == Var::y(2));
  CHECK(A.warnings().size() == 1);
  CHECK_THROWS_AS(CharSet({}, Ranking::default_orderly(1), 1), InvalidCharSet);
  CHECK_THROWS_AS(CharSet({P("y1' - y1"), P("y1 + 1")}, Ranking::default_orderly(1), 1), InvalidCharSet);
}
