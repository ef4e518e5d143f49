#include "doctest.h"
#include "polyface/lp.hpp"
#include "polyface/numbers.hpp"

using namespace polyface;
using namespace polyface::lp;

TEST_CASE("simplex: small exact problems") {
  // max x subject to x <= 3
  Dense<Rat> p1;
  p1.nvars = 1;
  p1.objective = {Rat(1)};
  p1.add_row({Rat(1)}, LE, Rat(3));
  auto s1 = maximize(p1, Rat(0));
  CHECK(s1.status == Status::Optimal);
  CHECK(s1.value == Rat(3));

  // max x + y subject to x + 2y <= 4, 3x + y <= 6
  Dense<Rat> p2;
  p2.nvars = 2;
  p2.objective = {Rat(1), Rat(1)};
  p2.add_row({Rat(1), Rat(2)}, LE, Rat(4));
  p2.add_row({Rat(3), Rat(1)}, LE, Rat(6));
  auto s2 = maximize(p2, Rat(0));
  CHECK(s2.value == Rat(14, 5));
  CHECK(s2.x[0] == Rat(8, 5));
  CHECK(s2.x[1] == Rat(6, 5));

  // equality constraint: max y st x == 2, x + y <= 5
  Dense<Rat> p3;
  p3.nvars = 2;
  p3.objective = {Rat(0), Rat(1)};
  p3.add_row({Rat(1), Rat(0)}, EQ, Rat(2));
  p3.add_row({Rat(1), Rat(1)}, LE, Rat(5));
  auto s3 = maximize(p3, Rat(0));
  CHECK(s3.value == Rat(3));

  // GE rows with phase-1: max x st x >= 2, x <= 7
  Dense<Rat> p4;
  p4.nvars = 1;
  p4.objective = {Rat(1)};
  p4.add_row({Rat(1)}, GE, Rat(2));
  p4.add_row({Rat(1)}, LE, Rat(7));
  auto s4 = maximize(p4, Rat(0));
  CHECK(s4.value == Rat(7));

  // infeasible: x >= 5, x <= 2
  Dense<Rat> p5;
  p5.nvars = 1;
  p5.objective = {Rat(1)};
  p5.add_row({Rat(1)}, GE, Rat(5));
  p5.add_row({Rat(1)}, LE, Rat(2));
  CHECK(maximize(p5, Rat(0)).status == Status::Infeasible);

  // unbounded: max x, no constraints binding
  Dense<Rat> p6;
  p6.nvars = 1;
  p6.objective = {Rat(1)};
  p6.add_row({Rat(-1)}, LE, Rat(0));
  CHECK(maximize(p6, Rat(0)).status == Status::Unbounded);
}

TEST_CASE("simplex: degenerate problem terminates (Bland)") {
  // classic degeneracy: multiple constraints through the origin
  Dense<Rat> p;
  p.nvars = 2;
  p.objective = {Rat(1), Rat(1)};
  p.add_row({Rat(1), Rat(-1)}, LE, Rat(0));
  p.add_row({Rat(-1), Rat(1)}, LE, Rat(0));
  p.add_row({Rat(1), Rat(1)}, LE, Rat(2));
  auto s = maximize(p, Rat(0));
  CHECK(s.status == Status::Optimal);
  CHECK(s.value == Rat(2));
}

TEST_CASE("exact and float paths agree on random dense problems") {
  // deterministic pseudo-random instances with small integer data
  uint64_t state = 0x9E3779B97F4A7C15ull;
  auto next = [&]() {
    state ^= state << 13;
    state ^= state >> 7;
    state ^= state << 17;
    return static_cast<long>(state % 11) - 5;
  };
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 2 + static_cast<int>(state % 3);
    const int m = 3 + static_cast<int>(state % 4);
    Dense<Rat> pq;
    Dense<double> pd;
    pq.nvars = pd.nvars = n;
    for (int j = 0; j < n; ++j) {
      const long c = next();
      pq.objective.push_back(Rat(c));
      pd.objective.push_back(static_cast<double>(c));
    }
    for (int i = 0; i < m; ++i) {
      std::vector<Rat> rq;
      std::vector<double> rd;
      for (int j = 0; j < n; ++j) {
        const long a = next();
        rq.push_back(Rat(a));
        rd.push_back(static_cast<double>(a));
      }
      const long b = std::abs(next()) + 1;
      pq.add_row(std::move(rq), LE, Rat(b));
      pd.add_row(std::move(rd), LE, static_cast<double>(b));
    }
    // box rows keep everything bounded
    for (int j = 0; j < n; ++j) {
      std::vector<Rat> rq(n, Rat(0));
      std::vector<double> rd(n, 0.0);
      rq[j] = 1;
      rd[j] = 1.0;
      pq.add_row(std::move(rq), LE, Rat(10));
      pd.add_row(std::move(rd), LE, 10.0);
    }
    auto sq = maximize(pq, Rat(0));
    auto sd = maximize(pd, 1e-11);
    REQUIRE(sq.status == Status::Optimal);
    REQUIRE(sd.status == Status::Optimal);
    CHECK(static_cast<double>(sq.value) == doctest::Approx(sd.value).epsilon(1e-9));
  }
}

TEST_CASE("survival_margin: polygon shadows on a line") {
  // square, one functional (1,2)/sqrt(5)-ish: exactly two vertices survive
  const std::vector<std::vector<Rat>> ysha = {{Rat(0)}, {Rat(1)}, {Rat(2)}, {Rat(3)}};
  int survivors = 0;
  for (int v = 0; v < 4; ++v)
    survivors += survival_margin(ysha, {v}, Rat(0)) > 0;
  CHECK(survivors == 2);  // the two extremes of the projected order

  // ties kill: two vertices at the same projected height
  const std::vector<std::vector<Rat>> tied = {{Rat(0)}, {Rat(3)}, {Rat(3)}};
  CHECK(survival_margin(tied, {1}, Rat(0)) == 0);
  CHECK(survival_margin(tied, {2}, Rat(0)) == 0);
  // ... but the tied pair survives as an edge
  CHECK(survival_margin(tied, {1, 2}, Rat(0)) > 0);

  // the full vertex set never survives as a proper face
  CHECK(survival_margin(tied, {0, 1, 2}, Rat(0)) == 0);
}

TEST_CASE("survival_margin: functional space spanning everything keeps facets") {
  // 2-dim functionals on a square: every vertex and every edge survives in
  // some direction; a vertex with the full space available survives
  const std::vector<std::vector<Rat>> ys = {
      {Rat(0), Rat(0)}, {Rat(1), Rat(0)}, {Rat(0), Rat(1)}, {Rat(1), Rat(1)}};
  for (int v = 0; v < 4; ++v) CHECK(survival_margin(ys, {v}, Rat(0)) > 0);
  CHECK(survival_margin(ys, {0, 1}, Rat(0)) > 0);
  // a diagonal is not a face: cannot separate {0,3} from {1,2}
  CHECK(survival_margin(ys, {0, 3}, Rat(0)) == 0);
}

TEST_CASE("cone_box_reach: trivial vs nontrivial sections") {
  // {c : c1 <= 0, c2 <= 0} with box: reach 1 (nontrivial)
  std::vector<std::vector<double>> B1 = {{1.0, 0.0}, {0.0, 1.0}};
  CHECK(cone_box_reach(B1, 2, 1e-11) == doctest::Approx(1.0));

  // opposing halfplanes pin c to a line, still nontrivial
  std::vector<std::vector<double>> B2 = {{1.0, 1.0}, {-1.0, -1.0}};
  CHECK(cone_box_reach(B2, 2, 1e-11) == doctest::Approx(1.0));

  // three halfplanes with only the origin in common
  std::vector<std::vector<double>> B3 = {{1.0, 0.0}, {-1.0, 1.0}, {-1.0, -1.0}};
  // feasible c: c1 >= ... work it out: c1 <= 0, c2 <= c1, c2 >= -c1 -> c=0
  std::vector<std::vector<double>> B3neg;
  for (auto& r : B3) B3neg.push_back({-r[0], -r[1]});
  CHECK(cone_box_reach(B3neg, 2, 1e-11) == doctest::Approx(0.0));

  // exact rational instantiation
  std::vector<std::vector<Rat>> B4 = {{Rat(1), Rat(0)}, {Rat(0), Rat(1)}};
  CHECK(cone_box_reach(B4, 2, Rat(0)) == Rat(1));
}
