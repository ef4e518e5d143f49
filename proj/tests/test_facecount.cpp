#include <stdexcept>

#include "doctest.h"
#include "polyface/facecount.hpp"

using namespace polyface;
using namespace polyface::facecount;

namespace {

// Independent oracle: factorial-quotient binomial, no shared code with the
// stepwise-product implementation.
Int binom_oracle(int a, int b) {
  if (b < 0 || b > a) return 0;
  auto fact = [](int x) {
    Int f = 1;
    for (int i = 2; i <= x; ++i) f *= i;
    return f;
  };
  return fact(a) / (fact(b) * fact(a - b));
}

Rat rho_oracle(int d, int k) { return Rat(binom_oracle((d + 1) / 2, k) + binom_oracle(d / 2, k), 2); }

}  // namespace

TEST_CASE("binomial: values, convention, and rejection") {
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(3, -1) == 0);
  CHECK(binomial(2, 4) == 0);
  CHECK(binomial(0, 0) == 1);
  CHECK_THROWS_AS(binomial(-1, 0), std::invalid_argument);
  for (int a = 0; a <= 20; ++a)
    for (int b = -2; b <= a + 2; ++b) CHECK(binomial(a, b) == binom_oracle(a, b));
}

TEST_CASE("rho: hand values and direct-evaluation cross-check") {
  for (int d = 1; d <= 12; ++d) CHECK(rho(d, 0) == 1);
  CHECK(rho(4, 2) == Rat(1));
  CHECK(rho(3, 2) == Rat(1, 2));
  CHECK(rho(3, 1) == Rat(3, 2));
  CHECK(rho(5, 2) == Rat(2));
  for (int d = 1; d <= 12; ++d)
    for (int k = 0; k < d; ++k) CHECK(rho(d, k) == rho_oracle(d, k));
  CHECK_THROWS_AS(rho(4, 4), std::invalid_argument);
  CHECK_THROWS_AS(rho(4, -1), std::invalid_argument);
}

TEST_CASE("rho vanishes exactly above ceil(d/2)") {
  for (int d = 2; d <= 14; ++d)
    for (int k = 0; k < d; ++k) CHECK((rho(d, k) == 0) == (k > (d + 1) / 2));
}

TEST_CASE("cyclic_face_count: pinned values") {
  CHECK(cyclic_face_count(4, 6, 1) == 15);
  CHECK(cyclic_face_count(4, 6, 3) == 9);
  CHECK(cyclic_face_count(2, 6, 3) == 0);  // extended convention
  for (int d = 2; d <= 8; ++d) CHECK(cyclic_face_count(d, d + 1, d - 1) == d + 1);
}

TEST_CASE("cyclic_face_count: neighborliness range equals C(n,k+1)") {
  for (int d = 2; d <= 9; ++d)
    for (int n = d + 1; n <= 14; ++n)
      for (int k = 0; k < d / 2; ++k)
        CHECK(cyclic_face_count(d, n, k) == binomial(n, k + 1));
}

TEST_CASE("cyclic_face_count: division guard at k = n-1") {
  CHECK_THROWS_AS(cyclic_face_count(5, 4, 3), std::domain_error);
  CHECK_THROWS_AS(cyclic_face_count(2, 3, 2), std::domain_error);
  CHECK_THROWS_AS(cyclic_face_count(3, 3, -1), std::invalid_argument);
}

TEST_CASE("cyclic_facet_count: pinned values and consistency") {
  CHECK(cyclic_facet_count(4, 6) == 9);
  CHECK(cyclic_facet_count(3, 5) == 6);
  for (int d = 2; d <= 8; ++d) CHECK(cyclic_facet_count(d, d + 1) == d + 1);
  for (int d = 2; d <= 7; ++d)
    for (int n = d + 1; n <= 12; ++n)
      CHECK(cyclic_facet_count(d, n) == cyclic_face_count(d, n, d - 1));
}

TEST_CASE("cyclic_f_vector: pinned vectors and Euler relation") {
  CHECK(cyclic_f_vector(4, 6).counts == std::vector<Int>{6, 15, 18, 9});
  CHECK(cyclic_f_vector(2, 7).counts == std::vector<Int>{7, 7});
  CHECK(cyclic_f_vector(3, 4).counts == std::vector<Int>{4, 6, 4});
  CHECK(cyclic_f_vector(5, 9).counts == std::vector<Int>{9, 36, 74, 75, 30});
  for (int d = 2; d <= 9; ++d)
    for (int n = d + 1; n <= 14; ++n) CHECK(cyclic_f_vector(d, n).euler_ok());
}

TEST_CASE("reduction identity: worked examples and low-dimension sweep") {
  // 15 - 1*9 - 6 and 9 - 1*9 - 0
  CHECK(reduction_residual(4, 6, 1) == 0);
  CHECK(reduction_residual(4, 6, 3) == 0);
  // the d-2 term carries everything when the ratio coefficient vanishes
  for (int d = 4; d <= 9; ++d)
    for (int k = 0; k < d / 2 - 1; ++k) CHECK(rho(d, d - k - 1) == 0);
  // d = 2 and d = 3 exercise the extended convention at d-2 = 0, 1
  for (int d = 2; d <= 6; ++d)
    for (int n = d + 1; n <= 12; ++n)
      for (int k = 0; k < d; ++k) CHECK(reduction_residual(d, n, k) == 0);
}

TEST_CASE("tightness_table: exact residuals") {
  auto rows = tightness_table(4, 1, {6});
  REQUIRE(rows.size() == 1);
  CHECK(rows[0].residual == Rat(2, 3));  // 15/9 - 1

  // the residual is exactly f_k(C(d-2,n)) / f_{d-1}(C(d,n))
  for (int d = 3; d <= 7; ++d)
    for (int n = d + 1; n <= 12; ++n)
      for (int k = 0; k < d; ++k) {
        const Rat res = tightness_table(d, k, {n})[0].residual;
        CHECK(res == Rat(cyclic_face_count(d - 2, n, k), cyclic_facet_count(d, n)));
        CHECK(res >= 0);
      }

  // k = d-1 collapses to zero for all n
  for (int n : {7, 20, 101}) CHECK(tightness_table(5, 4, {n})[0].residual == 0);

  // large-n decay: residual(10^4) below 10^-3 and below residual(10^3)
  auto decay = tightness_table(4, 1, {1000, 10000});
  CHECK(decay[1].residual < decay[0].residual);
  CHECK(decay[1].residual < Rat(1, 1000));
  CHECK(decay[1].residual == Rat(2, 9997));  // n / f_3(C(4,n)) = 2/(n-3)
}

TEST_CASE("tightness_table: frozen regression bounds on n * residual(n)") {
  // empirically determined once and frozen; exact values at n = 10^4 are
  // 20000/9997, 49990000/24982503, 9997000/1665167
  struct Row {
    int d, k;
    Rat bound;
  };
  for (const Row& row : {Row{4, 1, Rat(2001, 1000)}, Row{5, 2, Rat(2002, 1000)},
                         Row{6, 2, Rat(601, 100)}}) {
    const Rat scaled = tightness_table(row.d, row.k, {10000})[0].residual * 10000;
    CHECK(scaled > 0);
    CHECK(scaled <= row.bound);
  }
}

TEST_CASE("barnette_bound: displays and simplex tightness") {
  for (int m = 4; m <= 12; ++m) CHECK(barnette_bound(3, m, 0) == 2 * m - 4);
  for (int d = 2; d <= 9; ++d) CHECK(barnette_bound(d, d + 1, 0) == d + 1);
  CHECK(barnette_bound(4, 10, 1) == 40);
  CHECK_THROWS_AS(barnette_bound(4, 10, 3), std::invalid_argument);
  CHECK_THROWS_AS(barnette_bound(4, 4, 0), std::invalid_argument);
}

TEST_CASE("barnette_bound: dual-cyclic simple polytopes satisfy it") {
  // a simple 4-polytope with m facets: the dual of C(4,m); its f-vector is
  // the reversal, so f_k(dual) = f_{3-k}(C(4,m))
  for (int m = 5; m <= 12; ++m)
    for (int k = 0; k <= 2; ++k)
      CHECK(cyclic_face_count(4, m, 3 - k) >= barnette_bound(4, m, k));
}

TEST_CASE("hinman_bounds: equality cases and improvement term") {
  // cube: f_1 = rho(3,1) * f_0 exactly (simple, k = 1)
  auto cube_edges = hinman_bounds(3, 1, Int(8), std::nullopt, false, Int(12));
  REQUIRE(cube_edges.size() == 1);
  CHECK(cube_edges[0].value == Rat(12));
  CHECK(cube_edges[0].bound == "hinman-linear");
  CHECK(cube_edges[0].satisfied == true);

  // improved bound from the facet count of the cube
  auto improved = hinman_bounds(3, 0, std::nullopt, Int(6), true, Int(8));
  REQUIRE(improved.size() == 1);
  CHECK(improved[0].value == Rat(5));  // 3 + C(2,1)
  CHECK(improved[0].bound == "hinman-improved");
  CHECK(improved[0].satisfied == true);

  // k = d-1: rho(d,0) * m = m
  auto facets = hinman_bounds(5, 4, std::nullopt, Int(17), false);
  CHECK(facets[0].value == Rat(17));

  // improved = linear + the binomial term, across a sweep
  for (int d = 2; d <= 8; ++d)
    for (int k = 0; k < d; ++k) {
      auto lin = hinman_bounds(d, k, Int(100), Int(50), false);
      auto imp = hinman_bounds(d, k, Int(100), Int(50), true);
      REQUIRE(lin.size() == 2);
      CHECK(imp[0].value == lin[0].value + Rat(binomial(d - 1, k - 1)));
      CHECK(imp[1].value == lin[1].value + Rat(binomial(d - 1, k + 1)));
    }

  CHECK_THROWS_AS(hinman_bounds(3, 1, std::nullopt, std::nullopt, false), std::invalid_argument);
}

TEST_CASE("gubc_values: conjectural targets") {
  auto g = gubc_values(4, Int(9), 1);
  REQUIRE(g.has_value());
  CHECK(g->n == 6);
  CHECK(g->bound == 15);

  auto h = gubc_values(3, Int(7), 1);
  REQUIRE(h.has_value());
  CHECK(h->n == 5);
  CHECK(h->bound == 9);

  for (int d = 2; d <= 7; ++d)
    for (int k = 0; k < d; ++k) {
      auto s = gubc_values(d, Int(d + 1), k);
      REQUIRE(s.has_value());
      CHECK(s->n == d + 1);
      CHECK(s->bound == binomial(d + 1, k + 1));
    }
}

TEST_CASE("FVector: Euler check and positivity") {
  FVector good{3, {8, 12, 6}};
  CHECK(good.euler_ok());
  FVector bad{3, {8, 12, 7}};
  CHECK(!bad.euler_ok());
  FVector even{4, {6, 15, 18, 9}};
  CHECK(even.euler_ok());
}
