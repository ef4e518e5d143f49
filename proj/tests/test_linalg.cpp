#include <stdexcept>

#include "doctest.h"
#include "polyface/linalg.hpp"

using namespace polyface;
using namespace polyface::linalg;

TEST_CASE("rational parsing and printing") {
  CHECK(parse_rational("3/4") == Rat(3, 4));
  CHECK(parse_rational("-3/4") == Rat(-3, 4));
  CHECK(parse_rational("6/4") == Rat(3, 2));  // canonical form
  CHECK(parse_rational("17") == Rat(17));
  CHECK(to_string(Rat(3, 4)) == "3/4");
  CHECK(to_string(Rat(8, 4)) == "2");
  CHECK(to_string(Rat(-1, 3)) == "-1/3");
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("x"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
}

TEST_CASE("rank") {
  MatQ id3{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
  CHECK(rank(id3) == 3);
  MatQ dep{{1, 2, 3}, {2, 4, 6}, {0, 1, 1}};
  CHECK(rank(dep) == 2);
  MatQ wide{{1, 2, 3, 4}, {0, 0, 1, 1}};
  CHECK(rank(wide) == 2);
  CHECK(rank(MatQ{}) == 0);
}

TEST_CASE("kernel_basis spans the right kernel") {
  MatQ m{{1, 2, 3}, {0, 1, 1}};
  MatQ ker = kernel_basis(m);
  REQUIRE(ker.size() == 1);
  for (const auto& row : m) CHECK(dot(row, ker[0]) == 0);

  MatQ coord{{0, 0, 1, 0}, {0, 0, 0, 1}};
  MatQ ker2 = kernel_basis(coord);
  REQUIRE(ker2.size() == 2);
  for (const auto& k : ker2)
    for (const auto& row : coord) CHECK(dot(row, k) == 0);
  CHECK(rank(ker2) == 2);
}

TEST_CASE("affine_rank") {
  std::vector<VecQ> segment{{0, 0}, {2, 2}};
  CHECK(affine_rank(segment) == 1);
  std::vector<VecQ> triangle{{0, 0}, {1, 0}, {0, 1}};
  CHECK(affine_rank(triangle) == 2);
  std::vector<VecQ> collinear{{0, 0}, {1, 1}, {2, 2}, {3, 3}};
  CHECK(affine_rank(collinear) == 1);
  std::vector<VecQ> point{{5, 7}};
  CHECK(affine_rank(point) == 0);
  CHECK(affine_rank({}) == -1);
}

TEST_CASE("stacked_rank computes intersection dimensions") {
  // dim(S ∩ U) = dim S + dim U - rank([S; U])
  MatQ s{{1, 0, 0}, {0, 1, 0}};
  MatQ u{{1, 0, 0}};  // line inside S
  CHECK(2 + 1 - stacked_rank(s, u) == 1);
  MatQ w{{0, 0, 1}};  // line transverse to S
  CHECK(2 + 1 - stacked_rank(s, w) == 0);
}
