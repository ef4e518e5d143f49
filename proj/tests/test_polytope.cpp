#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include "doctest.h"
#include "polyface/facecount.hpp"
#include "polyface/polytope.hpp"
#include "polyface/polytope_io.hpp"

using namespace polyface;
using namespace polyface::polytope;

TEST_CASE("gale_facets: small cases") {
  CHECK(gale_facets(3, 4).size() == 4);  // simplex: every 3-subset

  auto pentagon = gale_facets(2, 5);
  std::set<std::vector<int>> expect{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}};
  CHECK(std::set<std::vector<int>>(pentagon.begin(), pentagon.end()) == expect);

  CHECK(gale_facets(4, 6).size() == 9);
}

TEST_CASE("gale_facets count matches the closed form") {
  for (int d = 2; d <= 6; ++d)
    for (int n = d + 1; n <= 10; ++n)
      CHECK(Int(gale_facets(d, n).size()) == facecount::cyclic_facet_count(d, n));
}

TEST_CASE("build_cyclic: models validate and have the right facets") {
  const PolytopeModel tet = build_cyclic(CyclicSpec::standard(3, 4));
  CHECK(tet.facets.size() == 4);
  CHECK(tet.simplicial);

  const PolytopeModel c46 = build_cyclic(CyclicSpec::standard(4, 6));
  CHECK(c46.facets.size() == 9);
  CHECK(face_lattice(c46).f_vector().counts == std::vector<Int>{6, 15, 18, 9});

  const PolytopeModel pent = build_cyclic(CyclicSpec::standard(2, 5));
  CHECK(pent.facets.size() == 5);

  CyclicSpec bad = CyclicSpec::standard(3, 5);
  bad.params[2] = bad.params[1];
  CHECK_THROWS_AS(build_cyclic(bad), std::invalid_argument);
}

TEST_CASE("fixtures: combinatorics") {
  const PolytopeModel c3 = cube(3);
  CHECK(c3.facets.size() == 6);
  CHECK(face_lattice(c3).f_vector().counts == std::vector<Int>{8, 12, 6});

  CHECK(simplex(4).facets.size() == 5);
  CHECK(face_lattice(simplex(4)).f_vector().counts ==
        std::vector<Int>{5, 10, 10, 5});

  const PolytopeModel oct = crosspolytope(3);
  CHECK(face_lattice(oct).f_vector().counts == std::vector<Int>{6, 12, 8});

  // cube is simple: every vertex on exactly dim facets
  for (int v = 0; v < 8; ++v) {
    int on = 0;
    for (const auto& f : c3.facets) on += std::binary_search(f.begin(), f.end(), v);
    CHECK(on == 3);
  }
}

TEST_CASE("fixtures: closed-form f-vectors up to dimension 6") {
  using facecount::binomial;
  for (int d = 2; d <= 6; ++d) {
    const FVector fc = face_lattice(cube(d)).f_vector();
    const FVector fx = face_lattice(crosspolytope(d)).f_vector();
    for (int k = 0; k < d; ++k) {
      CHECK(fc.counts[k] == (Int(1) << (d - k)) * binomial(d, k));
      CHECK(fx.counts[k] == (Int(1) << (k + 1)) * binomial(d, k + 1));
    }
  }
}

TEST_CASE("simplex(3) is regular with rational coordinates") {
  const PolytopeModel t = simplex(3);
  // all pairwise squared distances equal
  Rat d2;
  bool first = true;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) {
      Rat s = 0;
      for (int c = 0; c < 3; ++c) {
        const Rat dx = t.vertices[i][c] - t.vertices[j][c];
        s += dx * dx;
      }
      if (first) {
        d2 = s;
        first = false;
      }
      CHECK(s == d2);
    }
}

TEST_CASE("face_lattice: general path agrees with simplicial path") {
  for (int d = 2; d <= 5; ++d)
    for (int n = d + 1; n <= 9; ++n) {
      const PolytopeModel p = build_cyclic(CyclicSpec::standard(d, n));
      const FaceLattice a = face_lattice(p, LatticeMethod::Simplicial);
      const FaceLattice b = face_lattice(p, LatticeMethod::General);
      CHECK(a.faces == b.faces);
    }
}

TEST_CASE("face_lattice: deep validation on fixtures") {
  for (const PolytopeModel& p :
       {cube(3), cube(4), simplex(3), simplex(5), crosspolytope(3), crosspolytope(4),
        build_cyclic(CyclicSpec::standard(4, 7)), build_cyclic(CyclicSpec::standard(5, 8))}) {
    const FaceLattice lat = face_lattice(p);
    CHECK(lat.f_vector().euler_ok());
    validate_lattice(p, lat);
  }
}

TEST_CASE("face_lattice: corrupted incidences abort") {
  PolytopeModel p = cube(3);
  p.facets[0][0] = p.facets[0][1];  // duplicate vertex, facet no longer spans
  CHECK_THROWS(validate(p));
}

TEST_CASE("neighborliness: every small vertex subset is a face") {
  for (int d = 4; d <= 7; ++d) {
    const int n = 10;
    const PolytopeModel p = build_cyclic(CyclicSpec::standard(d, n));
    const FaceLattice lat = face_lattice(p);
    const int s = d / 2;  // subsets of size s are (s-1)-faces
    std::vector<int> pick(s);
    for (int i = 0; i < s; ++i) pick[i] = i;
    while (true) {
      CHECK(lat.find(s - 1, pick) >= 0);
      int i = s - 1;
      while (i >= 0 && pick[i] == n - s + i) --i;
      if (i < 0) break;
      ++pick[i];
      for (int j = i + 1; j < s; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
}

TEST_CASE("tangent_cone: active facet counts") {
  const PolytopeModel c3 = cube(3);
  CHECK(tangent_cone(c3, c3.facets[0]).size() == 1);

  auto at_vertex = tangent_cone(c3, {0});
  CHECK(at_vertex.size() == 3);
  // pairwise orthogonal outward normals at a cube vertex
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = i + 1; j < 3; ++j)
      CHECK(linalg::dot(at_vertex[i].normal, at_vertex[j].normal) == 0);

  const PolytopeModel c46 = build_cyclic(CyclicSpec::standard(4, 6));
  const FaceLattice lat = face_lattice(c46);
  for (std::size_t e = 0; e < lat.faces[1].size(); ++e)
    CHECK(tangent_cone(c46, lat.faces[1][e]).size() ==
          lat.containing_facets[1][e].size());

  CHECK_THROWS_AS(tangent_cone(c3, std::vector<int>{0, 7}), std::invalid_argument);
}

TEST_CASE("facet_intrinsic: frames preserve metric and combinatorics") {
  const PolytopeModel c3 = cube(3);
  const FaceLattice lat3 = face_lattice(c3);
  const NumericModel square = facet_intrinsic(c3, lat3, 0);
  CHECK(square.dim == 2);
  CHECK(square.vertices.rows() == 4);
  CHECK(square.faces[1].size() == 4);  // a square has 4 edges
  // unit edge lengths
  for (const auto& edge : square.faces[1]) {
    const double len = (square.vertices.row(edge[0]) - square.vertices.row(edge[1])).norm();
    CHECK(len == doctest::Approx(1.0));
  }

  const PolytopeModel t = simplex(3);
  const FaceLattice latt = face_lattice(t);
  const NumericModel tri = facet_intrinsic(t, latt, 0);
  CHECK(tri.dim == 2);
  CHECK(tri.vertices.rows() == 3);
  // equilateral: all pairwise distances match
  const double l01 = (tri.vertices.row(0) - tri.vertices.row(1)).norm();
  const double l02 = (tri.vertices.row(0) - tri.vertices.row(2)).norm();
  const double l12 = (tri.vertices.row(1) - tri.vertices.row(2)).norm();
  CHECK(l01 == doctest::Approx(l02));
  CHECK(l01 == doctest::Approx(l12));

  const PolytopeModel c46 = build_cyclic(CyclicSpec::standard(4, 6));
  const FaceLattice lat46 = face_lattice(c46);
  const NumericModel tet = facet_intrinsic(c46, lat46, 2);
  CHECK(tet.dim == 3);
  CHECK(tet.vertices.rows() == 4);
  // distances preserved from the ambient embedding
  const auto& fverts = c46.facets[2];
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) {
      double ambient2 = 0;
      for (int c = 0; c < 4; ++c) {
        const double dx = static_cast<double>(c46.vertices[fverts[i]][c]) -
                          static_cast<double>(c46.vertices[fverts[j]][c]);
        ambient2 += dx * dx;
      }
      const double local = (tet.vertices.row(i) - tet.vertices.row(j)).norm();
      CHECK(local == doctest::Approx(std::sqrt(ambient2)));
    }
}

TEST_CASE("dual_f_vector reverses and pairs ratio residuals") {
  CHECK(dual_f_vector(FVector{3, {8, 12, 6}}).counts == std::vector<Int>{6, 12, 8});
  CHECK(dual_f_vector(FVector{4, {6, 15, 18, 9}}).counts == std::vector<Int>{9, 18, 15, 6});
  CHECK(dual_f_vector(FVector{3, {4, 6, 4}}).counts == std::vector<Int>{4, 6, 4});

  // the vertex-ratio residual of the dual equals the facet-ratio residual of
  // the original at the mirrored index
  using facecount::cyclic_f_vector;
  using facecount::rho;
  for (int d = 3; d <= 6; ++d)
    for (int n = d + 1; n <= 10; ++n) {
      const FVector fv = cyclic_f_vector(d, n);
      const FVector dual = dual_f_vector(fv);
      for (int k = 0; k < d; ++k) {
        const Rat dual_res = Rat(dual.counts[k], dual.counts[0]) - rho(d, k);
        const Rat orig_res =
            Rat(fv.counts[d - 1 - k], fv.counts[d - 1]) - rho(d, d - (d - 1 - k) - 1);
        CHECK(dual_res == orig_res);
      }
    }
}

TEST_CASE("polytope files: round trip and parse errors") {
  const PolytopeModel p = build_cyclic(CyclicSpec::standard(3, 5));
  std::ostringstream out;
  write_polytope(out, p);
  std::istringstream in(out.str());
  const PolytopeModel q = read_polytope(in);
  CHECK(q.dim == p.dim);
  CHECK(q.vertices == p.vertices);
  CHECK(q.facets == p.facets);
  CHECK(q.simplicial);

  std::istringstream frac("dimension 2\nvertex 0 0\nvertex 1/2 0\nvertex 0 1/3\nfacet 0 1\nfacet 1 2\nfacet 0 2\n");
  const PolytopeModel tri = read_polytope(frac);
  CHECK(tri.vertices[1][0] == Rat(1, 2));

  auto expect_error = [](const std::string& text, int line) {
    std::istringstream is(text);
    try {
      read_polytope(is);
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(e.line == line);
    }
  };
  expect_error("dimension 2\nvertex 0\n", 2);            // wrong arity
  expect_error("dimension 2\nvertex 0 zebra\n", 2);      // bad coordinate
  expect_error("vertex 0 0\n", 1);                       // vertex before dimension
  expect_error("dimension 2\nvertex 0 0\nvertex 1 0\nfacet 0 5\n", 4);  // bad index
  // facet-free files are rejected (no hull computation)
  expect_error("dimension 2\nvertex 0 0\nvertex 1 0\nvertex 0 1\n", 4);
}
