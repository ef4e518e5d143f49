#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "polyface/facecount.hpp"
#include "polyface/linalg.hpp"
#include "polyface/numbers.hpp"

namespace polyface::polytope {

/// Moment-curve construction data: n strictly increasing rational parameters.
struct CyclicSpec {
  int d = 0;
  int n = 0;
  std::vector<Rat> params;  // t_1 < ... < t_n

  /// Default parameters t_i = i.
  static CyclicSpec standard(int d, int n);
};

struct Hyperplane {
  linalg::VecQ normal;  // outward: normal . v = offset on the facet,
  Rat offset;           // normal . v < offset at the vertex centroid
};

/// Exact rational polytope: vertices, facet incidences, facet hyperplanes.
struct PolytopeModel {
  int dim = 0;
  std::vector<linalg::VecQ> vertices;
  std::vector<std::vector<int>> facets;  // sorted vertex indices per facet
  std::vector<Hyperplane> hyperplanes;   // parallel to `facets`
  bool simplicial = false;
  std::string name;
};

/// Checks the model invariants exactly: facet vertex sets affinely span
/// their hyperplanes, every off-facet vertex satisfies normal.v < offset
/// strictly, and every vertex lies on >= dim facets. Throws on violation.
void validate(const PolytopeModel& p);

/// All d-subsets Y of {0..n-1} such that any two indices outside Y have an
/// even number of elements of Y strictly between them (the facet index sets
/// of a cyclic polytope).
std::vector<std::vector<int>> gale_facets(int d, int n);

PolytopeModel build_cyclic(const CyclicSpec& spec);

PolytopeModel cube(int d);

/// d = 3 returns the regular tetrahedron (vertices on the unit cube, all
/// edges equal); other dimensions return conv{0, e_1, ..., e_d}. There is no
/// rational-coordinate regular d-simplex in R^d for general d.
PolytopeModel simplex(int d);

PolytopeModel crosspolytope(int d);

/// Face poset by dimension: faces[k] holds the sorted vertex set of every
/// k-face, lexicographically ordered; containing_facets mirrors the shape.
struct FaceLattice {
  int dim = 0;
  std::vector<std::vector<std::vector<int>>> faces;
  std::vector<std::vector<std::vector<int>>> containing_facets;

  FVector f_vector() const;
  /// Index of a face within faces[k], or -1.
  int find(int k, const std::vector<int>& vertex_set) const;
};

enum class LatticeMethod {
  Auto,        // Simplicial when the model is simplicial, else General
  Simplicial,  // k-faces are the (k+1)-subsets of facet vertex sets
  General,     // intersection closure of facet vertex sets, graded by affine rank
};

FaceLattice face_lattice(const PolytopeModel& p, LatticeMethod method = LatticeMethod::Auto);

/// Deep consistency check: every claimed k-face has affine rank k and equals
/// the intersection of the facets containing it. Throws with diagnostics.
void validate_lattice(const PolytopeModel& p, const FaceLattice& lattice);

/// Outward normals of the facets containing the given face: a direction u
/// points into the polytope at relint(face) iff normal . u <= 0 for all of
/// them.
std::vector<Hyperplane> tangent_cone(const PolytopeModel& p, const std::vector<int>& face);

/// Polar-dual f-vector (the reversed sequence).
FVector dual_f_vector(const FVector& fv);

/// Floating-point view used by the Monte Carlo estimators: unit outward
/// facet normals, the full face list, and per-face active facet rows.
/// Exact consumers never read this type.
struct NumericModel {
  int dim = 0;
  Eigen::MatrixXd vertices;       // one row per vertex
  Eigen::MatrixXd facet_normals;  // unit rows
  Eigen::VectorXd facet_offsets;
  std::vector<std::vector<std::vector<int>>> faces;         // [k][i] local vertex ids
  std::vector<std::vector<std::vector<int>>> face_facets;   // [k][i] facet row ids
  std::vector<int> source_vertices;  // parent ids when built by facet_intrinsic

  int face_count(int k) const { return static_cast<int>(faces[k].size()); }
  /// Index of a face within faces[k], or -1.
  int find(int k, const std::vector<int>& vertex_set) const;
};

NumericModel to_numeric(const PolytopeModel& p, const FaceLattice& lattice);

/// The facet re-expressed in an orthonormal coordinate frame of its affine
/// hull, as a (dim-1)-dimensional NumericModel. Frame entries are
/// irrational in general, hence the floating-point result; combinatorics
/// (faces, ridges) are carried over exactly from the lattice.
NumericModel facet_intrinsic(const PolytopeModel& p, const FaceLattice& lattice, int facet_index);

}  // namespace polyface::polytope
