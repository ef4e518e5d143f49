#pragma once

#include <vector>

#include "polyface/polytope.hpp"

namespace polyface::projection {

using polytope::FaceLattice;
using polytope::PolytopeModel;

/// Exact rational 2-dimensional subspace with a solved orthogonal
/// complement: every complement row is exactly orthogonal to every basis row.
struct FixedSubspace {
  int dim = 0;
  linalg::MatQ basis;       // 2 rows spanning S
  linalg::MatQ complement;  // dim-2 rows spanning S-perp

  static FixedSubspace from_basis(int dim, linalg::MatQ basis_rows);
  /// span(e_i, e_j), axes 1-based.
  static FixedSubspace coordinate(int dim, int axis_i, int axis_j);
};

struct GeneralPositionResult {
  bool pass = true;
  // populated on failure:
  int k = -1;
  std::vector<int> face;
  int expected = 0;
  int actual = 0;
};

/// For every face G of dimension k, dim(S ∩ dir(aff G)) must equal
/// max{0, 2+k-dim}; computed by exact rank arithmetic. (At a relative
/// interior point the translated subspace meets the face locally in exactly
/// this dimension, so the rank form is the faithful computable condition.)
GeneralPositionResult general_position_check(const PolytopeModel& p, const FaceLattice& lattice,
                                             const FixedSubspace& s);

/// Indices into lattice.faces[k] of the k-faces whose image under the
/// projection along S is a proper face of the image polytope, decided by the
/// exact rational margin LP (survives iff the optimal margin is positive,
/// no tolerance). The survivor count is the image's k-face count.
std::vector<int> surviving_k_faces(const PolytopeModel& p, const FaceLattice& lattice,
                                   const FixedSubspace& s, int k);

/// Same test restricted to one facet: which k-faces of the facet survive in
/// the facet's own image (functionals still drawn from S-perp). Returns
/// indices into the facet's k-face list as ordered by faces_of_facet.
std::vector<int> surviving_in_facet(const PolytopeModel& p, const FaceLattice& lattice,
                                    int facet_index, const FixedSubspace& s, int k);

/// Indices into lattice.faces[k] of the k-faces contained in the facet.
std::vector<int> faces_of_facet(const FaceLattice& lattice, const std::vector<int>& facet_verts,
                                int k);

struct FacetRow {
  int facet = 0;
  Int face_count;  // f_k of the facet
  Int survivors;   // f_k of the facet's image
};

struct ProjectionReport {
  int k = 0;
  Int face_count;  // f_k of the polytope
  Int survivors;   // f_k of the image
  std::vector<FacetRow> per_facet;
  Rat lhs;       // f_k(P) - f_k(image)
  Rat rhs;       // half the facet-wise losses
  Rat residual;  // lhs - rhs, exact; the identity asserts 0
};

/// The codimension-2 projection identity
///   f_k(P) - f_k(pi(P)) = (1/2) * sum_facets [f_k(F) - f_k(pi(F))]
/// evaluated exactly. Requires dim >= 3, 0 <= k <= dim-3, and S in general
/// position (checked; throws std::domain_error naming the offending face).
ProjectionReport projection_identity(const PolytopeModel& p, const FaceLattice& lattice,
                                     const FixedSubspace& s, int k);

struct AttainRow {
  int facet = 0;
  Int loss;    // f_k(F) - f_k(pi(F))
  Rat target;  // 2 * rho(d, d-k-1)
  bool pass = false;
};

struct CyclicMinimumReport {
  int d = 0, n = 0, k = 0;
  std::vector<AttainRow> rows;
  Int survivors;           // f_k of the projected polytope
  Int expected_survivors;  // f_k of the cyclic polytope two dimensions down
  bool pass = false;
};

/// For the cyclic polytope with default parameters and the projection that
/// drops the last two coordinates (kernel span(e_{d-1}, e_d)): every facet
/// must lose exactly 2*rho(d,d-k-1) k-faces, and the image must have the
/// k-face count of the cyclic (d-2)-polytope on the same vertices.
CyclicMinimumReport cyclic_projection_minimum(int d, int n, int k);

}  // namespace polyface::projection
