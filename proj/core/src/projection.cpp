#include "polyface/projection.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "polyface/facecount.hpp"
#include "polyface/lp.hpp"

namespace polyface::projection {

using linalg::MatQ;
using linalg::VecQ;

FixedSubspace FixedSubspace::from_basis(int dim, MatQ basis_rows) {
  if (dim < 3) throw std::invalid_argument("FixedSubspace: need dim >= 3");
  if (basis_rows.size() != 2) throw std::invalid_argument("FixedSubspace: exactly 2 basis rows");
  for (const auto& row : basis_rows)
    if (static_cast<int>(row.size()) != dim)
      throw std::invalid_argument("FixedSubspace: basis row length != dim");
  if (linalg::rank(basis_rows) != 2)
    throw std::invalid_argument("FixedSubspace: basis rows are linearly dependent");
  FixedSubspace s;
  s.dim = dim;
  s.complement = linalg::kernel_basis(basis_rows);  // orthogonal to each basis row
  s.basis = std::move(basis_rows);
  if (static_cast<int>(s.complement.size()) != dim - 2)
    throw std::runtime_error("FixedSubspace: complement has wrong dimension");
  return s;
}

FixedSubspace FixedSubspace::coordinate(int dim, int axis_i, int axis_j) {
  if (axis_i < 1 || axis_i > dim || axis_j < 1 || axis_j > dim || axis_i == axis_j)
    throw std::invalid_argument("FixedSubspace::coordinate: bad axes");
  MatQ basis(2, VecQ(dim, Rat(0)));
  basis[0][axis_i - 1] = 1;
  basis[1][axis_j - 1] = 1;
  return from_basis(dim, std::move(basis));
}

GeneralPositionResult general_position_check(const PolytopeModel& p, const FaceLattice& lattice,
                                             const FixedSubspace& s) {
  if (s.dim != p.dim) throw std::invalid_argument("general_position_check: dimension mismatch");
  // k = 0 (direction space {0}) and k = dim (full space) hold identically.
  for (int k = 1; k < p.dim; ++k) {
    const int expected = std::max(0, 2 + k - p.dim);
    for (const auto& face : lattice.faces[k]) {
      MatQ diffs;
      for (std::size_t i = 1; i < face.size(); ++i) {
        VecQ d(p.dim);
        for (int j = 0; j < p.dim; ++j)
          d[j] = p.vertices[face[i]][j] - p.vertices[face[0]][j];
        diffs.push_back(std::move(d));
      }
      const int actual = 2 + k - linalg::stacked_rank(s.basis, diffs);
      if (actual != expected) return {false, k, face, expected, actual};
    }
  }
  return {};
}

namespace {

std::vector<std::vector<Rat>> project_exact(const PolytopeModel& p, const FixedSubspace& s) {
  std::vector<std::vector<Rat>> ys(p.vertices.size());
  for (std::size_t v = 0; v < p.vertices.size(); ++v) {
    ys[v].reserve(s.complement.size());
    for (const auto& w : s.complement) ys[v].push_back(linalg::dot(w, p.vertices[v]));
  }
  return ys;
}

bool survives_exact(const std::vector<std::vector<Rat>>& ys, const std::vector<int>& face) {
  return lp::survival_margin(ys, face, Rat(0)) > 0;
}

std::string face_string(const std::vector<int>& face) {
  std::ostringstream os;
  os << "{";
  for (std::size_t i = 0; i < face.size(); ++i) os << (i ? "," : "") << face[i];
  os << "}";
  return os.str();
}

}  // namespace

std::vector<int> surviving_k_faces(const PolytopeModel& p, const FaceLattice& lattice,
                                   const FixedSubspace& s, int k) {
  if (k < 0 || k >= p.dim) throw std::invalid_argument("surviving_k_faces: k out of range");
  const auto ys = project_exact(p, s);
  std::vector<int> out;
  const auto& level = lattice.faces[k];
  for (std::size_t i = 0; i < level.size(); ++i)
    if (survives_exact(ys, level[i])) out.push_back(static_cast<int>(i));
  return out;
}

std::vector<int> faces_of_facet(const FaceLattice& lattice, const std::vector<int>& facet_verts,
                                int k) {
  std::vector<int> out;
  const auto& level = lattice.faces[k];
  for (std::size_t i = 0; i < level.size(); ++i)
    if (std::includes(facet_verts.begin(), facet_verts.end(), level[i].begin(), level[i].end()))
      out.push_back(static_cast<int>(i));
  return out;
}

std::vector<int> surviving_in_facet(const PolytopeModel& p, const FaceLattice& lattice,
                                    int facet_index, const FixedSubspace& s, int k) {
  if (facet_index < 0 || facet_index >= static_cast<int>(p.facets.size()))
    throw std::invalid_argument("surviving_in_facet: facet index out of range");
  const auto& fverts = p.facets[facet_index];
  // Restrict the projected coordinates to the facet's vertices.
  std::vector<std::vector<Rat>> ys(fverts.size());
  std::vector<int> local_of(p.vertices.size(), -1);
  for (std::size_t i = 0; i < fverts.size(); ++i) {
    local_of[fverts[i]] = static_cast<int>(i);
    ys[i].reserve(s.complement.size());
    for (const auto& w : s.complement) ys[i].push_back(linalg::dot(w, p.vertices[fverts[i]]));
  }
  std::vector<int> out;
  const std::vector<int> members = faces_of_facet(lattice, fverts, k);
  for (std::size_t pos = 0; pos < members.size(); ++pos) {
    std::vector<int> local;
    for (int v : lattice.faces[k][members[pos]]) local.push_back(local_of[v]);
    std::sort(local.begin(), local.end());
    if (survives_exact(ys, local)) out.push_back(static_cast<int>(pos));
  }
  return out;
}

ProjectionReport projection_identity(const PolytopeModel& p, const FaceLattice& lattice,
                                     const FixedSubspace& s, int k) {
  if (p.dim < 3) throw std::invalid_argument("projection_identity: need dim >= 3");
  if (k < 0 || k > p.dim - 3)
    throw std::invalid_argument("projection_identity: k out of range [0, dim-3]");
  const GeneralPositionResult gp = general_position_check(p, lattice, s);
  if (!gp.pass)
    throw std::domain_error("projection_identity: subspace not in general position at the " +
                            std::to_string(gp.k) + "-face " + face_string(gp.face) +
                            " (expected local dimension " + std::to_string(gp.expected) +
                            ", got " + std::to_string(gp.actual) + ")");

  ProjectionReport report;
  report.k = k;
  report.face_count = Int(lattice.faces[k].size());
  report.survivors = Int(surviving_k_faces(p, lattice, s, k).size());
  Int loss_sum = 0;
  for (std::size_t f = 0; f < p.facets.size(); ++f) {
    FacetRow row;
    row.facet = static_cast<int>(f);
    row.face_count = Int(faces_of_facet(lattice, p.facets[f], k).size());
    row.survivors = Int(surviving_in_facet(p, lattice, static_cast<int>(f), s, k).size());
    loss_sum += row.face_count - row.survivors;
    report.per_facet.push_back(std::move(row));
  }
  report.lhs = Rat(report.face_count - report.survivors);
  report.rhs = Rat(loss_sum, 2);
  report.residual = report.lhs - report.rhs;
  return report;
}

CyclicMinimumReport cyclic_projection_minimum(int d, int n, int k) {
  if (d < 3 || n <= d) throw std::invalid_argument("cyclic_projection_minimum: need n > d >= 3");
  if (k < 0 || k > d - 3)
    throw std::invalid_argument("cyclic_projection_minimum: k out of range [0, d-3]");
  const PolytopeModel p = polytope::build_cyclic(polytope::CyclicSpec::standard(d, n));
  const FaceLattice lattice = face_lattice(p);
  const FixedSubspace s = FixedSubspace::coordinate(d, d - 1, d);
  const GeneralPositionResult gp = general_position_check(p, lattice, s);
  if (!gp.pass)
    throw std::domain_error(
        "cyclic_projection_minimum: coordinate subspace not in general position at the " +
        std::to_string(gp.k) + "-face " + face_string(gp.face));

  CyclicMinimumReport report;
  report.d = d;
  report.n = n;
  report.k = k;
  report.pass = true;
  const Rat target = Rat(2) * facecount::rho(d, d - k - 1);
  for (std::size_t f = 0; f < p.facets.size(); ++f) {
    AttainRow row;
    row.facet = static_cast<int>(f);
    const Int fk = Int(faces_of_facet(lattice, p.facets[f], k).size());
    const Int sv = Int(surviving_in_facet(p, lattice, static_cast<int>(f), s, k).size());
    row.loss = fk - sv;
    row.target = target;
    row.pass = Rat(row.loss) == target;
    report.pass = report.pass && row.pass;
    report.rows.push_back(std::move(row));
  }
  report.survivors = Int(surviving_k_faces(p, lattice, s, k).size());
  report.expected_survivors = facecount::cyclic_face_count(d - 2, n, k);
  report.pass = report.pass && report.survivors == report.expected_survivors;
  return report;
}

}  // namespace polyface::projection
