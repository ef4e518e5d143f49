#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "polyface/polytope.hpp"

namespace polyface::polytope {

using linalg::VecQ;

FVector FaceLattice::f_vector() const {
  FVector fv;
  fv.dim = dim;
  for (const auto& level : faces) fv.counts.emplace_back(level.size());
  return fv;
}

int FaceLattice::find(int k, const std::vector<int>& vertex_set) const {
  const auto& level = faces[k];
  auto it = std::lower_bound(level.begin(), level.end(), vertex_set);
  if (it == level.end() || *it != vertex_set) return -1;
  return static_cast<int>(it - level.begin());
}

namespace {

std::vector<std::vector<int>> facets_containing(const PolytopeModel& p,
                                                const std::vector<std::vector<int>>& level) {
  std::vector<std::vector<int>> result(level.size());
  for (std::size_t i = 0; i < level.size(); ++i)
    for (std::size_t f = 0; f < p.facets.size(); ++f)
      if (std::includes(p.facets[f].begin(), p.facets[f].end(), level[i].begin(), level[i].end()))
        result[i].push_back(static_cast<int>(f));
  return result;
}

FaceLattice lattice_simplicial(const PolytopeModel& p) {
  FaceLattice lat;
  lat.dim = p.dim;
  lat.faces.resize(p.dim);
  for (int k = 0; k < p.dim; ++k) {
    std::set<std::vector<int>> level;
    std::vector<int> subset(k + 1);
    for (const auto& facet : p.facets) {
      // all (k+1)-subsets of the facet's (sorted) vertex list
      const int fs = static_cast<int>(facet.size());
      std::vector<int> pick(k + 1);
      for (int i = 0; i <= k; ++i) pick[i] = i;
      while (true) {
        for (int i = 0; i <= k; ++i) subset[i] = facet[pick[i]];
        level.insert(subset);
        int i = k;
        while (i >= 0 && pick[i] == fs - (k + 1) + i) --i;
        if (i < 0) break;
        ++pick[i];
        for (int j = i + 1; j <= k; ++j) pick[j] = pick[j - 1] + 1;
      }
    }
    lat.faces[k].assign(level.begin(), level.end());
  }
  return lat;
}

FaceLattice lattice_general(const PolytopeModel& p) {
  // Every face is an intersection of facets; close the facet vertex sets
  // under pairwise intersection and grade by exact affine rank.
  std::set<std::vector<int>> closed(p.facets.begin(), p.facets.end());
  std::vector<std::vector<int>> frontier(closed.begin(), closed.end());
  while (!frontier.empty()) {
    std::vector<std::vector<int>> fresh;
    for (const auto& a : frontier) {
      for (const auto& facet : p.facets) {
        std::vector<int> meet;
        std::set_intersection(a.begin(), a.end(), facet.begin(), facet.end(),
                              std::back_inserter(meet));
        if (meet.empty() || meet == a) continue;
        if (closed.insert(meet).second) fresh.push_back(std::move(meet));
      }
    }
    frontier = std::move(fresh);
  }

  FaceLattice lat;
  lat.dim = p.dim;
  lat.faces.resize(p.dim);
  for (const auto& face : closed) {
    std::vector<VecQ> pts;
    pts.reserve(face.size());
    for (int vi : face) pts.push_back(p.vertices[vi]);
    const int k = linalg::affine_rank(pts);
    if (k < 0 || k >= p.dim)
      throw std::runtime_error("face_lattice: intersection with affine rank " + std::to_string(k));
    lat.faces[k].push_back(face);
  }
  for (auto& level : lat.faces) std::sort(level.begin(), level.end());
  return lat;
}

}  // namespace

FaceLattice face_lattice(const PolytopeModel& p, LatticeMethod method) {
  if (method == LatticeMethod::Auto)
    method = p.simplicial ? LatticeMethod::Simplicial : LatticeMethod::General;
  if (method == LatticeMethod::Simplicial && !p.simplicial)
    throw std::invalid_argument("face_lattice: simplicial enumeration on a non-simplicial model");
  FaceLattice lat = method == LatticeMethod::Simplicial ? lattice_simplicial(p) : lattice_general(p);
  for (int k = 0; k < p.dim; ++k) lat.containing_facets.push_back(facets_containing(p, lat.faces[k]));
  if (!lat.f_vector().euler_ok())
    throw std::runtime_error("face_lattice: Euler relation violated for " + p.name);
  return lat;
}

void validate_lattice(const PolytopeModel& p, const FaceLattice& lat) {
  for (int k = 0; k < lat.dim; ++k) {
    for (std::size_t i = 0; i < lat.faces[k].size(); ++i) {
      const auto& face = lat.faces[k][i];
      std::vector<VecQ> pts;
      for (int vi : face) pts.push_back(p.vertices[vi]);
      if (linalg::affine_rank(pts) != k)
        throw std::runtime_error("lattice: face at level " + std::to_string(k) +
                                 " has wrong affine rank");
      // the face must be exactly the intersection of the facets containing it
      const auto& owners = lat.containing_facets[k][i];
      if (owners.empty()) throw std::runtime_error("lattice: face contained in no facet");
      std::vector<int> meet = p.facets[owners[0]];
      for (std::size_t j = 1; j < owners.size(); ++j) {
        std::vector<int> next;
        const auto& other = p.facets[owners[j]];
        std::set_intersection(meet.begin(), meet.end(), other.begin(), other.end(),
                              std::back_inserter(next));
        meet = std::move(next);
      }
      if (meet != face)
        throw std::runtime_error("lattice: face is not the intersection of its facets");
    }
  }
}

int NumericModel::find(int k, const std::vector<int>& vertex_set) const {
  const auto& level = faces[k];
  auto it = std::lower_bound(level.begin(), level.end(), vertex_set);
  if (it == level.end() || *it != vertex_set) return -1;
  return static_cast<int>(it - level.begin());
}

NumericModel to_numeric(const PolytopeModel& p, const FaceLattice& lattice) {
  NumericModel nm;
  nm.dim = p.dim;
  nm.vertices.resize(static_cast<Eigen::Index>(p.vertices.size()), p.dim);
  for (std::size_t v = 0; v < p.vertices.size(); ++v)
    for (int j = 0; j < p.dim; ++j)
      nm.vertices(static_cast<Eigen::Index>(v), j) = static_cast<double>(p.vertices[v][j]);
  nm.facet_normals.resize(static_cast<Eigen::Index>(p.facets.size()), p.dim);
  nm.facet_offsets.resize(static_cast<Eigen::Index>(p.facets.size()));
  for (std::size_t f = 0; f < p.facets.size(); ++f) {
    Eigen::VectorXd a(p.dim);
    for (int j = 0; j < p.dim; ++j) a(j) = static_cast<double>(p.hyperplanes[f].normal[j]);
    const double norm = a.norm();
    nm.facet_normals.row(static_cast<Eigen::Index>(f)) = a.transpose() / norm;
    nm.facet_offsets(static_cast<Eigen::Index>(f)) =
        static_cast<double>(p.hyperplanes[f].offset) / norm;
  }
  nm.faces = lattice.faces;
  nm.face_facets = lattice.containing_facets;
  return nm;
}

NumericModel facet_intrinsic(const PolytopeModel& p, const FaceLattice& lattice,
                             int facet_index) {
  if (p.dim < 2) throw std::invalid_argument("facet_intrinsic: need dim >= 2");
  if (facet_index < 0 || facet_index >= static_cast<int>(p.facets.size()))
    throw std::invalid_argument("facet_intrinsic: facet index out of range");
  const auto& fverts = p.facets[facet_index];
  const int q = p.dim - 1;
  const int nv = static_cast<int>(fverts.size());

  Eigen::MatrixXd ambient(nv, p.dim);
  for (int i = 0; i < nv; ++i)
    for (int j = 0; j < p.dim; ++j)
      ambient(i, j) = static_cast<double>(p.vertices[fverts[i]][j]);

  // Orthonormal frame of the facet's direction space.
  Eigen::MatrixXd diffs(p.dim, nv - 1);
  for (int i = 1; i < nv; ++i) diffs.col(i - 1) = (ambient.row(i) - ambient.row(0)).transpose();
  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(diffs);
  if (qr.rank() != q)
    throw std::runtime_error("facet_intrinsic: facet does not span a hyperplane (rank " +
                             std::to_string(qr.rank()) + ")");
  const Eigen::MatrixXd frame =
      qr.householderQ() * Eigen::MatrixXd::Identity(p.dim, q);  // d x (d-1)

  NumericModel nm;
  nm.dim = q;
  nm.source_vertices = fverts;
  nm.vertices.resize(nv, q);
  for (int i = 0; i < nv; ++i)
    nm.vertices.row(i) = ((ambient.row(i) - ambient.row(0)) * frame);

  // Local index per parent vertex; faces of the facet = faces of p inside it.
  std::map<int, int> local;
  for (int i = 0; i < nv; ++i) local[fverts[i]] = i;
  nm.faces.resize(q);
  for (int k = 0; k < q; ++k) {
    for (const auto& face : lattice.faces[k]) {
      if (!std::includes(fverts.begin(), fverts.end(), face.begin(), face.end())) continue;
      std::vector<int> loc;
      loc.reserve(face.size());
      for (int vi : face) loc.push_back(local.at(vi));
      std::sort(loc.begin(), loc.end());
      nm.faces[k].push_back(std::move(loc));
    }
    std::sort(nm.faces[k].begin(), nm.faces[k].end());
  }

  // Ridge hyperplanes within the frame, outward against the facet centroid.
  const auto& ridges = nm.faces[q - 1];
  const Eigen::RowVectorXd centroid = nm.vertices.colwise().mean();
  nm.facet_normals.resize(static_cast<Eigen::Index>(ridges.size()), q);
  nm.facet_offsets.resize(static_cast<Eigen::Index>(ridges.size()));
  for (std::size_t r = 0; r < ridges.size(); ++r) {
    Eigen::MatrixXd sys(ridges[r].size(), q + 1);
    for (std::size_t i = 0; i < ridges[r].size(); ++i) {
      sys.block(i, 0, 1, q) = nm.vertices.row(ridges[r][i]);
      sys(i, q) = -1.0;
    }
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(sys, Eigen::ComputeFullV);
    if (svd.rank() != q)
      throw std::runtime_error("facet_intrinsic: ridge does not span a local hyperplane");
    Eigen::VectorXd kern = svd.matrixV().col(q);
    Eigen::VectorXd a = kern.head(q);
    double b = kern(q);
    const double norm = a.norm();
    a /= norm;
    b /= norm;
    if (centroid.dot(a) - b > 0) {
      a = -a;
      b = -b;
    }
    nm.facet_normals.row(static_cast<Eigen::Index>(r)) = a.transpose();
    nm.facet_offsets(static_cast<Eigen::Index>(r)) = b;
  }

  nm.face_facets.resize(q);
  for (int k = 0; k < q; ++k) {
    nm.face_facets[k].resize(nm.faces[k].size());
    for (std::size_t i = 0; i < nm.faces[k].size(); ++i)
      for (std::size_t r = 0; r < ridges.size(); ++r)
        if (std::includes(ridges[r].begin(), ridges[r].end(), nm.faces[k][i].begin(),
                          nm.faces[k][i].end()))
          nm.face_facets[k][i].push_back(static_cast<int>(r));
  }
  return nm;
}

}  // namespace polyface::polytope
