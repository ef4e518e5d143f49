#include "polyface/polytope.hpp"

#include <algorithm>
#include <stdexcept>

namespace polyface::polytope {

using linalg::MatQ;
using linalg::VecQ;

CyclicSpec CyclicSpec::standard(int d, int n) {
  CyclicSpec spec;
  spec.d = d;
  spec.n = n;
  spec.params.reserve(n);
  for (int i = 1; i <= n; ++i) spec.params.emplace_back(i);
  return spec;
}

namespace {

VecQ vertex_centroid(const PolytopeModel& p) {
  VecQ c(p.dim, Rat(0));
  for (const auto& v : p.vertices)
    for (int j = 0; j < p.dim; ++j) c[j] += v[j];
  const Rat inv(1, static_cast<long>(p.vertices.size()));
  for (auto& x : c) x *= inv;
  return c;
}

// Hyperplane through the facet's vertices, oriented outward against the
// centroid. The kernel of [v_i | -1] being one-dimensional doubles as the
// affine-span rank check.
Hyperplane solve_hyperplane(const PolytopeModel& p, const std::vector<int>& facet,
                            const VecQ& centroid) {
  MatQ m;
  for (int vi : facet) {
    VecQ row = p.vertices[vi];
    row.push_back(Rat(-1));
    m.push_back(std::move(row));
  }
  MatQ kernel = linalg::kernel_basis(std::move(m));
  if (kernel.size() != 1)
    throw std::runtime_error("hyperplane solve failed: facet vertex set does not span a hyperplane");
  Hyperplane h;
  h.normal.assign(kernel[0].begin(), kernel[0].end() - 1);
  h.offset = kernel[0].back();
  const Rat side = linalg::dot(h.normal, centroid) - h.offset;
  if (side == 0) throw std::runtime_error("hyperplane solve failed: centroid on facet hyperplane");
  if (side > 0) {
    for (auto& x : h.normal) x = -x;
    h.offset = -h.offset;
  }
  return h;
}

void finish_model(PolytopeModel& p) {
  const VecQ centroid = vertex_centroid(p);
  for (auto& f : p.facets) std::sort(f.begin(), f.end());
  std::sort(p.facets.begin(), p.facets.end());
  p.hyperplanes.clear();
  p.hyperplanes.reserve(p.facets.size());
  for (const auto& f : p.facets) p.hyperplanes.push_back(solve_hyperplane(p, f, centroid));
  validate(p);
}

}  // namespace

void validate(const PolytopeModel& p) {
  if (p.dim < 1) throw std::runtime_error("model: dim must be positive");
  if (p.facets.size() != p.hyperplanes.size())
    throw std::runtime_error("model: facet/hyperplane count mismatch");
  std::vector<int> on_count(p.vertices.size(), 0);
  for (std::size_t f = 0; f < p.facets.size(); ++f) {
    const auto& facet = p.facets[f];
    const auto& h = p.hyperplanes[f];
    if (p.simplicial && static_cast<int>(facet.size()) != p.dim)
      throw std::runtime_error("model: simplicial facet without exactly dim vertices");
    std::vector<bool> member(p.vertices.size(), false);
    for (int vi : facet) member[vi] = true;
    std::vector<VecQ> pts;
    for (int vi : facet) pts.push_back(p.vertices[vi]);
    if (linalg::affine_rank(pts) != p.dim - 1)
      throw std::runtime_error("model: facet " + std::to_string(f) +
                               " does not affinely span its hyperplane");
    for (std::size_t v = 0; v < p.vertices.size(); ++v) {
      const Rat side = linalg::dot(h.normal, p.vertices[v]) - h.offset;
      if (member[v]) {
        if (side != 0) throw std::runtime_error("model: facet vertex off its hyperplane");
        ++on_count[v];
      } else if (side >= 0) {
        throw std::runtime_error("model: vertex " + std::to_string(v) +
                                 " not strictly inside facet " + std::to_string(f));
      }
    }
  }
  for (std::size_t v = 0; v < on_count.size(); ++v)
    if (on_count[v] < p.dim)
      throw std::runtime_error("model: vertex " + std::to_string(v) +
                               " lies on fewer than dim facets");
}

std::vector<std::vector<int>> gale_facets(int d, int n) {
  if (d < 2 || n <= d) throw std::invalid_argument("gale_facets: need n > d >= 2");
  std::vector<std::vector<int>> result;
  std::vector<int> pick(d);
  for (int i = 0; i < d; ++i) pick[i] = i;
  std::vector<bool> in_set(n);
  while (true) {
    std::fill(in_set.begin(), in_set.end(), false);
    for (int i : pick) in_set[i] = true;
    // Evenness between consecutive outside elements implies it for all pairs.
    bool ok = true;
    int prev_outside = -1;
    int run = 0;  // members seen since the previous outside element
    for (int i = 0; i < n && ok; ++i) {
      if (in_set[i]) {
        ++run;
        continue;
      }
      if (prev_outside >= 0 && run % 2 != 0) ok = false;
      prev_outside = i;
      run = 0;
    }
    if (ok) result.push_back(pick);
    // next d-combination of {0..n-1}
    int i = d - 1;
    while (i >= 0 && pick[i] == n - d + i) --i;
    if (i < 0) break;
    ++pick[i];
    for (int j = i + 1; j < d; ++j) pick[j] = pick[j - 1] + 1;
  }
  return result;
}

PolytopeModel build_cyclic(const CyclicSpec& spec) {
  if (spec.d < 2 || spec.n <= spec.d)
    throw std::invalid_argument("build_cyclic: need n > d >= 2");
  if (static_cast<int>(spec.params.size()) != spec.n)
    throw std::invalid_argument("build_cyclic: params length != n");
  for (int i = 1; i < spec.n; ++i)
    if (!(spec.params[i - 1] < spec.params[i]))
      throw std::invalid_argument("build_cyclic: params must be strictly increasing");

  PolytopeModel p;
  p.dim = spec.d;
  p.simplicial = true;
  p.name = "cyclic-" + std::to_string(spec.d) + "-" + std::to_string(spec.n);
  for (const Rat& t : spec.params) {
    VecQ v(spec.d);
    Rat power = 1;
    for (int j = 0; j < spec.d; ++j) {
      power *= t;
      v[j] = power;
    }
    p.vertices.push_back(std::move(v));
  }
  p.facets = gale_facets(spec.d, spec.n);
  finish_model(p);
  return p;
}

PolytopeModel cube(int d) {
  if (d < 1) throw std::invalid_argument("cube: d >= 1");
  PolytopeModel p;
  p.dim = d;
  p.simplicial = (d == 1);
  p.name = "cube-" + std::to_string(d);
  const int n = 1 << d;
  for (int mask = 0; mask < n; ++mask) {
    VecQ v(d);
    for (int j = 0; j < d; ++j) v[j] = (mask >> j) & 1;
    p.vertices.push_back(std::move(v));
  }
  for (int axis = 0; axis < d; ++axis) {
    for (int side = 0; side <= 1; ++side) {
      std::vector<int> facet;
      for (int mask = 0; mask < n; ++mask)
        if (((mask >> axis) & 1) == side) facet.push_back(mask);
      p.facets.push_back(std::move(facet));
    }
  }
  finish_model(p);
  return p;
}

PolytopeModel simplex(int d) {
  if (d < 1) throw std::invalid_argument("simplex: d >= 1");
  PolytopeModel p;
  p.dim = d;
  p.simplicial = true;
  p.name = "simplex-" + std::to_string(d);
  if (d == 3) {
    // Regular tetrahedron: alternate vertices of the unit cube.
    p.vertices = {{Rat(0), Rat(0), Rat(0)},
                  {Rat(1), Rat(1), Rat(0)},
                  {Rat(1), Rat(0), Rat(1)},
                  {Rat(0), Rat(1), Rat(1)}};
  } else {
    VecQ origin(d, Rat(0));
    p.vertices.push_back(origin);
    for (int j = 0; j < d; ++j) {
      VecQ v(d, Rat(0));
      v[j] = 1;
      p.vertices.push_back(std::move(v));
    }
  }
  for (std::size_t skip = 0; skip < p.vertices.size(); ++skip) {
    std::vector<int> facet;
    for (std::size_t v = 0; v < p.vertices.size(); ++v)
      if (v != skip) facet.push_back(static_cast<int>(v));
    p.facets.push_back(std::move(facet));
  }
  finish_model(p);
  return p;
}

PolytopeModel crosspolytope(int d) {
  if (d < 1) throw std::invalid_argument("crosspolytope: d >= 1");
  PolytopeModel p;
  p.dim = d;
  p.simplicial = true;
  p.name = "crosspolytope-" + std::to_string(d);
  for (int j = 0; j < d; ++j) {
    for (int sign = 0; sign <= 1; ++sign) {
      VecQ v(d, Rat(0));
      v[j] = sign ? -1 : 1;
      p.vertices.push_back(std::move(v));  // vertex 2j = +e_j, 2j+1 = -e_j
    }
  }
  for (int mask = 0; mask < (1 << d); ++mask) {
    std::vector<int> facet;
    for (int j = 0; j < d; ++j) facet.push_back(2 * j + ((mask >> j) & 1));
    p.facets.push_back(std::move(facet));
  }
  finish_model(p);
  return p;
}

std::vector<Hyperplane> tangent_cone(const PolytopeModel& p, const std::vector<int>& face) {
  if (face.empty()) throw std::invalid_argument("tangent_cone: empty face");
  std::vector<int> sorted = face;
  std::sort(sorted.begin(), sorted.end());
  std::vector<Hyperplane> active;
  for (std::size_t f = 0; f < p.facets.size(); ++f)
    if (std::includes(p.facets[f].begin(), p.facets[f].end(), sorted.begin(), sorted.end()))
      active.push_back(p.hyperplanes[f]);
  if (active.empty()) throw std::invalid_argument("tangent_cone: not a proper face of the model");
  return active;
}

FVector dual_f_vector(const FVector& fv) {
  FVector dual = fv;
  std::reverse(dual.counts.begin(), dual.counts.end());
  return dual;
}

}  // namespace polyface::polytope
