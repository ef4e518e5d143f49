#include "polyface/angles.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "polyface/facecount.hpp"
#include "polyface/lp.hpp"
#include "polyface/sample_stream.hpp"

namespace polyface::angles {

namespace {

constexpr double kLpEps = 1e-11;
constexpr int kMaxRedraws = 100000;

// Exceptions must not escape an OpenMP region; capture the first one with
// its sample index and rethrow after the loop.
class ParallelGuard {
 public:
  bool tripped() const { return failed_.load(std::memory_order_relaxed); }
  void capture(uint64_t sample, const std::exception& e) {
#pragma omp critical(polyface_angles_guard)
    {
      if (!failed_.load()) {
        message_ = "sample " + std::to_string(sample) + ": " + e.what();
        failed_.store(true);
      }
    }
  }
  void rethrow() const {
    if (failed_.load()) throw std::runtime_error(message_);
  }

 private:
  std::atomic<bool> failed_{false};
  std::string message_;
};

void check_face_args(const NumericModel& body, int k, int face) {
  if (k < 0 || k >= body.dim) throw std::invalid_argument("face dimension out of range [0, dim-1]");
  if (face < 0 || face >= body.face_count(k)) throw std::invalid_argument("face index out of range");
}

double bernoulli_stderr(double p, uint64_t n) {
  return std::sqrt(std::max(p * (1.0 - p), 0.0) / static_cast<double>(n));
}

// Standard error of a mean from integer sum / sum of squares.
double count_stderr(int64_t sum, int64_t sumsq, uint64_t n) {
  if (n < 2) return 0.0;
  const double nn = static_cast<double>(n);
  const double mean = static_cast<double>(sum) / nn;
  const double var = (static_cast<double>(sumsq) - nn * mean * mean) / (nn - 1.0);
  return std::sqrt(std::max(var, 0.0) / nn);
}

Eigen::VectorXd gaussian(SampleRng& rng, int dim) {
  Eigen::VectorXd u(dim);
  for (int j = 0; j < dim; ++j) u(j) = rng.normal();
  return u;
}

// -1 outside the cone, +1 inside, 0 within tolerance of an active hyperplane.
int cone_side(const NumericModel& body, const std::vector<int>& active, const Eigen::VectorXd& u,
              double unorm, double tolerance) {
  bool inside = true;
  for (int r : active) {
    const double s = body.facet_normals.row(r).dot(u);
    if (std::abs(s) < tolerance * unorm) return 0;
    if (s > 0.0) inside = false;
  }
  return inside ? 1 : -1;
}

std::vector<std::vector<double>> project_vertices(const NumericModel& body,
                                                  const Eigen::MatrixXd& W) {
  const Eigen::MatrixXd Y = body.vertices * W;
  std::vector<std::vector<double>> ys(Y.rows());
  for (Eigen::Index i = 0; i < Y.rows(); ++i) {
    ys[static_cast<std::size_t>(i)].assign(Y.row(i).begin(), Y.row(i).end());
  }
  return ys;
}

Survival classify_margin(double margin, double tolerance) {
  if (margin < 0.0) return Survival::Ambiguous;  // near-degenerate LP, redraw
  if (margin > tolerance) return Survival::Yes;
  if (margin <= tolerance * 1e-2) return Survival::No;
  return Survival::Ambiguous;
}

// Cone test: does the sampled subspace meet the tangent cone only at 0?
Survival cone_survives(const NumericModel& body, const std::vector<int>& active,
                       const Eigen::MatrixXd& S) {
  const int m = static_cast<int>(S.cols());
  std::vector<std::vector<double>> B;
  B.reserve(active.size());
  for (int r : active) {
    const Eigen::RowVectorXd row = body.facet_normals.row(r) * S;
    B.emplace_back(row.begin(), row.end());
  }
  const double reach = lp::cone_box_reach(B, m, kLpEps);
  if (reach < 0.0) return Survival::Ambiguous;  // near-degenerate LP, redraw
  if (reach <= 0.1) return Survival::Yes;       // trivial intersection
  if (reach >= 0.9) return Survival::No;
  return Survival::Ambiguous;
}

// Haar-uniform m-subspace basis S and orthonormal complement W via one QR.
void draw_subspace(SampleRng& rng, int dim, int m, Eigen::MatrixXd& S, Eigen::MatrixXd& W) {
  Eigen::MatrixXd G(dim, m);
  for (int c = 0; c < m; ++c)
    for (int r = 0; r < dim; ++r) G(r, c) = rng.normal();
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(G);
  const Eigen::MatrixXd Q = qr.householderQ() * Eigen::MatrixXd::Identity(dim, dim);
  S = Q.leftCols(m);
  W = Q.rightCols(dim - m);
}

}  // namespace

AngleEstimate solid_angle(const NumericModel& body, int k, int face, uint64_t samples,
                          uint64_t seed, double tolerance) {
  check_face_args(body, k, face);
  if (samples < 1) throw std::invalid_argument("samples must be >= 1");
  const std::vector<int>& active = body.face_facets[k][face];
  if (active.empty()) throw std::invalid_argument("solid_angle: face has no active facets");

  const int64_t n = static_cast<int64_t>(samples);
  int64_t hits = 0;
  int64_t redraws = 0;
  ParallelGuard guard;
#pragma omp parallel for reduction(+ : hits, redraws) schedule(static)
  for (int64_t i = 0; i < n; ++i) {
    if (guard.tripped()) continue;
    try {
      SampleRng rng(seed, static_cast<uint64_t>(i));
      for (int attempt = 0;; ++attempt) {
        if (attempt > kMaxRedraws) throw std::runtime_error("solid_angle: redraw limit hit");
        const Eigen::VectorXd u = gaussian(rng, body.dim);
        const double unorm = u.norm();
        if (unorm == 0.0) {
          ++redraws;
          continue;
        }
        const int side = cone_side(body, active, u, unorm, tolerance);
        if (side == 0) {
          ++redraws;
          continue;
        }
        hits += side > 0;
        break;
      }
    } catch (const std::exception& e) {
      guard.capture(static_cast<uint64_t>(i), e);
    }
  }
  guard.rethrow();
  AngleEstimate est;
  est.samples = samples;
  est.seed = seed;
  est.resampled = static_cast<uint64_t>(redraws);
  est.mean = static_cast<double>(hits) / static_cast<double>(samples);
  est.std_error = bernoulli_stderr(est.mean, samples);
  return est;
}

AngleEstimate solid_angle_sum(const NumericModel& body, int k, uint64_t samples, uint64_t seed,
                              double tolerance) {
  if (k < 0 || k >= body.dim) throw std::invalid_argument("face dimension out of range [0, dim-1]");
  if (samples < 1) throw std::invalid_argument("samples must be >= 1");
  const auto& level = body.face_facets[k];

  const int64_t n = static_cast<int64_t>(samples);
  int64_t total = 0, totalsq = 0, redraws = 0;
  ParallelGuard guard;
#pragma omp parallel for reduction(+ : total, totalsq, redraws) schedule(static)
  for (int64_t i = 0; i < n; ++i) {
    if (guard.tripped()) continue;
    try {
      SampleRng rng(seed, static_cast<uint64_t>(i));
      for (int attempt = 0;; ++attempt) {
        if (attempt > kMaxRedraws) throw std::runtime_error("solid_angle_sum: redraw limit hit");
        const Eigen::VectorXd u = gaussian(rng, body.dim);
        const double unorm = u.norm();
        if (unorm == 0.0) {
          ++redraws;
          continue;
        }
        int64_t count = 0;
        bool ambiguous = false;
        for (const auto& active : level) {
          const int side = cone_side(body, active, u, unorm, tolerance);
          if (side == 0) {
            ambiguous = true;
            break;
          }
          count += side > 0;
        }
        if (ambiguous) {
          ++redraws;
          continue;
        }
        total += count;
        totalsq += count * count;
        break;
      }
    } catch (const std::exception& e) {
      guard.capture(static_cast<uint64_t>(i), e);
    }
  }
  guard.rethrow();
  AngleEstimate est;
  est.samples = samples;
  est.seed = seed;
  est.resampled = static_cast<uint64_t>(redraws);
  est.mean = static_cast<double>(total) / static_cast<double>(samples);
  est.std_error = count_stderr(total, totalsq, samples);
  return est;
}

Survival face_survives(const NumericModel& body, int k, int face, const Eigen::MatrixXd& W,
                       double tolerance) {
  check_face_args(body, k, face);
  const auto ys = project_vertices(body, W);
  const double margin = lp::survival_margin(ys, body.faces[k][face], kLpEps);
  return classify_margin(margin, tolerance);
}

GrassmannEstimate grassmann_angle(const NumericModel& body, int k, int face, int m,
                                  uint64_t samples, uint64_t seed, double tolerance) {
  check_face_args(body, k, face);
  if (m < 1 || m > body.dim - 1) throw std::invalid_argument("m out of range [1, dim-1]");
  if (samples < 1) throw std::invalid_argument("samples must be >= 1");
  const std::vector<int>& face_verts = body.faces[k][face];
  const std::vector<int>& active = body.face_facets[k][face];

  const int64_t n = static_cast<int64_t>(samples);
  int64_t hits = 0, redraws = 0, agree = 0, checked = 0;
  ParallelGuard guard;
#pragma omp parallel for reduction(+ : hits, redraws, agree, checked) schedule(static)
  for (int64_t i = 0; i < n; ++i) {
    if (guard.tripped()) continue;
    try {
      SampleRng rng(seed, static_cast<uint64_t>(i));
      Eigen::MatrixXd S, W;
      for (int attempt = 0;; ++attempt) {
        if (attempt > kMaxRedraws) throw std::runtime_error("grassmann_angle: redraw limit hit");
        draw_subspace(rng, body.dim, m, S, W);
        const auto ys = project_vertices(body, W);
        const Survival lp_side =
            classify_margin(lp::survival_margin(ys, face_verts, kLpEps), tolerance);
        const Survival cone = cone_survives(body, active, S);
        if (lp_side == Survival::Ambiguous || cone == Survival::Ambiguous) {
          ++redraws;
          continue;
        }
        hits += lp_side == Survival::Yes;
        ++checked;
        agree += lp_side == cone;
        break;
      }
    } catch (const std::exception& e) {
      guard.capture(static_cast<uint64_t>(i), e);
    }
  }
  guard.rethrow();
  GrassmannEstimate g;
  g.est.samples = samples;
  g.est.seed = seed;
  g.est.resampled = static_cast<uint64_t>(redraws);
  g.est.mean = static_cast<double>(hits) / static_cast<double>(samples);
  g.est.std_error = bernoulli_stderr(g.est.mean, samples);
  g.crosschecked = static_cast<uint64_t>(checked);
  g.agreements = static_cast<uint64_t>(agree);
  return g;
}

GrassmannEstimate grassmann_angle_sum(const NumericModel& body, int k, int m, uint64_t samples,
                                      uint64_t seed, bool crosscheck, double tolerance) {
  if (k < 0 || k >= body.dim) throw std::invalid_argument("face dimension out of range [0, dim-1]");
  if (m < 1 || m > body.dim - 1) throw std::invalid_argument("m out of range [1, dim-1]");
  if (samples < 1) throw std::invalid_argument("samples must be >= 1");
  const auto& level = body.faces[k];

  const int64_t n = static_cast<int64_t>(samples);
  int64_t total = 0, totalsq = 0, redraws = 0, agree = 0, checked = 0;
  ParallelGuard guard;
#pragma omp parallel for reduction(+ : total, totalsq, redraws, agree, checked) schedule(static)
  for (int64_t i = 0; i < n; ++i) {
    if (guard.tripped()) continue;
    try {
      SampleRng rng(seed, static_cast<uint64_t>(i));
      Eigen::MatrixXd S, W;
      for (int attempt = 0;; ++attempt) {
        if (attempt > kMaxRedraws)
          throw std::runtime_error("grassmann_angle_sum: redraw limit hit");
        draw_subspace(rng, body.dim, m, S, W);
        const auto ys = project_vertices(body, W);
        int64_t count = 0, agree_local = 0, checked_local = 0;
        bool ambiguous = false;
        for (std::size_t f = 0; f < level.size(); ++f) {
          const Survival lp_side =
              classify_margin(lp::survival_margin(ys, level[f], kLpEps), tolerance);
          if (lp_side == Survival::Ambiguous) {
            ambiguous = true;
            break;
          }
          if (crosscheck) {
            const Survival cone = cone_survives(body, body.face_facets[k][f], S);
            if (cone == Survival::Ambiguous) {
              ambiguous = true;
              break;
            }
            ++checked_local;
            agree_local += lp_side == cone;
          }
          count += lp_side == Survival::Yes;
        }
        if (ambiguous) {
          ++redraws;
          continue;
        }
        total += count;
        totalsq += count * count;
        agree += agree_local;
        checked += checked_local;
        break;
      }
    } catch (const std::exception& e) {
      guard.capture(static_cast<uint64_t>(i), e);
    }
  }
  guard.rethrow();
  GrassmannEstimate g;
  g.est.samples = samples;
  g.est.seed = seed;
  g.est.resampled = static_cast<uint64_t>(redraws);
  g.est.mean = static_cast<double>(total) / static_cast<double>(samples);
  g.est.std_error = count_stderr(total, totalsq, samples);
  g.crosschecked = static_cast<uint64_t>(checked);
  g.agreements = static_cast<uint64_t>(agree);
  return g;
}

namespace {

double zscore_of(double a, double b, double se) {
  const double diff = std::abs(a - b);
  if (se == 0.0) return diff == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
  return diff / se;
}

}  // namespace

FeldmanReport feldman_check(const NumericModel& body, int k, uint64_t samples, uint64_t seed,
                            double tolerance) {
  FeldmanReport r;
  r.angle_sum = solid_angle_sum(body, k, samples, derive_seed(seed, 0xA1), tolerance);
  r.survivors = grassmann_angle_sum(body, k, 1, samples, derive_seed(seed, 0xB2), true, tolerance);
  const double fk = body.face_count(k);
  r.lhs = fk - 2.0 * r.angle_sum.mean;
  r.lhs_std_error = 2.0 * r.angle_sum.std_error;
  r.rhs = r.survivors.est.mean;
  r.rhs_std_error = r.survivors.est.std_error;
  r.zscore = zscore_of(r.lhs, r.rhs, std::hypot(r.lhs_std_error, r.rhs_std_error));
  return r;
}

DeficiencyReport deficiency_check(const PolytopeModel& p, const FaceLattice& lattice, int k,
                                  int face, uint64_t samples, uint64_t seed,
                                  double tolerance) {
  if (p.dim < 3) throw std::invalid_argument("deficiency_check: need dim >= 3");
  if (k < 0 || k > p.dim - 3)
    throw std::invalid_argument("deficiency_check: face dimension must be <= dim-3");
  const NumericModel body = to_numeric(p, lattice);
  check_face_args(body, k, face);

  DeficiencyReport r;
  const GrassmannEstimate g =
      grassmann_angle(body, k, face, 2, samples, derive_seed(seed, 0x6A), tolerance);
  r.lhs = g.est.mean;
  r.lhs_std_error = g.est.std_error;
  r.resampled = g.est.resampled;

  double angle_total = 0.0, var = 0.0;
  const auto& face_verts = lattice.faces[k][face];
  for (int f : lattice.containing_facets[k][face]) {
    const NumericModel fb = facet_intrinsic(p, lattice, f);
    std::vector<int> local;
    local.reserve(face_verts.size());
    for (int v : face_verts) {
      const auto it = std::lower_bound(fb.source_vertices.begin(), fb.source_vertices.end(), v);
      local.push_back(static_cast<int>(it - fb.source_vertices.begin()));
    }
    std::sort(local.begin(), local.end());
    const int idx = fb.find(k, local);
    if (idx < 0) throw std::runtime_error("deficiency_check: face missing from intrinsic facet");
    const AngleEstimate a = solid_angle(fb, k, idx, samples,
                                        derive_seed(seed, 0x100 + static_cast<uint64_t>(f)),
                                        tolerance);
    angle_total += a.mean;
    var += a.std_error * a.std_error;
    r.resampled += a.resampled;
  }
  r.rhs = 1.0 - angle_total;
  r.rhs_std_error = std::sqrt(var);
  r.zscore = zscore_of(r.lhs, r.rhs, std::hypot(r.lhs_std_error, r.rhs_std_error));
  return r;
}

GapReport grassmann_gap_check(const PolytopeModel& p, const FaceLattice& lattice, int k,
                              uint64_t samples, uint64_t seed, double tolerance) {
  if (p.dim < 3) throw std::invalid_argument("grassmann_gap_check: need dim >= 3");
  if (k < 0 || k > p.dim - 1) throw std::invalid_argument("grassmann_gap_check: k out of range");
  const NumericModel body = to_numeric(p, lattice);
  const GrassmannEstimate g = grassmann_angle_sum(body, k, 2, samples, seed, true, tolerance);
  GapReport r;
  r.face_count = static_cast<double>(lattice.faces[k].size());
  r.ratio_term = static_cast<double>(facecount::rho(p.dim, p.dim - k - 1)) *
                 static_cast<double>(p.facets.size());
  r.gamma_estimate = g.est.mean;
  r.gamma_std_error = g.est.std_error;
  r.gap = r.face_count - r.ratio_term - r.gamma_estimate;
  r.pass = r.gap >= -3.0 * r.gamma_std_error;
  r.resampled = g.est.resampled;
  return r;
}

AngleSumBoundReport angle_sum_bound_check(const NumericModel& body, int k, uint64_t samples,
                                          uint64_t seed, double tolerance) {
  if (k < 0 || k > body.dim - 1)
    throw std::invalid_argument("angle_sum_bound_check: k out of range");
  const AngleEstimate est = solid_angle_sum(body, k, samples, seed, tolerance);
  AngleSumBoundReport r;
  r.estimate = est.mean;
  r.std_error = est.std_error;
  r.resampled = est.resampled;
  r.target = static_cast<double>(facecount::rho(body.dim + 1, body.dim - k));
  r.pass = r.estimate >= r.target - 3.0 * r.std_error;
  return r;
}

}  // namespace polyface::angles
