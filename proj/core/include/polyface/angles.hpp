#pragma once

#include <Eigen/Dense>
#include <cstdint>

#include "polyface/polytope.hpp"

namespace polyface::angles {

using polytope::FaceLattice;
using polytope::NumericModel;
using polytope::PolytopeModel;

/// Monte Carlo estimate with the data needed to replay it.
struct AngleEstimate {
  double mean = 0.0;
  double std_error = 0.0;
  uint64_t samples = 0;
  uint64_t seed = 0;
  uint64_t resampled = 0;  // ambiguous draws discarded and redrawn
};

/// Default ambiguity tolerance for boundary-grazing samples.
inline constexpr double kDefaultTolerance = 1e-9;

/// Fraction of uniformly random directions lying in the tangent cone at
/// relint of the face: equals the local-volume solid angle. Directions within
/// tolerance of an active facet hyperplane are redrawn and counted.
AngleEstimate solid_angle(const NumericModel& body, int k, int face, uint64_t samples,
                          uint64_t seed, double tolerance = kDefaultTolerance);

/// Shared-sample estimator of the solid-angle sum over all k-faces: each
/// direction is tested against every k-face's tangent cone at once.
AngleEstimate solid_angle_sum(const NumericModel& body, int k, uint64_t samples, uint64_t seed,
                              double tolerance = kDefaultTolerance);

enum class Survival { Yes, No, Ambiguous };

/// Does some functional from the column span of W, constant on the face,
/// strictly dominate every other vertex? Decided by the margin LP; margins
/// inside (tolerance/100, tolerance] are reported Ambiguous for redraw.
Survival face_survives(const NumericModel& body, int k, int face, const Eigen::MatrixXd& W,
                       double tolerance = kDefaultTolerance);

struct GrassmannEstimate {
  AngleEstimate est;
  uint64_t crosschecked = 0;  // per-sample cone-test comparisons run
  uint64_t agreements = 0;    // ... that agreed with the survival test
};

/// Probability that a uniformly random m-subspace through relint of the face
/// meets the polytope only there. Every sample runs both the survival LP
/// (functionals from the orthogonal complement) and the independent
/// cone-intersection test; disagreements are counted, never resampled.
GrassmannEstimate grassmann_angle(const NumericModel& body, int k, int face, int m,
                                  uint64_t samples, uint64_t seed,
                                  double tolerance = kDefaultTolerance);

/// Shared-sample sum over all k-faces; simultaneously estimates the expected
/// face count of a random codimension-m projection.
GrassmannEstimate grassmann_angle_sum(const NumericModel& body, int k, int m, uint64_t samples,
                                      uint64_t seed, bool crosscheck = true,
                                      double tolerance = kDefaultTolerance);

struct FeldmanReport {
  double lhs = 0.0;  // f_k - 2 * (solid-angle sum estimate)
  double lhs_std_error = 0.0;
  double rhs = 0.0;  // mean surviving k-faces under a random codim-1 projection
  double rhs_std_error = 0.0;
  double zscore = 0.0;
  AngleEstimate angle_sum;
  GrassmannEstimate survivors;
};

/// Two-sided check of f_k - 2*phi_k == E f_k(projection), estimated on
/// independent streams.
FeldmanReport feldman_check(const NumericModel& body, int k, uint64_t samples, uint64_t seed,
                            double tolerance = kDefaultTolerance);

struct DeficiencyReport {
  double lhs = 0.0;  // gamma^2 estimate at the face
  double lhs_std_error = 0.0;
  double rhs = 0.0;  // 1 - sum of facet-intrinsic solid angles at the face
  double rhs_std_error = 0.0;
  double zscore = 0.0;
  uint64_t resampled = 0;  // across both sides
};

/// Angle-deficiency identity at a face of dimension <= dim-3: the
/// codimension-2 Grassmann angle against one minus the facet-interior solid
/// angles summed over the facets containing the face.
DeficiencyReport deficiency_check(const PolytopeModel& p, const FaceLattice& lattice, int k,
                                  int face, uint64_t samples, uint64_t seed,
                                  double tolerance = kDefaultTolerance);

struct GapReport {
  double face_count = 0.0;
  double ratio_term = 0.0;  // rho(d, d-k-1) * f_{d-1}
  double gamma_estimate = 0.0;
  double gamma_std_error = 0.0;
  double gap = 0.0;  // f_k - ratio_term - gamma_estimate; expected >= 0
  bool pass = false;  // gap >= -3 * std_error
  uint64_t resampled = 0;
};

/// Statistical check of f_k >= rho(d,d-k-1) f_{d-1} + gamma_k^2.
GapReport grassmann_gap_check(const PolytopeModel& p, const FaceLattice& lattice, int k,
                              uint64_t samples, uint64_t seed,
                              double tolerance = kDefaultTolerance);

struct AngleSumBoundReport {
  double estimate = 0.0;
  double std_error = 0.0;
  double target = 0.0;  // rho(dim+1, dim-k)
  bool pass = false;    // estimate >= target - 3 * std_error
  uint64_t resampled = 0;
};

/// Statistical check of the solid-angle-sum lower bound phi_k(Q) >=
/// rho(q+1, q-k) for a q-dimensional body Q.
AngleSumBoundReport angle_sum_bound_check(const NumericModel& body, int k, uint64_t samples,
                                          uint64_t seed,
                                          double tolerance = kDefaultTolerance);

}  // namespace polyface::angles
