#pragma once

#include <optional>
#include <string>
#include <vector>

#include "polyface/numbers.hpp"

namespace polyface {

/// Face-count sequence (f_0, ..., f_{d-1}) of a d-polytope.
struct FVector {
  int dim = 0;
  std::vector<Int> counts;  // counts[k] = number of k-dimensional faces

  /// Euler relation: sum_k (-1)^k f_k == 1 + (-1)^(dim-1).
  bool euler_ok() const;
  bool operator==(const FVector&) const = default;
};

std::string to_string(const FVector& fv);

namespace facecount {

/// C(a, b) with the out-of-range convention: 0 whenever b < 0 or b > a.
/// Negative a is rejected (std::invalid_argument); no generalized binomials.
Int binomial(const Int& a, const Int& b);
Int binomial(long a, long b);

/// rho(d, k) = [C(ceil(d/2), k) + C(floor(d/2), k)] / 2, the sharp linear
/// face-ratio coefficient. Requires 0 <= k <= d-1. Zero exactly when
/// k > ceil(d/2).
Rat rho(int d, int k);

/// Number of k-faces of a cyclic d-polytope on n vertices:
///
///   f_k = (n - delta*(n-k-2)) / (n-k-1) *
///         sum_{j=0}^{floor(d/2)} C(n-1-j, k+1-j) * C(n-k-1, 2j-k-1+delta),
///
/// delta = d mod 2. Evaluated under the extended convention: the expression
/// is computed as written for any d >= 0, k >= 0, n >= 1 with the binomial
/// convention above (so d < 2 and k > d-1 are meaningful and typically give
/// 0 or a lower-dimensional count). The prefactor is undefined at k = n-1;
/// that input is rejected with std::domain_error rather than patched.
Int cyclic_face_count(int d, int n, int k);

/// Facet count of the cyclic polytope:
///   C(n - floor((d+1)/2), n-d) + C(n - floor((d+2)/2), n-d).
/// Agrees with cyclic_face_count(d, n, d-1).
Int cyclic_facet_count(int d, int n);

/// Full f-vector of C(d,n); validates the Euler relation.
FVector cyclic_f_vector(int d, int n);

/// Residual of the cross-dimension reduction identity
///   f_k(C(d,n)) - rho(d, d-k-1) * f_{d-1}(C(d,n)) - f_k(C(d-2,n)),
/// computed in exact rationals; the identity asserts it is 0.
/// Propagates the division guard of cyclic_face_count for the (d-2)-term.
Int reduction_residual(int d, int n, int k);

struct TightnessRow {
  int n;
  Rat residual;  // f_k/f_{d-1} - rho(d, d-k-1), exact
};

/// Exact gap between the face ratio of C(d,n) and its asymptotic limit, for
/// each requested n. Residuals are nonnegative and shrink like Theta(1/n).
std::vector<TightnessRow> tightness_table(int d, int k, const std::vector<int>& ns);

/// Lower bound on f_k of a simple d-polytope with m facets:
///   k = 0:            (d-1)m - (d+1)(d-2)
///   1 <= k <= d-2:    C(d, k+1)m - C(d+1, k+1)(d-k-1)
Int barnette_bound(int d, const Int& m, int k);

struct BoundReport {
  int d = 0;
  int k = 0;
  Int input;          // the supplied f_0 or f_{d-1}
  std::string bound;  // "barnette" | "hinman-linear" | "hinman-improved" | "gubc"
  Rat value;
  std::optional<bool> satisfied;  // set when an actual f_k is supplied
};

/// Ratio bounds on f_k: value rho(d,k)*f0 (+ C(d-1,k-1) if improved) when f0
/// is supplied, and rho(d,d-k-1)*fd1 (+ C(d-1,k+1) if improved) when fd1 is.
/// One report per supplied input; at least one input is required.
std::vector<BoundReport> hinman_bounds(int d, int k, std::optional<Int> f0,
                                       std::optional<Int> fd1, bool improved,
                                       std::optional<Int> fk = std::nullopt);

struct GubcValue {
  int n = 0;  // largest n with f_{d-1}(C(d,n)) <= m
  Int bound;  // f_k(C(d,n)) — conjectural lower bound, not a theorem
};

/// Conjectured lower bound on f_k over d-polytopes with m facets (GUBC).
/// Callers must surface the value as CONJECTURAL.
std::optional<GubcValue> gubc_values(int d, const Int& m, int k);

}  // namespace facecount
}  // namespace polyface
