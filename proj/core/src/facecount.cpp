#include "polyface/facecount.hpp"

#include <sstream>
#include <stdexcept>

namespace polyface {

bool FVector::euler_ok() const {
  if (static_cast<int>(counts.size()) != dim) return false;
  Int sum = 0;
  for (int k = 0; k < dim; ++k) sum += (k % 2 == 0) ? counts[k] : -counts[k];
  return sum == 1 + ((dim - 1) % 2 == 0 ? 1 : -1);
}

std::string to_string(const FVector& fv) {
  std::ostringstream os;
  os << "(";
  for (int k = 0; k < fv.dim; ++k) {
    if (k) os << " ";
    os << fv.counts[k];
  }
  os << ")";
  return os.str();
}

namespace facecount {

Int binomial(const Int& a, const Int& b) {
  if (a < 0) throw std::invalid_argument("binomial: negative upper index " + a.str());
  if (b < 0 || b > a) return 0;
  Int bb = b;
  if (a - b < bb) bb = a - b;
  Int result = 1;
  for (Int i = 1; i <= bb; ++i) {
    result *= a - bb + i;
    result /= i;  // exact: result is C(a-bb+i, i) at each step
  }
  return result;
}

Int binomial(long a, long b) { return binomial(Int(a), Int(b)); }

Rat rho(int d, int k) {
  if (d < 1) throw std::invalid_argument("rho: d must be positive");
  if (k < 0 || k > d - 1) throw std::invalid_argument("rho: k out of range [0, d-1]");
  return Rat(binomial(Int((d + 1) / 2), Int(k)) + binomial(Int(d / 2), Int(k)), 2);
}

Int cyclic_face_count(int d, int n, int k) {
  if (n < 1 || d < 0 || k < 0)
    throw std::invalid_argument("cyclic_face_count: need n >= 1, d >= 0, k >= 0");
  if (n - k - 1 == 0)
    throw std::domain_error("cyclic_face_count: prefactor undefined at k = n-1 (d=" +
                            std::to_string(d) + ", n=" + std::to_string(n) +
                            ", k=" + std::to_string(k) + ")");
  const int delta = d % 2;
  Int sum = 0;
  for (int j = 0; j <= d / 2; ++j)
    sum += binomial(Int(n - 1 - j), Int(k + 1 - j)) * binomial(Int(n - k - 1), Int(2 * j - k - 1 + delta));
  const Rat value = Rat(Int(n) - Int(delta) * (n - k - 2), Int(n - k - 1)) * sum;
  return to_integer(value);  // the expression is integral whenever defined
}

Int cyclic_facet_count(int d, int n) {
  if (d < 2 || n <= d) throw std::invalid_argument("cyclic_facet_count: need n > d >= 2");
  return binomial(Int(n - (d + 1) / 2), Int(n - d)) + binomial(Int(n - (d + 2) / 2), Int(n - d));
}

FVector cyclic_f_vector(int d, int n) {
  if (d < 2 || n <= d) throw std::invalid_argument("cyclic_f_vector: need n > d >= 2");
  FVector fv;
  fv.dim = d;
  fv.counts.reserve(d);
  for (int k = 0; k < d; ++k) fv.counts.push_back(cyclic_face_count(d, n, k));
  if (!fv.euler_ok())
    throw std::runtime_error("cyclic_f_vector: Euler relation violated for d=" +
                             std::to_string(d) + ", n=" + std::to_string(n));
  return fv;
}

Int reduction_residual(int d, int n, int k) {
  if (d < 2 || n <= d || k < 0 || k > d - 1)
    throw std::invalid_argument("reduction_residual: need n > d >= 2, 0 <= k <= d-1");
  const Rat value = Rat(cyclic_face_count(d, n, k)) -
                    rho(d, d - k - 1) * Rat(cyclic_facet_count(d, n)) -
                    Rat(cyclic_face_count(d - 2, n, k));
  return to_integer(value);
}

std::vector<TightnessRow> tightness_table(int d, int k, const std::vector<int>& ns) {
  if (d < 2 || k < 0 || k > d - 1)
    throw std::invalid_argument("tightness_table: need d >= 2, 0 <= k <= d-1");
  std::vector<TightnessRow> rows;
  rows.reserve(ns.size());
  const Rat limit = rho(d, d - k - 1);
  for (int n : ns) {
    if (n <= d) throw std::invalid_argument("tightness_table: each n must exceed d");
    rows.push_back({n, Rat(cyclic_face_count(d, n, k), cyclic_facet_count(d, n)) - limit});
  }
  return rows;
}

Int barnette_bound(int d, const Int& m, int k) {
  if (d < 2 || m < d + 1) throw std::invalid_argument("barnette_bound: need d >= 2, m >= d+1");
  if (k < 0 || k > d - 2) throw std::invalid_argument("barnette_bound: k out of range [0, d-2]");
  if (k == 0) return Int(d - 1) * m - Int(d + 1) * (d - 2);
  return binomial(Int(d), Int(k + 1)) * m - binomial(Int(d + 1), Int(k + 1)) * (d - k - 1);
}

std::vector<BoundReport> hinman_bounds(int d, int k, std::optional<Int> f0,
                                       std::optional<Int> fd1, bool improved,
                                       std::optional<Int> fk) {
  if (d < 1 || k < 0 || k > d - 1)
    throw std::invalid_argument("hinman_bounds: need d >= 1, 0 <= k <= d-1");
  if (!f0 && !fd1) throw std::invalid_argument("hinman_bounds: supply f0 and/or fd1");
  const std::string name = improved ? "hinman-improved" : "hinman-linear";
  std::vector<BoundReport> reports;
  auto emit = [&](const Int& input, Rat value) {
    BoundReport r{d, k, input, name, std::move(value), std::nullopt};
    if (fk) r.satisfied = Rat(*fk) >= r.value;
    reports.push_back(std::move(r));
  };
  if (f0) {
    Rat v = rho(d, k) * Rat(*f0);
    if (improved) v += Rat(binomial(Int(d - 1), Int(k - 1)));
    emit(*f0, std::move(v));
  }
  if (fd1) {
    Rat v = rho(d, d - k - 1) * Rat(*fd1);
    if (improved) v += Rat(binomial(Int(d - 1), Int(k + 1)));
    emit(*fd1, std::move(v));
  }
  return reports;
}

std::optional<GubcValue> gubc_values(int d, const Int& m, int k) {
  if (d < 2 || m < d + 1) throw std::invalid_argument("gubc_values: need d >= 2, m >= d+1");
  if (k < 0 || k > d - 1) throw std::invalid_argument("gubc_values: k out of range [0, d-1]");
  // facet count is strictly increasing in n, so bisect for the largest
  // admissible n after doubling past m.
  int lo = d + 1;
  if (cyclic_facet_count(d, lo) > m) return std::nullopt;  // unreachable for m >= d+1
  int hi = lo;
  while (cyclic_facet_count(d, hi) <= m) {
    if (hi > (1 << 28)) throw std::runtime_error("gubc_values: n overflow");
    hi *= 2;
  }
  while (hi - lo > 1) {
    const int mid = lo + (hi - lo) / 2;
    (cyclic_facet_count(d, mid) <= m ? lo : hi) = mid;
  }
  return GubcValue{lo, cyclic_face_count(d, lo, k)};
}

}  // namespace facecount
}  // namespace polyface
