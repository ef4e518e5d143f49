#pragma once

#include <stdexcept>
#include <type_traits>
#include <vector>

namespace polyface::lp {

enum class Status { Optimal, Unbounded, Infeasible };

inline constexpr int kMaxPivots = 20000;

enum RowKind : int { LE = 0, GE = 1, EQ = 2 };

/// max c.x  subject to  A x {<=,>=,==} b,  x >= 0.
template <class T>
struct Dense {
  int nvars = 0;
  std::vector<std::vector<T>> rows;
  std::vector<T> rhs;
  std::vector<RowKind> kinds;
  std::vector<T> objective;

  void add_row(std::vector<T> a, RowKind kind, T b) {
    rows.push_back(std::move(a));
    kinds.push_back(kind);
    rhs.push_back(std::move(b));
  }
};

template <class T>
struct Solution {
  Status status = Status::Optimal;
  T value{};
  std::vector<T> x;
};

/// Two-phase dense simplex with Bland's rule (no cycling). eps = 0 gives the
/// exact path for rational T; a small positive eps gives the float path.
template <class T>
Solution<T> maximize(const Dense<T>& problem, const T& eps) {
  const int n = problem.nvars;
  const int m = static_cast<int>(problem.rows.size());

  // Column layout: [ structural | slack/surplus | artificial | rhs ].
  int nslack = 0;
  for (RowKind k : problem.kinds)
    if (k != EQ) ++nslack;
  std::vector<int> artificial_rows;
  // A row needs an artificial unless its slack can start basic (kind LE with
  // rhs >= 0 once normalized; GE rows and EQ rows always need one).
  std::vector<std::vector<T>> tab(m + 1);
  std::vector<int> basis(m, -1);

  int total = n + nslack;  // artificials appended below
  std::vector<int> row_art(m, -1);
  {
    int scount = 0;
    std::vector<int> slack_col(m, -1);
    std::vector<RowKind> kinds = problem.kinds;
    std::vector<std::vector<T>> rows = problem.rows;
    std::vector<T> rhs = problem.rhs;
    for (int i = 0; i < m; ++i) {
      if (rhs[i] < T(0)) {
        for (auto& v : rows[i]) v = -v;
        rhs[i] = -rhs[i];
        if (kinds[i] == LE)
          kinds[i] = GE;
        else if (kinds[i] == GE)
          kinds[i] = LE;
      }
      if (kinds[i] != EQ) slack_col[i] = n + scount++;
    }
    int art = 0;
    for (int i = 0; i < m; ++i)
      if (kinds[i] != LE) row_art[i] = total + art++;
    total += art;

    for (int i = 0; i <= m; ++i) tab[i].assign(total + 1, T(0));
    for (int i = 0; i < m; ++i) {
      for (int j = 0; j < n; ++j) tab[i][j] = rows[i][j];
      tab[i][total] = rhs[i];
      if (slack_col[i] >= 0) tab[i][slack_col[i]] = kinds[i] == LE ? T(1) : T(-1);
      if (kinds[i] == LE) {
        basis[i] = slack_col[i];
      } else {
        tab[i][row_art[i]] = T(1);
        basis[i] = row_art[i];
        artificial_rows.push_back(i);
      }
    }
  }
  const int rhs_col = total;
  const int first_art = n + nslack;

  auto pivot = [&](int prow, int pcol) {
    const T inv = T(1) / tab[prow][pcol];
    for (int j = 0; j <= total; ++j) tab[prow][j] *= inv;
    for (int i = 0; i <= m; ++i) {
      if (i == prow) continue;
      const T f = tab[i][pcol];
      if (f == T(0)) continue;
      for (int j = 0; j <= total; ++j) tab[i][j] -= f * tab[prow][j];
    }
    basis[prow] = pcol;
  };

  // Bland: entering = lowest-index column with reduced cost above eps;
  // leaving = min ratio, ties broken by lowest basis variable index.
  auto run_simplex = [&](int ncols) -> Status {
    for (int iter = 0; iter < kMaxPivots; ++iter) {
      int pcol = -1;
      for (int j = 0; j < ncols; ++j) {
        if (tab[m][j] > eps) {
          pcol = j;
          break;
        }
      }
      if (pcol < 0) return Status::Optimal;
      int prow = -1;
      for (int i = 0; i < m; ++i) {
        if (tab[i][pcol] <= eps) continue;
        if (prow < 0) {
          prow = i;
          continue;
        }
        const T lhs = tab[i][rhs_col] * tab[prow][pcol];
        const T rhs_v = tab[prow][rhs_col] * tab[i][pcol];
        if (lhs < rhs_v || (lhs == rhs_v && basis[i] < basis[prow])) prow = i;
      }
      if (prow < 0) return Status::Unbounded;
      pivot(prow, pcol);
    }
    throw std::runtime_error("lp: pivot cap reached");
  };

  // Phase 1: maximize -sum(artificials), i.e. drive them to zero.
  if (!artificial_rows.empty()) {
    for (int j = 0; j <= total; ++j) {
      T s{};
      for (int i : artificial_rows) s += tab[i][j];
      tab[m][j] = s;
    }
    for (int j = first_art; j < total; ++j) tab[m][j] = T(0);
    const Status st = run_simplex(first_art);
    if (st == Status::Unbounded) throw std::runtime_error("lp: phase-1 unbounded");
    if (tab[m][rhs_col] > eps || -tab[m][rhs_col] > eps) {
      // Artificials cannot all vanish: infeasible.
      Solution<T> sol;
      sol.status = Status::Infeasible;
      return sol;
    }
    // Pivot out any artificial still basic (degenerate rows).
    for (int i = 0; i < m; ++i) {
      if (basis[i] < first_art) continue;
      int pcol = -1;
      for (int j = 0; j < first_art; ++j) {
        if (tab[i][j] > eps || -tab[i][j] > eps) {
          pcol = j;
          break;
        }
      }
      if (pcol >= 0) pivot(i, pcol);
      // else: redundant row; harmless to leave (its artificial stays 0).
    }
  }

  // Phase 2: original objective expressed over the current basis.
  for (int j = 0; j <= total; ++j) tab[m][j] = T(0);
  for (int j = 0; j < n; ++j) tab[m][j] = problem.objective[j];
  for (int i = 0; i < m; ++i) {
    if (basis[i] < 0 || basis[i] >= n) continue;
    const T f = tab[m][basis[i]];
    if (f == T(0)) continue;
    for (int j = 0; j <= total; ++j) tab[m][j] -= f * tab[i][j];
  }
  const Status st = run_simplex(first_art);  // artificials stay nonbasic

  Solution<T> sol;
  sol.status = st;
  if (st == Status::Unbounded) return sol;
  sol.x.assign(n, T(0));
  for (int i = 0; i < m; ++i)
    if (basis[i] >= 0 && basis[i] < n) sol.x[basis[i]] = tab[i][rhs_col];
  sol.value = -tab[m][rhs_col];
  return sol;
}

/// Largest uniform margin delta >= 0 by which some functional w = sum c_j W_j
/// with |c|_inf <= 1 is constant on the face's vertices and exceeds every
/// other vertex by delta. The caller supplies projected coordinates
/// ys[v][j] = W_j . v. Returns 0 when no separating functional exists; the
/// face survives (its image is a proper face of the image polytope) iff the
/// margin is positive.
template <class T>
T survival_margin(const std::vector<std::vector<T>>& ys, const std::vector<int>& face,
                  const T& eps) {
  const int nverts = static_cast<int>(ys.size());
  const int p = ys.empty() ? 0 : static_cast<int>(ys[0].size());
  std::vector<char> in_face(nverts, 0);
  for (int v : face) in_face[v] = 1;
  if (static_cast<int>(face.size()) == nverts) return T(0);  // improper: never survives

  // Variables: u_j = c_j + 1 in [0,2] (j < p), delta = var p.
  Dense<T> prob;
  prob.nvars = p + 1;
  prob.objective.assign(p + 1, T(0));
  prob.objective[p] = T(1);
  for (int j = 0; j < p; ++j) {
    std::vector<T> row(p + 1, T(0));
    row[j] = T(1);
    prob.add_row(std::move(row), LE, T(2));
  }
  const int g0 = face[0];
  auto scaled_diff = [&](int other) {
    std::vector<T> d(p);
    T scale{};
    for (int j = 0; j < p; ++j) {
      d[j] = ys[g0][j] - ys[other][j];
      const T a = d[j] < T(0) ? T(-d[j]) : d[j];
      if (a > scale) scale = a;
    }
    if (scale > T(0))
      for (auto& v : d) v /= scale;
    return d;
  };
  for (std::size_t i = 1; i < face.size(); ++i) {
    // sum_j c_j (y_g0 - y_gi)_j = 0  ->  sum u_j d_j = sum d_j
    std::vector<T> d = scaled_diff(face[i]);
    T b{};
    for (const T& v : d) b += v;
    std::vector<T> row(p + 1, T(0));
    for (int j = 0; j < p; ++j) row[j] = d[j];
    prob.add_row(std::move(row), EQ, std::move(b));
  }
  for (int v = 0; v < nverts; ++v) {
    if (in_face[v]) continue;
    // sum_j c_j D_j >= delta  ->  sum u_j D_j - delta >= sum D_j
    std::vector<T> d = scaled_diff(v);
    T b{};
    for (const T& x : d) b += x;
    std::vector<T> row(p + 1, T(0));
    for (int j = 0; j < p; ++j) row[j] = d[j];
    row[p] = T(-1);
    prob.add_row(std::move(row), GE, std::move(b));
  }
  Solution<T> sol = maximize(prob, eps);
  if (sol.status == Status::Infeasible) {
    // Feasible by construction (c = 0, delta = 0), so a phase-1 residue only
    // survives when the instance is numerically near-degenerate. The float
    // path reports the -1 sentinel so callers can redraw the sample; exact
    // arithmetic cannot get here.
    if constexpr (std::is_floating_point_v<T>) return T(-1);
    throw std::runtime_error("survival_margin: exact LP reported infeasible");
  }
  if (sol.status != Status::Optimal) throw std::runtime_error("survival_margin: LP unbounded");
  return sol.value;
}

/// Decides whether {x in span(S) : A x <= 0} is {0}, given B = A * S: the
/// section {c : B c <= 0, |c|_inf <= 1} either is {0} or reaches the box
/// boundary, so the 2m maxima of +-c_i are all ~0 or at least one is ~1.
/// Returns the largest |c_i| found.
template <class T>
T cone_box_reach(const std::vector<std::vector<T>>& B, int mdim, const T& eps) {
  Dense<T> prob;  // u_i = c_i + 1 in [0,2]
  prob.nvars = mdim;
  prob.objective.assign(mdim, T(0));
  for (const auto& brow : B) {
    T b{};
    std::vector<T> row(mdim);
    T scale{};
    for (int j = 0; j < mdim; ++j) {
      const T a = brow[j] < T(0) ? T(-brow[j]) : brow[j];
      if (a > scale) scale = a;
    }
    for (int j = 0; j < mdim; ++j) {
      row[j] = scale > T(0) ? brow[j] / scale : brow[j];
      b += row[j];
    }
    prob.add_row(std::move(row), LE, std::move(b));
  }
  for (int j = 0; j < mdim; ++j) {
    std::vector<T> row(mdim, T(0));
    row[j] = T(1);
    prob.add_row(std::move(row), LE, T(2));
  }
  T best{};
  for (int i = 0; i < mdim; ++i) {
    for (int sign = 0; sign < 2; ++sign) {
      prob.objective.assign(mdim, T(0));
      prob.objective[i] = sign ? T(-1) : T(1);
      Solution<T> sol = maximize(prob, eps);
      if (sol.status == Status::Infeasible) {
        if constexpr (std::is_floating_point_v<T>) return T(-1);  // redraw sentinel
        throw std::runtime_error("cone_box_reach: exact LP reported infeasible");
      }
      if (sol.status != Status::Optimal) throw std::runtime_error("cone_box_reach: LP unbounded");
      // value = +-(u_i - 1) shifted: recover |c_i| at the optimum
      const T ci = sol.x[i] - T(1);
      const T a = ci < T(0) ? T(-ci) : ci;
      if (a > best) best = a;
    }
  }
  return best;
}

}  // namespace polyface::lp
