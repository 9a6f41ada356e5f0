#include "bimatrix/zerosum.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace bimatrix {

namespace {

constexpr double kReducedCostEps = 1e-10;
constexpr double kPivotEps = 1e-9;

// Primal simplex on:  max 1^T w  s.t.  A w <= 1, w >= 0,
// where A = M + shift has strictly positive entries, so w = 0 is feasible
// and the optimum is finite. Bland's rule throughout: deterministic and
// cycle-free. Returns the primal solution w and the duals u.
struct SimplexResult {
  std::vector<double> w;
  std::vector<double> u;
};

SimplexResult simplex_positive(const Matrix& a) {
  const int n = a.rows();
  const int cols = 2 * n + 1;
  std::vector<std::vector<double>> t(n + 1, std::vector<double>(cols, 0.0));
  std::vector<int> basis(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) t[i][j] = a(i, j);
    t[i][n + i] = 1.0;
    t[i][2 * n] = 1.0;
    basis[i] = n + i;
  }
  for (int j = 0; j < n; ++j) t[n][j] = -1.0;

  const long max_iters = 2000L + 400L * n * n;
  for (long iter = 0; iter < max_iters; ++iter) {
    int enter = -1;
    for (int j = 0; j < 2 * n; ++j) {
      if (t[n][j] < -kReducedCostEps) {
        enter = j;
        break;  // Bland: smallest index
      }
    }
    if (enter < 0) {
      SimplexResult res;
      res.w.assign(n, 0.0);
      for (int i = 0; i < n; ++i)
        if (basis[i] < n) res.w[basis[i]] = t[i][2 * n];
      res.u.assign(n, 0.0);
      for (int i = 0; i < n; ++i) res.u[i] = std::max(0.0, t[n][n + i]);
      return res;
    }

    int leave = -1;
    double best_ratio = 0.0;
    for (int i = 0; i < n; ++i) {
      if (t[i][enter] > kPivotEps) {
        double ratio = t[i][2 * n] / t[i][enter];
        if (leave < 0 || ratio < best_ratio - 1e-15 ||
            (std::abs(ratio - best_ratio) <= 1e-15 && basis[i] < basis[leave])) {
          leave = i;
          best_ratio = ratio;
        }
      }
    }
    if (leave < 0) throw SolverError("simplex: unbounded LP (malformed input)");

    const double piv = t[leave][enter];
    for (int j = 0; j < cols; ++j) t[leave][j] /= piv;
    for (int i = 0; i <= n; ++i) {
      if (i == leave) continue;
      const double f = t[i][enter];
      if (f == 0.0) continue;
      for (int j = 0; j < cols; ++j) t[i][j] -= f * t[leave][j];
    }
    basis[leave] = enter;
  }
  throw SolverError("simplex: iteration limit exceeded");
}

std::vector<double> normalized(std::vector<double> v) {
  double sum = 0.0;
  for (double x : v) sum += std::max(0.0, x);
  if (sum <= 0.0) throw SolverError("simplex: degenerate strategy weights");
  for (double& x : v) x = std::max(0.0, x) / sum;
  return v;
}

}  // namespace

double security_of(const MixedStrategy& x, const Matrix& m) {
  if (x.size() != m.rows()) throw std::invalid_argument("strategy/matrix dimension mismatch");
  double worst = 0.0;
  for (int j = 0; j < m.cols(); ++j) {
    double acc = 0.0;
    for (int i = 0; i < m.rows(); ++i) acc += x[i] * m(i, j);
    if (j == 0 || acc < worst) worst = acc;
  }
  return worst;
}

ZeroSumSolution solve_zero_sum(const Matrix& m) {
  const int n = m.rows();
  if (n < 1 || m.cols() != n) throw std::invalid_argument("matrix must be square");
  constexpr double kShift = 2.0;
  Matrix shifted(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (!(m(i, j) >= -1.0 && m(i, j) <= 1.0))
        throw std::invalid_argument("zero-sum payoff outside [-1,1]");
      shifted(i, j) = m(i, j) + kShift;
    }

  SimplexResult res = simplex_positive(shifted);
  double sum_w = 0.0;
  for (double v : res.w) sum_w += v;
  if (sum_w <= 0.0) throw SolverError("simplex: zero objective on positive game");
  const double value = 1.0 / sum_w - kShift;

  ZeroSumSolution sol{MixedStrategy(normalized(res.u)), MixedStrategy(normalized(res.w)), value};

  // The guarantees downstream algorithms rely on, re-checked against every
  // pure strategy.
  if (security_of(sol.x, m) < value - kSecuritySlack)
    throw SolverError("zero-sum solution failed maximizer security check");
  double cap = -1.0;
  for (int i = 0; i < n; ++i) {
    double acc = 0.0;
    for (int j = 0; j < n; ++j) acc += m(i, j) * sol.y[j];
    cap = std::max(cap, acc);
  }
  if (cap > value + kSecuritySlack)
    throw SolverError("zero-sum solution failed minimizer security check");
  return sol;
}

Relaxations solve_relaxations(const BimatrixGame& game) {
  ZeroSumSolution row_side = solve_zero_sum(game.r());
  Matrix neg_c(game.n(), game.n());
  for (int i = 0; i < game.n(); ++i)
    for (int j = 0; j < game.n(); ++j) neg_c(i, j) = -game.c()(i, j);
  ZeroSumSolution col_side = solve_zero_sum(neg_c);
  return Relaxations{row_side.x,  row_side.y,  row_side.value,
                     col_side.x,  col_side.y,  -col_side.value};
}

}  // namespace bimatrix
