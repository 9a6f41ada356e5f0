#pragma once

// Test-only oracles, kept independent of the library's implementation
// paths: regrets recomputed by direct enumeration, and a small-game
// minimax solver based on support enumeration and Gaussian elimination.

#include <algorithm>
#include <cmath>
#include <optional>
#include <stdexcept>
#include <vector>

#include "bimatrix/game.hpp"
#include "bimatrix/matrix.hpp"
#include "bimatrix/rng.hpp"

namespace testo {

using bimatrix::BimatrixGame;
using bimatrix::Matrix;
using bimatrix::MixedStrategy;
using bimatrix::Profile;
using bimatrix::Rng;

// Regrets recomputed from scratch, iterating over pure strategies directly.
struct BruteRegrets {
  double row_regret, col_regret, row_pure_regret, col_pure_regret;
};

inline BruteRegrets brute_force_regrets(const BimatrixGame& game, const Profile& profile) {
  const int n = game.n();
  double row_best = -1.0, col_best = -1.0;
  for (int i = 0; i < n; ++i) {
    double v = 0.0;
    for (int j = 0; j < n; ++j) v += game.r()(i, j) * profile.col[j];
    row_best = std::max(row_best, v);
  }
  for (int j = 0; j < n; ++j) {
    double v = 0.0;
    for (int i = 0; i < n; ++i) v += game.c()(i, j) * profile.row[i];
    col_best = std::max(col_best, v);
  }
  double row_pay = 0.0, col_pay = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      row_pay += profile.row[i] * profile.col[j] * game.r()(i, j);
      col_pay += profile.row[i] * profile.col[j] * game.c()(i, j);
    }
  double row_worst = 2.0, col_worst = 2.0;
  for (int i = 0; i < n; ++i) {
    if (profile.row[i] <= 0.0) continue;
    double v = 0.0;
    for (int j = 0; j < n; ++j) v += game.r()(i, j) * profile.col[j];
    row_worst = std::min(row_worst, v);
  }
  for (int j = 0; j < n; ++j) {
    if (profile.col[j] <= 0.0) continue;
    double v = 0.0;
    for (int i = 0; i < n; ++i) v += game.c()(i, j) * profile.row[i];
    col_worst = std::min(col_worst, v);
  }
  return {std::max(0.0, row_best - row_pay), std::max(0.0, col_best - col_pay),
          std::max(0.0, row_best - row_worst), std::max(0.0, col_best - col_worst)};
}

// Row and column regrets in the zero-sum game (M, -M).
inline std::pair<double, double> zero_sum_regrets(const Matrix& m, const MixedStrategy& x,
                                                  const MixedStrategy& y) {
  const int n = m.rows();
  double pay = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) pay += x[i] * m(i, j) * y[j];
  double row_best = -2.0, col_best = -2.0;
  for (int i = 0; i < n; ++i) {
    double v = 0.0;
    for (int j = 0; j < n; ++j) v += m(i, j) * y[j];
    row_best = std::max(row_best, v);
  }
  for (int j = 0; j < n; ++j) {
    double v = 0.0;
    for (int i = 0; i < n; ++i) v += x[i] * m(i, j);
    col_best = std::max(col_best, -v);
  }
  return {row_best - pay, col_best - (-pay)};
}

// Gaussian elimination with partial pivoting; a is modified in place.
inline std::optional<std::vector<double>> solve_linear(std::vector<std::vector<double>> a,
                                                       std::vector<double> b) {
  const int n = static_cast<int>(b.size());
  for (int col = 0; col < n; ++col) {
    int piv = col;
    for (int r = col + 1; r < n; ++r)
      if (std::abs(a[r][col]) > std::abs(a[piv][col])) piv = r;
    if (std::abs(a[piv][col]) < 1e-12) return std::nullopt;
    std::swap(a[piv], a[col]);
    std::swap(b[piv], b[col]);
    for (int r = 0; r < n; ++r) {
      if (r == col) continue;
      double f = a[r][col] / a[col][col];
      for (int c = col; c < n; ++c) a[r][c] -= f * a[col][c];
      b[r] -= f * b[col];
    }
  }
  std::vector<double> x(n);
  for (int i = 0; i < n; ++i) x[i] = b[i] / a[i][i];
  return x;
}

struct SmallMinimax {
  std::vector<double> x, y;
  double value;
};

// Support enumeration for n <= 3: for every equal-size support pair, solve
// the equalization systems and keep the first pair that verifies as an
// equilibrium. Independent of the production simplex.
inline std::optional<SmallMinimax> analytic_minimax(const Matrix& m) {
  const int n = m.rows();
  std::vector<std::vector<int>> subsets;
  for (int mask = 1; mask < (1 << n); ++mask) {
    std::vector<int> s;
    for (int i = 0; i < n; ++i)
      if (mask & (1 << i)) s.push_back(i);
    subsets.push_back(std::move(s));
  }
  std::sort(subsets.begin(), subsets.end(),
            [](const auto& a, const auto& b) { return a.size() < b.size(); });
  for (const auto& rows : subsets) {
    for (const auto& cols : subsets) {
      if (rows.size() != cols.size()) continue;
      const int k = static_cast<int>(rows.size());
      // x on `rows` equalizing over `cols`, plus the simplex constraint.
      std::vector<std::vector<double>> ax(k + 1, std::vector<double>(k + 1, 0.0));
      std::vector<double> bx(k + 1, 0.0);
      for (int e = 0; e < k; ++e) {
        for (int i = 0; i < k; ++i) ax[e][i] = m(rows[i], cols[e]);
        ax[e][k] = -1.0;
      }
      for (int i = 0; i < k; ++i) ax[k][i] = 1.0;
      bx[k] = 1.0;
      auto solx = solve_linear(ax, bx);
      if (!solx) continue;
      std::vector<std::vector<double>> ay(k + 1, std::vector<double>(k + 1, 0.0));
      std::vector<double> by(k + 1, 0.0);
      for (int e = 0; e < k; ++e) {
        for (int j = 0; j < k; ++j) ay[e][j] = m(rows[e], cols[j]);
        ay[e][k] = -1.0;
      }
      for (int j = 0; j < k; ++j) ay[k][j] = 1.0;
      by[k] = 1.0;
      auto soly = solve_linear(ay, by);
      if (!soly) continue;

      const double v = (*solx)[k];
      if (std::abs(v - (*soly)[k]) > 1e-8) continue;
      std::vector<double> x(n, 0.0), y(n, 0.0);
      bool feasible = true;
      for (int i = 0; i < k; ++i) {
        if ((*solx)[i] < -1e-9 || (*soly)[i] < -1e-9) feasible = false;
        x[rows[i]] = std::max(0.0, (*solx)[i]);
        y[cols[i]] = std::max(0.0, (*soly)[i]);
      }
      if (!feasible) continue;
      // Equilibrium check: x secures v, y caps at v.
      for (int j = 0; j < n && feasible; ++j) {
        double sec = 0.0;
        for (int i = 0; i < n; ++i) sec += x[i] * m(i, j);
        if (sec < v - 1e-9) feasible = false;
      }
      for (int i = 0; i < n && feasible; ++i) {
        double cap = 0.0;
        for (int j = 0; j < n; ++j) cap += m(i, j) * y[j];
        if (cap > v + 1e-9) feasible = false;
      }
      if (feasible) return SmallMinimax{std::move(x), std::move(y), v};
    }
  }
  return std::nullopt;
}

inline BimatrixGame random_game(Rng& rng, int n) {
  Matrix r(n, n), c(n, n);
  for (Matrix* m : {&r, &c})
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) (*m)(i, j) = rng.u01();
  return BimatrixGame(std::move(r), std::move(c));
}

inline Matrix random_signed_matrix(Rng& rng, int n) {
  Matrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = 2.0 * rng.u01() - 1.0;
  return m;
}

inline MixedStrategy random_strategy(Rng& rng, int n) {
  std::vector<double> p(n);
  double sum = 0.0;
  for (double& v : p) sum += (v = rng.u01() + 1e-6);
  for (double& v : p) v /= sum;
  return MixedStrategy(std::move(p));
}

// The planted step-5 instance with payoffs jittered inside the margins of
// its defining inequalities; every draw still exercises the
// matching-pennies step.
inline BimatrixGame jittered_planted(Rng& rng, double scale = 0.004) {
  Matrix r = Matrix::from_rows({{0.99, 0.32, 0.98, 0.98},
                                {0.33, 0.99, 0.98, 0.98},
                                {0.02, 0.02, 0.02, 0.02},
                                {0.02, 0.02, 0.02, 0.02}});
  Matrix c = Matrix::from_rows({{0.31, 0.97, 0.01, 0.01},
                                {1.00, 0.20, 0.01, 0.01},
                                {0.50, 0.50, 0.01, 0.01},
                                {0.50, 0.50, 0.01, 0.01}});
  for (Matrix* m : {&r, &c})
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) {
        double v = (*m)(i, j) + (2.0 * rng.u01() - 1.0) * scale;
        (*m)(i, j) = std::min(1.0, std::max(0.0, v));
      }
  return BimatrixGame(std::move(r), std::move(c));
}

}  // namespace testo
