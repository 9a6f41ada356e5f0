#pragma once

#include <stdexcept>

#include "bimatrix/game.hpp"
#include "bimatrix/matrix.hpp"

namespace bimatrix {

struct SolverError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// LP post-hoc security slack: the solver re-checks its own output against
// every pure strategy within this bound.
inline constexpr double kSecuritySlack = 1e-7;

struct ZeroSumSolution {
  MixedStrategy x;  // maximizer: min_j (x^T M)_j >= value - slack
  MixedStrategy y;  // minimizer: max_i (M y)_i  <= value + slack
  double value;
};

// Minimax value and optimal strategies of the zero-sum game (M, -M),
// entries of M in [-1, 1]. Dense simplex with Bland's rule; deterministic.
ZeroSumSolution solve_zero_sum(const Matrix& m);

// min_j (x^T M)_j: the payoff x guarantees against a worst-case column.
double security_of(const MixedStrategy& x, const Matrix& m);

// Both zero-sum relaxations of a bimatrix game, in the canonical reading:
//   (R,-R): x_star secures v_r, y_star caps every row payoff at v_r.
//   (-C,C): y_hat secures v_c for the column player, x_hat caps the column
//           player's best response at v_c. Realized as solve_zero_sum(-C).
struct Relaxations {
  MixedStrategy x_star, y_star;
  double v_r;
  MixedStrategy x_hat, y_hat;
  double v_c;

  // Relaxations of swap_players(game), without re-solving.
  Relaxations swapped() const { return Relaxations{y_hat, x_hat, v_c, y_star, x_star, v_r}; }
};

Relaxations solve_relaxations(const BimatrixGame& game);

}  // namespace bimatrix
