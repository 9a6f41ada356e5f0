#pragma once

#include "bimatrix/game.hpp"
#include "bimatrix/outcome.hpp"

namespace bimatrix {

// Regret bound of the algorithm: (3 - sqrt(5)) / 2, about 0.381966.
double apx_ne_bound();

// Mixing coefficients for the step-2 profile x' = alpha x* + beta e_r.
struct MixParams {
  double v_r;
  double alpha;  // 1 / (2 - v_r)
  double beta;   // (1 - v_r) / (2 - v_r)
};

MixParams mix_params(double v_r);

// (3 - sqrt(5))/2-NE: either the cross profile of the two relaxations, or
// the min-max strategy mixed with a best response. The claim bounds the
// expected regrets (an NE claim, not a WSNE claim).
SolveOutcome apx_ne(const BimatrixGame& game);

}  // namespace bimatrix
