#include "bimatrix/apxne.hpp"

#include <algorithm>
#include <cmath>

#include "bimatrix/zerosum.hpp"

namespace bimatrix {

double apx_ne_bound() { return (3.0 - std::sqrt(5.0)) / 2.0; }

MixParams mix_params(double v_r) {
  return MixParams{v_r, 1.0 / (2.0 - v_r), (1.0 - v_r) / (2.0 - v_r)};
}

SolveOutcome apx_ne(const BimatrixGame& game) {
  Relaxations rel = solve_relaxations(game);
  bool swapped = rel.v_c > rel.v_r + kTol;
  BimatrixGame g = swapped ? swap_players(game) : game;
  if (swapped) rel = rel.swapped();
  const int n = g.n();
  const double thresh = apx_ne_bound();

  SolveOutcome out{Profile{rel.x_hat, rel.y_star}, SolveStep::kApxNeStep1, 0.0, false, {}};
  if (rel.v_r <= thresh + kTol) {
    // Row best responses against y_star pay at most v_r; column best
    // responses against x_hat pay at most v_c <= v_r.
    out.claimed_eps = std::max(0.0, rel.v_r);
  } else {
    std::vector<double> cp(n, 0.0);
    for (int j = 0; j < n; ++j)
      for (int i = 0; i < n; ++i) cp[j] += rel.x_star[i] * g.c()(i, j);
    int j = 0;
    for (int k = 1; k < n; ++k)
      if (cp[k] > cp[j]) j = k;
    int r = 0;
    for (int k = 1; k < n; ++k)
      if (g.r()(k, j) > g.r()(r, j)) r = k;

    MixParams mix = mix_params(rel.v_r);
    std::vector<double> xp(n, 0.0);
    for (int i = 0; i < n; ++i) xp[i] = mix.alpha * rel.x_star[i];
    xp[r] += mix.beta;
    out.profile = Profile{MixedStrategy(std::move(xp)), MixedStrategy::pure(n, j)};
    out.step = SolveStep::kApxNeStep2;
    out.claimed_eps = mix.beta;  // (1 - v_r)/(2 - v_r), below thresh here
    out.notes["j"] = j;
    out.notes["r"] = r;
    out.notes["alpha"] = mix.alpha;
    out.notes["beta"] = mix.beta;
  }
  out.notes["v_r"] = rel.v_r;
  out.notes["v_c"] = rel.v_c;
  if (swapped) {
    out.profile = swap_profile(out.profile);
    out.notes["swapped"] = 1.0;
  }
  return out;
}

}  // namespace bimatrix
