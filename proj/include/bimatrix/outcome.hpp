#pragma once

#include <map>
#include <string>

#include "bimatrix/game.hpp"

namespace bimatrix {

// Which branch of which algorithm produced a profile.
enum class SolveStep {
  kBaseStep2,
  kBaseStep3,
  kBaseStep4,
  kImprovedStep2,
  kImprovedStep3,
  kImprovedStep4Shift,
  kImprovedStep5Pure,
  kImprovedStep5MP,
  kImprovedFallback,
  kWinLoseStep2,
  kWinLoseStep3,
  kWinLoseStep4,
  kApxNeStep1,
  kApxNeStep2,
};

const char* to_string(SolveStep step);

struct SolveOutcome {
  Profile profile;
  SolveStep step;
  double claimed_eps;
  // True: claimed_eps bounds both pure-strategy regrets (WSNE claim).
  // False: claimed_eps bounds both expected regrets (NE claim).
  bool wsne_claim = true;
  // Free-form diagnostics: v_r, v_c, j_star, j_prime, b, s, z, swapped, ...
  std::map<std::string, double> notes;

  // The regret the claim is about, from a verification report.
  double relevant_regret(const RegretReport& rep) const {
    return wsne_claim ? std::max(rep.row_pure_regret, rep.col_pure_regret)
                      : std::max(rep.row_regret, rep.col_regret);
  }
};

}  // namespace bimatrix
