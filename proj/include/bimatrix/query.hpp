#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "bimatrix/game.hpp"
#include "bimatrix/outcome.hpp"
#include "bimatrix/zerosum.hpp"

namespace bimatrix {

// Query-counting oracle over a hidden game. The algorithm layer has no
// other access path to the payoffs; every query(i, j) costs exactly one.
class PayoffOracle {
 public:
  explicit PayoffOracle(BimatrixGame game, bool keep_log = false)
      : game_(std::move(game)), keep_log_(keep_log) {}

  int n() const { return game_.n(); }

  std::pair<double, double> query(int i, int j) {
    ++count_;
    if (keep_log_) log_.push_back({i, j});
    return {game_.r()(i, j), game_.c()(i, j)};
  }

  std::uint64_t count() const { return count_; }
  const std::vector<std::pair<int, int>>& log() const { return log_; }

  // CSV lines "i,j,R_ij,C_ij" (debug only; reveals hidden payoffs).
  std::string log_to_csv() const;

 private:
  BimatrixGame game_;
  bool keep_log_;
  std::uint64_t count_ = 0;
  std::vector<std::pair<int, int>> log_;
};

struct ApproxPayoffVector {
  std::vector<double> values;
  double eps = 0.0;
  bool row_side = true;
};

struct QueryConfig {
  double sample_c = 2.0;        // t = ceil(sample_c * ln(max(n,2)) / eps^2)
  double mwu_rounds_c = 16.0;   // T = ceil(mwu_rounds_c * ln(max(n,2)) / eps^2)
  bool allow_enumeration = true;  // switch to n^2 full enumeration when cheaper
  double budget_k = 512.0;      // budget = budget_k * n * ln(max(n,2)) / eps^2
};

int payoff_vector_samples(int n, double eps, const QueryConfig& config);
int mwu_rounds(int n, double eps, const QueryConfig& config);
std::uint64_t query_budget(int n, double eps, const QueryConfig& config);

// Approximate payoff vectors for both players under the profile: t sampled
// pure opponent strategies, each answered with a full column (or row) of
// queries, averaged. At most 2*n*t queries; exact via enumeration when that
// budget reaches n^2 and enumeration is allowed.
std::pair<ApproxPayoffVector, ApproxPayoffVector> estimate_payoff_vectors(
    PayoffOracle& oracle, const Profile& profile, double eps, std::uint64_t seed,
    const QueryConfig& config = {});

enum class Relaxation { kRowMatrix, kColMatrix };

// Approximate equilibrium of (R,-R) (kRowMatrix) or (-C,C) (kColMatrix;
// returned in the column player's self-major sense: x secures, y caps).
// Sampled multiplicative-weights self-play, 2n queries per round; the
// security invariants of the exact solver do not apply.
ZeroSumSolution query_zero_sum(PayoffOracle& oracle, Relaxation which, double eps,
                               std::uint64_t seed, const QueryConfig& config = {});

struct QueryOutcome {
  SolveOutcome outcome;
  std::uint64_t queries = 0;
};

// Query-model 0.6528 + eps WSNE: approximate relaxations at eps/2,
// approximate payoff vectors fix v_r and v_c, thresholds shifted by eps,
// step 4 and 5 query full columns j* and j'.
QueryOutcome query_wsne(PayoffOracle& oracle, double eps, std::uint64_t seed,
                        const QueryConfig& config = {});

}  // namespace bimatrix
