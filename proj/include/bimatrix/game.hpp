#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "bimatrix/matrix.hpp"

namespace bimatrix {

// Global comparison tolerance. All strict threshold tests in the algorithms
// are taken with this much slack toward the branch whose guarantee is proven.
inline constexpr double kTol = 1e-9;

// Probabilities with magnitude below this are treated as solver dust:
// clamped to zero, then the vector is renormalized.
inline constexpr double kProbClamp = 1e-12;

// Probability vector over n pure strategies. Immutable after construction.
class MixedStrategy {
 public:
  // Clamps dust, rejects genuinely negative entries and vectors whose sum
  // is not within kTol of one, then renormalizes exactly.
  explicit MixedStrategy(std::vector<double> probs);

  static MixedStrategy pure(int n, int index);
  static MixedStrategy uniform(int n);

  int size() const { return static_cast<int>(probs_.size()); }
  double operator[](int i) const { return probs_[i]; }
  const std::vector<double>& probs() const { return probs_; }

  // Indices with strictly positive probability (after clamping).
  std::vector<int> support() const;

 private:
  std::vector<double> probs_;
};

struct Profile {
  MixedStrategy row;
  MixedStrategy col;
};

// n x n bimatrix game; payoffs in [0,1] enforced at construction.
class BimatrixGame {
 public:
  BimatrixGame(Matrix r, Matrix c);

  int n() const { return r_.rows(); }
  const Matrix& r() const { return r_; }
  const Matrix& c() const { return c_; }

  bool is_win_lose() const;

  bool operator==(const BimatrixGame& o) const { return r_ == o.r_ && c_ == o.c_; }

 private:
  Matrix r_;
  Matrix c_;
};

struct RegretReport {
  double row_regret = 0.0;
  double col_regret = 0.0;
  double row_pure_regret = 0.0;
  double col_pure_regret = 0.0;
};

// row_vec[i] = (R y)_i, col_vec[j] = (x^T C)_j.
std::pair<std::vector<double>, std::vector<double>> payoff_vectors(const BimatrixGame& game,
                                                                   const Profile& profile);

// Exact verification oracle: regrets and pure-strategy regrets for both
// players, computed directly from the payoff vectors.
RegretReport verify(const BimatrixGame& game, const Profile& profile);

// The game with the players' roles exchanged: (C^T, R^T). An involution.
BimatrixGame swap_players(const BimatrixGame& game);

// Maps a profile of swap_players(game) back to a profile of game.
Profile swap_profile(const Profile& profile);

// --- text format -----------------------------------------------------------
//
// Line 1: n. Lines 2..n+1: rows of R, n space-separated decimals each.
// Lines n+2..2n+1: rows of C. Lines starting with '#' are ignored.
// Out-of-range payoffs are rejected.

BimatrixGame parse_game(std::istream& in);
BimatrixGame load_game(const std::string& path);
void write_game(std::ostream& out, const BimatrixGame& game);
void save_game(const std::string& path, const BimatrixGame& game);

// Profile file: two lines of n space-separated probabilities (row, then col).
Profile parse_profile(std::istream& in, int n);
Profile load_profile(const std::string& path, int n);
void write_profile(std::ostream& out, const Profile& profile);

}  // namespace bimatrix
