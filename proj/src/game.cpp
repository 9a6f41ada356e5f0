#include "bimatrix/game.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace bimatrix {

MixedStrategy::MixedStrategy(std::vector<double> probs) : probs_(std::move(probs)) {
  if (probs_.empty()) throw std::invalid_argument("empty strategy");
  double sum = 0.0;
  for (double& p : probs_) {
    if (p < -kProbClamp) throw std::invalid_argument("negative probability");
    if (std::abs(p) < kProbClamp) p = 0.0;
    sum += p;
  }
  if (std::abs(sum - 1.0) > kTol) throw std::invalid_argument("probabilities do not sum to 1");
  for (double& p : probs_) p /= sum;
}

MixedStrategy MixedStrategy::pure(int n, int index) {
  if (index < 0 || index >= n) throw std::invalid_argument("pure strategy index out of range");
  std::vector<double> p(n, 0.0);
  p[index] = 1.0;
  return MixedStrategy(std::move(p));
}

MixedStrategy MixedStrategy::uniform(int n) {
  return MixedStrategy(std::vector<double>(n, 1.0 / n));
}

std::vector<int> MixedStrategy::support() const {
  std::vector<int> s;
  for (int i = 0; i < size(); ++i)
    if (probs_[i] > 0.0) s.push_back(i);
  return s;
}

BimatrixGame::BimatrixGame(Matrix r, Matrix c) : r_(std::move(r)), c_(std::move(c)) {
  if (r_.rows() != r_.cols() || c_.rows() != c_.cols() || r_.rows() != c_.rows())
    throw std::invalid_argument("payoff matrices must be square and of equal dimension");
  if (r_.rows() < 1) throw std::invalid_argument("game must have at least one strategy");
  for (int i = 0; i < r_.rows(); ++i)
    for (int j = 0; j < r_.cols(); ++j) {
      if (!(r_(i, j) >= 0.0 && r_(i, j) <= 1.0) || !(c_(i, j) >= 0.0 && c_(i, j) <= 1.0))
        throw std::invalid_argument("payoff outside [0,1]");
    }
}

bool BimatrixGame::is_win_lose() const {
  for (int i = 0; i < n(); ++i)
    for (int j = 0; j < n(); ++j) {
      if (r_(i, j) != 0.0 && r_(i, j) != 1.0) return false;
      if (c_(i, j) != 0.0 && c_(i, j) != 1.0) return false;
    }
  return true;
}

std::pair<std::vector<double>, std::vector<double>> payoff_vectors(const BimatrixGame& game,
                                                                   const Profile& profile) {
  const int n = game.n();
  if (profile.row.size() != n || profile.col.size() != n)
    throw std::invalid_argument("profile dimension mismatch");
  std::vector<double> row_vec(n, 0.0), col_vec(n, 0.0);
  for (int i = 0; i < n; ++i) {
    double acc = 0.0;
    for (int j = 0; j < n; ++j) acc += profile.col[j] * game.r()(i, j);
    row_vec[i] = acc;
  }
  for (int j = 0; j < n; ++j) {
    double acc = 0.0;
    for (int i = 0; i < n; ++i) acc += profile.row[i] * game.c()(i, j);
    col_vec[j] = acc;
  }
  return {std::move(row_vec), std::move(col_vec)};
}

namespace {

double dot(const MixedStrategy& x, const std::vector<double>& v) {
  double acc = 0.0;
  for (int i = 0; i < x.size(); ++i) acc += x[i] * v[i];
  return acc;
}

double min_over_support(const MixedStrategy& x, const std::vector<double>& v) {
  double best = 2.0;
  for (int i = 0; i < x.size(); ++i)
    if (x[i] > 0.0) best = std::min(best, v[i]);
  return best;
}

}  // namespace

RegretReport verify(const BimatrixGame& game, const Profile& profile) {
  auto [row_vec, col_vec] = payoff_vectors(game, profile);
  const double row_best = *std::max_element(row_vec.begin(), row_vec.end());
  const double col_best = *std::max_element(col_vec.begin(), col_vec.end());
  RegretReport rep;
  rep.row_regret = std::max(0.0, row_best - dot(profile.row, row_vec));
  rep.col_regret = std::max(0.0, col_best - dot(profile.col, col_vec));
  rep.row_pure_regret = std::max(0.0, row_best - min_over_support(profile.row, row_vec));
  rep.col_pure_regret = std::max(0.0, col_best - min_over_support(profile.col, col_vec));
  return rep;
}

BimatrixGame swap_players(const BimatrixGame& game) {
  return BimatrixGame(game.c().transposed(), game.r().transposed());
}

Profile swap_profile(const Profile& profile) { return Profile{profile.col, profile.row}; }

namespace {

// Next content line, skipping '#' comments and blank lines.
bool next_line(std::istream& in, std::string& line) {
  while (std::getline(in, line)) {
    size_t pos = line.find_first_not_of(" \t\r");
    if (pos == std::string::npos) continue;
    if (line[pos] == '#') continue;
    return true;
  }
  return false;
}

std::vector<double> parse_row(const std::string& line, int n, const char* what) {
  std::istringstream ss(line);
  std::vector<double> row;
  double v;
  while (ss >> v) row.push_back(v);
  if (!ss.eof()) throw std::runtime_error(std::string("malformed ") + what + " row");
  if (static_cast<int>(row.size()) != n)
    throw std::runtime_error(std::string("wrong number of entries in ") + what + " row");
  return row;
}

}  // namespace

BimatrixGame parse_game(std::istream& in) {
  std::string line;
  if (!next_line(in, line)) throw std::runtime_error("empty game file");
  int n = 0;
  {
    std::istringstream ss(line);
    if (!(ss >> n) || n < 1) throw std::runtime_error("invalid strategy count");
  }
  // Rows are read before any n x n allocation, so a bogus header fails at
  // the first missing line instead of reserving huge matrices.
  std::vector<std::vector<double>> rows;
  rows.reserve(std::min(2 * n, 2048));
  for (int i = 0; i < 2 * n; ++i) {
    if (!next_line(in, line)) throw std::runtime_error("truncated game file");
    rows.push_back(parse_row(line, n, i < n ? "R" : "C"));
  }
  Matrix r(n, n), c(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      r(i, j) = rows[i][j];
      c(i, j) = rows[n + i][j];
    }
  return BimatrixGame(std::move(r), std::move(c));  // range check happens here
}

BimatrixGame load_game(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open game file: " + path);
  return parse_game(in);
}

namespace {

void write_matrix(std::ostream& out, const Matrix& m) {
  char buf[32];
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) {
      std::snprintf(buf, sizeof(buf), "%.17g", m(i, j));
      out << (j ? " " : "") << buf;
    }
    out << "\n";
  }
}

}  // namespace

void write_game(std::ostream& out, const BimatrixGame& game) {
  out << game.n() << "\n";
  write_matrix(out, game.r());
  write_matrix(out, game.c());
}

void save_game(const std::string& path, const BimatrixGame& game) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write game file: " + path);
  write_game(out, game);
}

Profile parse_profile(std::istream& in, int n) {
  std::string line;
  std::vector<std::vector<double>> rows;
  for (int k = 0; k < 2; ++k) {
    if (!next_line(in, line)) throw std::runtime_error("truncated profile file");
    rows.push_back(parse_row(line, n, k == 0 ? "row strategy" : "col strategy"));
  }
  return Profile{MixedStrategy(std::move(rows[0])), MixedStrategy(std::move(rows[1]))};
}

Profile load_profile(const std::string& path, int n) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open profile file: " + path);
  return parse_profile(in, n);
}

void write_profile(std::ostream& out, const Profile& profile) {
  char buf[32];
  for (const MixedStrategy* s : {&profile.row, &profile.col}) {
    for (int i = 0; i < s->size(); ++i) {
      std::snprintf(buf, sizeof(buf), "%.17g", (*s)[i]);
      out << (i ? " " : "") << buf;
    }
    out << "\n";
  }
}

}  // namespace bimatrix
