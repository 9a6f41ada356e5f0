#include <doctest.h>

#include <sstream>

#include "bimatrix/game.hpp"
#include "bimatrix/harness.hpp"
#include "bimatrix/rng.hpp"
#include "test_oracles.hpp"

using namespace bimatrix;

TEST_SUITE("game-core") {

TEST_CASE("mixed strategy construction") {
  MixedStrategy u = MixedStrategy::uniform(4);
  CHECK(u.support().size() == 4);
  CHECK(u[0] == doctest::Approx(0.25));

  // Solver dust is clamped and renormalized away.
  MixedStrategy dusty(std::vector<double>{0.5, 0.5, 1e-13, -1e-13});
  CHECK(dusty.support() == std::vector<int>{0, 1});
  CHECK(dusty[0] == doctest::Approx(0.5).epsilon(1e-12));

  CHECK_THROWS_AS(MixedStrategy(std::vector<double>{0.6, 0.5}), std::invalid_argument);
  CHECK_THROWS_AS(MixedStrategy(std::vector<double>{1.1, -0.1}), std::invalid_argument);
  CHECK_THROWS_AS(MixedStrategy(std::vector<double>{}), std::invalid_argument);
  CHECK_THROWS_AS(MixedStrategy::pure(3, 5), std::invalid_argument);
}

TEST_CASE("game construction rejects bad payoffs") {
  CHECK_THROWS_AS(BimatrixGame(Matrix::from_rows({{1.5}}), Matrix::from_rows({{0.0}})),
                  std::invalid_argument);
  CHECK_THROWS_AS(BimatrixGame(Matrix::from_rows({{0.5}}), Matrix::from_rows({{-0.1}})),
                  std::invalid_argument);
  CHECK_THROWS_AS(BimatrixGame(Matrix(2, 2, 0.5), Matrix(3, 3, 0.5)), std::invalid_argument);
}

TEST_CASE("payoff vectors") {
  BimatrixGame id(Matrix::from_rows({{1, 0}, {0, 1}}), Matrix::from_rows({{1, 0}, {0, 1}}));
  Profile uu{MixedStrategy::uniform(2), MixedStrategy::uniform(2)};
  auto [rv, cv] = payoff_vectors(id, uu);
  CHECK(rv[0] == doctest::Approx(0.5));
  CHECK(rv[1] == doctest::Approx(0.5));
  CHECK(cv[0] == doctest::Approx(0.5));
  CHECK(cv[1] == doctest::Approx(0.5));

  // Lower-bound fixture at the pure profile (bottom, left).
  BimatrixGame lb = fixture_game("lb-base");
  Profile bl{MixedStrategy::pure(2, 1), MixedStrategy::pure(2, 0)};
  auto [rv2, cv2] = payoff_vectors(lb, bl);
  CHECK(rv2[0] == 0.0);
  CHECK(rv2[1] == 2.0 / 3.0);
  CHECK(cv2[0] == 0.0);
  CHECK(cv2[1] == 2.0 / 3.0);

  // A pure column selects that column of R exactly.
  Rng rng(11);
  BimatrixGame g = testo::random_game(rng, 5);
  Profile p{MixedStrategy::uniform(5), MixedStrategy::pure(5, 3)};
  auto [rv3, cv3] = payoff_vectors(g, p);
  for (int i = 0; i < 5; ++i) CHECK(rv3[i] == g.r()(i, 3));

  Profile bad{MixedStrategy::uniform(4), MixedStrategy::uniform(5)};
  CHECK_THROWS_AS(payoff_vectors(g, bad), std::invalid_argument);
}

TEST_CASE("verify against hand cases") {
  // Mutual pure best responses: zero regrets all around.
  BimatrixGame g(Matrix::from_rows({{1, 0}, {0, 0.2}}), Matrix::from_rows({{1, 0}, {0, 0.2}}));
  RegretReport eq = verify(g, {MixedStrategy::pure(2, 0), MixedStrategy::pure(2, 0)});
  CHECK(eq.row_regret == 0.0);
  CHECK(eq.col_regret == 0.0);
  CHECK(eq.row_pure_regret == 0.0);
  CHECK(eq.col_pure_regret == 0.0);

  BimatrixGame lb = fixture_game("lb-base");
  RegretReport rep = verify(lb, {MixedStrategy::pure(2, 1), MixedStrategy::pure(2, 0)});
  CHECK(rep.col_pure_regret == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
  CHECK(rep.col_regret == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
  CHECK(rep.row_pure_regret == 0.0);
}

TEST_CASE("verify matches brute force on random instances") {
  Rng rng(2024);
  for (int trial = 0; trial < 60; ++trial) {
    int n = 2 + static_cast<int>(rng.u01() * 5);
    BimatrixGame g = testo::random_game(rng, n);
    Profile p{testo::random_strategy(rng, n), testo::random_strategy(rng, n)};
    RegretReport rep = verify(g, p);
    testo::BruteRegrets brute = testo::brute_force_regrets(g, p);
    CHECK(rep.row_regret == doctest::Approx(brute.row_regret).epsilon(1e-12));
    CHECK(rep.col_regret == doctest::Approx(brute.col_regret).epsilon(1e-12));
    CHECK(rep.row_pure_regret == doctest::Approx(brute.row_pure_regret).epsilon(1e-12));
    CHECK(rep.col_pure_regret == doctest::Approx(brute.col_pure_regret).epsilon(1e-12));
    // Regret orderings hold on every sample.
    CHECK(rep.row_regret <= rep.row_pure_regret + kTol);
    CHECK(rep.col_regret <= rep.col_pure_regret + kTol);
    CHECK(rep.row_pure_regret <= 1.0 + kTol);
    CHECK(rep.col_pure_regret <= 1.0 + kTol);
  }
}

TEST_CASE("pure-profile pure regret is a column gap") {
  Rng rng(5);
  BimatrixGame g = testo::random_game(rng, 6);
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) {
      RegretReport rep = verify(g, {MixedStrategy::pure(6, i), MixedStrategy::pure(6, j)});
      double best = 0.0;
      for (int k = 0; k < 6; ++k) best = std::max(best, g.r()(k, j));
      CHECK(rep.row_pure_regret == doctest::Approx(best - g.r()(i, j)).epsilon(1e-15));
    }
}

TEST_CASE("swap_players is an involution and exchanges regrets") {
  Rng rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    BimatrixGame g = testo::random_game(rng, 4);
    BimatrixGame gg = swap_players(swap_players(g));
    CHECK(gg == g);
    Profile p{testo::random_strategy(rng, 4), testo::random_strategy(rng, 4)};
    RegretReport a = verify(g, p);
    RegretReport b = verify(swap_players(g), swap_profile(p));
    CHECK(a.row_regret == doctest::Approx(b.col_regret).epsilon(1e-12));
    CHECK(a.col_pure_regret == doctest::Approx(b.row_pure_regret).epsilon(1e-12));
  }
}

TEST_CASE("verify is invariant under consistent relabeling") {
  Rng rng(13);
  BimatrixGame g = testo::random_game(rng, 5);
  Profile p{testo::random_strategy(rng, 5), testo::random_strategy(rng, 5)};
  std::vector<int> pr = {3, 0, 4, 1, 2}, pc = {1, 4, 0, 2, 3};
  Matrix r2(5, 5), c2(5, 5);
  std::vector<double> x2(5), y2(5);
  for (int i = 0; i < 5; ++i) {
    x2[i] = p.row[pr[i]];
    y2[i] = p.col[pc[i]];
    for (int j = 0; j < 5; ++j) {
      r2(i, j) = g.r()(pr[i], pc[j]);
      c2(i, j) = g.c()(pr[i], pc[j]);
    }
  }
  RegretReport a = verify(g, p);
  RegretReport b = verify(BimatrixGame(std::move(r2), std::move(c2)),
                          {MixedStrategy(std::move(x2)), MixedStrategy(std::move(y2))});
  CHECK(a.row_regret == doctest::Approx(b.row_regret).epsilon(1e-12));
  CHECK(a.col_regret == doctest::Approx(b.col_regret).epsilon(1e-12));
  CHECK(a.row_pure_regret == doctest::Approx(b.row_pure_regret).epsilon(1e-12));
  CHECK(a.col_pure_regret == doctest::Approx(b.col_pure_regret).epsilon(1e-12));
}

TEST_CASE("game text format") {
  Rng rng(99);
  BimatrixGame g = testo::random_game(rng, 3);
  std::ostringstream out;
  write_game(out, g);
  std::istringstream in(out.str());
  CHECK(parse_game(in) == g);

  std::istringstream commented("# header\n2\n# R\n0 1\n1 0\n0.5 0.5\n# trailing\n0.25 0.75\n");
  BimatrixGame parsed = parse_game(commented);
  CHECK(parsed.n() == 2);
  CHECK(parsed.r()(0, 1) == 1.0);
  CHECK(parsed.c()(1, 1) == 0.75);

  std::istringstream bad_range("1\n2.0\n0.5\n");
  CHECK_THROWS(parse_game(bad_range));
  std::istringstream truncated("2\n0 1\n1 0\n0.5 0.5\n");
  CHECK_THROWS(parse_game(truncated));
  std::istringstream ragged("2\n0 1 1\n1 0\n0.5 0.5\n0.5 0.5\n");
  CHECK_THROWS(parse_game(ragged));
}

TEST_CASE("parser survives malformed input") {
  Rng rng(271828);
  const std::string alphabet = "0123456789. eE+-#\nxn";
  for (int trial = 0; trial < 300; ++trial) {
    std::string junk;
    int len = static_cast<int>(rng.u01() * 120);
    for (int i = 0; i < len; ++i)
      junk += alphabet[static_cast<size_t>(rng.u01() * alphabet.size())];
    std::istringstream in(junk);
    try {
      BimatrixGame g = parse_game(in);
      CHECK(g.n() >= 1);  // anything accepted must be a valid game
    } catch (const std::exception&) {
      // rejection is the expected outcome for junk
    }
  }
}

TEST_CASE("profile text format") {
  std::istringstream in("0.5 0.5\n# comment\n1 0\n");
  Profile p = parse_profile(in, 2);
  CHECK(p.row[1] == 0.5);
  CHECK(p.col[0] == 1.0);
  std::ostringstream out;
  write_profile(out, p);
  std::istringstream in2(out.str());
  Profile q = parse_profile(in2, 2);
  CHECK(q.row.probs() == p.row.probs());
  CHECK(q.col.probs() == p.col.probs());
}

}  // TEST_SUITE
