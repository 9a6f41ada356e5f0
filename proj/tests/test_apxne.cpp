#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "bimatrix/apxne.hpp"
#include "bimatrix/harness.hpp"
#include "bimatrix/rng.hpp"
#include "bimatrix/zerosum.hpp"
#include "test_oracles.hpp"

using namespace bimatrix;

namespace {

double max_regret(const BimatrixGame& g, const Profile& p) {
  RegretReport rep = verify(g, p);
  return std::max(rep.row_regret, rep.col_regret);
}

}  // namespace

TEST_SUITE("apxne-algorithm") {

TEST_CASE("threshold constant and its fixed point") {
  double t = apx_ne_bound();
  CHECK(t == doctest::Approx(0.3819660113).epsilon(1e-9));
  // (1 - v)/(2 - v) = v exactly at the threshold.
  CHECK((1.0 - t) / (2.0 - t) == doctest::Approx(t).epsilon(1e-12));
  // And it decreases in v, so the step-2 bound improves as v_r grows.
  double prev = 1.0;
  for (int k = 0; k <= 1000; ++k) {
    double v = k / 1000.0;
    double b = (1.0 - v) / (2.0 - v);
    CHECK(b <= prev + 1e-15);
    prev = b;
  }
}

TEST_CASE("mix params") {
  MixParams m = mix_params(0.5);
  CHECK(m.alpha == doctest::Approx(2.0 / 3.0));
  CHECK(m.beta == doctest::Approx(1.0 / 3.0));
  CHECK(m.alpha + m.beta == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("lower-bound fixture goes through the mixing step") {
  BimatrixGame g = fixture_game("lb-base");
  SolveOutcome out = apx_ne(g);
  CHECK(out.step == SolveStep::kApxNeStep2);
  CHECK(out.notes.at("v_r") == doctest::Approx(2.0 / 3.0).epsilon(1e-7));
  // (1 - 2/3)/(2 - 2/3) = 1/4.
  CHECK(out.claimed_eps == doctest::Approx(0.25).epsilon(1e-7));
  CHECK(max_regret(g, out.profile) <= 0.25 + kTol);
}

TEST_CASE("v_r = 1/2 instance meets the 1/3 bound") {
  // R is matching pennies (value 1/2 > threshold); C mirrors it so that
  // v_c = v_r and no swap occurs.
  BimatrixGame g(Matrix::from_rows({{1, 0}, {0, 1}}), Matrix::from_rows({{0, 1}, {1, 0}}));
  SolveOutcome out = apx_ne(g);
  CHECK(out.step == SolveStep::kApxNeStep2);
  CHECK(out.claimed_eps == doctest::Approx(1.0 / 3.0).epsilon(1e-7));
  CHECK(max_regret(g, out.profile) <= 1.0 / 3.0 + kTol);
}

TEST_CASE("step-1 path fires below the threshold") {
  // Both players can only get 0.2, so both relaxation values are 0.2.
  BimatrixGame g(Matrix(2, 2, 0.2), Matrix(2, 2, 0.2));
  SolveOutcome out = apx_ne(g);
  CHECK(out.step == SolveStep::kApxNeStep1);
  CHECK(max_regret(g, out.profile) <= out.claimed_eps + kTol);
  CHECK(out.claimed_eps <= apx_ne_bound() + kTol);
}

TEST_CASE("single-strategy game is a trivial equilibrium") {
  for (double v : {0.1, 0.9}) {
    BimatrixGame g(Matrix(1, 1, v), Matrix(1, 1, 1.0 - v));
    CHECK(max_regret(g, apx_ne(g).profile) == 0.0);
  }
}

TEST_CASE("row regret chain holds pointwise on step-2 instances") {
  Rng rng(515);
  int step2 = 0;
  for (int trial = 0; trial < 60; ++trial) {
    int n = 2 + static_cast<int>(rng.u01() * 5);
    BimatrixGame g = testo::random_game(rng, n);
    SolveOutcome out = apx_ne(g);
    CHECK(max_regret(g, out.profile) <= apx_ne_bound() + kTol);
    CHECK(max_regret(g, out.profile) <= out.claimed_eps + kTol);
    if (out.step != SolveStep::kApxNeStep2) continue;
    ++step2;
    const BimatrixGame& o = out.notes.count("swapped") ? swap_players(g) : g;
    Profile p = out.notes.count("swapped") ? swap_profile(out.profile) : out.profile;
    int j = p.col.support()[0];
    double bound = out.claimed_eps;
    // R_rj - (x'^T R)_j <= (1 - v_r)/(2 - v_r) for the best-response row r.
    double xr_j = 0.0, best = 0.0;
    for (int i = 0; i < o.n(); ++i) {
      xr_j += p.row[i] * o.r()(i, j);
      best = std::max(best, o.r()(i, j));
    }
    CHECK(best - xr_j <= bound + kTol);
  }
  CHECK(step2 >= 10);
}

TEST_CASE("all-suite regret stays below the threshold") {
  Rng rng(606);
  for (int trial = 0; trial < 40; ++trial) {
    BimatrixGame g = testo::random_game(rng, 12);
    CHECK(max_regret(g, apx_ne(g).profile) <= apx_ne_bound() + kTol);
  }
  GeneratorSpec spec{GeneratorKind::kWinLoseBernoulli, 10, 9, 40, 0.5, ""};
  for (const BimatrixGame& g : generate(spec))
    CHECK(max_regret(g, apx_ne(g).profile) <= apx_ne_bound() + kTol);
}

}  // TEST_SUITE
