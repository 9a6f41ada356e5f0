#include "bimatrix/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <map>
#include <stdexcept>
#include <thread>

#include <json.hpp>

#include "bimatrix/apxne.hpp"
#include "bimatrix/rng.hpp"
#include "bimatrix/wsne.hpp"

namespace bimatrix {

namespace {

using ordered_json = nlohmann::ordered_json;

BimatrixGame lb_base_game(double level) {
  // Rows top/bottom, columns left/right. Both relaxations are solved by
  // iterated dominance; the cross profile (bottom, left) leaves the column
  // player a full `level` short of its best response.
  Matrix r = Matrix::from_rows({{0.0, 1.0}, {level, 0.9}});
  Matrix c = Matrix::from_rows({{1.0, 0.9}, {0.0, level}});
  return BimatrixGame(std::move(r), std::move(c));
}

// Drives improved_wsne(z*) through steps 2-4 into the matching-pennies
// step: rows 1/2 are the planted b/s pair against columns 1/2, rows 3/4
// are dominated for the row player but cap the column relaxation at 0.5,
// and columns 3/4 are unattractive to both.
BimatrixGame planted_step5_game() {
  Matrix r = Matrix::from_rows({{0.99, 0.32, 0.98, 0.98},
                                {0.33, 0.99, 0.98, 0.98},
                                {0.02, 0.02, 0.02, 0.02},
                                {0.02, 0.02, 0.02, 0.02}});
  Matrix c = Matrix::from_rows({{0.31, 0.97, 0.01, 0.01},
                                {1.00, 0.20, 0.01, 0.01},
                                {0.50, 0.50, 0.01, 0.01},
                                {0.50, 0.50, 0.01, 0.01}});
  return BimatrixGame(std::move(r), std::move(c));
}

}  // namespace

BimatrixGame fixture_game(const std::string& name) {
  if (name == "lb-base") return lb_base_game(2.0 / 3.0);
  if (name == "lb-improved") return lb_base_game(2.0 / 3.0 - optimal_z());
  if (name == "planted-step5") return planted_step5_game();
  throw std::runtime_error("unknown fixture: " + name);
}

std::vector<std::string> fixture_names() { return {"lb-base", "lb-improved", "planted-step5"}; }

std::vector<BimatrixGame> generate(const GeneratorSpec& spec) {
  if (spec.n < 1) throw std::invalid_argument("generator: n must be >= 1");
  if (spec.count < 0) throw std::invalid_argument("generator: negative count");
  if (!(spec.p >= 0.0 && spec.p <= 1.0)) throw std::invalid_argument("generator: p outside [0,1]");
  std::vector<BimatrixGame> games;
  games.reserve(spec.count);
  for (int g = 0; g < spec.count; ++g) {
    if (spec.kind == GeneratorKind::kFixture) {
      games.push_back(fixture_game(spec.fixture));
      continue;
    }
    Rng rng(derive_seed(spec.seed, g));
    Matrix r(spec.n, spec.n), c(spec.n, spec.n);
    for (Matrix* m : {&r, &c})
      for (int i = 0; i < spec.n; ++i)
        for (int j = 0; j < spec.n; ++j) {
          double u = rng.u01();
          (*m)(i, j) = spec.kind == GeneratorKind::kUniform ? u : (u < spec.p ? 1.0 : 0.0);
        }
    games.emplace_back(std::move(r), std::move(c));
  }
  return games;
}

namespace {

// Re-derives the improved algorithm's internal step-5 state from a solve
// outcome, mirroring its orientation logic so the reconstruction lands on
// the same relaxation vertices, then evaluates the payoff-structure
// invariants.
bool step5_invariants_ok_for(const BimatrixGame& game, const SolveOutcome& out, double z) {
  Relaxations rel = solve_relaxations(game);
  bool swapped = rel.v_c > rel.v_r + kTol;
  BimatrixGame g = swapped ? swap_players(game) : game;
  if (swapped) rel = rel.swapped();
  int j_star = static_cast<int>(out.notes.at("j_star"));
  int j_prime = static_cast<int>(out.notes.at("j_prime"));
  StepFourSplit split = split_step_four(g, rel.x_star, j_star, z);
  return check_step5_invariants(g, rel.x_star, split, j_prime, z).all_pass;
}

SolveOutcome run_solve(const BimatrixGame& game, const SuiteParams& params, double z) {
  if (params.alg == "base") return base_wsne(game);
  if (params.alg == "improved") return improved_wsne(game, z);
  if (params.alg == "winlose") return winlose_wsne(game);
  if (params.alg == "apxne") return apx_ne(game);
  throw std::invalid_argument("unknown algorithm: " + params.alg);
}

int thread_count(const SuiteParams& params, size_t jobs) {
  int t = params.threads > 0 ? params.threads
                             : static_cast<int>(std::thread::hardware_concurrency());
  t = std::max(1, std::min(t, 16));
  return static_cast<int>(std::min<size_t>(t, jobs ? jobs : 1));
}

}  // namespace

RunReport run_suite(const GeneratorSpec& spec, const SuiteParams& params) {
  std::vector<BimatrixGame> games = generate(spec);
  RunReport report;
  report.spec = spec;
  report.params = params;
  report.records.resize(games.size());
  const double z = params.z < 0.0 ? optimal_z() : params.z;

  auto run_one = [&](int idx) {
    RunRecord& rec = report.records[idx];
    rec.index = idx;
    rec.game_seed = derive_seed(spec.seed, idx);
    const BimatrixGame& game = games[idx];
    auto t0 = std::chrono::steady_clock::now();
    try {
      SolveOutcome out{Profile{MixedStrategy::uniform(game.n()), MixedStrategy::uniform(game.n())},
                       SolveStep::kBaseStep2, 0.0, true, {}};
      bool probabilistic = params.mode != SuiteMode::kSolve;
      if (params.mode == SuiteMode::kSolve) {
        out = run_solve(game, params, z);
      } else if (params.mode == SuiteMode::kComm) {
        Endpoint row = row_endpoint(game, derive_seed(params.seed, 2 * idx));
        Endpoint col = col_endpoint(game, derive_seed(params.seed, 2 * idx + 1));
        ProtocolResult res = params.protocol == "wsne"
                                 ? protocol_wsne(row, col, params.eps, params.comm)
                                 : params.protocol == "ne"
                                       ? protocol_ne(row, col, params.eps, params.comm)
                                       : protocol_winlose(row, col, params.eps, params.comm);
        out = std::move(res.outcome);
        rec.bits = res.transcript.total_bits;
        rec.within_budget = rec.bits <= comm_bit_budget(game.n(), params.eps, params.comm);
      } else {
        PayoffOracle oracle(game);
        QueryOutcome res = query_wsne(oracle, params.eps, derive_seed(params.seed, idx),
                                      params.query);
        out = std::move(res.outcome);
        rec.queries = res.queries;
        rec.within_budget = rec.queries <= query_budget(game.n(), params.eps, params.query);
      }
      rec.step = out.step;
      rec.claimed_eps = out.claimed_eps;
      rec.wsne_claim = out.wsne_claim;
      rec.regrets = verify(game, out.profile);
      rec.verified_eps = out.relevant_regret(rec.regrets);
      rec.claim_ok = rec.verified_eps <= rec.claimed_eps + kTol;
      rec.prob_miss = !rec.claim_ok && probabilistic;
      if (params.check_step5_invariants && out.step == SolveStep::kImprovedStep5MP &&
          params.mode == SuiteMode::kSolve) {
        rec.step5_invariants_ok = step5_invariants_ok_for(game, out, z);
      }
    } catch (const std::exception& e) {
      rec.error = e.what();
      rec.claim_ok = false;
    }
    rec.wall_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  };

  const int threads = thread_count(params, games.size());
  if (threads <= 1) {
    for (size_t i = 0; i < games.size(); ++i) run_one(static_cast<int>(i));
  } else {
    std::atomic<int> next{0};
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t)
      pool.emplace_back([&] {
        for (int i = next.fetch_add(1); i < static_cast<int>(games.size());
             i = next.fetch_add(1))
          run_one(i);
      });
    for (auto& th : pool) th.join();
  }

  std::map<std::string, int> hist;
  for (const RunRecord& rec : report.records) {
    if (!rec.error.empty()) {
      ++report.errors;
      continue;
    }
    report.max_verified_eps = std::max(report.max_verified_eps, rec.verified_eps);
    ++hist[to_string(rec.step)];
    if (!rec.claim_ok) {
      if (rec.prob_miss)
        ++report.prob_misses;
      else
        ++report.claim_violations;
    }
    if (!rec.within_budget) ++report.budget_violations;
    if (!rec.step5_invariants_ok) ++report.step5_invariant_failures;
  }
  report.step_histogram.assign(hist.begin(), hist.end());
  return report;
}

namespace {

const char* kind_name(GeneratorKind k) {
  switch (k) {
    case GeneratorKind::kUniform: return "uniform";
    case GeneratorKind::kWinLoseBernoulli: return "winlose";
    case GeneratorKind::kFixture: return "fixture";
  }
  return "unknown";
}

const char* mode_name(SuiteMode m) {
  switch (m) {
    case SuiteMode::kSolve: return "solve";
    case SuiteMode::kComm: return "comm";
    case SuiteMode::kQuery: return "query";
  }
  return "unknown";
}

}  // namespace

std::string report_to_json(const RunReport& report) {
  ordered_json j;
  j["spec"] = {{"kind", kind_name(report.spec.kind)},
               {"n", report.spec.n},
               {"seed", report.spec.seed},
               {"count", report.spec.count},
               {"p", report.spec.p},
               {"fixture", report.spec.fixture}};
  j["params"] = {{"mode", mode_name(report.params.mode)},
                 {"alg", report.params.alg},
                 {"protocol", report.params.protocol},
                 {"z", report.params.z < 0.0 ? optimal_z() : report.params.z},
                 {"eps", report.params.eps},
                 {"seed", report.params.seed},
                 {"comm_budget_k", report.params.comm.budget_k},
                 {"comm_sample_c", report.params.comm.sample_c},
                 {"query_budget_k", report.params.query.budget_k},
                 {"query_sample_c", report.params.query.sample_c}};
  j["aggregates"] = {{"count", report.records.size()},
                     {"max_verified_eps", report.max_verified_eps},
                     {"claim_violations", report.claim_violations},
                     {"prob_misses", report.prob_misses},
                     {"budget_violations", report.budget_violations},
                     {"step5_invariant_failures", report.step5_invariant_failures},
                     {"errors", report.errors}};
  ordered_json hist = ordered_json::object();
  for (const auto& [step, count] : report.step_histogram) hist[step] = count;
  j["aggregates"]["step_histogram"] = hist;
  ordered_json records = ordered_json::array();
  for (const RunRecord& rec : report.records) {
    ordered_json r = {{"index", rec.index},
                      {"game_seed", rec.game_seed},
                      {"step", to_string(rec.step)},
                      {"claimed_eps", rec.claimed_eps},
                      {"wsne_claim", rec.wsne_claim},
                      {"row_regret", rec.regrets.row_regret},
                      {"col_regret", rec.regrets.col_regret},
                      {"row_pure_regret", rec.regrets.row_pure_regret},
                      {"col_pure_regret", rec.regrets.col_pure_regret},
                      {"verified_eps", rec.verified_eps},
                      {"bits", rec.bits},
                      {"queries", rec.queries},
                      {"within_budget", rec.within_budget},
                      {"claim_ok", rec.claim_ok},
                      {"prob_miss", rec.prob_miss},
                      {"step5_invariants_ok", rec.step5_invariants_ok}};
    if (!rec.error.empty()) r["error"] = rec.error;
    if (report.params.include_timings) r["wall_ms"] = rec.wall_ms;
    records.push_back(std::move(r));
  }
  j["records"] = std::move(records);
  return j.dump(2) + "\n";
}

std::string report_to_csv(const RunReport& report) {
  std::string out =
      "index,game_seed,step,claimed_eps,verified_eps,row_pure_regret,col_pure_regret,bits,"
      "queries,within_budget,claim_ok,prob_miss,step5_invariants_ok\n";
  char buf[256];
  for (const RunRecord& rec : report.records) {
    std::snprintf(buf, sizeof(buf), "%d,%llu,%s,%.17g,%.17g,%.17g,%.17g,%llu,%llu,%d,%d,%d,%d\n",
                  rec.index, static_cast<unsigned long long>(rec.game_seed), to_string(rec.step),
                  rec.claimed_eps, rec.verified_eps, rec.regrets.row_pure_regret,
                  rec.regrets.col_pure_regret, static_cast<unsigned long long>(rec.bits),
                  static_cast<unsigned long long>(rec.queries), rec.within_budget ? 1 : 0,
                  rec.claim_ok ? 1 : 0, rec.prob_miss ? 1 : 0, rec.step5_invariants_ok ? 1 : 0);
    out += buf;
  }
  return out;
}

SuiteFile parse_suite_file(const std::string& json_text) {
  ordered_json j = ordered_json::parse(json_text);
  SuiteFile f;
  const auto& gen = j.at("generator");
  std::string kind = gen.at("kind").get<std::string>();
  if (kind == "uniform")
    f.spec.kind = GeneratorKind::kUniform;
  else if (kind == "winlose")
    f.spec.kind = GeneratorKind::kWinLoseBernoulli;
  else if (kind == "fixture")
    f.spec.kind = GeneratorKind::kFixture;
  else
    throw std::runtime_error("unknown generator kind: " + kind);
  f.spec.n = gen.value("n", 2);
  f.spec.seed = gen.value("seed", std::uint64_t{0});
  f.spec.count = gen.value("count", 1);
  f.spec.p = gen.value("p", 0.5);
  f.spec.fixture = gen.value("name", std::string{});

  if (j.contains("run")) {
    const auto& run = j.at("run");
    std::string mode = run.value("mode", std::string{"solve"});
    if (mode == "solve")
      f.params.mode = SuiteMode::kSolve;
    else if (mode == "comm")
      f.params.mode = SuiteMode::kComm;
    else if (mode == "query")
      f.params.mode = SuiteMode::kQuery;
    else
      throw std::runtime_error("unknown run mode: " + mode);
    f.params.alg = run.value("alg", std::string{"improved"});
    f.params.protocol = run.value("protocol", std::string{"wsne"});
    f.params.z = run.value("z", -1.0);
    f.params.eps = run.value("eps", 0.1);
    f.params.seed = run.value("seed", std::uint64_t{0});
    f.params.threads = run.value("threads", 0);
    f.params.check_step5_invariants = run.value("check_step5_invariants", true);
    f.params.include_timings = run.value("include_timings", false);
  }
  return f;
}

}  // namespace bimatrix
