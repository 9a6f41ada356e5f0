// Command-line driver: solve a game file with any of the algorithms, run
// the communication or query simulations, generate instances, run batch
// suites, or verify a profile. Exit code 0 iff all verifications pass.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "bimatrix/apxne.hpp"
#include "bimatrix/comm.hpp"
#include "bimatrix/harness.hpp"
#include "bimatrix/query.hpp"
#include "bimatrix/rng.hpp"
#include "bimatrix/wsne.hpp"

namespace {

using bimatrix::BimatrixGame;
using bimatrix::Profile;
using bimatrix::RegretReport;
using bimatrix::SolveOutcome;
using ordered_json = nlohmann::ordered_json;

ordered_json regrets_json(const RegretReport& rep) {
  return {{"row_regret", rep.row_regret},
          {"col_regret", rep.col_regret},
          {"row_pure_regret", rep.row_pure_regret},
          {"col_pure_regret", rep.col_pure_regret}};
}

ordered_json outcome_json(const BimatrixGame& game, const SolveOutcome& out) {
  RegretReport rep = bimatrix::verify(game, out.profile);
  double verified = out.relevant_regret(rep);
  ordered_json j;
  j["step"] = bimatrix::to_string(out.step);
  j["claimed_eps"] = out.claimed_eps;
  j["claim_kind"] = out.wsne_claim ? "wsne" : "ne";
  j["verified_eps"] = verified;
  j["ok"] = verified <= out.claimed_eps + bimatrix::kTol;
  j["regrets"] = regrets_json(rep);
  j["notes"] = out.notes;
  j["profile"] = {{"row", out.profile.row.probs()}, {"col", out.profile.col.probs()}};
  return j;
}

int run_solve(const std::string& game_file, const std::string& alg, double z) {
  BimatrixGame game = bimatrix::load_game(game_file);
  SolveOutcome out = [&] {
    if (alg == "base") return bimatrix::base_wsne(game);
    if (alg == "improved")
      return z < 0.0 ? bimatrix::improved_wsne(game) : bimatrix::improved_wsne(game, z);
    if (alg == "winlose") return bimatrix::winlose_wsne(game);
    return bimatrix::apx_ne(game);
  }();
  ordered_json j = outcome_json(game, out);
  std::cout << j.dump(2) << "\n";
  return j["ok"].get<bool>() ? 0 : 1;
}

int run_comm(const std::string& game_file, const std::string& protocol, double eps,
             std::uint64_t seed) {
  BimatrixGame game = bimatrix::load_game(game_file);
  bimatrix::Endpoint row = bimatrix::row_endpoint(game, bimatrix::derive_seed(seed, 1));
  bimatrix::Endpoint col = bimatrix::col_endpoint(game, bimatrix::derive_seed(seed, 2));
  bimatrix::CommConfig config;
  bimatrix::ProtocolResult res = [&] {
    if (protocol == "wsne") return bimatrix::protocol_wsne(row, col, eps, config);
    if (protocol == "ne") return bimatrix::protocol_ne(row, col, eps, config);
    return bimatrix::protocol_winlose(row, col, eps, config);
  }();
  std::cout << res.transcript.to_text();
  ordered_json j = outcome_json(game, res.outcome);
  j["bits"] = res.transcript.total_bits;
  j["bit_budget"] = bimatrix::comm_bit_budget(game.n(), eps, config);
  j["within_budget"] = res.transcript.total_bits <= j["bit_budget"].get<std::uint64_t>();
  ordered_json transcript = ordered_json::array();
  for (const bimatrix::Message& m : res.transcript.messages)
    transcript.push_back({{"sender", m.sender}, {"tag", m.tag}, {"bits", m.bits}});
  j["transcript"] = std::move(transcript);
  std::cout << j.dump(2) << "\n";
  return (j["ok"].get<bool>() && j["within_budget"].get<bool>()) ? 0 : 1;
}

int run_query(const std::string& game_file, double eps, std::uint64_t seed,
              const std::string& log_file) {
  BimatrixGame game = bimatrix::load_game(game_file);
  bimatrix::PayoffOracle oracle(game, !log_file.empty());
  bimatrix::QueryConfig config;
  bimatrix::QueryOutcome res = bimatrix::query_wsne(oracle, eps, seed, config);
  if (!log_file.empty()) {
    // Reveals hidden payoffs; only written on explicit request.
    std::ofstream log(log_file);
    if (!log) throw std::runtime_error("cannot write query log: " + log_file);
    log << oracle.log_to_csv();
  }
  ordered_json j = outcome_json(game, res.outcome);
  j["queries"] = res.queries;
  j["query_budget"] = bimatrix::query_budget(game.n(), eps, config);
  j["within_budget"] = res.queries <= j["query_budget"].get<std::uint64_t>();
  std::cout << j.dump(2) << "\n";
  return (j["ok"].get<bool>() && j["within_budget"].get<bool>()) ? 0 : 1;
}

int run_gen(const std::string& kind, int n, double p, const std::string& name,
            std::uint64_t seed, int count, const std::string& out_dir) {
  bimatrix::GeneratorSpec spec;
  if (kind == "uniform")
    spec.kind = bimatrix::GeneratorKind::kUniform;
  else if (kind == "winlose")
    spec.kind = bimatrix::GeneratorKind::kWinLoseBernoulli;
  else
    spec.kind = bimatrix::GeneratorKind::kFixture;
  spec.n = n;
  spec.p = p;
  spec.fixture = name;
  spec.seed = seed;
  spec.count = count;
  std::vector<BimatrixGame> games = bimatrix::generate(spec);
  std::filesystem::create_directories(out_dir);
  for (size_t i = 0; i < games.size(); ++i) {
    char fname[64];
    std::snprintf(fname, sizeof(fname), "game_%04zu.txt", i);
    std::string path = out_dir + "/" + fname;
    bimatrix::save_game(path, games[i]);
    std::cout << path << "\n";
  }
  return 0;
}

int run_suite_cmd(const std::string& spec_file, const std::string& out_file) {
  std::ifstream in(spec_file);
  if (!in) throw std::runtime_error("cannot open suite spec: " + spec_file);
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  bimatrix::SuiteFile suite = bimatrix::parse_suite_file(text);
  bimatrix::RunReport report = bimatrix::run_suite(suite.spec, suite.params);
  std::ofstream out(out_file);
  if (!out) throw std::runtime_error("cannot write report: " + out_file);
  out << bimatrix::report_to_json(report);
  std::string csv_file = out_file;
  size_t dot = csv_file.rfind(".json");
  csv_file = (dot == std::string::npos ? csv_file : csv_file.substr(0, dot)) + ".csv";
  std::ofstream csv(csv_file);
  csv << bimatrix::report_to_csv(report);
  ordered_json summary = {{"count", report.records.size()},
                          {"max_verified_eps", report.max_verified_eps},
                          {"claim_violations", report.claim_violations},
                          {"prob_misses", report.prob_misses},
                          {"budget_violations", report.budget_violations},
                          {"step5_invariant_failures", report.step5_invariant_failures},
                          {"errors", report.errors},
                          {"report", out_file},
                          {"csv", csv_file}};
  std::cout << summary.dump(2) << "\n";
  bool ok = report.claim_violations == 0 && report.errors == 0 &&
            report.budget_violations == 0 && report.step5_invariant_failures == 0;
  return ok ? 0 : 1;
}

int run_verify(const std::string& game_file, const std::string& profile_file) {
  BimatrixGame game = bimatrix::load_game(game_file);
  Profile profile = bimatrix::load_profile(profile_file, game.n());
  ordered_json j = regrets_json(bimatrix::verify(game, profile));
  std::cout << j.dump(2) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Approximate-equilibrium toolkit for bimatrix games"};
  app.require_subcommand(1);

  std::string game_file, profile_file, alg = "improved", protocol = "wsne";
  std::string kind = "uniform", name, out_dir = ".", spec_file, out_file = "report.json";
  std::string query_log;
  double z = -1.0, eps = 0.1, p = 0.5;
  int n = 2, count = 1;
  std::uint64_t seed = 0;

  CLI::App* solve = app.add_subcommand("solve", "Run an algorithm on a game file");
  solve->add_option("--game", game_file, "game file")->required();
  solve->add_option("--alg", alg, "base|improved|winlose|apxne")
      ->check(CLI::IsMember({"base", "improved", "winlose", "apxne"}))
      ->required();
  solve->add_option("--z", z, "probability-shift parameter (default: optimal)");

  CLI::App* comm = app.add_subcommand("comm", "Run a communication protocol");
  comm->add_option("--game", game_file, "game file")->required();
  comm->add_option("--protocol", protocol, "wsne|ne|winlose")
      ->check(CLI::IsMember({"wsne", "ne", "winlose"}))
      ->required();
  comm->add_option("--eps", eps, "approximation slack")->required();
  comm->add_option("--seed", seed, "rng seed")->required();

  CLI::App* query = app.add_subcommand("query", "Run the payoff-query algorithm");
  query->add_option("--game", game_file, "game file")->required();
  query->add_option("--eps", eps, "approximation slack")->required();
  query->add_option("--seed", seed, "rng seed")->required();
  query->add_option("--log", query_log, "write the query log as CSV (reveals hidden payoffs)");

  CLI::App* gen = app.add_subcommand("gen", "Generate game files");
  gen->add_option("--kind", kind, "uniform|winlose|fixture")
      ->check(CLI::IsMember({"uniform", "winlose", "fixture"}))
      ->required();
  gen->add_option("--n", n, "strategies per player");
  gen->add_option("--p", p, "Bernoulli parameter for win-lose games");
  gen->add_option("--name", name, "fixture name");
  gen->add_option("--seed", seed, "rng seed")->required();
  gen->add_option("--count", count, "number of games")->required();
  gen->add_option("--out", out_dir, "output directory")->required();

  CLI::App* suite = app.add_subcommand("suite", "Run a batch suite from a JSON spec");
  suite->add_option("--spec", spec_file, "suite spec file")->required();
  suite->add_option("--out", out_file, "report output path")->required();

  CLI::App* verify = app.add_subcommand("verify", "Verify a profile against a game");
  verify->add_option("--game", game_file, "game file")->required();
  verify->add_option("--profile", profile_file, "profile file")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (solve->parsed()) return run_solve(game_file, alg, z);
    if (comm->parsed()) return run_comm(game_file, protocol, eps, seed);
    if (query->parsed()) return run_query(game_file, eps, seed, query_log);
    if (gen->parsed()) return run_gen(kind, n, p, name, seed, count, out_dir);
    if (suite->parsed()) return run_suite_cmd(spec_file, out_file);
    if (verify->parsed()) return run_verify(game_file, profile_file);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
