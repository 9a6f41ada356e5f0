#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bimatrix/comm.hpp"
#include "bimatrix/game.hpp"
#include "bimatrix/outcome.hpp"
#include "bimatrix/query.hpp"

namespace bimatrix {

enum class GeneratorKind { kUniform, kWinLoseBernoulli, kFixture };

struct GeneratorSpec {
  GeneratorKind kind = GeneratorKind::kUniform;
  int n = 2;
  std::uint64_t seed = 0;
  int count = 1;
  double p = 0.5;            // Bernoulli parameter for win-lose games
  std::string fixture;       // fixture name when kind == kFixture
};

// Named instances:
//   "lb-base":       the 2x2 game that pins the base algorithm at 2/3
//                    (rows top/bottom, columns left/right).
//   "lb-improved":   same game with both 2/3 payoffs replaced by the
//                    improved algorithm's exact bound 2/3 - z*.
//   "planted-step5": a 4x4 instance that deterministically drives the
//                    improved algorithm into the matching-pennies step.
BimatrixGame fixture_game(const std::string& name);
std::vector<std::string> fixture_names();

// Deterministic under seed; per-game seeds are derived with splitmix so
// batch order does not matter.
std::vector<BimatrixGame> generate(const GeneratorSpec& spec);

enum class SuiteMode { kSolve, kComm, kQuery };

struct SuiteParams {
  SuiteMode mode = SuiteMode::kSolve;
  std::string alg = "improved";   // base | improved | winlose | apxne
  std::string protocol = "wsne";  // wsne | ne | winlose
  double z = -1.0;                // < 0: use optimal_z()
  double eps = 0.1;
  std::uint64_t seed = 0;         // master seed for protocol / query randomness
  int threads = 0;                // 0: hardware concurrency
  bool check_step5_invariants = true;
  bool include_timings = false;
  CommConfig comm;
  QueryConfig query;
};

struct RunRecord {
  int index = 0;
  std::uint64_t game_seed = 0;
  SolveStep step = SolveStep::kBaseStep2;
  double claimed_eps = 0.0;
  bool wsne_claim = true;
  RegretReport regrets;
  double verified_eps = 0.0;  // the regret the claim is about
  std::uint64_t bits = 0;     // comm mode
  std::uint64_t queries = 0;  // query mode
  bool within_budget = true;
  bool claim_ok = true;
  bool prob_miss = false;     // claim failed but the run is probabilistic
  bool step5_invariants_ok = true;
  std::string error;
  double wall_ms = 0.0;
};

struct RunReport {
  GeneratorSpec spec;
  SuiteParams params;
  std::vector<RunRecord> records;
  // aggregates
  double max_verified_eps = 0.0;
  std::vector<std::pair<std::string, int>> step_histogram;  // sorted by name
  int claim_violations = 0;  // hard failures (solve mode, or non-flagged)
  int prob_misses = 0;
  int budget_violations = 0;
  int step5_invariant_failures = 0;
  int errors = 0;
};

RunReport run_suite(const GeneratorSpec& spec, const SuiteParams& params);

// Stable-field-order JSON; omits wall times unless params.include_timings.
std::string report_to_json(const RunReport& report);
// One line per record plus a header.
std::string report_to_csv(const RunReport& report);

// Suite description file (JSON), as consumed by the CLI `suite` command.
struct SuiteFile {
  GeneratorSpec spec;
  SuiteParams params;
};
SuiteFile parse_suite_file(const std::string& json_text);

}  // namespace bimatrix
