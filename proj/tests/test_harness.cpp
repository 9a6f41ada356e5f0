#include <doctest.h>

#include "bimatrix/harness.hpp"
#include "bimatrix/wsne.hpp"

using namespace bimatrix;

TEST_SUITE("harness") {

TEST_CASE("fixtures") {
  BimatrixGame lb = fixture_game("lb-base");
  CHECK(lb.n() == 2);
  CHECK(lb.r()(1, 0) == 2.0 / 3.0);
  CHECK(lb.c()(1, 1) == 2.0 / 3.0);
  CHECK(lb.r()(0, 1) == 1.0);

  BimatrixGame lbi = fixture_game("lb-improved");
  CHECK(lbi.r()(1, 0) == 2.0 / 3.0 - optimal_z());
  CHECK(lbi.c()(1, 1) == 2.0 / 3.0 - optimal_z());

  CHECK(fixture_game("planted-step5").n() == 4);
  CHECK_THROWS(fixture_game("no-such-fixture"));
  CHECK(fixture_names().size() == 3);
}

TEST_CASE("generators are deterministic and respect their parameters") {
  GeneratorSpec uni{GeneratorKind::kUniform, 3, 42, 2, 0.5, ""};
  auto a = generate(uni);
  auto b = generate(uni);
  REQUIRE(a.size() == 2);
  CHECK(a[0] == b[0]);
  CHECK(a[1] == b[1]);
  CHECK(!(a[0] == a[1]));

  GeneratorSpec wl{GeneratorKind::kWinLoseBernoulli, 6, 7, 3, 0.3, ""};
  for (const BimatrixGame& g : generate(wl)) CHECK(g.is_win_lose());

  // Bernoulli parameter is honored in aggregate.
  GeneratorSpec dense{GeneratorKind::kWinLoseBernoulli, 20, 9, 5, 0.9, ""};
  int ones = 0, total = 0;
  for (const BimatrixGame& g : generate(dense))
    for (int i = 0; i < 20; ++i)
      for (int j = 0; j < 20; ++j) {
        ones += static_cast<int>(g.r()(i, j));
        ++total;
      }
  CHECK(ones > total * 0.8);

  CHECK_THROWS(generate(GeneratorSpec{GeneratorKind::kUniform, 0, 1, 1, 0.5, ""}));
  CHECK_THROWS(generate(GeneratorSpec{GeneratorKind::kWinLoseBernoulli, 2, 1, 1, 1.5, ""}));
}

TEST_CASE("suite over the lower-bound fixture") {
  GeneratorSpec spec{GeneratorKind::kFixture, 2, 0, 1, 0.5, "lb-base"};
  SuiteParams params;
  params.alg = "base";
  RunReport report = run_suite(spec, params);
  REQUIRE(report.records.size() == 1);
  CHECK(report.records[0].step == SolveStep::kBaseStep2);
  CHECK(report.max_verified_eps == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
  CHECK(report.claim_violations == 0);
  REQUIRE(report.step_histogram.size() == 1);
  CHECK(report.step_histogram[0].first == "Base.Step2");
  CHECK(report.step_histogram[0].second == 1);
}

TEST_CASE("suite reports are byte-identical across runs and thread counts") {
  GeneratorSpec spec{GeneratorKind::kUniform, 8, 123, 24, 0.5, ""};
  SuiteParams serial;
  serial.alg = "improved";
  serial.threads = 1;
  SuiteParams parallel = serial;
  parallel.threads = 4;
  RunReport a = run_suite(spec, serial);
  RunReport b = run_suite(spec, parallel);
  RunReport c = run_suite(spec, serial);
  CHECK(report_to_json(a) == report_to_json(b));
  CHECK(report_to_json(a) == report_to_json(c));
  CHECK(report_to_csv(a) == report_to_csv(b));
  CHECK(a.claim_violations == 0);
  CHECK(a.errors == 0);
}

TEST_CASE("comm and query suite modes verify and stay within budget") {
  GeneratorSpec spec{GeneratorKind::kUniform, 10, 5, 6, 0.5, ""};
  SuiteParams comm;
  comm.mode = SuiteMode::kComm;
  comm.protocol = "wsne";
  comm.eps = 0.1;
  comm.seed = 9;
  RunReport creport = run_suite(spec, comm);
  CHECK(creport.errors == 0);
  CHECK(creport.budget_violations == 0);
  for (const RunRecord& rec : creport.records) CHECK(rec.bits > 0);

  SuiteParams query;
  query.mode = SuiteMode::kQuery;
  query.eps = 0.15;
  query.seed = 11;
  RunReport qreport = run_suite(spec, query);
  CHECK(qreport.errors == 0);
  CHECK(qreport.budget_violations == 0);
  for (const RunRecord& rec : qreport.records) CHECK(rec.queries > 0);
}

TEST_CASE("winlose suite records an error for non-win-lose games") {
  GeneratorSpec spec{GeneratorKind::kUniform, 4, 3, 2, 0.5, ""};
  SuiteParams params;
  params.alg = "winlose";
  RunReport report = run_suite(spec, params);
  CHECK(report.errors == 2);
}

TEST_CASE("suite file parsing") {
  SuiteFile f = parse_suite_file(R"({
    "generator": {"kind": "winlose", "n": 12, "seed": 4, "count": 7, "p": 0.25},
    "run": {"mode": "solve", "alg": "winlose", "threads": 2}
  })");
  CHECK(f.spec.kind == GeneratorKind::kWinLoseBernoulli);
  CHECK(f.spec.n == 12);
  CHECK(f.spec.count == 7);
  CHECK(f.spec.p == 0.25);
  CHECK(f.params.alg == "winlose");
  CHECK(f.params.threads == 2);
  CHECK_THROWS(parse_suite_file(R"({"generator": {"kind": "bogus"}})"));
}

}  // TEST_SUITE
