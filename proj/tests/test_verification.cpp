#include <doctest.h>

#include "chebderiv/verification.hpp"

#include <stdexcept>

using namespace chebderiv;

TEST_CASE("suite case counts on small ranges") {
  const auto u8 = verify_u_explicit(8);
  CHECK(u8.cases_run == 45);
  CHECK(u8.passed());
  CHECK(u8.suite == "u");

  const auto u0 = verify_u_explicit(0);
  CHECK(u0.cases_run == 1);
  CHECK(u0.passed());

  const auto t8 = verify_t_explicit(8);
  CHECK(t8.cases_run == 45);
  CHECK(t8.passed());
  CHECK(verify_t_explicit(0).cases_run == 1);

  const auto inv = verify_inversion(16);
  CHECK(inv.cases_run == 17);
  CHECK(inv.passed());
  CHECK(verify_inversion(0).cases_run == 1);

  const auto inner1 = verify_inner_sum(1);
  CHECK(inner1.cases_run == 1);
  CHECK(inner1.passed());
  const auto inner8 = verify_inner_sum(8);
  CHECK(inner8.passed());
  // sum over n <= 8, 1 <= s <= n of (floor((n-s)/2) + 1)
  std::size_t expected_inner = 0;
  for (int n = 1; n <= 8; ++n) {
    for (int s = 1; s <= n; ++s) expected_inner += (n - s) / 2 + 1;
  }
  CHECK(inner8.cases_run == expected_inner);

  const auto triple8 = verify_triple_sum(8);
  CHECK(triple8.cases_run == 36);
  CHECK(triple8.passed());
  CHECK(verify_triple_sum(1).cases_run == 1);
}

TEST_CASE("suite argument validation") {
  CHECK_THROWS_AS(verify_u_explicit(-1), std::invalid_argument);
  CHECK_THROWS_AS(verify_inner_sum(0), std::invalid_argument);
  CHECK_THROWS_AS(verify_triple_sum(0), std::invalid_argument);
  CHECK_THROWS_AS(run_suite("nope", 3), std::invalid_argument);
  CHECK(run_suite("inversion", 3).cases_run == 4);
}

TEST_CASE("failures are sorted, deterministic and serializable") {
  std::vector<CaseParams> cases;
  for (int n = 0; n < 6; ++n) {
    for (int s = 0; s < 4; ++s) cases.push_back({{{"n", n}, {"s", s}}});
  }
  // Deliberately false claim: every n + s is even.
  const CaseCheck check = [](const CaseParams& p) -> std::optional<CaseFailure> {
    const int sum = p.get("n") + p.get("s");
    if (sum % 2 == 0) return std::nullopt;
    return CaseFailure{{}, "even", std::to_string(sum)};
  };
  const auto parallel = run_sweep("parity", cases, check, 8);
  const auto serial = run_sweep("parity", cases, check, 1);
  CHECK(parallel.cases_run == 24);
  CHECK(parallel.failures.size() == 12);
  CHECK(parallel.failures == serial.failures);
  CHECK_FALSE(parallel.passed());
  for (std::size_t i = 1; i < parallel.failures.size(); ++i) {
    CHECK(parallel.failures[i - 1].params < parallel.failures[i].params);
  }
  CHECK(parallel.failures.front().params.get("n") == 0);
  CHECK(parallel.failures.front().params.get("s") == 1);

  const Json j = to_json(parallel);
  CHECK(j["suite"] == "parity");
  CHECK(j["cases"] == 24);
  const VerificationReport back = report_from_json(Json::parse(j.dump()));
  CHECK(back.failures == parallel.failures);
  CHECK(back.cases_run == parallel.cases_run);
}

TEST_CASE("failure parameters re-run the exact case") {
  const CaseParams p{{{"n", 9}, {"s", 3}}};
  const VerificationReport fake{"t", 1, {CaseFailure{p, "x", "y"}}, 0};
  const VerificationReport back = report_from_json(Json::parse(to_json(fake).dump()));
  CHECK(back.failures.front().params == p);
  // The real identity holds, so re-running reports no failure.
  CHECK_FALSE(rerun_case(back.suite, back.failures.front().params).has_value());
  CHECK_FALSE(rerun_case("inner-sum", CaseParams{{{"n", 6}, {"s", 2}, {"j", 2}}}).has_value());
  CHECK_THROWS_AS(rerun_case("inner-sum", CaseParams{{{"n", 6}}}), std::invalid_argument);
}

TEST_CASE("report json shape") {
  const Json j = to_json(verify_inversion(2));
  CHECK(j.size() == 4);
  CHECK(j["suite"] == "inversion");
  CHECK(j["cases"] == 3);
  CHECK(j["failures"].is_array());
  CHECK(j["elapsed_ms"].is_number_integer());
  CHECK_THROWS_AS(report_from_json(Json::parse(R"({"suite":"u"})")), std::invalid_argument);
  CHECK_THROWS_AS(
      report_from_json(Json::parse(
          R"({"suite":"u","cases":0,"failures":[{"params":{"n":1},"expected":"a","actual":"b"}],"elapsed_ms":0})")),
      std::invalid_argument);
}

TEST_CASE("repeated runs produce identical reports apart from timing") {
  auto a = verify_triple_sum(10);
  auto b = verify_triple_sum(10);
  a.elapsed_ms = b.elapsed_ms = 0;
  CHECK(to_json(a) == to_json(b));
}
