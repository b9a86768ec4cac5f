#pragma once

#include "chebderiv/serialization.hpp"

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace chebderiv {

/// Named integer parameters of one sweep case, in enumeration order
/// (e.g. n, s, j). Ordering compares values lexicographically.
struct CaseParams {
  std::vector<std::pair<std::string, int>> values;

  int get(std::string_view name) const;
  friend bool operator==(const CaseParams&, const CaseParams&) = default;
  friend bool operator<(const CaseParams& a, const CaseParams& b);
};

/// expected/actual hold the compact serialized values that disagreed.
struct CaseFailure {
  CaseParams params;
  std::string expected;
  std::string actual;

  friend bool operator==(const CaseFailure&, const CaseFailure&) = default;
};

struct VerificationReport {
  std::string suite;
  std::size_t cases_run = 0;
  std::vector<CaseFailure> failures;  // sorted by params
  long long elapsed_ms = 0;

  bool passed() const { return failures.empty(); }
};

/// Returns a failure payload (without params) when the case does not hold.
using CaseCheck = std::function<std::optional<CaseFailure>(const CaseParams&)>;

/// Evaluates every case, concurrently when max_threads != 1. The report is
/// independent of scheduling apart from elapsed_ms.
VerificationReport run_sweep(std::string suite, const std::vector<CaseParams>& cases,
                             const CaseCheck& check, unsigned max_threads = 0);

/// Explicit U formula against the power-rule oracle, both in the monomial
/// basis and after re-expanding the oracle in U. All 0 <= s <= n <= n_max.
VerificationReport verify_u_explicit(int n_max);
/// Explicit T formula against the power-rule oracle in the monomial basis.
VerificationReport verify_t_explicit(int n_max);
/// U expansion of x^j maps back to x^j, 0 <= j <= j_max.
VerificationReport verify_inversion(int j_max);
/// Alternating k-sum equals its closed form for every valid (n, s, j). n_max >= 1.
VerificationReport verify_inner_sum(int n_max);
/// Double-sum form equals the explicit U formula, 1 <= s <= n <= n_max. n_max >= 1.
VerificationReport verify_triple_sum(int n_max);

/// Suite names as used on the command line: u, t, inversion, inner-sum, triple-sum.
const std::vector<std::string>& suite_names();
VerificationReport run_suite(std::string_view name, int n_max);

/// Re-checks a single case of the named suite from its parameters.
std::optional<CaseFailure> rerun_case(std::string_view suite, const CaseParams& params);

Json to_json(const VerificationReport& report);
VerificationReport report_from_json(const Json& j);

}  // namespace chebderiv
