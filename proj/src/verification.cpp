#include "chebderiv/verification.hpp"

#include "chebderiv/parallel.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>

namespace chebderiv {

namespace {

std::string dump(const Json& j) { return j.dump(); }

std::optional<CaseFailure> mismatch(const Json& expected, const Json& actual) {
  if (expected == actual) return std::nullopt;
  return CaseFailure{{}, dump(expected), dump(actual)};
}

std::optional<CaseFailure> check_u(const CaseParams& p) {
  const int n = p.get("n");
  const int s = p.get("s");
  const ChebExpansion explicit_form = u_derivative_explicit(n, s);
  const MonomialPoly oracle = derivative_oracle(n, s, ChebBasis::SecondKind);
  const MonomialPoly as_monomial = expansion_to_monomial(explicit_form);
  if (as_monomial != oracle) return mismatch(to_json(oracle), to_json(as_monomial));
  const ChebExpansion reexpanded = monomial_to_u(oracle);
  if (reexpanded != explicit_form) return mismatch(to_json(reexpanded), to_json(explicit_form));
  return std::nullopt;
}

std::optional<CaseFailure> check_t(const CaseParams& p) {
  const int n = p.get("n");
  const int s = p.get("s");
  const MonomialPoly oracle = derivative_oracle(n, s, ChebBasis::FirstKind);
  const MonomialPoly as_monomial = expansion_to_monomial(t_derivative_explicit(n, s));
  if (as_monomial != oracle) return mismatch(to_json(oracle), to_json(as_monomial));
  return std::nullopt;
}

std::optional<CaseFailure> check_inversion(const CaseParams& p) {
  const int j = p.get("j");
  const MonomialPoly expected{{j, 1}};
  const MonomialPoly actual = expansion_to_monomial(monomial_power_to_u(j));
  if (actual != expected) return mismatch(to_json(expected), to_json(actual));
  return std::nullopt;
}

std::optional<CaseFailure> check_inner_sum(const CaseParams& p) {
  const InnerSumCase c = inner_sum_pair(p.get("n"), p.get("s"), p.get("j"));
  if (c.holds()) return std::nullopt;
  return CaseFailure{{}, c.lhs.get_str(), c.rhs.get_str()};
}

std::optional<CaseFailure> check_triple_sum(const CaseParams& p) {
  const int n = p.get("n");
  const int s = p.get("s");
  const ChebExpansion triple = u_derivative_triple_sum(n, s);
  const ChebExpansion closed = u_derivative_explicit(n, s);
  if (triple != closed) return mismatch(to_json(triple), to_json(closed));
  return std::nullopt;
}

CaseCheck checker_for(std::string_view suite) {
  if (suite == "u") return check_u;
  if (suite == "t") return check_t;
  if (suite == "inversion") return check_inversion;
  if (suite == "inner-sum") return check_inner_sum;
  if (suite == "triple-sum") return check_triple_sum;
  throw std::invalid_argument("unknown suite '" + std::string(suite) + "'");
}

void require_at_least(int value, int min, const char* what) {
  if (value < min) {
    throw std::invalid_argument(std::string(what) + " must be >= " + std::to_string(min) +
                                ", got " + std::to_string(value));
  }
}

std::vector<CaseParams> ns_cases(int n_max, int s_min) {
  std::vector<CaseParams> cases;
  for (int n = 0; n <= n_max; ++n) {
    for (int s = s_min; s <= n; ++s) cases.push_back({{{"n", n}, {"s", s}}});
  }
  return cases;
}

}  // namespace

int CaseParams::get(std::string_view name) const {
  for (const auto& [key, value] : values) {
    if (key == name) return value;
  }
  throw std::invalid_argument("case is missing parameter '" + std::string(name) + "'");
}

bool operator<(const CaseParams& a, const CaseParams& b) {
  return std::lexicographical_compare(
      a.values.begin(), a.values.end(), b.values.begin(), b.values.end(),
      [](const auto& x, const auto& y) { return x.second < y.second; });
}

VerificationReport run_sweep(std::string suite, const std::vector<CaseParams>& cases,
                             const CaseCheck& check, unsigned max_threads) {
  const auto start = std::chrono::steady_clock::now();
  std::vector<std::optional<CaseFailure>> outcomes(cases.size());
  parallel_for(
      cases.size(),
      [&](std::size_t i) {
        outcomes[i] = check(cases[i]);
        if (outcomes[i]) outcomes[i]->params = cases[i];
      },
      max_threads);

  VerificationReport report;
  report.suite = std::move(suite);
  report.cases_run = cases.size();
  for (auto& outcome : outcomes) {
    if (outcome) report.failures.push_back(std::move(*outcome));
  }
  std::stable_sort(report.failures.begin(), report.failures.end(),
                   [](const CaseFailure& a, const CaseFailure& b) { return a.params < b.params; });
  report.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                          std::chrono::steady_clock::now() - start)
                          .count();
  return report;
}

VerificationReport verify_u_explicit(int n_max) {
  require_at_least(n_max, 0, "n_max");
  return run_sweep("u", ns_cases(n_max, 0), check_u);
}

VerificationReport verify_t_explicit(int n_max) {
  require_at_least(n_max, 0, "n_max");
  return run_sweep("t", ns_cases(n_max, 0), check_t);
}

VerificationReport verify_inversion(int j_max) {
  require_at_least(j_max, 0, "j_max");
  std::vector<CaseParams> cases;
  for (int j = 0; j <= j_max; ++j) cases.push_back({{{"j", j}}});
  return run_sweep("inversion", cases, check_inversion);
}

VerificationReport verify_inner_sum(int n_max) {
  require_at_least(n_max, 1, "n_max");
  std::vector<CaseParams> cases;
  for (int n = 1; n <= n_max; ++n) {
    for (int s = 1; s <= n; ++s) {
      for (int j = 0; 2 * j <= n - s; ++j) cases.push_back({{{"n", n}, {"s", s}, {"j", j}}});
    }
  }
  return run_sweep("inner-sum", cases, check_inner_sum);
}

VerificationReport verify_triple_sum(int n_max) {
  require_at_least(n_max, 1, "n_max");
  return run_sweep("triple-sum", ns_cases(n_max, 1), check_triple_sum);
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"u", "t", "inversion", "inner-sum", "triple-sum"};
  return names;
}

VerificationReport run_suite(std::string_view name, int n_max) {
  if (name == "u") return verify_u_explicit(n_max);
  if (name == "t") return verify_t_explicit(n_max);
  if (name == "inversion") return verify_inversion(n_max);
  if (name == "inner-sum") return verify_inner_sum(n_max);
  if (name == "triple-sum") return verify_triple_sum(n_max);
  throw std::invalid_argument("unknown suite '" + std::string(name) + "'");
}

std::optional<CaseFailure> rerun_case(std::string_view suite, const CaseParams& params) {
  auto failure = checker_for(suite)(params);
  if (failure) failure->params = params;
  return failure;
}

Json to_json(const VerificationReport& report) {
  Json failures = Json::array();
  for (const auto& f : report.failures) {
    Json params = Json::object();
    for (const auto& [name, value] : f.params.values) params[name] = value;
    failures.push_back(
        Json{{"params", std::move(params)}, {"expected", f.expected}, {"actual", f.actual}});
  }
  return Json{{"suite", report.suite},
              {"cases", report.cases_run},
              {"failures", std::move(failures)},
              {"elapsed_ms", report.elapsed_ms}};
}

VerificationReport report_from_json(const Json& j) {
  try {
    VerificationReport report;
    report.suite = j.at("suite").get<std::string>();
    report.cases_run = j.at("cases").get<std::size_t>();
    report.elapsed_ms = j.at("elapsed_ms").get<long long>();
    for (const auto& f : j.at("failures")) {
      CaseFailure failure;
      for (const auto& [name, value] : f.at("params").items()) {
        failure.params.values.emplace_back(name, value.get<int>());
      }
      failure.expected = f.at("expected").get<std::string>();
      failure.actual = f.at("actual").get<std::string>();
      report.failures.push_back(std::move(failure));
    }
    if (report.failures.size() > report.cases_run) {
      throw std::invalid_argument("report lists more failures than cases");
    }
    return report;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed report: ") + e.what());
  }
}

}  // namespace chebderiv
