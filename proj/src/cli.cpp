#include "chebderiv/cli.hpp"

#include "chebderiv/bench.hpp"
#include "chebderiv/derivative.hpp"
#include "chebderiv/serialization.hpp"
#include "chebderiv/verification.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace chebderiv {

namespace {

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct CliConfig {
  std::string kind = "U";
  int n = 0;
  int s = 0;
  int n_max = 0;
  int power = 0;
  std::string at;
  std::string method = "explicit";
  std::string format = "json";
  std::string suite;
  std::string output;
};

std::string gen(const CliConfig& cfg) {
  return to_json(chebyshev_monomial(parse_basis(cfg.kind), cfg.n)).dump() + "\n";
}

std::string derive(const CliConfig& cfg) {
  const ChebBasis basis = parse_basis(cfg.kind);
  if (cfg.method == "explicit") {
    return to_json(derivative_explicit(basis, cfg.n, cfg.s)).dump() + "\n";
  }
  if (cfg.method == "triple-sum") {
    if (basis != ChebBasis::SecondKind) {
      throw UsageError("--method triple-sum is only defined for --kind U");
    }
    if (cfg.s < 1) throw UsageError("--method triple-sum needs --s >= 1");
    return to_json(u_derivative_triple_sum(cfg.n, cfg.s)).dump() + "\n";
  }
  // oracle: there is no monomial-to-T conversion, so T stays in monomial form.
  const MonomialPoly oracle = derivative_oracle(cfg.n, cfg.s, basis);
  if (basis == ChebBasis::SecondKind) return to_json(monomial_to_u(oracle)).dump() + "\n";
  return to_json(oracle).dump() + "\n";
}

std::string invert(const CliConfig& cfg) {
  return to_json(monomial_power_to_u(cfg.power)).dump() + "\n";
}

std::string matrix(const CliConfig& cfg) {
  const DiffMatrix m = diff_matrix(parse_basis(cfg.kind), cfg.s, cfg.n_max);
  if (cfg.format == "csv") return diff_matrix_csv(m);
  return to_json(m).dump() + "\n";
}

std::string eval(const CliConfig& cfg) {
  ExactRational x;
  try {
    x = parse_rational(cfg.at);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("--at: ") + e.what());
  }
  ChebExpansion e(parse_basis(cfg.kind));
  e.add(cfg.n, 1);
  Json out{{"basis", cfg.kind}, {"n", cfg.n}, {"at", to_string(x)},
           {"value", to_string(clenshaw_eval(e, x))}};
  return out.dump() + "\n";
}

std::string verify(const CliConfig& cfg, bool& all_passed) {
  std::vector<std::string> suites;
  if (cfg.suite == "all") {
    suites = suite_names();
  } else {
    suites.push_back(cfg.suite);
  }
  const int min_n = std::any_of(suites.begin(), suites.end(),
                                [](const std::string& s) {
                                  return s == "inner-sum" || s == "triple-sum";
                                })
                        ? 1
                        : 0;
  if (cfg.n_max < min_n) {
    throw UsageError("--n-max must be >= " + std::to_string(min_n) + " for suite " + cfg.suite);
  }
  std::string out;
  all_passed = true;
  for (const auto& name : suites) {
    const VerificationReport report = run_suite(name, cfg.n_max);
    all_passed = all_passed && report.passed();
    out += to_json(report).dump() + "\n";
  }
  return out;
}

void emit(const CliConfig& cfg, const std::string& text, CliResult& result) {
  if (cfg.output.empty() || cfg.output == "-") {
    result.out += text;
    return;
  }
  std::ofstream file(cfg.output, std::ios::binary);
  file << text;
  if (!file) throw std::runtime_error("cannot write " + cfg.output);
}

}  // namespace

CliResult run_cli(const std::vector<std::string>& args) {
  CliResult result;
  CliConfig cfg;

  CLI::App app{"Exact derivatives of Chebyshev polynomials in the Chebyshev basis", "chebderiv"};
  app.require_subcommand(1, 1);
  app.add_option("-o,--output", cfg.output, "Write output to this file instead of stdout");

  const auto kind_opt = [&](CLI::App* sub) {
    sub->add_option("--kind", cfg.kind, "Basis: U (second kind) or T (first kind)")
        ->required()
        ->check(CLI::IsMember({"U", "T"}));
  };
  const auto count_opt = [](CLI::App* sub, const std::string& flag, int& target,
                            const std::string& help) {
    return sub->add_option(flag, target, help)->required()->check(CLI::NonNegativeNumber);
  };

  auto* gen_cmd = app.add_subcommand("gen", "Monomial coefficients of T_n or U_n");
  kind_opt(gen_cmd);
  count_opt(gen_cmd, "--n", cfg.n, "Degree");

  auto* derive_cmd = app.add_subcommand("derive", "s-th derivative of T_n or U_n");
  kind_opt(derive_cmd);
  count_opt(derive_cmd, "--n", cfg.n, "Degree");
  count_opt(derive_cmd, "--s", cfg.s, "Derivative order");
  derive_cmd->add_option("--method", cfg.method, "explicit, triple-sum or oracle")
      ->check(CLI::IsMember({"explicit", "triple-sum", "oracle"}));

  auto* invert_cmd = app.add_subcommand("invert", "U expansion of x^j");
  count_opt(invert_cmd, "--power", cfg.power, "Exponent j");

  auto* matrix_cmd = app.add_subcommand("matrix", "s-th order differentiation matrix");
  kind_opt(matrix_cmd);
  count_opt(matrix_cmd, "--s", cfg.s, "Derivative order");
  count_opt(matrix_cmd, "--n-max", cfg.n_max, "Largest basis degree");
  matrix_cmd->add_option("--format", cfg.format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}));

  auto* eval_cmd = app.add_subcommand("eval", "Exact value of T_n or U_n at a rational point");
  kind_opt(eval_cmd);
  count_opt(eval_cmd, "--n", cfg.n, "Degree");
  eval_cmd->add_option("--at", cfg.at, "Point as P/Q or P")->required();

  auto* verify_cmd = app.add_subcommand("verify", "Run identity sweeps");
  std::vector<std::string> suite_choices = suite_names();
  suite_choices.push_back("all");
  verify_cmd->add_option("--suite", cfg.suite, "u, t, inversion, inner-sum, triple-sum or all")
      ->required()
      ->check(CLI::IsMember(suite_choices));
  count_opt(verify_cmd, "--n-max", cfg.n_max, "Largest degree swept");

  auto* bench_cmd = app.add_subcommand("bench", "Time explicit formula against the oracle path");
  count_opt(bench_cmd, "--n-max", cfg.n_max, "Largest degree");
  count_opt(bench_cmd, "--s", cfg.s, "Derivative order");

  std::ostringstream out;
  std::ostringstream err;
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return {kExitOk, out.str(), err.str()};
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return {kExitUsage, out.str(), err.str()};
  }

  try {
    if (gen_cmd->parsed()) {
      emit(cfg, gen(cfg), result);
    } else if (derive_cmd->parsed()) {
      emit(cfg, derive(cfg), result);
    } else if (invert_cmd->parsed()) {
      emit(cfg, invert(cfg), result);
    } else if (matrix_cmd->parsed()) {
      emit(cfg, matrix(cfg), result);
    } else if (eval_cmd->parsed()) {
      emit(cfg, eval(cfg), result);
    } else if (verify_cmd->parsed()) {
      bool passed = true;
      emit(cfg, verify(cfg, passed), result);
      if (!passed) {
        result.err += "verification failed\n";
        result.exit_code = kExitFailure;
      }
    } else if (bench_cmd->parsed()) {
      if (cfg.n_max < cfg.s) throw UsageError("bench needs --n-max >= --s");
      const BenchTable table = run_bench(cfg.n_max, cfg.s);
      result.err += "equality check passed on " + std::to_string(table.rows.size()) + " rows\n";
      emit(cfg, bench_csv(table), result);
    }
  } catch (const BenchMismatch& e) {
    result.err += std::string("error: ") + e.what() + "\n";
    result.exit_code = kExitFailure;
  } catch (const std::invalid_argument& e) {
    result.err += std::string("usage error: ") + e.what() + "\n";
    result.exit_code = kExitUsage;
  } catch (const std::exception& e) {
    result.err += std::string("error: ") + e.what() + "\n";
    result.exit_code = kExitFailure;
  }
  return result;
}

}  // namespace chebderiv
