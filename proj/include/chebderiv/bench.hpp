#pragma once

#include "chebderiv/polynomial.hpp"

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace chebderiv {

struct BenchRow {
  int n = 0;
  double explicit_ms = 0;
  double oracle_ms = 0;
};

struct BenchTable {
  int s = 0;
  std::vector<BenchRow> rows;
};

/// Thrown when the two paths disagree; no timings are reported in that case.
class BenchMismatch : public std::runtime_error {
 public:
  BenchMismatch(std::vector<int> degrees, const std::string& message)
      : std::runtime_error(message), degrees_(std::move(degrees)) {}
  const std::vector<int>& degrees() const { return degrees_; }

 private:
  std::vector<int> degrees_;
};

/// The two computations being timed. Defaults: the closed-form U derivative,
/// and power-rule differentiation followed by re-expansion in U.
struct BenchPaths {
  std::function<ChebExpansion(int n, int s)> closed_form;
  std::function<ChebExpansion(int n, int s)> baseline;

  static BenchPaths standard();
};

/// s, then powers of two strictly between s and n_max, then n_max.
std::vector<int> bench_ladder(int n_max, int s);

/// Throws std::invalid_argument when n_max < s or s < 0, BenchMismatch when
/// any rung's outputs differ.
BenchTable run_bench(int n_max, int s, const BenchPaths& paths = BenchPaths::standard());

/// CSV: "n,s,explicit_ms,oracle_ms" then one line per rung.
std::string bench_csv(const BenchTable& table);

}  // namespace chebderiv
