#include "chebderiv/bench.hpp"

#include "chebderiv/derivative.hpp"

#include <chrono>
#include <cstdio>
#include <sstream>

namespace chebderiv {

namespace {

template <typename F>
ChebExpansion timed(F&& f, double& elapsed_ms) {
  const auto start = std::chrono::steady_clock::now();
  ChebExpansion out = f();
  elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
                   .count();
  return out;
}

}  // namespace

BenchPaths BenchPaths::standard() {
  return {
      [](int n, int s) { return u_derivative_explicit(n, s); },
      [](int n, int s) {
        return monomial_to_u(derivative_oracle(n, s, ChebBasis::SecondKind));
      },
  };
}

std::vector<int> bench_ladder(int n_max, int s) {
  if (s < 0 || n_max < s) {
    throw std::invalid_argument("bench needs 0 <= s <= n_max, got s=" + std::to_string(s) +
                                " n_max=" + std::to_string(n_max));
  }
  std::vector<int> ladder{s};
  for (long long p = 1; p < n_max; p *= 2) {
    if (p > s) ladder.push_back(static_cast<int>(p));
  }
  if (n_max > s) ladder.push_back(n_max);
  return ladder;
}

BenchTable run_bench(int n_max, int s, const BenchPaths& paths) {
  BenchTable table{s, {}};
  std::vector<int> disagreements;
  for (int n : bench_ladder(n_max, s)) {
    BenchRow row{n, 0, 0};
    const ChebExpansion fast = timed([&] { return paths.closed_form(n, s); }, row.explicit_ms);
    const ChebExpansion slow = timed([&] { return paths.baseline(n, s); }, row.oracle_ms);
    if (fast != slow) disagreements.push_back(n);
    table.rows.push_back(row);
  }
  if (!disagreements.empty()) {
    std::ostringstream msg;
    msg << "explicit and oracle paths disagree at n =";
    for (int n : disagreements) msg << ' ' << n;
    msg << " (s = " << s << ")";
    throw BenchMismatch(std::move(disagreements), msg.str());
  }
  return table;
}

std::string bench_csv(const BenchTable& table) {
  std::ostringstream out;
  out << "n,s,explicit_ms,oracle_ms\n";
  char buf[64];
  for (const auto& row : table.rows) {
    std::snprintf(buf, sizeof buf, "%.3f,%.3f", row.explicit_ms, row.oracle_ms);
    out << row.n << ',' << table.s << ',' << buf << '\n';
  }
  return out.str();
}

}  // namespace chebderiv
