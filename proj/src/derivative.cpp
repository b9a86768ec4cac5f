#include "chebderiv/derivative.hpp"

#include "chebderiv/parallel.hpp"

#include <sstream>
#include <stdexcept>
#include <vector>

namespace chebderiv {

namespace {

void require_nonnegative(int value, const char* what) {
  if (value < 0) {
    throw std::invalid_argument(std::string(what) + " must be nonnegative, got " +
                                std::to_string(value));
  }
}

void check_orders(int n, int s) {
  require_nonnegative(n, "n");
  require_nonnegative(s, "derivative order s");
}

}  // namespace

ChebExpansion u_derivative_explicit(int n, int s) {
  check_orders(n, s);
  ChebExpansion out(ChebBasis::SecondKind);
  if (s == 0) {
    out.add(n, 1);
    return out;
  }
  const ExactInt scale = pow2(s);
  for (int j = 0; 2 * j <= n - s; ++j) {
    const ExactInt c = scale * falling_factorial(n - j, s - 1) * binomial(s + j - 1, s - 1) *
                       (n - 2 * j - s + 1);
    out.add(n - s - 2 * j, ExactRational(c));
  }
  return out;
}

ChebExpansion t_derivative_explicit(int n, int s) {
  check_orders(n, s);
  ChebExpansion out(ChebBasis::FirstKind);
  if (s == 0) {
    out.add(n, 1);
    return out;
  }
  if (s > n) return out;
  const ExactInt scale = pow2(s);
  for (int j = 0; 2 * j <= n - s; ++j) {
    const ExactInt c =
        scale * n * falling_factorial(n - 1 - j, s - 1) * binomial(s + j - 1, s - 1);
    out.add(n - s - 2 * j, ExactRational(c));
  }
  if ((n - s) % 2 == 0) {
    const int half = (n + s) / 2 - 1;
    const ExactInt correction =
        pow2(s - 1) * n * falling_factorial(half, s - 1) * binomial(half, s - 1);
    out.add(0, ExactRational(-correction));
  }
  return out;
}

ChebExpansion derivative_explicit(ChebBasis basis, int n, int s) {
  return basis == ChebBasis::FirstKind ? t_derivative_explicit(n, s)
                                       : u_derivative_explicit(n, s);
}

ChebExpansion u_derivative_triple_sum(int n, int s) {
  require_nonnegative(n, "n");
  if (s < 1) {
    throw std::invalid_argument("triple-sum form needs s >= 1, got " + std::to_string(s));
  }
  ChebExpansion out(ChebBasis::SecondKind);
  const ExactInt scale = pow2(s);
  for (int j = 0; 2 * j <= n - s; ++j) {
    ExactInt sum = 0;
    for (int k = 0; k <= j; ++k) {
      const int m = n - s - 2 * k;
      ExactInt term = binomial(n - k, k) * falling_factorial(n - 2 * k, s) *
                      (binomial(m, j - k) - binomial(m, j - k - 1));
      if (k % 2 == 1) term = -term;
      sum += term;
    }
    out.add(n - s - 2 * j, ExactRational(scale * sum));
  }
  return out;
}

MonomialPoly derivative_oracle(int n, int s, ChebBasis basis) {
  check_orders(n, s);
  return differentiate(chebyshev_monomial(basis, n), s);
}

InnerSumCase inner_sum_pair(int n, int s, int j) {
  if (s < 1 || s > n || j < 0 || 2 * j > n - s) {
    throw std::invalid_argument("inner sum needs 1 <= s <= n and 0 <= j <= (n-s)/2, got n=" +
                                std::to_string(n) + " s=" + std::to_string(s) +
                                " j=" + std::to_string(j));
  }
  InnerSumCase out{n, s, j, 0, 0};
  for (int k = 0; k <= j; ++k) {
    const int m = n - s - 2 * k;
    ExactInt term = binomial(n - k, k) * falling_factorial(n - 2 * k, s) *
                    (binomial(m, j - k) - binomial(m, j - k - 1));
    if (k % 2 == 1) term = -term;
    out.lhs += term;
  }
  out.rhs = falling_factorial(n - j, s - 1) * binomial(s + j - 1, s - 1) * (n - 2 * j - s + 1);
  return out;
}

DiffMatrix::DiffMatrix(ChebBasis basis, int order, int n_max, Entries entries)
    : basis_(basis), order_(order), n_max_(n_max), entries_(std::move(entries)) {
  require_nonnegative(order, "derivative order s");
  require_nonnegative(n_max, "n_max");
  for (auto it = entries_.begin(); it != entries_.end();) {
    const auto [row, col] = it->first;
    if (row < 0 || col < 0 || row > n_max_ || col > n_max_) {
      throw std::out_of_range("matrix entry (" + std::to_string(row) + ", " +
                              std::to_string(col) + ") outside " + std::to_string(n_max_ + 1) +
                              "x" + std::to_string(n_max_ + 1));
    }
    it = it->second == 0 ? entries_.erase(it) : std::next(it);
  }
}

ExactRational DiffMatrix::at(int row, int col) const {
  const auto it = entries_.find({row, col});
  return it == entries_.end() ? ExactRational(0) : it->second;
}

ChebExpansion DiffMatrix::column(int col) const {
  ChebExpansion out(basis_);
  for (const auto& [pos, value] : entries_) {
    if (pos.second == col) out.add(pos.first, value);
  }
  return out;
}

DiffMatrix diff_matrix(ChebBasis basis, int s, int n_max) {
  require_nonnegative(s, "derivative order s");
  require_nonnegative(n_max, "n_max");
  std::vector<ChebExpansion> columns(static_cast<std::size_t>(n_max) + 1, ChebExpansion(basis));
  parallel_for(columns.size(), [&](std::size_t col) {
    columns[col] = derivative_explicit(basis, static_cast<int>(col), s);
  });
  DiffMatrix::Entries entries;
  for (std::size_t col = 0; col < columns.size(); ++col) {
    for (const auto& [row, value] : columns[col].terms()) {
      entries.emplace(std::pair{row, static_cast<int>(col)}, value);
    }
  }
  return DiffMatrix(basis, s, n_max, std::move(entries));
}

ChebExpansion apply_diff_matrix(const DiffMatrix& m, const ChebExpansion& e) {
  if (e.basis() != m.basis()) {
    throw std::invalid_argument(std::string("basis mismatch: matrix is ") +
                                std::string(basis_symbol(m.basis())) + ", expansion is " +
                                std::string(basis_symbol(e.basis())));
  }
  if (e.degree().value_or(0) > m.n_max()) {
    throw std::out_of_range("expansion degree " + std::to_string(*e.degree()) +
                            " exceeds matrix n_max " + std::to_string(m.n_max()));
  }
  ChebExpansion out(m.basis());
  for (const auto& [pos, value] : m.entries()) {
    const ExactRational weight = e.coefficient(pos.second);
    if (weight != 0) out.add(pos.first, weight * value);
  }
  return out;
}

std::string diff_matrix_csv(const DiffMatrix& m) {
  std::ostringstream out;
  out << "row\\col";
  for (int col = 0; col <= m.n_max(); ++col) out << ',' << col;
  out << '\n';
  for (int row = 0; row <= m.n_max(); ++row) {
    out << row;
    for (int col = 0; col <= m.n_max(); ++col) out << ',' << to_string(m.at(row, col));
    out << '\n';
  }
  return out.str();
}

}  // namespace chebderiv
