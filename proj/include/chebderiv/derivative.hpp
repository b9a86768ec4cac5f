#pragma once

#include "chebderiv/polynomial.hpp"

#include <map>
#include <string>
#include <utility>

namespace chebderiv {

/// s-th derivative of U_n in the U basis:
///   2^s sum_{0 <= j <= (n-s)/2} (n-j)^{(s-1)} C(s+j-1, s-1) (n-2j-s+1) U_{n-s-2j}
/// where a^{(m)} is the falling factorial. s == 0 gives U_n itself; s > n
/// gives the zero expansion.
ChebExpansion u_derivative_explicit(int n, int s);

/// s-th derivative of T_n in the T basis:
///   2^s sum_j n (n-1-j)^{(s-1)} C(s+j-1, s-1) T_{n-s-2j}
///   - [n-s even] 2^{s-1} n ((n+s)/2-1)^{(s-1)} C((n+s)/2-1, s-1)
/// with the trailing constant folded into the T_0 coefficient.
ChebExpansion t_derivative_explicit(int n, int s);

ChebExpansion derivative_explicit(ChebBasis basis, int n, int s);

/// The unsimplified double sum over 0 <= k <= j <= (n-s)/2 obtained by pushing
/// the monomial-to-U inversion through the power-rule derivative of U_n.
/// Requires s >= 1.
ChebExpansion u_derivative_triple_sum(int n, int s);

/// Monomial form of the s-th derivative of T_n or U_n, by the power rule on
/// the explicit monomial coefficients. Shares nothing with the closed forms.
MonomialPoly derivative_oracle(int n, int s, ChebBasis basis);

struct InnerSumCase {
  int n = 0;
  int s = 0;
  int j = 0;
  ExactInt lhs;  // alternating sum over k
  ExactInt rhs;  // closed form

  bool holds() const { return lhs == rhs; }
};

/// Both sides of
///   sum_{0<=k<=j} (-1)^k C(n-k,k) (n-2k)^{(s)} [C(n-s-2k, j-k) - C(n-s-2k, j-k-1)]
///     = (n-j)^{(s-1)} C(s+j-1, s-1) (n-2j-s+1).
/// Throws std::invalid_argument unless 1 <= s <= n and 0 <= 2j <= n-s.
InnerSumCase inner_sum_pair(int n, int s, int j);

/// Sparse s-th order differentiation operator on span{P_0..P_{n_max}}.
/// Column c is the expansion of the s-th derivative of P_c.
class DiffMatrix {
 public:
  using Entries = std::map<std::pair<int, int>, ExactRational>;  // (row, col)

  DiffMatrix(ChebBasis basis, int order, int n_max, Entries entries);

  ChebBasis basis() const { return basis_; }
  int order() const { return order_; }
  int n_max() const { return n_max_; }
  const Entries& entries() const { return entries_; }

  ExactRational at(int row, int col) const;
  ChebExpansion column(int col) const;

  friend bool operator==(const DiffMatrix&, const DiffMatrix&) = default;

 private:
  ChebBasis basis_;
  int order_;
  int n_max_;
  Entries entries_;
};

/// Columns are assembled concurrently; the result does not depend on the
/// thread count.
DiffMatrix diff_matrix(ChebBasis basis, int s, int n_max);

/// Throws std::invalid_argument on basis mismatch and std::out_of_range when
/// the expansion's degree exceeds the matrix size.
ChebExpansion apply_diff_matrix(const DiffMatrix& m, const ChebExpansion& e);

/// Dense grid: header "row\col,0,1,...,n_max", then one line per row in
/// ascending order. Entries are lowest-terms rationals, zero as "0".
std::string diff_matrix_csv(const DiffMatrix& m);

}  // namespace chebderiv
