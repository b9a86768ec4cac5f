#include <doctest.h>

#include "chebderiv/derivative.hpp"

#include <random>
#include <stdexcept>

using namespace chebderiv;

namespace {

constexpr ChebBasis U = ChebBasis::SecondKind;
constexpr ChebBasis T = ChebBasis::FirstKind;

ChebExpansion basis_vector(ChebBasis basis, int n) { return ChebExpansion(basis, {{n, 1}}); }

}  // namespace

TEST_CASE("U derivative spot values") {
  CHECK(u_derivative_explicit(2, 1) == ChebExpansion(U, {{1, 4}}));
  CHECK(u_derivative_explicit(4, 1) == ChebExpansion(U, {{3, 8}, {1, 4}}));
  CHECK(u_derivative_explicit(5, 2) == ChebExpansion(U, {{3, 80}, {1, 64}}));
  // Cross-checked with a computer algebra system.
  CHECK(u_derivative_explicit(7, 3) == ChebExpansion(U, {{4, 1680}, {2, 2160}, {0, 960}}));
  CHECK(u_derivative_explicit(3, 5) == ChebExpansion(U));
  for (int n = 0; n <= 12; ++n) {
    REQUIRE(u_derivative_explicit(n, 0) == basis_vector(U, n));
    REQUIRE(u_derivative_explicit(n, n) ==
            ChebExpansion(U, {{0, ExactRational(pow2(n) * factorial(n))}}));
  }
  CHECK_THROWS_AS(u_derivative_explicit(-1, 0), std::invalid_argument);
  CHECK_THROWS_AS(u_derivative_explicit(2, -1), std::invalid_argument);
}

TEST_CASE("T derivative spot values") {
  CHECK(t_derivative_explicit(2, 1) == ChebExpansion(T, {{1, 4}}));
  CHECK(t_derivative_explicit(3, 1) == ChebExpansion(T, {{2, 6}, {0, 3}}));
  CHECK(t_derivative_explicit(4, 2) == ChebExpansion(T, {{2, 48}, {0, 32}}));
  CHECK(t_derivative_explicit(7, 3) == ChebExpansion(T, {{4, 1680}, {2, 3360}, {0, 2016}}));
  CHECK(t_derivative_explicit(6, 2) == ChebExpansion(T, {{4, 120}, {2, 192}, {0, 108}}));
  CHECK(t_derivative_explicit(0, 1) == ChebExpansion(T));
  CHECK(t_derivative_explicit(3, 4) == ChebExpansion(T));
  for (int n = 0; n <= 12; ++n) REQUIRE(t_derivative_explicit(n, 0) == basis_vector(T, n));
  // T_n^{(n)} = 2^{n-1} n!
  for (int n = 1; n <= 12; ++n) {
    REQUIRE(t_derivative_explicit(n, n) ==
            ChebExpansion(T, {{0, ExactRational(pow2(n - 1) * factorial(n))}}));
  }
}

TEST_CASE("triple sum agrees on spot values and rejects s = 0") {
  CHECK(u_derivative_triple_sum(4, 1) == ChebExpansion(U, {{3, 8}, {1, 4}}));
  CHECK(u_derivative_triple_sum(5, 2) == ChebExpansion(U, {{3, 80}, {1, 64}}));
  CHECK(u_derivative_triple_sum(3, 5) == ChebExpansion(U));
  CHECK_THROWS_AS(u_derivative_triple_sum(3, 0), std::invalid_argument);
}

TEST_CASE("power-rule oracle") {
  CHECK(derivative_oracle(2, 1, U) == MonomialPoly{{1, 8}});
  CHECK(derivative_oracle(3, 1, T) == MonomialPoly{{2, 12}, {0, -3}});
  for (int n = 0; n <= 10; ++n) {
    REQUIRE(derivative_oracle(n, 0, U) == chebyshev_u_monomial(n));
    REQUIRE(derivative_oracle(n, 0, T) == chebyshev_t_monomial(n));
  }
}

TEST_CASE("explicit formulas agree with the oracle (small sweep)") {
  for (int n = 0; n <= 20; ++n) {
    for (int s = 0; s <= n + 1; ++s) {
      CAPTURE(n);
      CAPTURE(s);
      REQUIRE(expansion_to_monomial(u_derivative_explicit(n, s)) == derivative_oracle(n, s, U));
      REQUIRE(expansion_to_monomial(t_derivative_explicit(n, s)) == derivative_oracle(n, s, T));
      if (s >= 1) REQUIRE(u_derivative_triple_sum(n, s) == u_derivative_explicit(n, s));
    }
  }
}

TEST_CASE("U derivative coefficients are positive integers on the full support") {
  for (int n = 1; n <= 40; ++n) {
    for (int s = 1; s <= n; ++s) {
      const ChebExpansion d = u_derivative_explicit(n, s);
      REQUIRE(d.terms().size() == static_cast<std::size_t>((n - s) / 2 + 1));
      for (int j = 0; 2 * j <= n - s; ++j) {
        const ExactRational c = d.coefficient(n - s - 2 * j);
        REQUIRE(c > 0);
        REQUIRE(c.get_den() == 1);
      }
    }
  }
}

TEST_CASE("inner sum pair") {
  const InnerSumCase a = inner_sum_pair(4, 1, 1);
  CHECK(a.lhs == 2);
  CHECK(a.rhs == 2);
  const InnerSumCase b = inner_sum_pair(5, 2, 1);
  CHECK(b.lhs == 16);
  CHECK(b.rhs == 16);
  for (int n = 1; n <= 12; ++n) {
    for (int s = 1; s <= n; ++s) {
      const InnerSumCase c = inner_sum_pair(n, s, 0);
      REQUIRE(c.holds());
      REQUIRE(c.rhs == falling_factorial(n, s - 1) * (n - s + 1));
    }
  }
  CHECK_THROWS_AS(inner_sum_pair(4, 0, 0), std::invalid_argument);
  CHECK_THROWS_AS(inner_sum_pair(4, 5, 0), std::invalid_argument);
  CHECK_THROWS_AS(inner_sum_pair(4, 1, 2), std::invalid_argument);
  CHECK_THROWS_AS(inner_sum_pair(4, 1, -1), std::invalid_argument);
}

TEST_CASE("differentiation matrix columns") {
  const DiffMatrix d = diff_matrix(U, 1, 4);
  CHECK(d.n_max() == 4);
  CHECK(d.order() == 1);
  CHECK(d.column(3) == ChebExpansion(U, {{2, 6}, {0, 2}}));
  CHECK(d.column(0) == ChebExpansion(U));
  CHECK(d.at(0, 3) == 2);
  CHECK(d.at(1, 3) == 0);
  CHECK(diff_matrix(T, 1, 3).column(3) == ChebExpansion(T, {{2, 6}, {0, 3}}));
}

TEST_CASE("differentiation matrix support pattern") {
  for (ChebBasis basis : {U, T}) {
    for (int s = 0; s <= 5; ++s) {
      const DiffMatrix d = diff_matrix(basis, s, 24);
      for (const auto& [pos, value] : d.entries()) {
        const auto [row, col] = pos;
        REQUIRE(row <= col - s);
        REQUIRE((col - s - row) % 2 == 0);
        REQUIRE(value != 0);
      }
      for (int col = 0; col <= 24; ++col) {
        REQUIRE(d.column(col) == derivative_explicit(basis, col, s));
      }
    }
  }
}

TEST_CASE("parallel assembly is deterministic") {
  const DiffMatrix a = diff_matrix(T, 2, 40);
  const DiffMatrix b = diff_matrix(T, 2, 40);
  CHECK(a == b);
  DiffMatrix::Entries sequential;
  for (int col = 0; col <= 40; ++col) {
    for (const auto& [row, v] : t_derivative_explicit(col, 2).terms()) sequential[{row, col}] = v;
  }
  CHECK(a.entries() == sequential);
}

TEST_CASE("apply differentiation matrix") {
  const DiffMatrix d1 = diff_matrix(U, 1, 4);
  CHECK(apply_diff_matrix(d1, basis_vector(U, 4)) == ChebExpansion(U, {{3, 8}, {1, 4}}));
  CHECK(apply_diff_matrix(d1, ChebExpansion(U)) == ChebExpansion(U));

  const DiffMatrix identity = diff_matrix(T, 0, 6);
  const ChebExpansion e(T, {{6, make_rational(1, 3)}, {2, -5}, {0, 7}});
  CHECK(apply_diff_matrix(identity, e) == e);

  CHECK_THROWS_AS(apply_diff_matrix(d1, basis_vector(T, 1)), std::invalid_argument);
  CHECK_THROWS_AS(apply_diff_matrix(d1, basis_vector(U, 5)), std::out_of_range);
}

TEST_CASE("matrix application equals term-by-term differentiation") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> degree_dist(0, 16);
  std::uniform_int_distribution<long> num_dist(-9, 9);
  for (ChebBasis basis : {U, T}) {
    for (int s = 0; s <= 4; ++s) {
      const DiffMatrix d = diff_matrix(basis, s, 16);
      for (int trial = 0; trial < 10; ++trial) {
        ChebExpansion e(basis);
        for (int i = 0; i < 5; ++i) e.add(degree_dist(rng), make_rational(num_dist(rng), 1 + trial));
        const MonomialPoly expected = differentiate(expansion_to_monomial(e), s);
        REQUIRE(expansion_to_monomial(apply_diff_matrix(d, e)) == expected);
      }
    }
  }
}

TEST_CASE("composition of U operators") {
  const int n_max = 20;
  for (int s1 = 0; s1 <= 3; ++s1) {
    for (int s2 = 0; s2 <= 3; ++s2) {
      const DiffMatrix a = diff_matrix(U, s1, n_max);
      const DiffMatrix b = diff_matrix(U, s2, n_max);
      const DiffMatrix ab = diff_matrix(U, s1 + s2, n_max);
      for (int n = 0; n <= n_max; ++n) {
        const ChebExpansion e = basis_vector(U, n);
        REQUIRE(apply_diff_matrix(b, apply_diff_matrix(a, e)) == apply_diff_matrix(ab, e));
      }
    }
  }
}

TEST_CASE("csv export") {
  const std::string csv = diff_matrix_csv(diff_matrix(U, 1, 3));
  CHECK(csv ==
        "row\\col,0,1,2,3\n"
        "0,0,2,0,2\n"
        "1,0,0,4,0\n"
        "2,0,0,0,6\n"
        "3,0,0,0,0\n");
}

TEST_CASE("matrix constructor validation") {
  CHECK_THROWS_AS(DiffMatrix(U, 1, 2, {{{3, 0}, ExactRational(1)}}), std::out_of_range);
  const DiffMatrix m(U, 1, 2, {{{0, 1}, ExactRational(0)}});
  CHECK(m.entries().empty());
}
